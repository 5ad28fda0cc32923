//! Degree maps: ambient Chow rings and the intersection table of the
//! blown-up surface S.
//!
//! Conventions, with H and L the hyperplane pullbacks from the two factors:
//!
//! * on P^{n-1} x P^1:  H^n = 0, L^2 = 0, deg(H^{n-1} L) = 1;
//! * on P^{n-2} x P^2:  H^{n-1} = 0, L^3 = 0, deg(H^{n-2} L^2) = 1;
//! * on P^n: only powers of H exist (deg(H^n) = 1) and any positive L-exponent
//!   is a caller bug, reported as an error rather than silently read as zero.
//!
//! Every monomial that is not the top-degree point class has degree 0; degree
//! maps are total on valid exponent pairs so callers can fold arbitrary
//! polynomial expansions through them.

use crate::{binom, rat, ripow, Error, Rat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientFamily {
    /// P^{n-1} x P^1
    ProductWithP1,
    /// P^{n-2} x P^2
    ProductWithP2,
    /// P^n
    Projective,
}

/// Degree map of one ambient family at a fixed dimension n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmbientDegree {
    pub family: AmbientFamily,
    pub n: i64,
}

impl AmbientDegree {
    pub fn new(family: AmbientFamily, n: i64) -> Result<Self> {
        let min = match family {
            AmbientFamily::Projective => 4,
            _ => 3,
        };
        if n < min {
            return Err(Error::Domain(format!(
                "ambient family needs n >= {min}, got n = {n}"
            )));
        }
        Ok(AmbientDegree { family, n })
    }

    /// Degree of H^i L^j.
    pub fn degree(&self, i: i64, j: i64) -> Result<Rat> {
        if i < 0 || j < 0 {
            return Err(Error::NegativeExponent { i, j });
        }
        let n = self.n;
        let hit = match self.family {
            AmbientFamily::ProductWithP1 => (i, j) == (n - 1, 1),
            AmbientFamily::ProductWithP2 => (i, j) == (n - 2, 2),
            AmbientFamily::Projective => {
                if j > 0 {
                    return Err(Error::Domain(format!(
                        "P^n has no second factor: got L-exponent {j}"
                    )));
                }
                i == n
            }
        };
        Ok(rat(if hit { 1 } else { 0 }))
    }

    /// Top self-intersection (x H + y L)^n, folded through [`Self::degree`].
    /// On P^n the L-coefficient y must be zero.
    pub fn top_power(&self, x: &Rat, y: &Rat) -> Result<Rat> {
        use num::Zero;
        if matches!(self.family, AmbientFamily::Projective) && !y.is_zero() {
            return Err(Error::Domain(
                "P^n divisors have no L-component".to_string(),
            ));
        }
        let n = self.n;
        let mut acc = Rat::zero();
        for k in 0..=n {
            let j = n - k;
            if matches!(self.family, AmbientFamily::Projective) && j > 0 {
                continue; // the matching coefficient y^j is zero
            }
            let d = self.degree(k, j)?;
            if d.is_zero() {
                continue;
            }
            acc += Rat::from_integer(binom(n, k)) * ripow(x, k) * ripow(y, j) * d;
        }
        Ok(acc)
    }
}

/// Intersection table of S = U ∩ V ⊂ P^{n-1} x P^1, U of bidegree (a,b) and
/// V of bidegree (1,1). With h = H|_S, l = L|_S the nonzero degrees in the
/// top dimension n-2 are
///
/// ```text
/// deg(h^{n-2})   = a + b
/// deg(h^{n-3} l) = a
/// ```
///
/// and l^2 = 0. For n = 3 the "surface" is a curve and h^{n-3} l means l itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceDegreeTable {
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl SurfaceDegreeTable {
    pub fn new(n: i64, a: i64, b: i64) -> Result<Self> {
        // Parameter domain as for the ambient family; the table itself is
        // meaningful for any a, b >= 0.
        if n < 3 {
            return Err(Error::Domain(format!("surface table needs n >= 3, got n = {n}")));
        }
        if a < 0 || b < 0 {
            return Err(Error::Domain(format!(
                "bidegrees must be non-negative, got (a,b) = ({a},{b})"
            )));
        }
        Ok(SurfaceDegreeTable { n, a, b })
    }

    /// Degree of h^i l^j on S; requires i + j = n - 2 (dimension of S).
    pub fn degree(&self, i: i64, j: i64) -> Result<Rat> {
        if i < 0 || j < 0 {
            return Err(Error::NegativeExponent { i, j });
        }
        if i + j != self.n - 2 {
            return Err(Error::DegreeMismatch { expected: self.n - 2, i, j });
        }
        Ok(match j {
            0 => rat(self.a + self.b),
            1 => rat(self.a),
            _ => rat(0), // l^2 = 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use num::Zero;

    fn amb(f: AmbientFamily, n: i64) -> AmbientDegree {
        AmbientDegree::new(f, n).unwrap()
    }

    #[test]
    fn product_p1_degrees() {
        let y = amb(AmbientFamily::ProductWithP1, 4);
        assert_eq!(y.degree(3, 1).unwrap(), rat(1));
        assert_eq!(y.degree(4, 0).unwrap(), rat(0));
        assert_eq!(y.degree(2, 2).unwrap(), rat(0));
        assert_eq!(y.degree(2, 1).unwrap(), rat(0));
        assert!(y.degree(-1, 1).is_err());
    }

    #[test]
    fn product_p2_degrees() {
        let y = amb(AmbientFamily::ProductWithP2, 5);
        assert_eq!(y.degree(3, 2).unwrap(), rat(1));
        assert_eq!(y.degree(4, 1).unwrap(), rat(0));
        assert_eq!(y.degree(3, 1).unwrap(), rat(0));
    }

    #[test]
    fn projective_degrees() {
        let y = amb(AmbientFamily::Projective, 4);
        assert_eq!(y.degree(4, 0).unwrap(), rat(1));
        assert_eq!(y.degree(3, 0).unwrap(), rat(0));
        assert!(y.degree(3, 1).is_err());
        assert!(AmbientDegree::new(AmbientFamily::Projective, 3).is_err());
    }

    #[test]
    fn anticanonical_top_powers() {
        // (nH + 2L)^n = 2 n^n on P^{n-1} x P^1
        for n in 3..=8 {
            let y = amb(AmbientFamily::ProductWithP1, n);
            let v = y.top_power(&rat(n), &rat(2)).unwrap();
            assert_eq!(v, Rat::from_integer(int(2) * crate::ipow(n, n)));
        }
        // ((n-1)H + 3L)^n = 9 C(n,2) (n-1)^{n-2} on P^{n-2} x P^2
        for n in 3..=8 {
            let y = amb(AmbientFamily::ProductWithP2, n);
            let v = y.top_power(&rat(n - 1), &rat(3)).unwrap();
            let expect = int(9) * binom(n, 2) * crate::ipow(n - 1, n - 2);
            assert_eq!(v, Rat::from_integer(expect));
        }
        // ((n+1)H)^n on P^n
        let y = amb(AmbientFamily::Projective, 4);
        assert_eq!(y.top_power(&rat(5), &rat(0)).unwrap(), rat(625));
        assert!(y.top_power(&rat(5), &rat(1)).is_err());
    }

    #[test]
    fn top_power_is_linear_in_scaling() {
        let y = amb(AmbientFamily::ProductWithP1, 5);
        // (c x H + c y L)^n = c^n (x H + y L)^n
        let base = y.top_power(&rat(5), &rat(2)).unwrap();
        let scaled = y.top_power(&rat(15), &rat(6)).unwrap();
        assert_eq!(scaled, ripow(&rat(3), 5) * base);
    }

    #[test]
    fn surface_degrees() {
        let s = SurfaceDegreeTable::new(5, 2, 1).unwrap();
        assert_eq!(s.degree(3, 0).unwrap(), rat(3));
        assert_eq!(s.degree(2, 1).unwrap(), rat(2));
        assert_eq!(s.degree(1, 2).unwrap(), rat(0));
        assert_eq!(s.degree(0, 3).unwrap(), rat(0));
        assert!(s.degree(2, 0).is_err());
        assert!(s.degree(4, 0).is_err());
        assert!(s.degree(-1, 4).is_err());
    }

    #[test]
    fn surface_curve_case_n3() {
        let s = SurfaceDegreeTable::new(3, 4, 2).unwrap();
        assert_eq!(s.degree(1, 0).unwrap(), rat(6));
        assert_eq!(s.degree(0, 1).unwrap(), rat(4));
    }

    /// The table is forced by the ambient ring: pushing h^i l^j forward along
    /// S = (aH + bL)(H + L) and taking ambient degrees must reproduce it.
    /// Expanding the product with L^2 = 0 leaves aH^2 + (a+b)HL, so
    /// deg_S(h^i l^j) = a deg_Y(H^{i+2} L^j) + (a+b) deg_Y(H^{i+1} L^{j+1}).
    #[test]
    fn surface_table_matches_ambient_pushforward() {
        for n in 3..=8 {
            let y = amb(AmbientFamily::ProductWithP1, n);
            for a in 0..=4 {
                for b in 0..=4 {
                    let s = SurfaceDegreeTable::new(n, a, b).unwrap();
                    for j in 0..=(n - 2) {
                        let i = n - 2 - j;
                        let via_ambient = rat(a) * y.degree(i + 2, j).unwrap()
                            + rat(a + b) * y.degree(i + 1, j + 1).unwrap();
                        assert_eq!(s.degree(i, j).unwrap(), via_ambient, "n={n} a={a} b={b} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_maps_are_linear() {
        // deg(alpha M1 + beta M2) = alpha deg M1 + beta deg M2, exercised via
        // top_power bilinearity on a random-ish rational sample.
        let y = amb(AmbientFamily::ProductWithP1, 4);
        let half = Rat::new(int(1), int(2));
        let v = y.top_power(&(rat(4) * &half), &(rat(2) * &half)).unwrap();
        let w = y.top_power(&rat(4), &rat(2)).unwrap();
        assert_eq!(v, ripow(&half, 4) * w);
        assert!(y.degree(0, 0).unwrap().is_zero());
    }
}
