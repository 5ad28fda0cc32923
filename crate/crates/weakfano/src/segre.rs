//! Segre classes of conormal bundles.
//!
//! For the complete-intersection surface S = (a,b) ∩ (1,1) the conormal
//! bundle has total Chern class c(N*) = (1-u)(1-v) with u = ah+bl, v = h+l,
//! and the Segre series s(N*) = 1/c(N*) truncates to
//!
//! ```text
//! s_m(N*) = P(m) h^m + Q(m) h^{m-1} l,
//! P(m) = sum_{i=0..m} a^i,
//! Q(m) = sum_{i=0..m} (i a^{i-1} b + (m-i) a^i),
//! ```
//!
//! with the conventions 0^0 = 1 and i·a^{i-1} = 0 at i = 0. Two independent
//! routes are provided: the closed coefficients above ([`segre_ci`]) and a
//! generic truncated power-series inversion ([`segre_by_inversion`]); they
//! must agree exactly.
//!
//! Sign convention fixed here once: s(N*) = 1/c(N*), so s_1(N*) = -c_1(N*) =
//! c_1(N). Curve centers only ever need s_0 = 1 and s_1, so they are carried
//! as plain degree data ([`CurveSegreData`]).

use crate::{int, rat, Error, Int, Rat, Result};
use num::{One, Zero};

/// Degree-m Segre coefficients: s_m = p·h^m + q·h^{m-1}·l.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreVector {
    pub m: i64,
    pub p: Rat,
    pub q: Rat,
}

/// P(m) = 1 + a + ... + a^m.
pub fn geom_p(a: i64, m: i64) -> Int {
    let mut acc = Int::zero();
    for i in 0..=m {
        acc += crate::ipow(a, i);
    }
    acc
}

/// Q(m) = sum_{i=0..m} (i·a^{i-1}·b + (m-i)·a^i); the i = 0 summand carries
/// no a^{-1} because of the i factor.
pub fn geom_q(a: i64, b: i64, m: i64) -> Int {
    let mut acc = Int::zero();
    for i in 0..=m {
        if i >= 1 {
            acc += int(i) * crate::ipow(a, i - 1) * int(b);
        }
        acc += int(m - i) * crate::ipow(a, i);
    }
    acc
}

/// Closed-form s_m(N*) for the complete-intersection surface center.
pub fn segre_ci(m: i64, a: i64, b: i64) -> Result<SegreVector> {
    if m < 0 {
        return Err(Error::Domain(format!("negative Segre degree {m}")));
    }
    if a < 0 || b < 0 {
        return Err(Error::Domain(format!(
            "bidegrees must be non-negative, got (a,b) = ({a},{b})"
        )));
    }
    Ok(SegreVector {
        m,
        p: Rat::from_integer(geom_p(a, m)),
        q: Rat::from_integer(geom_q(a, b, m)),
    })
}

/// Truncated series in Q[h,l]/(l^2), graded by total degree; the entry at
/// degree m holds (coefficient of h^m, coefficient of h^{m-1} l).
#[derive(Debug, Clone, PartialEq)]
struct Series {
    coeffs: Vec<(Rat, Rat)>,
}

impl Series {
    fn new(cap: usize) -> Series {
        Series { coeffs: vec![(Rat::zero(), Rat::zero()); cap + 1] }
    }

    fn one(cap: usize) -> Series {
        let mut s = Series::new(cap);
        s.coeffs[0].0 = Rat::one();
        s
    }

    fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn mul(&self, other: &Series) -> Series {
        let cap = self.cap().min(other.cap());
        let mut out = Series::new(cap);
        for (i, (p1, q1)) in self.coeffs.iter().enumerate() {
            for (j, (p2, q2)) in other.coeffs.iter().enumerate() {
                if i + j > cap {
                    break;
                }
                out.coeffs[i + j].0 += p1 * p2;
                // l^2 = 0 kills the q1*q2 cross term
                out.coeffs[i + j].1 += p1 * q2 + q1 * p2;
            }
        }
        out
    }

    /// Degree-by-degree inverse; the constant term must be a unit.
    fn invert(&self) -> Result<Series> {
        let c0 = &self.coeffs[0].0;
        if c0.is_zero() {
            return Err(Error::Singular);
        }
        let cap = self.cap();
        let mut inv = Series::new(cap);
        inv.coeffs[0].0 = Rat::one() / c0;
        inv.coeffs[0].1 = -(&self.coeffs[0].1) * &inv.coeffs[0].0 * &inv.coeffs[0].0;
        for m in 1..=cap {
            // solve sum_{i=0..m} c_i * s_{m-i} = 0 for s_m, p-part first
            let mut p_acc = Rat::zero();
            let mut q_acc = Rat::zero();
            for i in 1..=m {
                let (cp, cq) = &self.coeffs[i];
                let (sp, sq) = &inv.coeffs[m - i];
                p_acc += cp * sp;
                q_acc += cp * sq + cq * sp;
            }
            let sp = -p_acc / c0;
            q_acc += &self.coeffs[0].1 * &sp;
            let sq = -q_acc / c0;
            inv.coeffs[m] = (sp, sq);
        }
        Ok(inv)
    }
}

/// s_m(N*) recomputed by inverting c(N*) = (1-u)(1-v) in the truncated ring;
/// independent oracle for [`segre_ci`].
pub fn segre_by_inversion(m: i64, a: i64, b: i64) -> Result<SegreVector> {
    if m < 0 {
        return Err(Error::Domain(format!("negative Segre degree {m}")));
    }
    if a < 0 || b < 0 {
        return Err(Error::Domain(format!(
            "bidegrees must be non-negative, got (a,b) = ({a},{b})"
        )));
    }
    let cap = m as usize;
    // 1 - u and 1 - v with u = ah + bl, v = h + l
    let mut one_minus_u = Series::one(cap);
    let mut one_minus_v = Series::one(cap);
    if cap >= 1 {
        one_minus_u.coeffs[1] = (rat(-a), rat(-b));
        one_minus_v.coeffs[1] = (rat(-1), rat(-1));
    }
    let total = one_minus_u.mul(&one_minus_v);
    let inv = total.invert()?;
    let (p, q) = inv.coeffs[cap].clone();
    Ok(SegreVector { m, p, q })
}

/// s_m(N*) for a split bundle N = O(d_1) ⊕ ... ⊕ O(d_r) over a base with a
/// single hyperplane class h: the h^m coefficient of 1 / prod_i (1 - d_i h).
pub fn segre_split(m: i64, degs: &[i64]) -> Result<Rat> {
    if m < 0 {
        return Err(Error::Domain(format!("negative Segre degree {m}")));
    }
    let cap = m as usize;
    let mut total = Series::one(cap);
    for &d in degs {
        let mut factor = Series::one(cap);
        if cap >= 1 {
            factor.coeffs[1] = (rat(-d), Rat::zero());
        }
        total = total.mul(&factor);
    }
    Ok(total.invert()?.coeffs[cap].0.clone())
}

/// Normal-bundle data of a one-dimensional blow-up center: everything the
/// expansion needs is deg c_1(N) and the genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveSegreData {
    pub genus: i64,
    pub c1_normal: i64,
}

impl CurveSegreData {
    /// Recover c_1(N) by adjunction from the anti-canonical degree of the
    /// ambient space on the curve: -K·C = 2 - 2g + c_1(N).
    pub fn from_adjunction(genus: i64, anticanonical_degree: i64) -> CurveSegreData {
        CurveSegreData { genus, c1_normal: anticanonical_degree - 2 + 2 * genus }
    }

    /// deg(-K|_C) back out of the stored data.
    pub fn anticanonical_degree(&self) -> i64 {
        2 - 2 * self.genus + self.c1_normal
    }
}

/// s_1 of the conormal bundle: with s(N*) = 1/c(N*) this is -c_1(N*) = c_1(N).
pub fn curve_s1(data: &CurveSegreData) -> i64 {
    data.c1_normal
}
