//! Divisor and curve class lattices, the intersection pairing, nef-cone and
//! curve-cone generators, and exact decomposition against a generator basis.
//!
//! Bases: for the rank-4 families the divisor basis is (H~, L~, E~, F) — the
//! two hyperplane pullbacks, the exceptional divisor over the curve, and the
//! exceptional divisor over the surface — with dual curve basis
//! (l~, h~, e0~, f). The rank-3 family over projective space drops L~ and h~.
//!
//! The pairing table between the two bases is
//!
//! ```text
//!          H~  L~  E~   F
//!   l~      1   0   0   0
//!   h~      0   1   0   0
//!   e0~     0   0  -1   1
//!   f       0   0   0  -1
//! ```
//!
//! (rank-3: delete the L~ column and h~ row). A generator set is certified by
//! the Kronecker criterion: if nef candidates D_i and curve candidates C_j
//! satisfy D_i · C_j = delta_ij, both cones are exactly as claimed.

use crate::{rat, Error, Family, Rat, Result, Scenario};
use num::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub family: Family,
    pub coords: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    pub family: Family,
    pub coords: Vec<Rat>,
}

fn check_len(family: Family, len: usize) -> Result<()> {
    if len != family.rank() {
        return Err(Error::Domain(format!(
            "family {} has Picard number {}, got {} coordinates",
            family,
            family.rank(),
            len
        )));
    }
    Ok(())
}

impl DivisorClass {
    pub fn new(family: Family, coords: Vec<Rat>) -> Result<Self> {
        check_len(family, coords.len())?;
        Ok(DivisorClass { family, coords })
    }

    pub fn from_ints(family: Family, coords: &[i64]) -> Result<Self> {
        DivisorClass::new(family, coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn basis_labels(family: Family) -> &'static [&'static str] {
        match family.rank() {
            4 => &["H~", "L~", "E~", "F"],
            _ => &["H~", "E~", "F"],
        }
    }
}

impl CurveClass {
    pub fn new(family: Family, coords: Vec<Rat>) -> Result<Self> {
        check_len(family, coords.len())?;
        Ok(CurveClass { family, coords })
    }

    pub fn from_ints(family: Family, coords: &[i64]) -> Result<Self> {
        CurveClass::new(family, coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn basis_labels(family: Family) -> &'static [&'static str] {
        match family.rank() {
            4 => &["l~", "h~", "e0~", "f"],
            _ => &["l~", "e0~", "f"],
        }
    }
}

fn fmt_combination(f: &mut fmt::Formatter<'_>, coords: &[Rat], labels: &[&str]) -> fmt::Result {
    let mut first = true;
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let abs = c.abs();
        if abs != rat(1) {
            write!(f, "{}", crate::fmt_rat(&abs))?;
        }
        write!(f, "{label}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.coords, DivisorClass::basis_labels(self.family))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.coords, CurveClass::basis_labels(self.family))
    }
}

/// Intersection numbers of the basis classes; rows are curve basis elements,
/// columns divisor basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTable {
    pub family: Family,
    entries: Vec<Vec<i64>>,
}

impl PairingTable {
    pub fn for_family(family: Family) -> PairingTable {
        let entries = match family.rank() {
            4 => vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, -1, 1],
                vec![0, 0, 0, -1],
            ],
            _ => vec![vec![1, 0, 0], vec![0, -1, 1], vec![0, 0, -1]],
        };
        PairingTable { family, entries }
    }

    pub fn entry(&self, curve_idx: usize, divisor_idx: usize) -> i64 {
        self.entries[curve_idx][divisor_idx]
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }
}

/// Bilinear extension of the basis pairing table.
pub fn pairing(d: &DivisorClass, c: &CurveClass) -> Result<Rat> {
    if d.family != c.family {
        return Err(Error::FamilyMismatch);
    }
    let table = PairingTable::for_family(d.family);
    let mut acc = Rat::zero();
    for (i, ci) in c.coords.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, dj) in d.coords.iter().enumerate() {
            let t = table.entry(i, j);
            if t != 0 {
                acc += ci * dj * rat(t);
            }
        }
    }
    Ok(acc)
}

/// Extremal nef divisors, ordered so that the i-th divisor is dual to the
/// i-th generator of [`curve_generators`].
pub fn nef_generators(scn: &Scenario) -> Result<Vec<DivisorClass>> {
    let gens = match scn.family {
        Family::ProdP1 => {
            let (a, b) = scn.ab()?;
            // the last generator depends on (a,b) in five branches
            let dab = match (a, b) {
                (0, 1) => vec![1, 1, -1, -1],
                (1, 0) => vec![2, 1, -1, -1],
                (1, b) => vec![2, b, -1, -1],
                (a, 0) => vec![a, 1, -1, -1],
                (a, b) => vec![a, b, -1, -1],
            };
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![1, 0, -1, 0],
                dab,
            ]
        }
        Family::ProdP2 => {
            let d = scn.degree_d()?;
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![1, d, -1, 0],
                vec![1, d, -1, -1],
            ]
        }
        Family::PnLinePlane | Family::PnLineQuadric => {
            vec![vec![1, 0, 0], vec![1, -1, 0], vec![2, -1, -1]]
        }
        Family::PnConicPlane => vec![vec![1, 0, 0], vec![2, -1, 0], vec![3, -1, -1]],
    };
    gens.iter()
        .map(|g| DivisorClass::from_ints(scn.family, g))
        .collect()
}

/// Extremal curve classes dual to [`nef_generators`].
pub fn curve_generators(scn: &Scenario) -> Result<Vec<CurveClass>> {
    let gens = match scn.family {
        Family::ProdP1 => {
            let (a, b) = scn.ab()?;
            let la = match a {
                0 => vec![1, 0, -1, -1],
                1 => vec![1, 0, -1, -2],
                a => vec![1, 0, -1, -a],
            };
            let hb = match b {
                0 => vec![0, 1, 0, -1],
                b => vec![0, 1, 0, -b],
            };
            vec![la, hb, vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        }
        Family::ProdP2 => {
            let d = scn.degree_d()?;
            vec![
                vec![1, 0, -1, -1],
                vec![0, 1, -d, -d],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ]
        }
        Family::PnLinePlane | Family::PnLineQuadric => {
            vec![vec![1, -1, -2], vec![0, 1, 0], vec![0, 0, 1]]
        }
        Family::PnConicPlane => vec![vec![1, -2, -3], vec![0, 1, 0], vec![0, 0, 1]],
    };
    gens.iter()
        .map(|g| CurveClass::from_ints(scn.family, g))
        .collect()
}

/// D_i · C_j = delta_ij for all i, j — the hypothesis certifying that the
/// claimed nef generators and curve generators span the respective cones.
pub fn kronecker_check(div_gens: &[DivisorClass], curve_gens: &[CurveClass]) -> Result<bool> {
    if div_gens.is_empty() || div_gens.len() != curve_gens.len() {
        return Err(Error::Domain(format!(
            "generator counts differ: {} divisors vs {} curves",
            div_gens.len(),
            curve_gens.len()
        )));
    }
    let rank = div_gens[0].family.rank();
    if div_gens.len() != rank {
        return Err(Error::Domain(format!(
            "need {} generators for Picard number {}, got {}",
            rank,
            rank,
            div_gens.len()
        )));
    }
    for (i, d) in div_gens.iter().enumerate() {
        for (j, c) in curve_gens.iter().enumerate() {
            let expect = if i == j { rat(1) } else { rat(0) };
            if pairing(d, c)? != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generators plus the duality certificate.
#[derive(Debug, Clone)]
pub struct ConePresentation {
    pub scenario: Scenario,
    pub div_gens: Vec<DivisorClass>,
    pub curve_gens: Vec<CurveClass>,
    pub verified: bool,
}

pub fn presentation(scn: &Scenario) -> Result<ConePresentation> {
    let div_gens = nef_generators(scn)?;
    let curve_gens = curve_generators(scn)?;
    let verified = kronecker_check(&div_gens, &curve_gens)?;
    Ok(ConePresentation { scenario: scn.clone(), div_gens, curve_gens, verified })
}

/// -K in basis coordinates.
pub fn anticanonical_class(scn: &Scenario) -> DivisorClass {
    let n = scn.n;
    let coords = match scn.family {
        Family::ProdP1 => vec![n, 2, -(n - 2), -1],
        Family::ProdP2 => vec![n - 1, 3, -(n - 2), -1],
        _ => vec![n + 1, -(n - 2), -1],
    };
    DivisorClass::from_ints(scn.family, &coords)
        .expect("anticanonical coordinates match the family rank")
}

/// Exact solution of sum_i x_i gens_i = d by Gauss-Jordan elimination.
pub fn decompose(d: &DivisorClass, gens: &[DivisorClass]) -> Result<Vec<Rat>> {
    let rank = d.family.rank();
    if gens.len() != rank {
        return Err(Error::Domain(format!(
            "need {} generators to decompose, got {}",
            rank,
            gens.len()
        )));
    }
    if gens.iter().any(|g| g.family != d.family) {
        return Err(Error::FamilyMismatch);
    }
    // columns are the generators
    let mut m: Vec<Vec<Rat>> = (0..rank)
        .map(|row| gens.iter().map(|g| g.coords[row].clone()).collect())
        .collect();
    let mut rhs: Vec<Rat> = d.coords.clone();
    for col in 0..rank {
        let pivot = (col..rank)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let scale = m[col][col].clone();
        for j in col..rank {
            m[col][j] = &m[col][j] / &scale;
        }
        rhs[col] = &rhs[col] / &scale;
        for r in 0..rank {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..rank {
                m[r][j] = &m[r][j] - &factor * &m[col][j];
            }
            rhs[r] = &rhs[r] - &factor * &rhs[col];
        }
    }
    Ok(rhs)
}

/// Reassemble sum_i coeffs_i gens_i (inverse of [`decompose`]).
pub fn reassemble(family: Family, coeffs: &[Rat], gens: &[DivisorClass]) -> Result<DivisorClass> {
    if coeffs.len() != gens.len() {
        return Err(Error::Domain(format!(
            "{} coefficients vs {} generators",
            coeffs.len(),
            gens.len()
        )));
    }
    let mut coords = vec![Rat::zero(); family.rank()];
    for (c, g) in coeffs.iter().zip(gens) {
        if g.family != family {
            return Err(Error::FamilyMismatch);
        }
        for (acc, x) in coords.iter_mut().zip(&g.coords) {
            *acc += c * x;
        }
    }
    DivisorClass::new(family, coords)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NefStatus {
    NotNef,
    Boundary,
    Interior,
}

impl fmt::Display for NefStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NefStatus::NotNef => "NotNef",
            NefStatus::Boundary => "Boundary",
            NefStatus::Interior => "Interior",
        })
    }
}

/// Position of a class relative to the nef cone, read off its coordinates in
/// the dual (Kronecker-certified) generator basis: every coordinate is the
/// intersection with the corresponding extremal curve.
pub fn nef_status(coeffs: &[Rat]) -> NefStatus {
    if coeffs.iter().any(|c| c.is_negative()) {
        NefStatus::NotNef
    } else if coeffs.iter().any(|c| c.is_zero()) {
        NefStatus::Boundary
    } else {
        NefStatus::Interior
    }
}
