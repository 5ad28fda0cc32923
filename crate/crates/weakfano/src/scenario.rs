//! Validated parameter sets for the five blow-up configurations.

use crate::{Error, Result};
use std::fmt;

/// The five configurations (ambient space, curve C, center S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Y = P^{n-1} x P^1; C a fiber of the first projection; S = U ∩ V with
    /// U, V of bidegrees (a,b) and (1,1); C ∩ S one transversal point.
    ProdP1,
    /// Y = P^{n-2} x P^2; C a degree-d curve in a P^2 fiber; S a P^{n-2}
    /// fiber through one point of C.
    ProdP2,
    /// Y = P^n; C a line; S an (n-2)-plane meeting C at one point.
    PnLinePlane,
    /// Y = P^n; C a line; S a hyperplane section of a quadric (an (n-2)-fold
    /// of degree 2) meeting C at one or two points.
    PnLineQuadric,
    /// Y = P^n; C a conic; S an (n-2)-plane meeting C at two points.
    PnConicPlane,
}

impl Family {
    /// Rank of N^1 of the double blow-up: 4 over the product ambients,
    /// 3 over P^n.
    pub fn rank(self) -> usize {
        match self {
            Family::ProdP1 | Family::ProdP2 => 4,
            _ => 3,
        }
    }

    /// Stable identifier used by serializers and the CLI.
    pub fn tag(self) -> &'static str {
        match self {
            Family::ProdP1 => "pp-n1",
            Family::ProdP2 => "pp-n2",
            Family::PnLinePlane => "pn-line-plane",
            Family::PnLineQuadric => "pn-line-quadric",
            Family::PnConicPlane => "pn-conic-plane",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "pp-n1" => Family::ProdP1,
            "pp-n2" => Family::ProdP2,
            "pn-line-plane" => Family::PnLinePlane,
            "pn-line-quadric" => Family::PnLineQuadric,
            "pn-conic-plane" => Family::PnConicPlane,
            _ => return Err(Error::Domain(format!("unknown family tag `{tag}`"))),
        })
    }

    fn default_t(self) -> i64 {
        match self {
            Family::PnConicPlane => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One validated configuration. `a`, `b` are set exactly for [`Family::ProdP1`],
/// `d` exactly for [`Family::ProdP2`]; `t` counts the transversal points of
/// C ∩ S.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scenario {
    pub family: Family,
    pub n: i64,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub d: Option<i64>,
    pub t: i64,
}

impl Scenario {
    /// P^{n-1} x P^1 with bidegree parameters. Requires n >= 3 and either
    /// (a,b) = (0,1) or a >= 1, b >= 0: for a = 0 the only irreducible choice
    /// of U is a fiber, forcing b = 1.
    pub fn prod_p1(n: i64, a: i64, b: i64) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("P^(n-1) x P^1 needs n >= 3, got n = {n}")));
        }
        if a < 0 || b < 0 {
            return Err(Error::Domain(format!("bidegrees must be non-negative, got (a,b) = ({a},{b})")));
        }
        if a == 0 && b != 1 {
            return Err(Error::Domain(format!("a = 0 forces b = 1, got (a,b) = (0,{b})")));
        }
        Ok(Scenario { family: Family::ProdP1, n, a: Some(a), b: Some(b), d: None, t: 1 })
    }

    /// P^{n-2} x P^2 with a degree-d plane curve. Requires n >= 3, d >= 1.
    pub fn prod_p2(n: i64, d: i64) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("P^(n-2) x P^2 needs n >= 3, got n = {n}")));
        }
        if d < 1 {
            return Err(Error::Domain(format!("curve degree must be positive, got d = {d}")));
        }
        Ok(Scenario { family: Family::ProdP2, n, a: None, b: None, d: Some(d), t: 1 })
    }

    /// One of the three P^n configurations. Requires n >= 4.
    pub fn pn(family: Family, n: i64) -> Result<Self> {
        match family {
            Family::PnLinePlane | Family::PnLineQuadric | Family::PnConicPlane => {}
            _ => return Err(Error::Domain(format!("{family} is not a P^n configuration"))),
        }
        if n < 4 {
            return Err(Error::Domain(format!("P^n configurations need n >= 4, got n = {n}")));
        }
        Ok(Scenario { family, n, a: None, b: None, d: None, t: family.default_t() })
    }

    /// Override the transversal-intersection count t. Only values compatible
    /// with the family's geometry are accepted: the line/quadric configuration
    /// admits t in {1, 2}, every other family fixes t.
    pub fn with_t(mut self, t: i64) -> Result<Self> {
        let ok = match self.family {
            Family::PnLineQuadric => t == 1 || t == 2,
            f => t == f.default_t(),
        };
        if !ok {
            return Err(Error::Domain(format!(
                "t = {t} is incompatible with family {}",
                self.family
            )));
        }
        self.t = t;
        Ok(self)
    }

    /// The (a, b) pair; error for families without bidegree parameters.
    pub fn ab(&self) -> Result<(i64, i64)> {
        match (self.a, self.b) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Domain(format!("family {} carries no (a,b)", self.family))),
        }
    }

    /// The curve degree d; error for families without it.
    pub fn degree_d(&self) -> Result<i64> {
        self.d
            .ok_or_else(|| Error::Domain(format!("family {} carries no d", self.family)))
    }
}
