//! Exact intersection arithmetic for double blow-ups of products of
//! projective spaces.
//!
//! The varieties in scope are built from an ambient space Y — one of
//! P^{n-1} x P^1, P^{n-2} x P^2, or P^n — by blowing up a smooth curve C and
//! then the strict transform of a surface-dimensional center S meeting C
//! transversally. The library computes, over exact rationals:
//!
//! * degree maps of the ambient Chow rings and of the center S ([`chow`]);
//! * Segre classes of conormal bundles of the centers ([`segre`]);
//! * mixed intersection numbers on blow-ups and binomial expansions of
//!   `(pullback - c . E)^n` ([`blowup`]);
//! * nef and curve generators, intersection pairings, and anticanonical
//!   decompositions on the resulting rank-3/4 Picard lattices ([`cone`]);
//! * anticanonical self-intersection numbers through two independent routes,
//!   closed forms and the blow-up/flip pipeline ([`anticanonical`]);
//! * Fano / weak-Fano classification sweeps ([`classify`]).
//!
//! Everything is deterministic and exact: `num::BigRational` end to end,
//! no floating point anywhere.

pub mod anticanonical;
pub mod blowup;
pub mod chow;
pub mod classify;
pub mod cone;
pub mod scenario;
pub mod segre;

pub use scenario::{Family, Scenario};

use std::fmt;

/// Exact integer used throughout.
pub type Int = num::BigInt;
/// Exact rational used throughout.
pub type Rat = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameter outside a function's domain; the message says which and why.
    Domain(String),
    /// A monomial handed to a degree map has the wrong total degree.
    DegreeMismatch { expected: i64, i: i64, j: i64 },
    /// Exponents of cohomology classes must be non-negative.
    NegativeExponent { i: i64, j: i64 },
    /// Classes from different families were mixed in one pairing.
    FamilyMismatch,
    /// Generator system is linearly dependent; decomposition impossible.
    Singular,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DegreeMismatch { expected, i, j } => write!(
                f,
                "degree mismatch: expected total degree {expected}, got h^{i} l^{j}"
            ),
            Error::NegativeExponent { i, j } => {
                write!(f, "negative exponent in monomial h^{i} l^{j}")
            }
            Error::FamilyMismatch => write!(f, "classes belong to different families"),
            Error::Singular => write!(f, "singular generator system"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn int(x: i64) -> Int {
    Int::from(x)
}

pub(crate) fn rat(x: i64) -> Rat {
    Rat::from_integer(int(x))
}

/// Binomial coefficient; zero outside 0 <= k <= n.
pub(crate) fn binom(n: i64, k: i64) -> Int {
    if k < 0 || k > n {
        Int::from(0)
    } else {
        num::integer::binomial(int(n), int(k))
    }
}

/// `base^exp` over BigInt, exp >= 0 (negative bases allowed).
pub(crate) fn ipow(base: i64, exp: i64) -> Int {
    debug_assert!(exp >= 0, "ipow exponent must be non-negative");
    int(base).pow(exp as u32)
}

pub(crate) fn ripow(base: &Rat, exp: i64) -> Rat {
    debug_assert!(exp >= 0, "ripow exponent must be non-negative");
    let mut acc = Rat::from_integer(int(1));
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Canonical textual form of a rational: plain integer when the denominator
/// is 1, `p/q` otherwise. Used by every serializer so output stays stable.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_edges() {
        assert_eq!(binom(4, 2), int(6));
        assert_eq!(binom(4, 0), int(1));
        assert_eq!(binom(4, 5), int(0));
        assert_eq!(binom(4, -1), int(0));
    }

    #[test]
    fn ipow_signs() {
        assert_eq!(ipow(-2, 3), int(-8));
        assert_eq!(ipow(-2, 4), int(16));
        assert_eq!(ipow(0, 0), int(1));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rat(&rat(-7)), "-7");
        assert_eq!(fmt_rat(&Rat::new(int(3), int(6))), "1/2");
    }
}
