//! Mixed intersection numbers on a blow-up and the binomial expansion of
//! (pullback of D minus c times the exceptional divisor)^n.
//!
//! For a smooth center S of codimension r with exceptional divisor F,
//!
//! ```text
//! (mu* D)^{n-k} F^k = (-1)^{r-1} (D|_S)^{n-k} s_{k-r}(N*_{S/Y}),
//! ```
//!
//! zero for 0 < k < r. The caller supplies the restricted-power values
//! (D|_S)^{n-k} s_{k-r}(N*) as a function of k, assembled from whatever
//! degree tables and Segre data the center at hand requires; this module only
//! owns the sign, the vanishing range, and the binomial assembly.

use crate::{binom, ipow, rat, ripow, Error, Rat, Result};
use num::Zero;

/// A blow-up center: ambient dimension, codimension, and the restricted
/// mixed powers (D|_S)^{n-k}·s_{k-r}(N*) for r <= k <= n.
pub struct CenterData<F>
where
    F: Fn(i64) -> Result<Rat>,
{
    pub n: i64,
    pub r: i64,
    pub restricted_power: F,
}

impl<F> CenterData<F>
where
    F: Fn(i64) -> Result<Rat>,
{
    pub fn new(n: i64, r: i64, restricted_power: F) -> Result<Self> {
        if r < 2 || r > n {
            return Err(Error::Domain(format!(
                "center codimension must satisfy 2 <= r <= n, got r = {r}, n = {n}"
            )));
        }
        Ok(CenterData { n, r, restricted_power })
    }
}

/// (mu* D)^{n-k} F^k.
pub fn mixed_term<F>(center: &CenterData<F>, k: i64) -> Result<Rat>
where
    F: Fn(i64) -> Result<Rat>,
{
    if k < 1 || k > center.n {
        return Err(Error::Domain(format!(
            "mixed term index k = {k} outside 1..={}",
            center.n
        )));
    }
    if k < center.r {
        // F^k pushes forward to a cycle supported on S of too-high dimension
        return Ok(Rat::zero());
    }
    let sign = if (center.r - 1) % 2 == 0 { rat(1) } else { rat(-1) };
    Ok(sign * (center.restricted_power)(k)?)
}

/// (mu* D - c F)^n = D^n + sum_{k=1..n} binom(n,k) (-c)^k (mu* D)^{n-k} F^k.
pub fn expand_power<F>(center: &CenterData<F>, base_selfint: &Rat, c: &Rat) -> Result<Rat>
where
    F: Fn(i64) -> Result<Rat>,
{
    let n = center.n;
    let mut acc = base_selfint.clone();
    if c.is_zero() {
        return Ok(acc);
    }
    let minus_c = -c;
    for k in 1..=n {
        let term = mixed_term(center, k)?;
        if term.is_zero() {
            continue;
        }
        acc += Rat::from_integer(binom(n, k)) * ripow(&minus_c, k) * term;
    }
    Ok(acc)
}

/// sum_{k=2..n} binom(n,k) k^w (-x)^k n^{n-k} for w = 0, 1, 2 — the three
/// sums behind the closed forms, exposed so the verify suite can pit them
/// against [`binomial_sum_closed`].
pub fn binomial_sum(n: i64, x: i64, k_weight: u32) -> Rat {
    let mut acc = Rat::zero();
    for k in 2..=n {
        let kw = match k_weight {
            0 => rat(1),
            1 => rat(k),
            _ => rat(k * k),
        };
        acc += Rat::from_integer(binom(n, k))
            * kw
            * Rat::from_integer(ipow(-x, k))
            * Rat::from_integer(ipow(n, n - k));
    }
    acc
}

/// Closed forms of the three sums:
/// w=0: (n-x)^n + (x-1) n^n
/// w=1: x n^n - x n (n-x)^{n-1}
/// w=2: x (x-1) n^2 (n-x)^{n-2} + x n^n
pub fn binomial_sum_closed(n: i64, x: i64, k_weight: u32) -> Rat {
    let i = crate::int;
    let v = match k_weight {
        0 => ipow(n - x, n) + i(x - 1) * ipow(n, n),
        1 => i(x) * ipow(n, n) - i(x * n) * ipow(n - x, n - 1),
        _ => i(x * (x - 1) * n * n) * ipow(n - x, n - 2) + i(x) * ipow(n, n),
    };
    Rat::from_integer(v)
}
