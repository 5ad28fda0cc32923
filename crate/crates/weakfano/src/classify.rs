//! Classification verdicts: Fano / weak-Fano / nef-not-big / not-nef.
//!
//! A verdict is read off the decomposition of -K against the nef-cone
//! generators: strictly positive coefficients mean ample, nonnegative with a
//! zero mean nef on the boundary (big iff the self-intersection is
//! positive), and any negative coefficient means not nef. Verdicts carry the
//! coefficients and the self-intersection value so failures localize.

use crate::cone::{self, NefStatus};
use crate::{anticanonical, Error, Rat, Result, Scenario};
use num::Zero;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Fano,
    WeakFanoNotFano,
    NefNotBig,
    NotNef,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Fano => "fano",
            Status::WeakFanoNotFano => "weak-fano-not-fano",
            Status::NefNotBig => "nef-not-big",
            Status::NotNef => "not-nef",
        }
    }

    /// Weak Fano means -K nef and big: ample or big-boundary.
    pub fn is_weak_fano(&self) -> bool {
        matches!(self, Status::Fano | Status::WeakFanoNotFano)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub coeffs: Vec<Rat>,
    pub selfint: Rat,
}

fn verdict_from(coeffs: Vec<Rat>, selfint: Rat) -> Verdict {
    let status = match cone::nef_status(&coeffs) {
        NefStatus::NotNef => Status::NotNef,
        NefStatus::Interior => Status::Fano,
        NefStatus::Boundary => {
            if selfint > Rat::zero() {
                Status::WeakFanoNotFano
            } else {
                Status::NefNotBig
            }
        }
    };
    Verdict { status, coeffs, selfint }
}

fn classify_scenario(scn: &Scenario, selfint: Rat) -> Result<Verdict> {
    let pres = cone::presentation(scn)?;
    if !pres.verified {
        return Err(Error::Domain(
            "cone presentation failed its duality check".to_string(),
        ));
    }
    let minus_k = cone::anticanonical_class(scn);
    let coeffs = cone::decompose(&minus_k, &pres.div_gens)?;
    Ok(verdict_from(coeffs, selfint))
}

pub fn classify_main(n: i64, a: i64, b: i64) -> Result<Verdict> {
    let scn = Scenario::prod_p1(n, a, b)?;
    let selfint = anticanonical::kx_selfint_closed(n, a, b)?;
    classify_scenario(&scn, selfint)
}

pub fn classify_p2family(n: i64, d: i64) -> Result<Verdict> {
    let scn = Scenario::prod_p2(n, d)?;
    let selfint = anticanonical::kx_selfint_p2family(n, d)?;
    classify_scenario(&scn, selfint)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub scenario: Scenario,
    pub verdict: Verdict,
}

/// A parameter combination the sweep could not classify, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSkip {
    pub n: i64,
    pub a: i64,
    pub b: i64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub skips: Vec<SweepSkip>,
}

fn check_range(name: &str, (lo, hi): (i64, i64), min: i64) -> Result<()> {
    if lo > hi {
        return Ok(()); // empty range, empty output
    }
    if lo < min {
        return Err(Error::Domain(format!(
            "{name} range starts at {lo}, below the minimum {min}"
        )));
    }
    Ok(())
}

/// Sweep the main family over inclusive ranges; rows sorted by (n, a, b).
/// Invalid bidegrees are reported in `skips` rather than silently dropped.
pub fn sweep(n_range: (i64, i64), a_range: (i64, i64), b_range: (i64, i64)) -> Result<Sweep> {
    check_range("n", n_range, 3)?;
    check_range("a", a_range, 0)?;
    check_range("b", b_range, 0)?;
    let mut rows = Vec::new();
    let mut skips = Vec::new();
    for n in n_range.0..=n_range.1 {
        for a in a_range.0..=a_range.1 {
            for b in b_range.0..=b_range.1 {
                if a == 0 && b != 1 {
                    skips.push(SweepSkip {
                        n,
                        a,
                        b,
                        reason: "a = 0 requires b = 1".to_string(),
                    });
                    continue;
                }
                let scenario = Scenario::prod_p1(n, a, b)?;
                let verdict = classify_main(n, a, b)?;
                rows.push(SweepRow { scenario, verdict });
            }
        }
    }
    Ok(Sweep { rows, skips })
}

/// Sweep the second product family over inclusive (n, d) ranges.
pub fn sweep_p2family(n_range: (i64, i64), d_range: (i64, i64)) -> Result<Sweep> {
    check_range("n", n_range, 3)?;
    check_range("d", d_range, 1)?;
    let mut rows = Vec::new();
    for n in n_range.0..=n_range.1 {
        for d in d_range.0..=d_range.1 {
            let scenario = Scenario::prod_p2(n, d)?;
            let verdict = classify_p2family(n, d)?;
            rows.push(SweepRow { scenario, verdict });
        }
    }
    Ok(Sweep { rows, skips: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    const WEAK_FANO_PAIRS: [(i64, i64); 10] = [
        (0, 1),
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 0),
        (2, 1),
        (2, 2),
        (3, 0),
        (3, 1),
        (3, 2),
    ];
    const FANO_PAIRS: [(i64, i64); 5] = [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1)];

    #[test]
    fn main_family_examples() {
        assert_eq!(classify_main(4, 2, 1).unwrap().status, Status::Fano);
        assert_eq!(
            classify_main(3, 2, 1).unwrap().status,
            Status::WeakFanoNotFano
        );
        assert_eq!(classify_main(5, 4, 0).unwrap().status, Status::NotNef);
        assert_eq!(classify_main(4, 2, 1).unwrap().selfint, rat(202));
        assert_eq!(
            classify_main(5, 4, 0).unwrap().coeffs,
            vec![rat(-1), rat(1), rat(2), rat(1)]
        );
    }

    #[test]
    fn p2family_examples() {
        assert_eq!(classify_p2family(4, 1).unwrap().status, Status::Fano);
        assert_eq!(
            classify_p2family(5, 1).unwrap().status,
            Status::WeakFanoNotFano
        );
        assert_eq!(classify_p2family(6, 1).unwrap().status, Status::NotNef);
    }

    #[test]
    fn weak_fano_sets_per_n() {
        for n in 3..=6 {
            let sweep = sweep((n, n), (0, 4), (0, 3)).unwrap();
            let weak: Vec<(i64, i64)> = sweep
                .rows
                .iter()
                .filter(|r| r.verdict.status.is_weak_fano())
                .map(|r| r.scenario.ab().unwrap())
                .collect();
            let mut expected: Vec<(i64, i64)> = WEAK_FANO_PAIRS.to_vec();
            expected.sort();
            let mut got = weak;
            got.sort();
            assert_eq!(got, expected, "n={n}");

            let fano: Vec<(i64, i64)> = sweep
                .rows
                .iter()
                .filter(|r| r.verdict.status == Status::Fano)
                .map(|r| r.scenario.ab().unwrap())
                .collect();
            if n == 3 {
                assert!(fano.is_empty(), "no Fano members at n = 3");
            } else {
                let mut expected: Vec<(i64, i64)> = FANO_PAIRS.to_vec();
                expected.sort();
                let mut got = fano;
                got.sort();
                assert_eq!(got, expected, "n={n}");
            }
        }
    }

    #[test]
    fn single_point_sweep() {
        let s = sweep((4, 4), (2, 2), (1, 1)).unwrap();
        assert_eq!(s.rows.len(), 1);
        assert!(s.skips.is_empty());
        assert_eq!(s.rows[0].verdict.status, Status::Fano);
    }

    #[test]
    fn invalid_pairs_are_reported() {
        let s = sweep((4, 4), (0, 1), (0, 2)).unwrap();
        assert_eq!(s.rows.len(), 4); // (0,1), (1,0), (1,1), (1,2)
        assert_eq!(s.skips.len(), 2); // (0,0), (0,2)
        assert!(s.skips.iter().all(|k| k.a == 0 && k.b != 1));
        assert!(s.skips[0].reason.contains("b = 1"));
    }

    #[test]
    fn empty_ranges() {
        let s = sweep((5, 4), (0, 3), (0, 3)).unwrap();
        assert!(s.rows.is_empty() && s.skips.is_empty());
        assert!(sweep((2, 4), (0, 1), (1, 1)).is_err());
    }

    #[test]
    fn stability_in_n() {
        for n in 3..=50 {
            for (a, b) in WEAK_FANO_PAIRS {
                let v = classify_main(n, a, b).unwrap();
                assert!(
                    v.status.is_weak_fano(),
                    "expected nef and big at n={n} a={a} b={b}, got {}",
                    v.status
                );
            }
        }
        for n in 3..=50 {
            for a in 0..=10 {
                for b in 0..=10 {
                    if (a == 0 && b != 1) || WEAK_FANO_PAIRS.contains(&(a, b)) {
                        continue;
                    }
                    let v = classify_main(n, a, b).unwrap();
                    assert_eq!(v.status, Status::NotNef, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn no_nef_not_big_in_main_grid() {
        let s = sweep((3, 8), (0, 8), (0, 8)).unwrap();
        assert!(s
            .rows
            .iter()
            .all(|r| r.verdict.status != Status::NefNotBig));
    }

    #[test]
    fn coefficients_reassemble_to_anticanonical() {
        for n in 3..=7 {
            for a in 0..=5 {
                for b in 0..=5 {
                    if a == 0 && b != 1 {
                        continue;
                    }
                    let scn = Scenario::prod_p1(n, a, b).unwrap();
                    let pres = cone::presentation(&scn).unwrap();
                    let v = classify_main(n, a, b).unwrap();
                    let rebuilt =
                        cone::reassemble(scn.family, &v.coeffs, &pres.div_gens).unwrap();
                    assert_eq!(rebuilt, cone::anticanonical_class(&scn));
                }
            }
        }
    }

    #[test]
    fn p2family_sweep_table() {
        let s = sweep_p2family((3, 7), (1, 3)).unwrap();
        let weak: Vec<(i64, i64)> = s
            .rows
            .iter()
            .filter(|r| r.verdict.status.is_weak_fano())
            .map(|r| (r.scenario.n, r.scenario.degree_d().unwrap()))
            .collect();
        assert_eq!(weak, vec![(3, 1), (3, 2), (3, 3), (4, 1), (5, 1)]);
        let fano: Vec<(i64, i64)> = s
            .rows
            .iter()
            .filter(|r| r.verdict.status == Status::Fano)
            .map(|r| (r.scenario.n, r.scenario.degree_d().unwrap()))
            .collect();
        assert_eq!(fano, vec![(4, 1)]);
    }

    #[test]
    fn verdict_invariants_hold() {
        let s = sweep((3, 6), (0, 6), (0, 6)).unwrap();
        for row in &s.rows {
            let v = &row.verdict;
            match v.status {
                Status::Fano => {
                    assert!(v.coeffs.iter().all(|c| *c > Rat::zero()));
                }
                Status::WeakFanoNotFano => {
                    assert!(v.coeffs.iter().all(|c| *c >= Rat::zero()));
                    assert!(v.coeffs.iter().any(|c| c.is_zero()));
                    assert!(v.selfint > Rat::zero());
                }
                Status::NefNotBig => {
                    assert!(v.coeffs.iter().all(|c| *c >= Rat::zero()));
                    assert!(v.selfint <= Rat::zero());
                }
                Status::NotNef => {
                    assert!(v.coeffs.iter().any(|c| *c < Rat::zero()));
                }
            }
        }
    }
}
