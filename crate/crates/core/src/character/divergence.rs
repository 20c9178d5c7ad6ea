//! The trichotomy for v_p(pi^n / n!): divergent for e > p - 1, bounded but
//! not tending to infinity for e = p - 1, tending to infinity for e < p - 1.

use num_rational::Ratio;
use serde::Serialize;

use crate::ring::profile::{v_pi_n_over_factorial, Q};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValuationPoint {
    pub n: u64,
    #[serde(serialize_with = "crate::ring::profile::ser_q")]
    pub valuation: Q,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DivergenceResult {
    /// The largest n <= nmax below -threshold, and the first crossing.
    Witness { witness: ValuationPoint, first_crossing: ValuationPoint },
    /// e = p - 1: the n = p^k family stays at 1/(p - 1).
    BoundedNonvanishing {
        family: Vec<ValuationPoint>,
        #[serde(serialize_with = "crate::ring::profile::ser_q")]
        floor: Q,
    },
    /// e < p - 1: valuations grow at least like n (1/e - 1/(p - 1)) - O(log n).
    OverconvergentProfile {
        minimum: ValuationPoint,
        #[serde(serialize_with = "crate::ring::profile::ser_q")]
        slope: Q,
    },
    /// e > p - 1 but no n <= nmax went below -threshold.
    Inconclusive { nmax: u64, minimum: ValuationPoint },
}

impl DivergenceResult {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, DivergenceResult::Inconclusive { .. })
    }
}

fn scan_min(e: u64, p: u64, nmax: u64) -> ValuationPoint {
    let mut best = ValuationPoint { n: 1, valuation: v_pi_n_over_factorial(1, e, p) };
    for n in 2..=nmax {
        let v = v_pi_n_over_factorial(n, e, p);
        if v < best.valuation {
            best = ValuationPoint { n, valuation: v };
        }
    }
    best
}

pub fn divergence_witness(e: u64, p: u64, nmax: u64, threshold: i64) -> DivergenceResult {
    assert!(e >= 1 && p >= 2 && nmax >= 1);
    let pm1 = p - 1;
    if e > pm1 {
        let bound = Ratio::from_integer(-threshold);
        let mut first = None;
        let mut last = None;
        for n in 1..=nmax {
            let v = v_pi_n_over_factorial(n, e, p);
            if v < bound {
                let pt = ValuationPoint { n, valuation: v };
                if first.is_none() {
                    first = Some(pt.clone());
                }
                last = Some(pt);
            }
        }
        return match (first, last) {
            (Some(first_crossing), Some(witness)) => DivergenceResult::Witness { witness, first_crossing },
            _ => DivergenceResult::Inconclusive { nmax, minimum: scan_min(e, p, nmax) },
        };
    }
    if e == pm1 {
        let mut family = Vec::new();
        let mut n = 1u64;
        while n <= nmax {
            family.push(ValuationPoint { n, valuation: v_pi_n_over_factorial(n, e, p) });
            match n.checked_mul(p) {
                Some(m) => n = m,
                None => break,
            }
        }
        return DivergenceResult::BoundedNonvanishing { family, floor: scan_min(e, p, nmax).valuation };
    }
    DivergenceResult::OverconvergentProfile {
        minimum: scan_min(e, p, nmax),
        slope: Ratio::new(1, e as i64) - Ratio::new(1, pm1 as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_regimes() {
        match divergence_witness(8, 5, 4096, 500) {
            DivergenceResult::Witness { witness, .. } => {
                assert_eq!(witness.n, 4096);
                assert_eq!(witness.valuation, Ratio::from_integer(-509));
            }
            other => panic!("{other:?}"),
        }
        match divergence_witness(4, 5, 4096, 500) {
            DivergenceResult::BoundedNonvanishing { family, floor } => {
                assert!(family.iter().all(|f| f.valuation == Ratio::new(1, 4)));
                assert_eq!(floor, Ratio::new(1, 4));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(divergence_witness(2, 5, 4096, 500), DivergenceResult::OverconvergentProfile { .. }));
        assert!(divergence_witness(8, 5, 100, 500).is_inconclusive());
    }
}
