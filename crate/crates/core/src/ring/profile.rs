//! Exact valuation profiles of pi^n/n and pi^n/n!.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Pow};
use serde::Serialize;

pub type Q = Ratio<i64>;

/// v_p(n) for a positive integer.
pub fn vp(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Sum of the base-p digits of n.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// Largest k with p^k <= e, i.e. floor(log e / log p) computed exactly.
pub fn floor_log(e: u64, p: u64) -> u32 {
    assert!(e >= 1 && p >= 2);
    let mut k = 0;
    let mut pk = p as u128;
    while pk <= e as u128 {
        k += 1;
        pk *= p as u128;
    }
    k
}

/// The polar-order ceiling floor(log e / log p) + kappa.
pub fn polar_bound(e: u64, p: u64, kappa: u32) -> u32 {
    floor_log(e, p) + kappa
}

/// v_p(pi^n / n) = n/e - v_p(n).
pub fn v_pi_n_over_n(n: u64, e: u64, p: u64) -> Q {
    Q::new(n as i64, e as i64) - Q::from_integer(vp(n, p) as i64)
}

/// v_p(pi^n / n!) = n/e - (n - s_p(n))/(p-1).
pub fn v_pi_n_over_factorial(n: u64, e: u64, p: u64) -> Q {
    Q::new(n as i64, e as i64) - Q::new((n - digit_sum(n, p)) as i64, (p - 1) as i64)
}

/// Decides `r >= -log e / log p` exactly: with r = a/b (b > 0) this is
/// e^b * p^a >= 1.
pub fn exceeds_neg_log_ratio(r: Q, e: u64, p: u64) -> bool {
    let a = *r.numer();
    let b = *r.denom();
    if a >= 0 {
        return true;
    }
    let lhs = BigInt::from(e).pow(b as u32);
    let rhs = BigInt::from(p).pow((-a) as u32);
    lhs >= rhs
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileRow {
    pub n: u64,
    #[serde(serialize_with = "ser_q")]
    pub v_over_n: Q,
    #[serde(serialize_with = "ser_q")]
    pub v_over_factorial: Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValuationProfile {
    pub e: u64,
    pub p: u64,
    pub rows: Vec<ProfileRow>,
    /// Minimum of v_p(pi^n/n) over the scan and the first n attaining it.
    #[serde(serialize_with = "ser_q")]
    pub min_over_n: Q,
    pub argmin_over_n: u64,
    #[serde(serialize_with = "ser_q")]
    pub min_over_factorial: Q,
    pub argmin_over_factorial: u64,
    /// Whether each column provably tends to infinity.
    pub over_n_tends_to_infinity: bool,
    pub over_factorial_tends_to_infinity: bool,
    /// min over the scan of v_p(pi^n/n) >= -log e / log p, decided exactly.
    pub estimate_holds: bool,
}

pub(crate) fn ser_q<S: serde::Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(q))
}

pub fn fmt_q(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rows n = 1..=nmax of the two valuation columns, with the minima and limits.
pub fn valuation_profile(e: u64, p: u64, nmax: u64) -> ValuationProfile {
    assert!(e >= 1 && nmax >= 1);
    let mut rows = Vec::with_capacity(nmax as usize);
    let mut min_n = (Q::from_integer(i64::MAX), 0);
    let mut min_f = (Q::from_integer(i64::MAX), 0);
    for n in 1..=nmax {
        let a = v_pi_n_over_n(n, e, p);
        let b = v_pi_n_over_factorial(n, e, p);
        if a < min_n.0 {
            min_n = (a, n);
        }
        if b < min_f.0 {
            min_f = (b, n);
        }
        rows.push(ProfileRow { n, v_over_n: a, v_over_factorial: b });
    }
    ValuationProfile {
        e,
        p,
        rows,
        min_over_n: min_n.0,
        argmin_over_n: min_n.1,
        min_over_factorial: min_f.0,
        argmin_over_factorial: min_f.1,
        over_n_tends_to_infinity: true,
        over_factorial_tends_to_infinity: e < p - 1,
        estimate_holds: exceeds_neg_log_ratio(min_n.0, e, p),
    }
}

/// Minimum of v_p(pi^n/n) over 1 <= n <= nmax without materializing rows.
pub fn min_v_over_n(e: u64, p: u64, nmax: u64) -> (Q, u64) {
    let mut best = (v_pi_n_over_n(1, e, p), 1);
    // the minimum over a block of multiples of p^k sits at the first one
    let mut pk = p;
    while pk <= nmax {
        let v = v_pi_n_over_n(pk, e, p);
        if v < best.0 {
            best = (v, pk);
        }
        pk *= p;
    }
    best
}

/// Floor of a rational.
pub fn floor_q(q: Q) -> i64 {
    q.floor().to_integer()
}

/// Ceiling of a rational.
pub fn ceil_q(q: Q) -> i64 {
    q.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unramified_minimum() {
        let prof = valuation_profile(1, 5, 200);
        assert_eq!(prof.min_over_n, Q::from_integer(1));
        assert_eq!(prof.argmin_over_n, 1);
        assert!(prof.estimate_holds);
    }

    #[test]
    fn sample_rows() {
        assert_eq!(v_pi_n_over_n(10, 4, 5), Q::new(3, 2));
        assert_eq!(digit_sum(4096, 5), 12);
        assert_eq!(v_pi_n_over_factorial(4096, 8, 5), Q::from_integer(-509));
    }

    #[test]
    fn floor_log_exact() {
        assert_eq!(floor_log(1, 5), 0);
        assert_eq!(floor_log(4, 5), 0);
        assert_eq!(floor_log(5, 5), 1);
        assert_eq!(floor_log(24, 5), 1);
        assert_eq!(floor_log(25, 5), 2);
        assert_eq!(floor_log(1000, 5), 4);
    }

    #[test]
    fn exact_bound_comparison() {
        // -1 >= -log 5/log 5 holds with equality
        assert!(exceeds_neg_log_ratio(Q::from_integer(-1), 5, 5));
        assert!(!exceeds_neg_log_ratio(Q::new(-101, 100), 5, 5));
        assert!(exceeds_neg_log_ratio(Q::new(-3, 4), 4, 5));
    }

    #[test]
    fn block_minimum_matches_full_scan() {
        for e in [1u64, 3, 4, 24, 125, 777] {
            let prof = valuation_profile(e, 5, 10 * e);
            assert_eq!(min_v_over_n(e, 5, 10 * e).0, prof.min_over_n);
        }
    }
}
