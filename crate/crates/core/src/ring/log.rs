//! The p-adic logarithm on 1 + pi R_pi.

use num_bigint::BigInt;
use num_traits::Zero;

use super::element::RamifiedElement;
use crate::error::{Error, Result};

/// Smallest `n0 >= 1` such that every `n > n0` satisfies
/// `n * k - e * log_p(n) >= target`, so terms of pi-valuation at least
/// `n k - e v_p(n)` beyond `n0` vanish modulo pi^target.
pub fn series_cutoff(k: i64, e: usize, p: u64, target: i64) -> u64 {
    assert!(k >= 1);
    let lp = (p as f64).ln();
    let e = e as f64;
    let k = k as f64;
    // the bound n k - e log_p n is increasing past e / (k ln p)
    let mut n = ((e / (k * lp)).ceil() as u64).max(1);
    loop {
        let nf = n as f64;
        if nf * k - e * nf.ln() / lp >= target as f64 + 1.0 {
            return n;
        }
        n += 1;
    }
}

/// log(x) = sum_{n>=1} (-1)^(n-1) (x-1)^n / n for x = 1 mod pi.
///
/// The result carries the precision justified by the ledger and never more
/// than the precision of `x`.
pub fn padic_log(x: &RamifiedElement) -> Result<RamifiedElement> {
    let ext = x.ext();
    let y = x - &RamifiedElement::one(ext);
    if y.shift() != 0 || !matches!(y.certify_shift(0), Some(true)) {
        return Err(Error::NotOneModPi);
    }
    let target = x.abs_prec();
    let k = match y.pi_valuation() {
        Ok(v) if v >= 1 => v,
        Ok(_) => return Err(Error::NotOneModPi),
        Err(_) => {
            if y.abs_prec() >= 1 {
                return Ok(RamifiedElement::zero(ext).with_abs_prec(target));
            }
            return Err(Error::NotOneModPi);
        }
    };
    let cutoff = series_cutoff(k, ext.e(), ext.p(), target);
    let mut sum = RamifiedElement::zero(ext);
    let mut power = y.clone();
    for n in 1..=cutoff {
        let term = power.div_int(&BigInt::from(n));
        sum = if n % 2 == 1 { &sum + &term } else { &sum - &term };
        if n < cutoff {
            power = &power * &y;
        }
    }
    Ok(sum.with_abs_prec(target))
}

/// True if `x` is congruent to 1 modulo pi (to its precision).
pub fn is_one_mod_pi(x: &RamifiedElement) -> bool {
    let y = x - &RamifiedElement::one(x.ext());
    y.shift() == 0 && y.abs_prec() >= 1 && y.coeff(0).iter().all(|c| {
        let p = BigInt::from(x.ext().p());
        (c % &p).is_zero()
    })
}
