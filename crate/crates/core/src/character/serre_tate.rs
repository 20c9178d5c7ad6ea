//! Delta-Serre-Tate expansions, (f^r)^alg at Serre-Tate parameters, and the
//! delta-period map.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::gm::{gm_char_eval, serre_tate_sum};
use crate::error::{Error, Result};
use crate::ring::{is_one_mod_pi, RamifiedElement};
use crate::series::{lambda_sum, DeltaRing, JetSeries};

/// Psi_{pi,nu} = p^(nu-1) sum_{n>=1} (-1)^n (pi^n / n) z^n with
/// z = delta(1 + t) / (1 + t)^p, as a series in (t, dt).
pub fn serre_tate_psi<R: DeltaRing>(ring: &R, nu: u32, trunc: u32, strict: bool) -> Result<JetSeries<R>> {
    let s = serre_tate_sum(ring, trunc, strict)?;
    let scale = if nu >= 1 {
        ring.from_int(&BigInt::from(ring.p()).pow(nu - 1))
    } else {
        ring.from_rational(&BigRational::new(BigInt::one(), BigInt::from(ring.p())))
            .ok_or_else(|| Error::Domain("1/p is not in the coefficient ring".into()))?
    };
    Ok(s.scale(&scale))
}

/// lam^(1+phi^r) u^(1+phi^r) Lambda^(r-1)(psi(q)) with psi(q) = (1/p) log(phi(q)/q^p).
pub fn fr_alg_eval(r: u32, q: &RamifiedElement, lam: &RamifiedElement, u: &RamifiedElement) -> Result<RamifiedElement> {
    if r < 1 {
        return Err(Error::InvalidParameter("order r must be at least 1".into()));
    }
    if !is_one_mod_pi(q) {
        return Err(Error::NotOneModPi);
    }
    if !lam.is_unit() || !u.is_unit() {
        return Err(Error::NotUnit);
    }
    let psi = gm_char_eval(q)?;
    let w = lambda_sum(r, q.ext().p())?;
    let twist = |x: &RamifiedElement| x * &x.frobenius_pow(r);
    Ok(&(&twist(lam) * &twist(u)) * &w.apply_element(&psi))
}

/// eps^2 (1/p) phi(x) / x with x = log(phi(q) / q^p).
pub fn period_map_eval(q: &RamifiedElement, eps: &RamifiedElement) -> Result<RamifiedElement> {
    if !is_one_mod_pi(q) {
        return Err(Error::NotOneModPi);
    }
    if !eps.is_unit() {
        return Err(Error::NotUnit);
    }
    let x = gm_char_eval(q)?.mul_p_pow(1);
    if x.pi_valuation().is_err() {
        return Err(Error::OutsideOrdinaryDomain);
    }
    let ratio = x.frobenius().checked_div(&x)?;
    Ok((&eps.square() * &ratio).div_p_pow(1))
}
