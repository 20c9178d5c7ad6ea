//! The basic delta-character of G_m: psi(a) = (1/p) log(phi(a) / a^p).

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::zero_like;
use crate::error::{Error, Result};
use crate::ring::{is_one_mod_pi, padic_log, series_cutoff, RamifiedElement};
use crate::series::{DeltaRing, JetSeries, JetVars, PhiWord};

/// z = delta(1 + t) / (1 + t)^p in (t, dt), where
/// delta(1 + t) = dt - sum_{k=1}^{p-1} (C(p, k) / pi) t^k.
pub fn gm_z_series<R: DeltaRing>(ring: &R, trunc: u32, strict: bool) -> Result<JetSeries<R>> {
    let p = ring.p();
    let vars = JetVars::single("t", 1);
    let t = JetSeries::var(ring, &vars, trunc, 0).strict(strict);
    let dt = JetSeries::var(ring, &vars, trunc, 1).strict(strict);
    let mut delta = dt;
    let mut tk = JetSeries::one(ring, &vars, trunc).strict(strict);
    for k in 1..p {
        tk = tk.mul(&t)?;
        let c = ring
            .div_uniformizer(&ring.from_int(&binomial(BigInt::from(p), BigInt::from(k))))
            .ok_or_else(|| Error::Internal("binomial coefficient not divisible by pi".into()))?;
        delta = delta.sub(&tk.scale(&c))?;
    }
    let one_plus_t = JetSeries::one(ring, &vars, trunc).add(&t)?;
    // (1 + t)^p is a polynomial, but its inverse is not: build it non-strictly
    let inv = one_plus_t.strict(false).pow(p)?.inverse()?;
    delta.mul(&inv.strict(strict))
}

fn sum_z_powers<R: DeltaRing>(ring: &R, trunc: u32, strict: bool, sign: i64) -> Result<JetSeries<R>> {
    let z = gm_z_series(ring, trunc, strict)?;
    let pi = ring.uniformizer();
    let mut acc = JetSeries::zero(ring, z.vars(), trunc).strict(strict);
    let mut zn = JetSeries::one(ring, z.vars(), trunc).strict(strict);
    let mut pin = ring.one();
    for n in 1..=trunc as i64 {
        zn = zn.mul(&z)?;
        pin = ring.mul(&pin, &pi);
        let s = if n % 2 == 1 { sign } else { -sign };
        let inv_n = ring
            .from_rational(&BigRational::new(BigInt::from(s), BigInt::from(n)))
            .ok_or_else(|| Error::Domain(format!("1/{n} is not in the coefficient ring")))?;
        acc = acc.add(&zn.scale(&ring.mul(&pin, &inv_n)))?;
    }
    Ok(acc)
}

/// psi = (1/p) sum_{n>=1} (-1)^(n-1) (pi^n / n) z^n as a series in (t, dt)
/// for a = 1 + t.
pub fn gm_series_z<R: DeltaRing>(ring: &R, trunc: u32, strict: bool) -> Result<JetSeries<R>> {
    let s = sum_z_powers(ring, trunc, strict, 1)?;
    let inv_p = ring
        .from_rational(&BigRational::new(BigInt::one(), BigInt::from(ring.p())))
        .ok_or_else(|| Error::Domain("1/p is not in the coefficient ring".into()))?;
    Ok(s.scale(&inv_p))
}

/// psi = (1/p)(phi - p) log(1 + t), expanded through phi(t) = t^p + pi dt.
pub fn gm_series_phi<R: DeltaRing>(ring: &R, trunc: u32, strict: bool) -> Result<JetSeries<R>> {
    let log: Vec<BigRational> = (1..=trunc as i64)
        .map(|n| BigRational::new(BigInt::from(if n % 2 == 1 { 1 } else { -1 }), BigInt::from(n)))
        .collect();
    let w = PhiWord::from_terms([(1, 1), (0, -(ring.p() as i64))]);
    super::lambda_log_series(ring, &log, &w, trunc, strict)
}

pub(crate) fn serre_tate_sum<R: DeltaRing>(ring: &R, trunc: u32, strict: bool) -> Result<JetSeries<R>> {
    sum_z_powers(ring, trunc, strict, -1)
}

/// psi(a) for a unit a of R_pi, summing (1/p) sum (-1)^(n-1) (pi^n / n) z^n
/// with z = delta(a) / a^p until the tail is below the precision of pi z.
pub fn gm_char_eval(a: &RamifiedElement) -> Result<RamifiedElement> {
    if a.shift() != 0 {
        return Err(Error::ShiftedElement(a.shift()));
    }
    if !a.is_unit() {
        return Err(Error::NotUnit);
    }
    let ext = a.ext();
    let p = ext.p();
    let z = a.delta_pi()?.checked_div(&a.pow(p))?;
    let pi = RamifiedElement::pi(ext);
    let target = (&z * &pi).abs_prec();
    let k = match z.pi_valuation() {
        Ok(v) => v + 1,
        Err(_) => return Ok(zero_like(ext, target).div_p_pow(1)),
    };
    let cutoff = series_cutoff(k, ext.e(), p, target);
    let mut acc = RamifiedElement::zero(ext);
    let mut zn = RamifiedElement::one(ext);
    let mut pin = RamifiedElement::one(ext);
    for n in 1..=cutoff {
        zn = &zn * &z;
        pin = &pin * &pi;
        let term = (&pin * &zn).div_int(&BigInt::from(n));
        acc = if n % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    Ok(acc.with_abs_prec(target).div_p_pow(1))
}

/// p^nu psi(a).
pub fn gm_char_eval_rescaled(a: &RamifiedElement, nu: u32) -> Result<RamifiedElement> {
    Ok(gm_char_eval(a)?.mul_p_pow(nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelKind {
    PrimeToPRoot,
    PPowerRoot,
    NonRoot,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelOutcome {
    pub kind: KernelKind,
    pub value: String,
    pub vanishes: bool,
    /// v_p(psi(a)) when certified nonzero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuation: Option<String>,
    pub declaration_consistent: bool,
    pub pass: bool,
}

fn is_one(x: &RamifiedElement) -> bool {
    (x - &RamifiedElement::one(x.ext())).is_zero()
}

/// Roots of unity must evaluate to 0, declared non-roots to a value of
/// certified finite valuation. The declaration itself is checked too.
pub fn gm_kernel_test(a: &RamifiedElement, kind: KernelKind) -> Result<KernelOutcome> {
    let ext = a.ext();
    let q = ext.base().q();
    let value = gm_char_eval(a)?;
    let vanishes = value.is_zero();
    let valuation = value.valuation().ok();
    let a_q = a.pow_big(&(q - 1u32));
    let declaration_consistent = match kind {
        KernelKind::PrimeToPRoot => is_one(&a_q),
        KernelKind::PPowerRoot => {
            is_one_mod_pi(a) && {
                let mut x = a.clone();
                let mut hit = is_one(&x);
                for _ in 0..16 {
                    if hit {
                        break;
                    }
                    x = x.pow(ext.p());
                    hit = is_one(&x);
                }
                hit
            }
        }
        KernelKind::NonRoot => padic_log(&a_q).map(|l| !l.is_zero()).unwrap_or(false),
    };
    let expected = match kind {
        KernelKind::NonRoot => valuation.is_some(),
        _ => vanishes,
    };
    Ok(KernelOutcome {
        kind,
        value: value.to_string(),
        vanishes,
        valuation: valuation.map(|v| v.to_string()),
        declaration_consistent,
        pass: expected && declaration_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Extension, UnramifiedRing};
    use crate::series::{Rationals, RamifiedRing};
    use num_rational::Ratio;

    fn z5() -> Extension {
        Extension::unramified(UnramifiedRing::new(5, 1, 20).unwrap()).unwrap()
    }

    #[test]
    fn trivial_values() {
        let x = z5();
        assert!(gm_char_eval(&RamifiedElement::one(&x)).unwrap().is_zero());
        let w = RamifiedElement::teichmuller(&x, &[2]).unwrap();
        assert!(gm_char_eval(&w).unwrap().is_zero());
        assert_eq!(gm_char_eval(&RamifiedElement::from_int(&x, 5)).unwrap_err(), Error::NotUnit);
    }

    #[test]
    fn one_plus_p_matches_log() {
        let x = z5();
        let a = RamifiedElement::from_int(&x, 6);
        let psi = gm_char_eval(&a).unwrap();
        // phi(a) = a, so psi(a) = ((1 - p) / p) log a
        let expect = padic_log(&a).unwrap().mul_int(-4).div_p_pow(1);
        assert!(psi.eq_to_precision(&expect));
        assert_eq!(psi.valuation().unwrap(), Ratio::from_integer(0));
    }

    #[test]
    fn two_series_routes_agree() {
        let q = Rationals::new(5);
        let a = gm_series_z(&q, 10, false).unwrap();
        let b = gm_series_phi(&q, 10, false).unwrap();
        assert!(a.eq_series(&b));
        let ext = Extension::power_root(UnramifiedRing::new(5, 1, 8).unwrap(), 2).unwrap();
        let r = RamifiedRing::new(&ext);
        let a = gm_series_z(&r, 8, false).unwrap();
        let b = gm_series_phi(&r, 8, false).unwrap();
        assert!(a.eq_series(&b));
    }

    #[test]
    fn kernel_cases() {
        let x = z5();
        let w = RamifiedElement::teichmuller(&x, &[3]).unwrap();
        assert!(gm_kernel_test(&w, KernelKind::PrimeToPRoot).unwrap().pass);
        let a = RamifiedElement::from_int(&x, 6);
        assert!(gm_kernel_test(&a, KernelKind::NonRoot).unwrap().pass);
        let bad = gm_kernel_test(&a, KernelKind::PrimeToPRoot).unwrap();
        assert!(!bad.declaration_consistent && !bad.pass);
        let cyc = Extension::cyclotomic(UnramifiedRing::new(5, 1, 10).unwrap(), 1).unwrap();
        let zeta = &RamifiedElement::one(&cyc) + &RamifiedElement::pi(&cyc);
        assert!(gm_kernel_test(&zeta, KernelKind::PPowerRoot).unwrap().pass);
    }
}
