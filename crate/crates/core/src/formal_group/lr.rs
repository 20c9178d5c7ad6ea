//! The jet series L^r = (1/p) phi^r(l(T)) at T = 0 and its integrality certificate.

use serde::Serialize;

use super::FormalGroupLaw;
use crate::error::Result;
use crate::ring::profile::polar_bound;
use crate::ring::{Extension, RamifiedElement};
use crate::series::{CoeffRing, JetSeries, JetVars, RamifiedRing};

/// L^r = (1/p) sum_n phi^r(A_n) G^n with G = phi^r(T)|_{T=0}, a series in
/// (dT, ..., d^r T) (the T slot is present but never occurs).
pub fn l_r_series(
    fgl: &FormalGroupLaw,
    r: usize,
    ext: &Extension,
    trunc: u32,
    strict: bool,
) -> Result<JetSeries<RamifiedRing>> {
    assert!(r >= 1, "order must be at least 1");
    let ring = RamifiedRing::new(ext);
    let vars = JetVars::single("T", 0);
    let t = JetSeries::var(&ring, &vars, trunc, 0).strict(strict);
    // phi is degree non-decreasing, so truncating before the last step is sound
    let pre = t.phi_pow(r - 1)?;
    let g = pre.phi_killing(&[0])?;
    let coeffs = fgl.log_coeffs(trunc as usize);
    let mut acc = JetSeries::zero(&ring, g.vars(), trunc).strict(strict);
    let mut power = JetSeries::one(&ring, g.vars(), trunc).strict(strict);
    for a in coeffs.iter() {
        power = power.mul(&g)?;
        if power.is_zero() {
            break;
        }
        let c = ring.from_rational(a).expect("rationals embed");
        let c = c.frobenius_pow(r as u32);
        acc = acc.add(&power.scale(&c))?;
    }
    Ok(acc.map_coeffs(|c| c.div_p_pow(1)))
}

#[derive(Clone, Debug, Serialize)]
pub struct LrpCertificate {
    pub e: u64,
    pub r: usize,
    pub terms: usize,
    /// Smallest nu with p^nu L^r integral.
    pub nu_used: u32,
    /// floor(log e / log p) + 2.
    pub nu_bound: u32,
    pub pass: bool,
}

/// Certifies that p^nu L has coefficients in R_pi for nu = floor(log e/log p) + 2.
pub fn lrp_check(l: &JetSeries<RamifiedRing>, r: usize) -> LrpCertificate {
    let ext = l.ring().ext();
    let e = ext.e() as u64;
    let nu_bound = polar_bound(e, ext.p(), 2);
    let nu_used = l.shift();
    let integral = l.terms().all(|(_, c)| matches!(c.certify_shift(nu_bound), Some(true)));
    LrpCertificate { e, r, terms: l.len(), nu_used, nu_bound, pass: integral && nu_used <= nu_bound }
}

/// Coefficient of a pure jet monomial (d^level T)^k in an L^r series.
pub fn jet_coeff(l: &JetSeries<RamifiedRing>, level: usize, k: u32) -> RamifiedElement {
    let mut m = vec![0; l.vars().len()];
    m[level] = k;
    l.coeff(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::UnramifiedRing;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ext(e: usize) -> Extension {
        Extension::power_root(UnramifiedRing::new(5, 1, 16).unwrap(), e).unwrap()
    }

    #[test]
    fn multiplicative_l1_unramified() {
        let x = Extension::unramified(UnramifiedRing::new(5, 1, 16).unwrap()).unwrap();
        let g = FormalGroupLaw::multiplicative(5, 12);
        let l = l_r_series(&g, 1, &x, 12, false).unwrap();
        // (1/p) sum (-1)^(n-1) (p^n / n) dT^n
        for n in 1..=12u32 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expect = BigRational::new(BigInt::from(sign) * BigInt::from(5).pow(n - 1), BigInt::from(n));
            assert_eq!(jet_coeff(&l, 1, n), RamifiedElement::from_rational(&x, &expect));
        }
        let cert = lrp_check(&l, 1);
        assert_eq!(cert.nu_used, 0);
        assert!(cert.pass);
    }

    #[test]
    fn leading_coefficient_is_one_at_pi_equals_p() {
        let x = Extension::unramified(UnramifiedRing::new(5, 1, 16).unwrap()).unwrap();
        let g = FormalGroupLaw::weierstrass(&BigInt::from(1), &BigInt::from(3), 5, 10).unwrap();
        let l = l_r_series(&g, 1, &x, 10, false).unwrap();
        assert_eq!(jet_coeff(&l, 1, 1), RamifiedElement::one(&x));
    }

    #[test]
    fn ramified_certificate() {
        let g = FormalGroupLaw::multiplicative(5, 20);
        let l = l_r_series(&g, 1, &ext(4), 20, false).unwrap();
        let cert = lrp_check(&l, 1);
        assert!(cert.pass, "{cert:?}");
        assert_eq!(cert.nu_bound, 2);
        assert!(cert.nu_used <= 2);
    }
}
