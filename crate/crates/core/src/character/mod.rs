//! Delta-characters: the basic character of G_m, elliptic characters on the
//! formal disk, their evaluation, and the certificates built on them.

mod decay;
mod divergence;
mod gm;
mod polar;
mod serre_tate;

pub use decay::{ramification_decay_check, DecayReport, DecayRow, PointEvaluator};
pub use divergence::{divergence_witness, DivergenceResult};
pub use gm::{
    gm_char_eval, gm_char_eval_rescaled, gm_kernel_test, gm_series_phi, gm_series_z, gm_z_series, KernelKind,
    KernelOutcome,
};
pub use polar::{polar_order_measure, Evaluator, PolarOrderReport, PolarSample};
pub use serre_tate::{fr_alg_eval, period_map_eval, serre_tate_psi};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formal_group::{unit_root, EllipticCurveData, FormalGroupLaw};
use crate::ring::profile::{floor_log, polar_bound};
use crate::ring::{Extension, RamifiedElement};
use crate::series::{DeltaRing, JetSeries, JetVars, PhiWord, RamifiedRing};

/// The exponent kappa in the polar-order bound floor(log e / log p) + kappa.
pub const KAPPA: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CharacterGroup {
    Multiplicative,
    Elliptic(EllipticCurveData),
}

/// psi = (1/p) Lambda(l(t)) on the formal group of `group` over R_pi.
#[derive(Clone, Debug)]
pub struct CharacterSpec {
    pub group: CharacterGroup,
    pub lambda: PhiWord,
    pub order: u32,
    pub ext: Extension,
    pub trunc: u32,
    /// Absolute precision (pi-units) of sampled inputs.
    pub prec: i64,
}

impl CharacterSpec {
    /// Lambda = phi - p, so psi(1 + t) = (1/p) log(phi(1 + t) / (1 + t)^p).
    pub fn multiplicative(ext: &Extension, trunc: u32, prec: i64) -> Self {
        let p = ext.p() as i64;
        CharacterSpec {
            group: CharacterGroup::Multiplicative,
            lambda: PhiWord::from_terms([(1, 1), (0, -p)]),
            order: 1,
            ext: ext.clone(),
            trunc,
            prec,
        }
    }

    /// Order 2: Lambda = phi^2 - a_p phi + p. Order 1: Lambda = phi - u with u
    /// the unit root of x^2 - a_p x + p (ordinary curves only).
    pub fn elliptic(curve: &EllipticCurveData, order: u32, ext: &Extension, trunc: u32, prec: i64) -> Result<Self> {
        if curve.p != ext.p() {
            return Err(Error::InvalidParameter(format!("curve data is for p = {}, ring has p = {}", curve.p, ext.p())));
        }
        let lambda = match order {
            2 => PhiWord::from_terms([(2, BigInt::one()), (1, BigInt::from(-curve.ap)), (0, BigInt::from(curve.p))]),
            1 => {
                let u = unit_root(curve, ext.base().digits())?;
                PhiWord::from_terms([(1, BigInt::one()), (0, -u)])
            }
            _ => return Err(Error::InvalidParameter(format!("elliptic characters have order 1 or 2, got {order}"))),
        };
        Ok(CharacterSpec { group: CharacterGroup::Elliptic(curve.clone()), lambda, order, ext: ext.clone(), trunc, prec })
    }

    /// floor(log e / log p) + 2.
    pub fn nu_bound(&self) -> u32 {
        polar_bound(self.ext.e() as u64, self.ext.p(), KAPPA)
    }

    /// The formal group law of the character's group, to the truncation degree.
    pub fn group_law(&self) -> Result<FormalGroupLaw> {
        match &self.group {
            CharacterGroup::Multiplicative => Ok(FormalGroupLaw::multiplicative(self.ext.p(), self.trunc.max(2))),
            CharacterGroup::Elliptic(c) => FormalGroupLaw::weierstrass(&c.a4, &c.a6, c.p, self.trunc.max(2)),
        }
    }
}

/// (1/p) w(l(t)) as a series in (t, dt, ..., d^r t), r = order of `w`.
pub fn lambda_log_series<R: DeltaRing>(
    ring: &R,
    log_coeffs: &[BigRational],
    w: &PhiWord,
    trunc: u32,
    strict: bool,
) -> Result<JetSeries<R>> {
    let vars = JetVars::single("t", 0);
    let mut coeffs = vec![ring.zero()];
    for a in log_coeffs.iter().take(trunc as usize) {
        coeffs.push(ring.from_rational(a).ok_or_else(|| Error::Domain(format!("{a} is not in the coefficient ring")))?);
    }
    let l = JetSeries::univariate(ring, &vars, trunc, 0, &coeffs).strict(strict);
    let s = w.apply_series(&l)?;
    let inv_p = ring
        .from_rational(&BigRational::new(BigInt::one(), BigInt::from(ring.p())))
        .ok_or_else(|| Error::Domain("1/p is not in the coefficient ring".into()))?;
    Ok(s.scale(&inv_p))
}

/// The character series psi described by `spec` over R_pi.
pub fn character_series(spec: &CharacterSpec, fgl: &FormalGroupLaw, strict: bool) -> Result<JetSeries<RamifiedRing>> {
    let ring = RamifiedRing::new(&spec.ext);
    lambda_log_series(&ring, &fgl.log_coeffs(spec.trunc as usize), &spec.lambda, spec.trunc, strict)
}

/// psi = (1/p) Lambda(l(t)) for an elliptic spec.
pub fn elliptic_char_series(spec: &CharacterSpec, fgl: &FormalGroupLaw, strict: bool) -> Result<JetSeries<RamifiedRing>> {
    match &spec.group {
        CharacterGroup::Elliptic(c) => {
            let matches = matches!(fgl.source(), crate::formal_group::GroupSource::Weierstrass { a4, a6 } if *a4 == c.a4 && *a6 == c.a6);
            if !matches {
                return Err(Error::InvalidParameter("group law does not belong to the curve".into()));
            }
            character_series(spec, fgl, strict)
        }
        CharacterGroup::Multiplicative => Err(Error::InvalidParameter("character is not elliptic".into())),
    }
}

/// Lower bound on the pi-valuation of everything a truncated character
/// series omits when evaluated at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TailRule {
    /// (1/p) sum_n c_n (pi^n / n) z^n with z of degree >= 1 carrying at most
    /// one dt per factor (the G_m character and the Serre-Tate series).
    Multiplicative,
    /// (1/p) sum_i lambda_i phi^i(l(t)) with integral lambda_i and n A_n integral.
    Lambda { order: u32 },
}

fn min_n_minus_log(from: u64, e: u64, p: u64) -> i64 {
    // n - e floor_log(n) over n >= from: check `from` and every later power of p
    let f = |n: u64| n as i64 - (e as i64) * floor_log(n, p) as i64;
    let mut best = f(from.max(1));
    let mut q = 1u64;
    while q < from.max(1) {
        q *= p;
    }
    // f(p^(b+1)) - f(p^b) = p^b (p - 1) - e, so f is increasing on powers once that is >= 0
    loop {
        best = best.min(f(q));
        if q.saturating_mul(p - 1) >= e || q > u64::MAX / p {
            break;
        }
        q *= p;
    }
    best
}

/// Tail floor (pi-units) for a series truncated at total degree `trunc`,
/// evaluated at t0 of pi-valuation `k >= 1`.
pub fn tail_floor(rule: TailRule, trunc: u32, k: i64, e: u64, p: u64) -> i64 {
    let e_i = e as i64;
    match rule {
        TailRule::Multiplicative => {
            let d = trunc as i64 + 1;
            (0..=d)
                .map(|j| (d - j) * k + min_n_minus_log(j.max(1) as u64, e, p))
                .min()
                .unwrap()
                - e_i
        }
        TailRule::Lambda { order } => {
            let pr = p.pow(order);
            let n0 = (trunc as u64 + 1).div_ceil(pr);
            min_n_minus_log(n0.max(1), e, p) - e_i
        }
    }
}

/// Value of a character series at t0 in pi R_pi, with jets from iterated
/// delta. The result precision is capped at the tail floor of `rule`.
pub fn char_eval_with(psi: &JetSeries<RamifiedRing>, rule: TailRule, t0: &RamifiedElement) -> Result<RamifiedElement> {
    let ext = psi.ring().ext();
    check_maximal_ideal(t0)?;
    let r = psi.vars().order();
    if psi.vars().bases().len() != 1 {
        return Err(Error::IncompatibleSeries("character series must be in one jet block".into()));
    }
    let jets = t0.iterated_delta(r)?;
    let k = match t0.pi_valuation() {
        Ok(v) => v,
        Err(_) => {
            // t0 = 0 to its precision: only the constant term survives
            return Ok(psi.constant_term().with_abs_prec(t0.abs_prec()));
        }
    };
    let value = psi.evaluate(&jets)?;
    let floor = tail_floor(rule, psi.trunc(), k, ext.e() as u64, ext.p());
    Ok(value.with_abs_prec(floor))
}

/// [`char_eval_with`] under the generic rule for (1/p) Lambda(l(t)).
pub fn char_eval(psi: &JetSeries<RamifiedRing>, t0: &RamifiedElement) -> Result<RamifiedElement> {
    char_eval_with(psi, TailRule::Lambda { order: psi.vars().order() as u32 }, t0)
}

pub(crate) fn check_maximal_ideal(t: &RamifiedElement) -> Result<()> {
    if t.shift() != 0 {
        return Err(Error::NotInMaximalIdeal);
    }
    match t.pi_valuation() {
        Ok(v) if v >= 1 => Ok(()),
        Ok(_) => Err(Error::NotInMaximalIdeal),
        Err(_) if t.abs_prec() >= 1 => Ok(()),
        Err(_) => Err(Error::NotInMaximalIdeal),
    }
}

/// psi(t0) = (1/p) sum_i lambda_i l(phi^i(t0)), summed pointwise.
pub fn char_eval_pointwise(spec: &CharacterSpec, fgl: &FormalGroupLaw, t0: &RamifiedElement) -> Result<RamifiedElement> {
    check_maximal_ideal(t0)?;
    let ext = t0.ext();
    let mut acc = RamifiedElement::zero(ext);
    let mut x = t0.clone();
    let mut level = 0;
    for (i, c) in spec.lambda.terms() {
        while level < i {
            x = x.frobenius();
            level += 1;
        }
        let l = fgl.log_eval(&x)?;
        acc = &acc + &l.mul_int(c.clone());
    }
    Ok(acc.div_p_pow(1))
}

/// Outcome of a homomorphism check.
#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub mode: String,
    pub trunc: u32,
    pub checked: usize,
    pub failures: Vec<usize>,
    /// Smallest certified agreement (pi-units) over pointwise samples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_agreement: Option<i64>,
    pub pass: bool,
}

/// Jets (J_0, ..., J_r) of F(t1, t2): J_0 = F and J_{k+1} = (phi(J_k) - J_k^p) / pi,
/// as series in the jets of t1 and t2.
pub fn law_jets<R: DeltaRing>(law: &JetSeries<R>, r: usize) -> Result<Vec<JetSeries<R>>> {
    let ring = law.ring().clone();
    let p = ring.p();
    let mut out = vec![law.with_order(r)?];
    let mut cur = law.clone();
    for k in 0..r {
        let f = cur.phi()?;
        let pw = cur.with_order(k + 1)?.pow(p)?;
        let diff = f.sub(&pw)?;
        let mut terms = Vec::new();
        for (m, c) in diff.terms() {
            let q = ring
                .div_uniformizer(c)
                .ok_or_else(|| Error::Internal("jet of the group law is not divisible by pi".into()))?;
            terms.push((m.clone(), q));
        }
        let next = JetSeries::from_terms(&ring, diff.vars(), diff.trunc(), terms)?;
        out.push(next.with_order(r)?);
        cur = next;
    }
    Ok(out)
}

/// Series identity psi(F(t1, t2)) = psi(t1) + psi(t2) in the jets of t1, t2,
/// to the truncation of `psi`. `law` must be F over the same ring.
pub fn homomorphism_check_series<R: DeltaRing>(psi: &JetSeries<R>, law: &JetSeries<R>) -> Result<HomomorphismReport> {
    let ring = psi.ring().clone();
    let r = psi.vars().order();
    let trunc = psi.trunc().min(law.trunc());
    let law = law.truncated(trunc);
    let jets = law_jets(&law, r)?;
    let vars2 = jets[0].vars().clone();
    let lhs = psi.truncated(trunc).substitute(&jets)?;
    let block = |b: usize| -> Vec<JetSeries<R>> {
        (0..=r).map(|l| JetSeries::var(&ring, &vars2, trunc, vars2.index(b, l))).collect()
    };
    let rhs = psi.truncated(trunc).substitute(&block(0))?.add(&psi.truncated(trunc).substitute(&block(1))?)?;
    let diff = lhs.sub(&rhs)?;
    Ok(HomomorphismReport {
        mode: "series".into(),
        trunc,
        checked: lhs.len(),
        failures: if diff.is_zero() { vec![] } else { vec![diff.len()] },
        min_agreement: None,
        pass: diff.is_zero(),
    })
}

/// psi(F(t1, t2)) against psi(t1) + psi(t2) on the given pairs, with psi
/// evaluated pointwise.
pub fn homomorphism_check_pointwise(
    spec: &CharacterSpec,
    fgl: &FormalGroupLaw,
    pairs: &[(RamifiedElement, RamifiedElement)],
) -> Result<HomomorphismReport> {
    let mut failures = Vec::new();
    let mut min_agreement: Option<i64> = None;
    for (i, (t1, t2)) in pairs.iter().enumerate() {
        let s = fgl.combine(t1, t2)?;
        let lhs = char_eval_pointwise(spec, fgl, &s)?;
        let rhs = &char_eval_pointwise(spec, fgl, t1)? + &char_eval_pointwise(spec, fgl, t2)?;
        let d = &lhs - &rhs;
        if !d.is_zero() {
            failures.push(i);
        }
        let a = d.abs_prec();
        min_agreement = Some(min_agreement.map_or(a, |m| m.min(a)));
    }
    Ok(HomomorphismReport {
        mode: "pointwise".into(),
        trunc: fgl.trunc(),
        checked: pairs.len(),
        pass: failures.is_empty(),
        failures,
        min_agreement,
    })
}

/// The group law moved into another coefficient ring.
pub fn law_over<R: DeltaRing>(fgl: &FormalGroupLaw, ring: &R) -> JetSeries<R> {
    fgl.law().map_ring(ring, |c| ring.from_int(c))
}

/// Smallest nu >= 0 with p^nu x certified integral (`None` if the precision
/// cannot decide any nu up to `cap`).
pub fn observed_shift(x: &RamifiedElement, cap: u32) -> Option<u32> {
    (0..=cap).find(|&nu| x.certify_shift(nu) == Some(true))
}

/// Whether every coefficient of p^nu s is certified to lie in R_pi.
pub fn series_integral(s: &JetSeries<RamifiedRing>, nu: u32) -> bool {
    s.terms().all(|(_, c)| c.certify_shift(nu) == Some(true))
}

pub(crate) fn zero_like(ext: &Extension, abs: i64) -> RamifiedElement {
    RamifiedElement::zero(ext).with_abs_prec(abs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal_group::count_points;
    use crate::ring::UnramifiedRing;
    use crate::series::Rationals;

    fn unram() -> Extension {
        Extension::unramified(UnramifiedRing::new(5, 1, 12).unwrap()).unwrap()
    }

    #[test]
    fn elliptic_leading_structure() {
        let curve = count_points(&BigInt::from(1), &BigInt::from(0), 5).unwrap();
        let spec = CharacterSpec::elliptic(&curve, 2, &unram(), 12, 12).unwrap();
        let fgl = spec.group_law().unwrap();
        let psi = elliptic_char_series(&spec, &fgl, false).unwrap();
        let x = &spec.ext;
        assert_eq!(psi.coeff(&[1, 0, 0]), RamifiedElement::one(x));
        assert_eq!(psi.coeff(&[0, 1, 0]), RamifiedElement::from_int(x, -curve.ap));
        assert_eq!(psi.coeff(&[0, 0, 1]), RamifiedElement::from_int(x, 5));
        assert!(series_integral(&psi, 0));
    }

    #[test]
    fn supersingular_order_one_rejected() {
        let curve = count_points(&BigInt::from(0), &BigInt::from(1), 5).unwrap();
        assert_eq!(CharacterSpec::elliptic(&curve, 1, &unram(), 8, 8).unwrap_err(), Error::Supersingular);
    }

    #[test]
    fn gm_series_homomorphism_over_rationals() {
        let q = Rationals::new(5);
        let psi = gm_series_phi(&q, 6, false).unwrap();
        let fgl = FormalGroupLaw::multiplicative(5, 6);
        let rep = homomorphism_check_series(&psi, &law_over(&fgl, &q)).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn tail_floor_examples() {
        // e = 1, D = 20, k = 1: monomials of degree 21 are at least p^19-small
        assert_eq!(tail_floor(TailRule::Multiplicative, 20, 1, 1, 5), 19);
        assert_eq!(tail_floor(TailRule::Lambda { order: 1 }, 20, 1, 1, 5), 3);
    }
}
