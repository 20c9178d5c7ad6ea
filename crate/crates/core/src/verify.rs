//! Verification suites behind `delta-arith verify`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::character::{
    char_eval_pointwise, divergence_witness, elliptic_char_series, fr_alg_eval, gm_char_eval, gm_char_eval_rescaled,
    gm_kernel_test, gm_series_phi, homomorphism_check_pointwise, homomorphism_check_series, law_over,
    period_map_eval, polar_order_measure, ramification_decay_check, serre_tate_psi, series_integral, CharacterSpec,
    DivergenceResult, Evaluator, KernelKind, PointEvaluator, KAPPA,
};
use crate::config::{ExtSpec, RunConfig};
use crate::error::{Error, Result};
use crate::formal_group::{count_points, l_r_series, lrp_check, EllipticCurveData, FormalGroupLaw};
use crate::parallel::with_pool;
use crate::report::{Outcome, Params, Report};
use crate::ring::profile::{exceeds_neg_log_ratio, fmt_q, min_v_over_n, polar_bound};
use crate::ring::{padic_log, Extension, RamifiedElement};
use crate::sample::{random_in_maximal_ideal, random_unit, sample_rng};
use crate::series::{Rationals, RamifiedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Estimates,
    Gm,
    Elliptic,
    Lrp,
    SerreTate,
    Divergence,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Estimates, Suite::Gm, Suite::Elliptic, Suite::Lrp, Suite::SerreTate, Suite::Divergence];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "estimates" => Suite::Estimates,
            "gm" => Suite::Gm,
            "elliptic" => Suite::Elliptic,
            "lrp" => Suite::Lrp,
            "serre-tate" => Suite::SerreTate,
            "divergence" => Suite::Divergence,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Estimates => "estimates",
            Suite::Gm => "gm",
            Suite::Elliptic => "elliptic",
            Suite::Lrp => "lrp",
            Suite::SerreTate => "serre-tate",
            Suite::Divergence => "divergence",
            Suite::All => "all",
        })
    }
}

/// Suite parameters that are not part of [`RunConfig`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest ramification index of the estimate scan.
    pub emax: u64,
    /// Scan bound of the divergence witness.
    pub nmax: u64,
    pub threshold: i64,
    /// Ramification indices of the G_m suite.
    pub gm_indices: Vec<usize>,
    /// Rows of the decay tables.
    pub decay_n: u32,
    /// Degree of the series homomorphism identity.
    pub hom_degree: u32,
    /// Random pairs of the pointwise homomorphism check.
    pub hom_pairs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            emax: 1000,
            nmax: 4096,
            threshold: 500,
            gm_indices: vec![1, 2, 4, 8, 24],
            decay_n: 5,
            hom_degree: 8,
            hom_pairs: 50,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub result: Outcome,
    pub data: Value,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, data: Value) -> Self {
        CheckResult { name: name.into(), result: if pass { Outcome::Pass } else { Outcome::Fail }, data }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub result: Outcome,
    pub checks: Vec<CheckResult>,
}

/// Fail dominates inconclusive, which dominates pass.
pub fn combine(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut out = Outcome::Pass;
    for o in outcomes {
        match o {
            Outcome::Fail => return Outcome::Fail,
            Outcome::Inconclusive => out = Outcome::Inconclusive,
            _ => {}
        }
    }
    out
}

fn suite_result(suite: Suite, checks: Vec<CheckResult>) -> SuiteResult {
    SuiteResult { suite: suite.to_string(), result: combine(checks.iter().map(|c| c.result)), checks }
}

fn err_check(name: &str, e: &Error) -> CheckResult {
    CheckResult::new(name, false, json!({ "error": e.to_string() }))
}

/// Runs one suite (or all of them, in a fixed order).
pub fn run_suite(cfg: &RunConfig, opts: &VerifyOptions, suite: Suite) -> Result<Vec<SuiteResult>> {
    cfg.validate()?;
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(cfg, opts, s)).collect();
    }
    Ok(vec![run_one(cfg, opts, suite)?])
}

fn run_one(cfg: &RunConfig, opts: &VerifyOptions, suite: Suite) -> Result<SuiteResult> {
    let checks = match suite {
        Suite::Estimates => estimates(cfg, opts),
        Suite::Gm => gm(cfg, opts)?,
        Suite::Elliptic => elliptic(cfg, opts)?,
        Suite::Lrp => lrp(cfg)?,
        Suite::SerreTate => serre_tate(cfg)?,
        Suite::Divergence => divergence(cfg, opts),
        Suite::All => unreachable!(),
    };
    Ok(suite_result(suite, checks))
}

/// The JSON report of a verify run.
pub fn verify_report(cfg: &RunConfig, opts: &VerifyOptions, suite: Suite) -> Result<Report> {
    let suites = run_suite(cfg, opts, suite)?;
    let ext = cfg.extension()?;
    let params = Params {
        p: cfg.p,
        e: ext.e(),
        eisenstein: ext.polynomial_string(),
        prec: cfg.prec,
        trunc: cfg.trunc,
        r: Some(cfg.order),
    };
    let result = combine(suites.iter().map(|s| s.result));
    Ok(Report::new(format!("verify-{suite}"), params, result, json!({ "suites": suites })))
}

fn power_ext(cfg: &RunConfig, e: usize) -> Result<Extension> {
    cfg.extension_for(&if e == 1 { ExtSpec::Unramified } else { ExtSpec::PowerRoot(e) })
}

/// Three ordinary curves with good reduction (for p = 5: y^2 = x^3 + x,
/// x^3 + x + 1 and x^3 + x + 3).
pub fn test_curves(p: u64) -> Vec<EllipticCurveData> {
    let preferred = [(1, 0), (1, 1), (1, 3)];
    let mut out: Vec<EllipticCurveData> = preferred
        .iter()
        .filter_map(|&(a, b)| count_points(&BigInt::from(a), &BigInt::from(b), p).ok())
        .filter(|c| c.ordinary)
        .collect();
    'search: for a in 1..20i64 {
        for b in 0..20i64 {
            if out.len() >= 3 {
                break 'search;
            }
            if let Ok(c) = count_points(&BigInt::from(a), &BigInt::from(b), p) {
                if c.ordinary && !out.iter().any(|o| o.a4 == c.a4 && o.a6 == c.a6) {
                    out.push(c);
                }
            }
        }
    }
    out.truncate(3);
    out
}

/// The curve used where a single elliptic instance is needed: (1, 3) when ordinary.
pub fn main_curve(p: u64) -> EllipticCurveData {
    let curves = test_curves(p);
    curves.iter().find(|c| c.a4 == BigInt::from(1) && c.a6 == BigInt::from(3)).cloned().unwrap_or_else(|| curves[0].clone())
}

fn estimates(cfg: &RunConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let p = cfg.p;
    let rows: Vec<(u64, Ratio<i64>, u64, bool)> = with_pool(|| {
        (1..=opts.emax)
            .into_par_iter()
            .map(|e| {
                let (m, n) = min_v_over_n(e, p, 10 * e);
                (e, m, n, exceeds_neg_log_ratio(m, e, p))
            })
            .collect()
    });
    let failures: Vec<Value> = rows
        .iter()
        .filter(|r| !r.3)
        .map(|(e, m, n, _)| json!({ "e": e, "min": fmt_q(m), "argmin": n }))
        .collect();
    // margin min + log e / log p, for display only
    let tightest = rows
        .iter()
        .map(|(e, m, n, _)| {
            let margin = *m.numer() as f64 / *m.denom() as f64 + (*e as f64).ln() / (p as f64).ln();
            (margin, *e, *m, *n)
        })
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)))
        .unwrap();
    vec![CheckResult::new(
        "log-estimate",
        failures.is_empty(),
        json!({
            "emax": opts.emax,
            "scan": "n <= 10 e",
            "checked": rows.len(),
            "failures": failures,
            "tightest": {
                "e": tightest.1,
                "min": fmt_q(&tightest.2),
                "argmin": tightest.3,
                "margin": (tightest.0 * 1e6).round() / 1e6,
            },
        }),
    )]
}

fn gm(cfg: &RunConfig, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let p = cfg.p;
    for &e in &opts.gm_indices {
        let ext = power_ext(cfg, e)?;
        let nu = polar_bound(e as u64, p, KAPPA);
        let polar = polar_order_measure(&Evaluator::GmChar, &ext, cfg.samples, cfg.prec, cfg.seed)?;
        checks.push(CheckResult::new(
            format!("polar-order e={e}"),
            polar.pass,
            json!({ "e": e, "nu_bound": polar.nu_bound, "nu_empirical": polar.nu_empirical,
                    "samples": polar.samples, "undecided": polar.undecided }),
        ));
        checks.push(gm_oracle(cfg, &ext, nu)?);
        checks.push(gm_additivity(cfg, &ext)?);
    }
    checks.push(gm_kernel(cfg)?);
    let ext = power_ext(cfg, 1)?;
    let q = RamifiedElement::from_int(&ext, 1 + p as i64).with_abs_prec(cfg.prec);
    let decay = ramification_decay_check(&PointEvaluator::Multiplicative, None, &q, 5)?;
    checks.push(CheckResult::new("decay gm q=1+p", decay.pass, serde_json::to_value(&decay).unwrap()));
    Ok(checks)
}

/// psi(a) against (1/p) log(phi(a) / a^p) through the independent logarithm.
fn gm_oracle(cfg: &RunConfig, ext: &Extension, nu: u32) -> Result<CheckResult> {
    let e = ext.e() as i64;
    let rows: Vec<Result<(bool, i64, bool)>> = with_pool(|| {
        (0..cfg.samples as u64)
            .into_par_iter()
            .map(|i| {
                let a = random_unit(ext, cfg.prec, &mut sample_rng(cfg.seed, i));
                let psi = gm_char_eval(&a)?;
                let ratio = a.frobenius().checked_div(&a.pow(ext.p()))?;
                let oracle = padic_log(&ratio)?.div_p_pow(1);
                let diff = &psi - &oracle;
                // certified pi-digits of p^nu psi on which both agree
                let digits = diff.abs_prec() + e * nu as i64;
                let rescaled = gm_char_eval_rescaled(&a, nu + 1)?;
                let rescale_ok = (&rescaled - &psi.mul_p_pow(nu + 1)).is_zero();
                Ok((diff.is_zero(), digits, rescale_ok))
            })
            .collect()
    });
    let rows: Vec<(bool, i64, bool)> = rows.into_iter().collect::<Result<_>>()?;
    let mismatches: Vec<usize> = rows.iter().enumerate().filter(|(_, r)| !r.0).map(|(i, _)| i).collect();
    let min_digits = rows.iter().map(|r| r.1).min().unwrap_or(0);
    let rescale = rows.iter().all(|r| r.2);
    Ok(CheckResult::new(
        format!("oracle e={}", ext.e()),
        mismatches.is_empty() && min_digits >= 6 && rescale,
        json!({ "e": ext.e(), "samples": rows.len(), "mismatches": mismatches,
                "min_certified_digits": min_digits, "required_digits": 6, "rescaling_consistent": rescale }),
    ))
}

fn gm_additivity(cfg: &RunConfig, ext: &Extension) -> Result<CheckResult> {
    let n = cfg.samples as u64;
    let rows: Vec<Result<bool>> = with_pool(|| {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let a = random_unit(ext, cfg.prec, &mut sample_rng(cfg.seed, i));
                let b = random_unit(ext, cfg.prec, &mut sample_rng(cfg.seed, n + i));
                let d = &(&gm_char_eval(&(&a * &b))? - &gm_char_eval(&a)?) - &gm_char_eval(&b)?;
                Ok(d.is_zero())
            })
            .collect()
    });
    let rows: Vec<bool> = rows.into_iter().collect::<Result<_>>()?;
    let failures: Vec<usize> = rows.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i).collect();
    Ok(CheckResult::new(
        format!("additivity e={}", ext.e()),
        failures.is_empty(),
        json!({ "e": ext.e(), "pairs": rows.len(), "failures": failures }),
    ))
}

fn gm_kernel(cfg: &RunConfig) -> Result<CheckResult> {
    let p = cfg.p;
    let mut rows = Vec::new();
    let ext = power_ext(cfg, 1)?;
    for c in 1..p as i64 {
        let mut res = vec![0i64; cfg.f];
        res[0] = c;
        let w = RamifiedElement::teichmuller(&ext, &res)?.with_abs_prec(cfg.prec);
        rows.push((format!("teich({c})"), gm_kernel_test(&w, KernelKind::PrimeToPRoot)?));
    }
    if cfg.f > 1 {
        let mut res = vec![0i64; cfg.f];
        res[1] = 1;
        let w = RamifiedElement::teichmuller(&ext, &res)?.with_abs_prec(cfg.prec);
        rows.push(("teich(g)".into(), gm_kernel_test(&w, KernelKind::PrimeToPRoot)?));
    }
    let cyc = cfg.extension_for(&ExtSpec::Cyclotomic(1))?;
    let zeta = (&RamifiedElement::one(&cyc) + &RamifiedElement::pi(&cyc)).with_abs_prec(cfg.prec);
    rows.push(("zeta_p over cyclotomic:1".into(), gm_kernel_test(&zeta, KernelKind::PPowerRoot)?));
    let q = RamifiedElement::from_int(&ext, 1 + p as i64).with_abs_prec(cfg.prec);
    let non_root = gm_kernel_test(&q, KernelKind::NonRoot)?;
    let exact_zero = non_root.valuation.as_deref() == Some("0");
    rows.push(("1+p".into(), non_root));
    let pass = rows.iter().all(|r| r.1.pass) && exact_zero;
    let data: Vec<Value> = rows
        .into_iter()
        .map(|(name, o)| json!({ "point": name, "outcome": serde_json::to_value(o).unwrap() }))
        .collect();
    Ok(CheckResult::new("kernel", pass, json!({ "rows": data, "psi(1+p) valuation 0": exact_zero })))
}

fn elliptic(cfg: &RunConfig, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let p = cfg.p;
    let curves = test_curves(p);
    let mut checks = Vec::new();
    // n A_n integral for n <= 60
    for c in &curves {
        let name = format!("hazewinkel ({},{})", c.a4, c.a6);
        match FormalGroupLaw::weierstrass(&c.a4, &c.a6, p, 4).and_then(|g| g.hazewinkel_check(60)) {
            Ok(()) => checks.push(CheckResult::new(name, true, json!({ "curve": c, "n_max": 60 }))),
            Err(e) => checks.push(err_check(&name, &e)),
        }
    }
    // order-2 character at pi = p: all coefficients integral
    let unram = power_ext(cfg, 1)?;
    for c in &curves {
        let spec = CharacterSpec::elliptic(c, 2, &unram, cfg.trunc, cfg.prec)?;
        let fgl = spec.group_law()?;
        let psi = elliptic_char_series(&spec, &fgl, cfg.strict)?;
        checks.push(CheckResult::new(
            format!("integrality pi=p ({},{})", c.a4, c.a6),
            series_integral(&psi, 0),
            json!({ "curve": c, "lambda": spec.lambda.to_string(), "trunc": cfg.trunc,
                    "terms": psi.len(), "shift": psi.shift() }),
        ));
    }
    let main = main_curve(p);
    // series identity psi(F(t1, t2)) = psi(t1) + psi(t2), exactly over Q
    let q = Rationals::new(p);
    let fgl_h = FormalGroupLaw::weierstrass(&main.a4, &main.a6, p, opts.hom_degree)?;
    let w = CharacterSpec::elliptic(&main, 2, &unram, opts.hom_degree, cfg.prec)?.lambda;
    let psi_q = crate::character::lambda_log_series(&q, &fgl_h.log_coeffs(opts.hom_degree as usize), &w, opts.hom_degree, false)?;
    let hom = homomorphism_check_series(&psi_q, &law_over(&fgl_h, &q))?;
    checks.push(CheckResult::new(
        format!("homomorphism series ({},{})", main.a4, main.a6),
        hom.pass,
        serde_json::to_value(&hom).unwrap(),
    ));
    let gm_psi = gm_series_phi(&q, opts.hom_degree, false)?;
    let gm_hom = homomorphism_check_series(&gm_psi, &law_over(&FormalGroupLaw::multiplicative(p, opts.hom_degree), &q))?;
    checks.push(CheckResult::new("homomorphism series gm", gm_hom.pass, serde_json::to_value(&gm_hom).unwrap()));
    // ramified shift bound
    for e in [2usize, 4] {
        let ext = power_ext(cfg, e)?;
        let spec = CharacterSpec::elliptic(&main, 2, &ext, cfg.trunc, cfg.prec)?;
        let fgl = spec.group_law()?;
        let psi = elliptic_char_series(&spec, &fgl, cfg.strict)?;
        let bound = spec.nu_bound();
        checks.push(CheckResult::new(
            format!("ramified shift e={e}"),
            psi.shift() <= bound && series_integral(&psi, bound),
            json!({ "e": e, "shift": psi.shift(), "nu_bound": bound, "terms": psi.len() }),
        ));
    }
    // pointwise homomorphism on random pairs in pi R_pi, e = 4
    let ext4 = power_ext(cfg, 4)?;
    let spec4 = CharacterSpec::elliptic(&main, 2, &ext4, cfg.trunc, cfg.prec)?;
    let fgl4 = spec4.group_law()?;
    let pairs: Vec<(RamifiedElement, RamifiedElement)> = (0..opts.hom_pairs as u64)
        .map(|i| {
            let mut rng = sample_rng(cfg.seed, i);
            (random_in_maximal_ideal(&ext4, cfg.prec, &mut rng), random_in_maximal_ideal(&ext4, cfg.prec, &mut rng))
        })
        .collect();
    let hp = homomorphism_check_pointwise(&spec4, &fgl4, &pairs)?;
    checks.push(CheckResult::new("homomorphism pointwise e=4", hp.pass, serde_json::to_value(&hp).unwrap()));
    // polar order of the elliptic character
    for &e in &opts.gm_indices {
        let ext = power_ext(cfg, e)?;
        let spec = CharacterSpec::elliptic(&main, 2, &ext, cfg.trunc, cfg.prec)?;
        let rep = polar_order_measure(&Evaluator::EllipticChar(Box::new(spec)), &ext, cfg.samples, cfg.prec, cfg.seed)?;
        checks.push(CheckResult::new(
            format!("polar-order ell e={e}"),
            rep.pass,
            json!({ "e": e, "nu_bound": rep.nu_bound, "nu_empirical": rep.nu_empirical,
                    "samples": rep.samples, "undecided": rep.undecided }),
        ));
    }
    // decay at Q = p
    let spec1 = CharacterSpec::elliptic(&main, 2, &unram, cfg.trunc, cfg.prec)?;
    let fgl1 = spec1.group_law()?;
    let t0 = RamifiedElement::from_int(&unram, p).with_abs_prec(cfg.prec);
    let value = char_eval_pointwise(&spec1, &fgl1, &t0)?;
    let decay = ramification_decay_check(&PointEvaluator::Elliptic(Box::new(spec1)), Some(&fgl1), &t0, opts.decay_n)?;
    checks.push(CheckResult::new(
        format!("decay ell ({},{}) t0=p", main.a4, main.a6),
        decay.pass && value.certify_shift(0) == Some(true),
        json!({ "psi(t0)": value.to_string(), "table": serde_json::to_value(&decay).unwrap() }),
    ));
    Ok(checks)
}

fn lrp(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let p = cfg.p;
    let main = main_curve(p);
    let laws = vec![
        ("gm".to_string(), FormalGroupLaw::multiplicative(p, cfg.trunc)),
        (format!("ell ({},{})", main.a4, main.a6), FormalGroupLaw::weierstrass(&main.a4, &main.a6, p, cfg.trunc)?),
    ];
    let exts: Vec<Extension> = if cfg.ext_explicit {
        vec![cfg.extension()?]
    } else {
        [1usize, 2, 4, 8].iter().map(|&e| power_ext(cfg, e)).collect::<Result<_>>()?
    };
    let orders: Vec<usize> = if cfg.ext_explicit { vec![cfg.order] } else { vec![1, 2] };
    let mut checks = Vec::new();
    for (name, fgl) in &laws {
        for ext in &exts {
            for &r in &orders {
                let label = format!("lrp {name} e={} r={r}", ext.e());
                match l_r_series(fgl, r, ext, cfg.trunc, cfg.strict) {
                    Ok(l) => {
                        let cert = lrp_check(&l, r);
                        checks.push(CheckResult::new(label, cert.pass, serde_json::to_value(&cert).unwrap()));
                    }
                    Err(e) => checks.push(err_check(&label, &e)),
                }
            }
        }
    }
    Ok(checks)
}

fn serre_tate(cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let p = cfg.p;
    let mut checks = Vec::new();
    for e in [1usize, 4] {
        let ext = power_ext(cfg, e)?;
        let nu = polar_bound(e as u64, p, KAPPA);
        let s = serre_tate_psi(&RamifiedRing::new(&ext), nu, 10, cfg.strict)?;
        checks.push(CheckResult::new(
            format!("Psi integrality e={e}"),
            series_integral(&s, 0),
            json!({ "e": e, "nu": nu, "trunc": 10, "terms": s.len() }),
        ));
    }
    let unram = power_ext(cfg, 1)?;
    let cyc = cfg.extension_for(&ExtSpec::Cyclotomic(1))?;
    let ext4 = power_ext(cfg, 4)?;
    let one = |x: &Extension| RamifiedElement::one(x);
    let at = |x: RamifiedElement| x.with_abs_prec(cfg.prec);
    let zeta = at(&one(&cyc) + &RamifiedElement::pi(&cyc));
    let mut rows = Vec::new();
    let mut pass = true;
    for r in [1u32, 2] {
        for (name, q, u) in [("1", at(one(&unram)), one(&unram)), ("zeta_p", zeta.clone(), one(&cyc))] {
            let v = fr_alg_eval(r, &q, &u, &u)?;
            pass &= v.is_zero();
            rows.push(json!({ "q": name, "r": r, "vanishes": v.is_zero(), "value": v.to_string() }));
        }
    }
    let q = at(RamifiedElement::from_int(&unram, 1 + p as i64));
    let v = fr_alg_eval(1, &q, &one(&unram), &one(&unram))?;
    let val = v.valuation().ok();
    pass &= val == Some(Ratio::from_integer(0));
    rows.push(json!({ "q": "1+p", "r": 1, "valuation": val.map(|x| fmt_q(&x)), "value": v.to_string() }));
    let q = at(&one(&ext4) + &RamifiedElement::pi(&ext4));
    let v = fr_alg_eval(1, &q, &one(&ext4), &one(&ext4))?;
    let val = v.valuation().ok();
    pass &= val.is_some();
    rows.push(json!({ "q": "1+pi (x^4-p)", "r": 1, "valuation": val.map(|x| fmt_q(&x)) }));
    checks.push(CheckResult::new("fr_alg vanishing locus", pass, json!({ "rows": rows })));

    let q = at(RamifiedElement::from_int(&unram, 1 + p as i64));
    let pm = period_map_eval(&q, &one(&unram))?;
    let expect = one(&unram).div_p_pow(1);
    let ok = pm.eq_to_precision(&expect) && pm.valuation().ok() == Some(Ratio::from_integer(-1));
    let dom1 = matches!(period_map_eval(&at(one(&unram)), &one(&unram)), Err(Error::OutsideOrdinaryDomain));
    let dom2 = matches!(period_map_eval(&zeta, &one(&cyc)), Err(Error::OutsideOrdinaryDomain));
    checks.push(CheckResult::new(
        "period map",
        ok && dom1 && dom2,
        json!({ "value(1+p)": pm.to_string(), "equals 1/p": ok, "q=1 domain error": dom1, "q=zeta domain error": dom2 }),
    ));
    Ok(checks)
}

fn divergence(cfg: &RunConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let p = cfg.p;
    let mut checks = Vec::new();
    let w = divergence_witness(8, p, opts.nmax, opts.threshold);
    let ok = matches!(&w, DivergenceResult::Witness { .. });
    let inconclusive = w.is_inconclusive();
    let mut c = CheckResult::new("witness e=8", ok, serde_json::to_value(&w).unwrap());
    if inconclusive {
        c.result = Outcome::Inconclusive;
    }
    checks.push(c);
    let b = divergence_witness(p - 1, p, opts.nmax, opts.threshold);
    checks.push(CheckResult::new(
        format!("bounded e={}", p - 1),
        matches!(b, DivergenceResult::BoundedNonvanishing { .. }),
        serde_json::to_value(&b).unwrap(),
    ));
    let o = divergence_witness(2, p, opts.nmax, opts.threshold);
    checks.push(CheckResult::new(
        "overconvergent e=2",
        matches!(o, DivergenceResult::OverconvergentProfile { .. }),
        serde_json::to_value(&o).unwrap(),
    ));
    // the classification agrees with the sign of 1/e - 1/(p - 1) for every e <= 3(p - 1)
    let mut mismatches = Vec::new();
    for e in 1..=3 * (p - 1) {
        let r = divergence_witness(e, p, opts.nmax, 1);
        let expected = match e.cmp(&(p - 1)) {
            std::cmp::Ordering::Greater => matches!(r, DivergenceResult::Witness { .. }),
            std::cmp::Ordering::Equal => matches!(r, DivergenceResult::BoundedNonvanishing { .. }),
            std::cmp::Ordering::Less => matches!(r, DivergenceResult::OverconvergentProfile { .. }),
        };
        if !expected {
            mismatches.push(e);
        }
    }
    checks.push(CheckResult::new(
        "trichotomy",
        mismatches.is_empty(),
        json!({ "e_max": 3 * (p - 1), "threshold": 1, "mismatches": mismatches }),
    ));
    checks
}
