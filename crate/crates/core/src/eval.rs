//! Single operations behind `delta-arith eval`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::character::{
    char_eval_pointwise, elliptic_char_series, fr_alg_eval, gm_char_eval, observed_shift, period_map_eval,
    serre_tate_psi, series_integral, CharacterSpec, KAPPA,
};
use crate::config::{parse_element, RunConfig};
use crate::error::{Error, Result};
use crate::formal_group::{count_points, l_r_series, lrp_check, FormalGroupLaw};
use crate::report::{Outcome, Params, Report};
use crate::ring::profile::{fmt_q, polar_bound};
use crate::ring::wire::element_to_wire;
use crate::ring::{Extension, RamifiedElement};
use crate::series::{dump_series, RamifiedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalTarget {
    Delta,
    GmChar,
    EllChar,
    LrSeries,
    SerreTate,
    PeriodMap,
}

impl FromStr for EvalTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "delta" => EvalTarget::Delta,
            "gm-char" => EvalTarget::GmChar,
            "ell-char" => EvalTarget::EllChar,
            "lr-series" => EvalTarget::LrSeries,
            "serre-tate" => EvalTarget::SerreTate,
            "period-map" => EvalTarget::PeriodMap,
            _ => return Err(Error::Parse(format!("unknown eval target {s:?}"))),
        })
    }
}

impl fmt::Display for EvalTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalTarget::Delta => "delta",
            EvalTarget::GmChar => "gm-char",
            EvalTarget::EllChar => "ell-char",
            EvalTarget::LrSeries => "lr-series",
            EvalTarget::SerreTate => "serre-tate",
            EvalTarget::PeriodMap => "period-map",
        })
    }
}

/// Point and curve arguments; expressions use the grammar of [`parse_element`].
#[derive(Clone, Debug, Default)]
pub struct EvalArgs {
    pub a: Option<String>,
    pub q: Option<String>,
    pub t: Option<String>,
    pub a4: Option<BigInt>,
    pub a6: Option<BigInt>,
    pub eps: Option<String>,
    pub lam: Option<String>,
    pub u: Option<String>,
    pub nu: Option<u32>,
}

/// A report and, for series targets, the series in text form.
pub struct EvalOutput {
    pub report: Report,
    pub series: Option<String>,
}

fn element_data(x: &RamifiedElement) -> Value {
    json!({
        "value": x.to_string(),
        "wire": element_to_wire(x),
        "shift": x.shift(),
        "abs_prec": x.abs_prec(),
        "valuation": x.valuation().ok().map(|v| fmt_q(&v)),
        "vanishes": x.is_zero(),
    })
}

fn need<'a>(v: &'a Option<String>, flag: &str, target: EvalTarget) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::InvalidParameter(format!("eval {target} needs --{flag}")))
}

fn unit_or_one(ext: &Extension, src: &Option<String>, prec: i64) -> Result<RamifiedElement> {
    match src {
        Some(s) => parse_element(ext, s, prec),
        None => Ok(RamifiedElement::one(ext)),
    }
}

pub fn run_eval(cfg: &RunConfig, target: EvalTarget, args: &EvalArgs) -> Result<EvalOutput> {
    cfg.validate()?;
    let ext = cfg.extension()?;
    let e = ext.e() as u64;
    let p = cfg.p;
    let nu_bound = polar_bound(e, p, KAPPA);
    let mut series = None;
    let mut order = None;
    let (result, data) = match target {
        EvalTarget::Delta => {
            let a = parse_element(&ext, need(&args.a, "a", target)?, cfg.prec)?;
            let jets = a.iterated_delta(cfg.order)?;
            let rows: Vec<Value> = jets.iter().map(element_data).collect();
            order = Some(cfg.order);
            (Outcome::Value, json!({ "input": a.to_string(), "value": jets[1].to_string(), "jets": rows }))
        }
        EvalTarget::GmChar => {
            let a = parse_element(&ext, need(&args.a, "a", target)?, cfg.prec)?;
            let v = gm_char_eval(&a)?;
            let shift = observed_shift(&v, nu_bound + 8);
            let within = shift.map_or(false, |s| s <= nu_bound);
            (
                if within { Outcome::Pass } else { Outcome::Fail },
                json!({ "input": a.to_string(), "psi": element_data(&v), "shift_used": shift, "nu_bound": nu_bound }),
            )
        }
        EvalTarget::EllChar => {
            let (a4, a6) = curve_args(args, target)?;
            let curve = count_points(&a4, &a6, p)?;
            let r = cfg.order.min(2) as u32;
            let spec = CharacterSpec::elliptic(&curve, r, &ext, cfg.trunc, cfg.prec)?;
            let fgl = spec.group_law()?;
            let psi = elliptic_char_series(&spec, &fgl, cfg.strict)?;
            let integral = series_integral(&psi, spec.nu_bound());
            let mut data = json!({
                "curve": curve,
                "lambda": spec.lambda.to_string(),
                "order": r,
                "series_shift": psi.shift(),
                "nu_bound": spec.nu_bound(),
                "terms": psi.len(),
            });
            if let Some(t) = &args.t {
                let t0 = parse_element(&ext, t, cfg.prec)?;
                data["point"] = json!(t0.to_string());
                data["psi"] = element_data(&char_eval_pointwise(&spec, &fgl, &t0)?);
            }
            series = Some(dump_series(&psi));
            order = Some(r as usize);
            (if integral { Outcome::Pass } else { Outcome::Fail }, data)
        }
        EvalTarget::LrSeries => {
            let fgl = match (&args.a4, &args.a6) {
                (None, None) => FormalGroupLaw::multiplicative(p, cfg.trunc),
                _ => {
                    let (a4, a6) = curve_args(args, target)?;
                    FormalGroupLaw::weierstrass(&a4, &a6, p, cfg.trunc)?
                }
            };
            let l = l_r_series(&fgl, cfg.order, &ext, cfg.trunc, cfg.strict)?;
            let cert = lrp_check(&l, cfg.order);
            series = Some(dump_series(&l));
            order = Some(cfg.order);
            let group = match fgl.source() {
                crate::formal_group::GroupSource::Multiplicative => "gm".to_string(),
                crate::formal_group::GroupSource::Weierstrass { a4, a6 } => format!("weierstrass({a4},{a6})"),
            };
            (
                if cert.pass { Outcome::Pass } else { Outcome::Fail },
                json!({ "group": group, "certificate": cert }),
            )
        }
        EvalTarget::SerreTate => match &args.q {
            Some(q) => {
                let q = parse_element(&ext, q, cfg.prec)?;
                let lam = unit_or_one(&ext, &args.lam, cfg.prec)?;
                let u = unit_or_one(&ext, &args.u, cfg.prec)?;
                let v = fr_alg_eval(cfg.order as u32, &q, &lam, &u)?;
                order = Some(cfg.order);
                (Outcome::Value, json!({ "q": q.to_string(), "fr_alg": element_data(&v) }))
            }
            None => {
                let nu = args.nu.unwrap_or(nu_bound);
                let s = serre_tate_psi(&RamifiedRing::new(&ext), nu, cfg.trunc, cfg.strict)?;
                let integral = series_integral(&s, 0);
                series = Some(dump_series(&s));
                (
                    if integral { Outcome::Pass } else { Outcome::Fail },
                    json!({ "nu": nu, "terms": s.len(), "series_shift": s.shift(), "integral": integral }),
                )
            }
        },
        EvalTarget::PeriodMap => {
            let q = parse_element(&ext, need(&args.q, "q", target)?, cfg.prec)?;
            let eps = unit_or_one(&ext, &args.eps, cfg.prec)?;
            let v = period_map_eval(&q, &eps)?;
            (Outcome::Value, json!({ "q": q.to_string(), "period": element_data(&v) }))
        }
    };
    let params = Params { p, e: ext.e(), eisenstein: ext.polynomial_string(), prec: cfg.prec, trunc: cfg.trunc, r: order };
    Ok(EvalOutput { report: Report::new(format!("eval-{target}"), params, result, data), series })
}

fn curve_args(args: &EvalArgs, target: EvalTarget) -> Result<(BigInt, BigInt)> {
    match (&args.a4, &args.a6) {
        (Some(a4), Some(a6)) => Ok((a4.clone(), a6.clone())),
        _ => Err(Error::InvalidParameter(format!("eval {target} needs --a4 and --a6"))),
    }
}
