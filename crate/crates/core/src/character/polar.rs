//! Empirical polar order of a delta-function over sampled points of R_pi.

use rayon::prelude::*;
use serde::Serialize;

use super::{char_eval_pointwise, gm_char_eval, observed_shift, CharacterSpec, KAPPA};
use crate::error::Result;
use crate::parallel::with_pool;
use crate::ring::profile::polar_bound;
use crate::ring::Extension;
use crate::sample::{random_in_maximal_ideal, random_unit, sample_rng};
use crate::series::{twisted_power, PhiWord};

/// A delta-function that can be evaluated at sampled points.
#[derive(Clone, Debug)]
pub enum Evaluator {
    /// a -> a^(w/m) on units (polar order 0).
    TwistedPower { w: PhiWord, m: i64 },
    /// The basic character of G_m on units.
    GmChar,
    /// psi(t0) on the formal disk, pointwise.
    EllipticChar(Box<CharacterSpec>),
}

impl Evaluator {
    pub fn kappa(&self) -> u32 {
        match self {
            Evaluator::TwistedPower { .. } => 0,
            _ => KAPPA,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Evaluator::TwistedPower { .. } => "twisted-power",
            Evaluator::GmChar => "gm-char",
            Evaluator::EllipticChar(_) => "ell-char",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarSample {
    pub index: u64,
    /// Smallest nu with p^nu f(x) certified in R_pi (`None`: undecided).
    pub nu: Option<u32>,
    pub abs_prec: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarOrderReport {
    pub evaluator: String,
    pub e: u64,
    pub kappa: u32,
    pub nu_bound: u32,
    pub nu_empirical: u32,
    pub samples: usize,
    pub undecided: usize,
    pub rows: Vec<PolarSample>,
    pub pass: bool,
}

/// Evaluates on `samples` seeded points (sample i uses stream i of `seed`)
/// and compares the largest observed denominator exponent with
/// floor(log e / log p) + kappa.
pub fn polar_order_measure(
    evaluator: &Evaluator,
    ext: &Extension,
    samples: usize,
    prec: i64,
    seed: u64,
) -> Result<PolarOrderReport> {
    let e = ext.e() as u64;
    let kappa = evaluator.kappa();
    let nu_bound = polar_bound(e, ext.p(), kappa);
    let fgl = match evaluator {
        Evaluator::EllipticChar(spec) => Some(spec.group_law()?),
        _ => None,
    };
    let cap = nu_bound + 16;
    let rows: Vec<Result<PolarSample>> = with_pool(|| {
        (0..samples as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = sample_rng(seed, i);
                let value = match evaluator {
                    Evaluator::TwistedPower { w, m } => twisted_power(&random_unit(ext, prec, &mut rng), w, *m)?,
                    Evaluator::GmChar => gm_char_eval(&random_unit(ext, prec, &mut rng))?,
                    Evaluator::EllipticChar(spec) => {
                        let t0 = random_in_maximal_ideal(ext, prec, &mut rng);
                        char_eval_pointwise(spec, fgl.as_ref().unwrap(), &t0)?
                    }
                };
                Ok(PolarSample { index: i, nu: observed_shift(&value, cap), abs_prec: value.abs_prec() })
            })
            .collect()
    });
    let rows: Vec<PolarSample> = rows.into_iter().collect::<Result<_>>()?;
    let undecided = rows.iter().filter(|r| r.nu.is_none()).count();
    let nu_empirical = rows.iter().filter_map(|r| r.nu).max().unwrap_or(0);
    Ok(PolarOrderReport {
        evaluator: evaluator.name().into(),
        e,
        kappa,
        nu_bound,
        nu_empirical,
        samples,
        undecided,
        pass: undecided == 0 && nu_empirical <= nu_bound,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::UnramifiedRing;

    #[test]
    fn twisted_powers_have_polar_order_zero() {
        let ext = Extension::power_root(UnramifiedRing::new(5, 2, 8).unwrap(), 4).unwrap();
        let w = PhiWord::from_terms([(1, 1), (0, -1)]);
        let rep = polar_order_measure(&Evaluator::TwistedPower { w, m: 4 }, &ext, 6, 16, 1).unwrap();
        assert_eq!(rep.nu_empirical, 0);
        assert!(rep.pass);
    }

    #[test]
    fn gm_small_run_is_deterministic() {
        let ext = Extension::power_root(UnramifiedRing::new(5, 1, 10).unwrap(), 4).unwrap();
        let a = polar_order_measure(&Evaluator::GmChar, &ext, 8, 24, 7).unwrap();
        let b = polar_order_measure(&Evaluator::GmChar, &ext, 8, 24, 7).unwrap();
        assert!(a.pass, "{a:?}");
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
