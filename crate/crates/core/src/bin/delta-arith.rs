use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use delta_arith::config::{ExtSpec, RunConfig};
use delta_arith::eval::{run_eval, EvalArgs, EvalTarget};
use delta_arith::report::{Outcome, Report};
use delta_arith::verify::{verify_report, Suite, VerifyOptions};
use delta_arith::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_FALSIFIED: u8 = 4;
const EXIT_INCONCLUSIVE: u8 = 5;

#[derive(Parser)]
#[command(name = "delta-arith", version, about = "Arithmetic differential equations over ramified p-adic rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one operation: delta, gm-char, ell-char, lr-series, serre-tate, period-map.
    Eval {
        target: String,
        #[command(flatten)]
        common: Common,
        /// Point for delta and gm-char.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Serre-Tate parameter for serre-tate and period-map.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Point of the formal disk for ell-char.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a4: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true)]
        a6: Option<BigInt>,
        /// Normalizing unit of the period map (default 1).
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lam: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// p-power rescaling of the Serre-Tate series (default floor(log e/log p) + 2).
        #[arg(long)]
        nu: Option<u32>,
        /// Write the series in text form to this path.
        #[arg(long)]
        dump_series: Option<String>,
    },
    /// Run a verification suite: estimates, gm, elliptic, lrp, serre-tate, divergence, all.
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        emax: u64,
        #[arg(long, default_value_t = 4096)]
        nmax: u64,
        #[arg(long, default_value_t = 500)]
        threshold: i64,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 5)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    f: usize,
    /// Input precision in pi-units.
    #[arg(long, default_value_t = 24)]
    prec: i64,
    /// unramified, x^e-p (e.g. x^4-p), x^e-p:e, cyclotomic:k, or c0,c1,...,1.
    #[arg(long)]
    ext: Option<String>,
    #[arg(long, default_value_t = 20)]
    trunc: u32,
    #[arg(long, alias = "r", default_value_t = 1)]
    order: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    pretty: bool,
    /// Fail instead of dropping terms above the truncation degree.
    #[arg(long)]
    strict_truncation: bool,
}

impl Common {
    fn config(&self) -> Result<RunConfig, Error> {
        let ext = match &self.ext {
            Some(s) => ExtSpec::parse(s)?,
            None => ExtSpec::Unramified,
        };
        Ok(RunConfig {
            p: self.p,
            f: self.f,
            prec: self.prec,
            ext,
            ext_explicit: self.ext.is_some(),
            trunc: self.trunc,
            order: self.order,
            samples: self.samples,
            seed: self.seed,
            strict: self.strict_truncation,
        })
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidParameter(_) | Error::NotPrime(_) | Error::PrimeTooSmall(_) => EXIT_USAGE,
        Error::CorruptedGroupLaw { .. } | Error::Internal(_) => EXIT_FALSIFIED,
        _ => EXIT_PRECONDITION,
    }
}

fn emit(report: &Report, common: &Common) -> Result<(), Error> {
    let text = report.to_json(common.pretty);
    match &common.out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| Error::InvalidParameter(format!("{path}: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn exit_for(result: Outcome) -> u8 {
    match result {
        Outcome::Pass | Outcome::Value => 0,
        Outcome::Fail => EXIT_FALSIFIED,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Eval { target, common, a, q, t, a4, a6, eps, lam, u, nu, dump_series } => {
            let target: EvalTarget = target.parse()?;
            let cfg = common.config()?;
            let args = EvalArgs { a, q, t, a4, a6, eps, lam, u, nu };
            let out = run_eval(&cfg, target, &args)?;
            if let Some(path) = dump_series {
                let text = out
                    .series
                    .as_ref()
                    .ok_or_else(|| Error::InvalidParameter(format!("eval {target} produces no series")))?;
                std::fs::write(&path, text).map_err(|e| Error::InvalidParameter(format!("{path}: {e}")))?;
            }
            emit(&out.report, &common)?;
            Ok(exit_for(out.report.result))
        }
        Cmd::Verify { suite, common, emax, nmax, threshold } => {
            let suite: Suite = suite.parse()?;
            let cfg = common.config()?;
            let opts = VerifyOptions { emax, nmax, threshold, ..VerifyOptions::default() };
            let report = verify_report(&cfg, &opts, suite)?;
            emit(&report, &common)?;
            Ok(exit_for(report.result))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
