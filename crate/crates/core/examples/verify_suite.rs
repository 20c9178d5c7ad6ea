//! Runs verification suites through the library and prints one line per check.

use delta_arith::config::RunConfig;
use delta_arith::verify::{run_suite, Suite, VerifyOptions};

fn main() -> delta_arith::Result<()> {
    let cfg = RunConfig { samples: 20, seed: 7, ..RunConfig::default() };
    let opts = VerifyOptions::default();
    for suite in [Suite::Estimates, Suite::Lrp, Suite::SerreTate, Suite::Divergence] {
        for s in run_suite(&cfg, &opts, suite)? {
            println!("{}: {:?}", s.suite, s.result);
            for c in &s.checks {
                println!("  {:?} {}", c.result, c.name);
            }
        }
    }
    Ok(())
}
