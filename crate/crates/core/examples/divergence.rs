//! Valuations of pi^n/n and pi^n/n! across ramification indices.

use delta_arith::character::divergence_witness;
use delta_arith::ring::profile::fmt_q;
use delta_arith::ring::valuation_profile;

fn main() {
    for e in [1u64, 4, 8, 201] {
        let prof = valuation_profile(e, 5, 10 * e);
        println!(
            "e = {e}: min v_p(pi^n/n) = {} at n = {}, estimate holds: {}",
            fmt_q(&prof.min_over_n),
            prof.argmin_over_n,
            prof.estimate_holds
        );
    }
    for e in [2u64, 4, 8] {
        let w = divergence_witness(e, 5, 4096, 500);
        println!("e = {e}: {}", serde_json::to_string(&w).unwrap());
    }
}
