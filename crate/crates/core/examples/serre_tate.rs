//! Serre-Tate expansions, (f^r)^alg at a Serre-Tate parameter, and the period map.

use delta_arith::character::{fr_alg_eval, period_map_eval, serre_tate_psi};
use delta_arith::ring::profile::polar_bound;
use delta_arith::ring::{Extension, RamifiedElement, UnramifiedRing};
use delta_arith::series::{dump_series, RamifiedRing};

fn main() -> delta_arith::Result<()> {
    let base = UnramifiedRing::new(5, 1, 12)?;
    let ext = Extension::power_root(base.clone(), 4)?;
    let nu = polar_bound(4, 5, 2);
    let s = serre_tate_psi(&RamifiedRing::new(&ext), nu, 6, false)?;
    println!("Psi with nu = {nu} over x^4 - 5 to degree 6:\n{}", dump_series(&s));

    let unram = Extension::unramified(base)?;
    let one = RamifiedElement::one(&unram);
    let q = RamifiedElement::from_int(&unram, 6);
    for r in 1..=3 {
        println!("(f^{r})^alg(1 + p) = {}", fr_alg_eval(r, &q, &one, &one)?);
    }
    println!("(f^1)^alg(1) = {}", fr_alg_eval(1, &one, &one, &one)?);
    println!("period map at 1 + p: {}", period_map_eval(&q, &one)?);
    match period_map_eval(&one, &one) {
        Err(e) => println!("period map at 1: {e}"),
        Ok(v) => println!("period map at 1: {v}"),
    }
    Ok(())
}
