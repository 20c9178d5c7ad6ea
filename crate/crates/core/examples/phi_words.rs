//! Jet series, the Frobenius on series, words in phi and twisted powers.

use delta_arith::ring::{Extension, RamifiedElement, UnramifiedRing};
use delta_arith::series::{dump_series, lambda_sum, twisted_power, JetSeries, JetVars, PhiWord, Rationals};

fn main() -> delta_arith::Result<()> {
    let q = Rationals::new(5);
    let vars = JetVars::single("t", 0);
    let t = JetSeries::var(&q, &vars, 6, 0);
    // phi(t) = t^5 + p dt over pi = p
    println!("phi(t):\n{}", dump_series(&t.phi()?));
    let one_plus_t = t.add(&JetSeries::one(&q, &vars, 6))?;
    println!("phi(1 + t) / (1 + t)^5 to degree 6:\n{}", dump_series(&one_plus_t.phi()?.mul(&one_plus_t.with_order(1)?.pow(5)?.inverse()?)?));

    for r in 1..=3 {
        println!("Lambda^({}) = {}", r - 1, lambda_sum(r, 5)?);
    }

    let ext = Extension::unramified(UnramifiedRing::new(5, 1, 20)?)?;
    let w = PhiWord::from_terms([(1u32, 1i64), (0, -1)]);
    let a = RamifiedElement::teichmuller(&ext, &[2])?;
    println!("a^((phi - 1)/4) at teich(2) = {}", twisted_power(&a, &w, 4)?);
    let b = RamifiedElement::from_int(&ext, 7);
    let w2 = PhiWord::from_terms([(1u32, 2i64), (0, 3)]);
    let root = twisted_power(&b, &w2, 13)?;
    println!("7^((2 phi + 3)/13) = {root}");
    Ok(())
}
