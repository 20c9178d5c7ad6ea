//! Unramified rings, Eisenstein extensions, Frobenius and the pi-derivation.

use delta_arith::ring::wire::element_to_wire;
use delta_arith::ring::{padic_log, Extension, RamifiedElement, UnramifiedRing};

fn main() -> delta_arith::Result<()> {
    let z5 = UnramifiedRing::new(5, 1, 20)?;
    let unram = Extension::unramified(z5.clone())?;
    let two = RamifiedElement::from_int(&unram, 2);
    for (i, x) in two.iterated_delta(2)?.iter().enumerate() {
        println!("delta^{i}(2) = {x}");
    }

    let w25 = UnramifiedRing::new(5, 2, 10)?;
    let ext = Extension::unramified(w25)?;
    let omega = RamifiedElement::teichmuller(&ext, &[0, 1])?;
    println!("phi(omega) - omega^5 = {}", &omega.frobenius() - &omega.pow(5));
    println!("delta(omega) = {}", omega.delta_pi()?);

    let ram = Extension::power_root(z5.clone(), 4)?;
    let pi = RamifiedElement::pi(&ram);
    println!("{}: v_p(pi) = {}", ram.polynomial_string(), pi.valuation()?);
    println!("delta(pi) = {}", pi.delta_pi()?);
    let x = pi.pow(3).div_p_pow(1);
    println!("v_p(pi^3/p) = {}", x.valuation()?);

    let cyc = Extension::cyclotomic(z5, 1)?;
    let zeta = &RamifiedElement::one(&cyc) + &RamifiedElement::pi(&cyc);
    println!("{}: delta(zeta) = {}", cyc.polynomial_string(), zeta.delta_pi()?);
    println!("log(zeta) = {}", padic_log(&zeta)?);

    let six = RamifiedElement::from_int(&unram, 6);
    let l = padic_log(&six)?;
    println!("log(1+p) = {l}, valuation {}", l.valuation()?);
    println!("wire: {}", serde_json::to_string(&element_to_wire(&pi.with_abs_prec(8))).unwrap());
    Ok(())
}
