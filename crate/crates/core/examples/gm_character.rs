//! The basic character psi(a) = (1/p) log(phi(a) / a^p) of G_m.

use delta_arith::character::{
    gm_char_eval, gm_kernel_test, gm_series_phi, gm_series_z, polar_order_measure, Evaluator, KernelKind,
};
use delta_arith::ring::{Extension, RamifiedElement, UnramifiedRing};
use delta_arith::series::{dump_series, RamifiedRing};

fn main() -> delta_arith::Result<()> {
    let base = UnramifiedRing::new(5, 1, 16)?;
    let ext = Extension::power_root(base.clone(), 4)?;
    let ring = RamifiedRing::new(&ext);
    let z = gm_series_z(&ring, 6, false)?;
    let phi = gm_series_phi(&ring, 6, false)?;
    println!("psi(1 + t) over x^4 - 5 to degree 6 (shift {}):\n{}", z.shift(), dump_series(&z));
    println!("two constructions agree: {}", z.eq_series(&phi));

    let a = (&RamifiedElement::one(&ext) + &RamifiedElement::pi(&ext)).with_abs_prec(24);
    println!("psi(1 + pi) = {}", gm_char_eval(&a)?);

    let unram = Extension::unramified(base.clone())?;
    let q = RamifiedElement::from_int(&unram, 6);
    println!("{}", serde_json::to_string(&gm_kernel_test(&q, KernelKind::NonRoot)?).unwrap());
    let w = RamifiedElement::teichmuller(&unram, &[3])?;
    println!("{}", serde_json::to_string(&gm_kernel_test(&w, KernelKind::PrimeToPRoot)?).unwrap());

    for e in [1, 2, 4, 8] {
        let ext = if e == 1 { Extension::unramified(base.clone())? } else { Extension::power_root(base.clone(), e)? };
        let rep = polar_order_measure(&Evaluator::GmChar, &ext, 20, 16, 7)?;
        println!("e = {e}: observed polar order {} <= {}", rep.nu_empirical, rep.nu_bound);
    }
    Ok(())
}
