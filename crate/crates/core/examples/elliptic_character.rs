//! The character (1/p) Lambda l(t) of an ordinary elliptic curve.

use num_bigint::BigInt;

use delta_arith::character::{
    char_eval_pointwise, elliptic_char_series, homomorphism_check_pointwise, ramification_decay_check,
    series_integral, CharacterSpec, PointEvaluator,
};
use delta_arith::formal_group::count_points;
use delta_arith::ring::{Extension, RamifiedElement, UnramifiedRing};
use delta_arith::sample::{random_in_maximal_ideal, sample_rng};
use delta_arith::series::dump_series;

fn main() -> delta_arith::Result<()> {
    let curve = count_points(&BigInt::from(1), &BigInt::from(3), 5)?;
    let base = UnramifiedRing::new(5, 1, 16)?;
    let unram = Extension::unramified(base.clone())?;
    let spec = CharacterSpec::elliptic(&curve, 2, &unram, 10, 24)?;
    let fgl = spec.group_law()?;
    let psi = elliptic_char_series(&spec, &fgl, false)?;
    println!("Lambda = {}", spec.lambda);
    println!("psi at pi = p to degree 10, integral = {}:\n{}", series_integral(&psi, 0), dump_series(&psi));

    let t0 = RamifiedElement::from_int(&unram, 5).with_abs_prec(24);
    println!("psi(t0 = p) = {}", char_eval_pointwise(&spec, &fgl, &t0)?);
    let decay = ramification_decay_check(&PointEvaluator::Elliptic(Box::new(spec)), Some(&fgl), &t0, 4)?;
    for row in &decay.rows {
        println!("n = {}: v_p = {:?}, bound {}", row.n, row.valuation, row.bound);
    }

    let ext = Extension::power_root(base, 4)?;
    let spec4 = CharacterSpec::elliptic(&curve, 2, &ext, 10, 24)?;
    let fgl4 = spec4.group_law()?;
    let pairs: Vec<_> = (0..10)
        .map(|i| {
            let mut rng = sample_rng(1, i);
            (random_in_maximal_ideal(&ext, 24, &mut rng), random_in_maximal_ideal(&ext, 24, &mut rng))
        })
        .collect();
    let hom = homomorphism_check_pointwise(&spec4, &fgl4, &pairs)?;
    println!("psi(F(t1, t2)) = psi(t1) + psi(t2) over x^4 - 5: {} ({} pairs)", hom.pass, hom.checked);
    Ok(())
}
