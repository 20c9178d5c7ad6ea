//! Group laws, logarithms, point counts and the jet logarithms L^r.

use num_bigint::BigInt;

use delta_arith::formal_group::{count_points, l_r_series, lrp_check, FormalGroupLaw};
use delta_arith::ring::{Extension, UnramifiedRing};
use delta_arith::series::dump_series;

fn main() -> delta_arith::Result<()> {
    let (a4, a6) = (BigInt::from(1), BigInt::from(0));
    let curve = count_points(&a4, &a6, 5)?;
    println!("y^2 = x^3 + x over F_5: #E = {}, a_5 = {}, ordinary = {}", curve.count, curve.ap, curve.ordinary);

    let f = FormalGroupLaw::weierstrass(&a4, &a6, 5, 7)?;
    println!("F(T1, T2) to degree 7:\n{}", dump_series(f.law()));
    for (n, a) in (1..).zip(f.log_coeffs(9).iter()) {
        println!("A_{n} = {a}");
    }
    f.hazewinkel_check(60)?;
    println!("n A_n integral for n <= 60");

    let gm = FormalGroupLaw::multiplicative(5, 12);
    let ext = Extension::power_root(UnramifiedRing::new(5, 1, 12)?, 4)?;
    for r in 1..=2 {
        let l = l_r_series(&gm, r, &ext, 12, false)?;
        let cert = lrp_check(&l, r);
        println!("G_m L^{r} over x^4 - 5: nu used {} <= bound {}: {}", cert.nu_used, cert.nu_bound, cert.pass);
    }
    let l = l_r_series(&f, 1, &ext, 12, false)?;
    println!("elliptic L^1: {}", serde_json::to_string(&lrp_check(&l, 1)).unwrap());
    Ok(())
}
