//! Seeded random points of R_pi.
//!
//! Every sampler draws from a `ChaCha8Rng`; batch helpers derive one stream per
//! sample index so results do not depend on scheduling.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{Extension, RamifiedElement};

/// The generator used for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_int<R: Rng>(rng: &mut R, p: u64, digits: u32) -> BigInt {
    let mut n = BigInt::zero();
    for _ in 0..digits {
        n = n * p + rng.gen_range(0..p);
    }
    n
}

/// A random element of R_pi known to absolute precision `prec` (pi-units).
pub fn random_element<R: Rng>(ext: &Extension, prec: i64, rng: &mut R) -> RamifiedElement {
    let e = ext.e() as i64;
    let digits = ((prec.max(0) + e - 1) / e).max(1) as u32;
    let coeffs: Vec<Vec<BigInt>> = (0..ext.e())
        .map(|_| (0..ext.f()).map(|_| random_int(rng, ext.p(), digits)).collect())
        .collect();
    RamifiedElement::from_coeffs(ext, &coeffs, prec, 0).expect("well-formed random element")
}

/// A random unit of R_pi.
pub fn random_unit<R: Rng>(ext: &Extension, prec: i64, rng: &mut R) -> RamifiedElement {
    loop {
        let a = random_element(ext, prec, rng);
        if a.is_unit() {
            return a;
        }
    }
}

/// A random element of pi R_pi.
pub fn random_in_maximal_ideal<R: Rng>(ext: &Extension, prec: i64, rng: &mut R) -> RamifiedElement {
    let a = random_element(ext, prec - 1, rng);
    &a * &RamifiedElement::pi(ext)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::UnramifiedRing;

    #[test]
    fn reproducible_and_well_placed() {
        let ext = Extension::power_root(UnramifiedRing::new(5, 2, 10).unwrap(), 4).unwrap();
        let a = random_unit(&ext, 20, &mut sample_rng(7, 3));
        let b = random_unit(&ext, 20, &mut sample_rng(7, 3));
        assert_eq!(a.rep(), b.rep());
        assert!(a.is_unit());
        let t = random_in_maximal_ideal(&ext, 20, &mut sample_rng(7, 4));
        assert!(t.pi_valuation().map_or(true, |v| v >= 1));
        assert_eq!(t.abs_prec(), 20);
        let c = random_unit(&ext, 20, &mut sample_rng(7, 5));
        assert_ne!(a.rep(), c.rep());
    }
}
