mod common;

use num_bigint::BigInt;
use num_rational::Ratio;

use common::{digit_sum, gm_psi_oracle, log_oracle, to_mod};
use delta_arith::ring::profile::{v_pi_n_over_factorial, v_pi_n_over_n};
use delta_arith::ring::wire::{element_from_wire, element_to_wire};
use delta_arith::ring::{padic_log, valuation_profile, Extension, RamifiedElement, UnramifiedRing};
use delta_arith::Error;

fn zp(digits: u32) -> Extension {
    Extension::unramified(UnramifiedRing::new(5, 1, digits).unwrap()).unwrap()
}

fn power(e: usize, digits: u32) -> Extension {
    Extension::power_root(UnramifiedRing::new(5, 1, digits).unwrap(), e).unwrap()
}

fn int(x: &RamifiedElement) -> BigInt {
    x.to_balanced_integer().unwrap()
}

#[test]
fn unramified_constructors() {
    let z = UnramifiedRing::new(5, 1, 20).unwrap();
    assert_eq!(z.frobenius(&z.from_int(BigInt::from(7))), z.from_int(BigInt::from(7)));
    let w = UnramifiedRing::new(5, 2, 10).unwrap();
    let g = w.generator();
    assert_eq!(w.frobenius(&w.frobenius(&g)), g);
    assert_ne!(w.frobenius(&g), g);
    assert!(matches!(UnramifiedRing::new(4, 1, 10), Err(Error::NotPrime(4))));
    assert!(matches!(UnramifiedRing::new(3, 1, 10), Err(Error::PrimeTooSmall(3))));
}

#[test]
fn frobenius_examples() {
    let ext = power(4, 10);
    let pi = RamifiedElement::pi(&ext);
    assert_eq!(pi.frobenius(), pi);
    let c = RamifiedElement::from_int(&ext, 17);
    assert_eq!(c.frobenius(), c);
    let w = Extension::unramified(UnramifiedRing::new(5, 2, 10).unwrap()).unwrap();
    let omega = RamifiedElement::teichmuller(&w, &[1, 1]).unwrap();
    assert_eq!(omega.frobenius(), omega.pow(5));
}

#[test]
fn teichmuller_examples() {
    let ext = zp(20);
    assert_eq!(RamifiedElement::teichmuller(&ext, &[1]).unwrap(), RamifiedElement::one(&ext));
    let w = RamifiedElement::teichmuller(&ext, &[2]).unwrap();
    assert_eq!(w.pow(4), RamifiedElement::one(&ext));
    assert_eq!(to_mod(&Ratio::from_integer(int(&w)), 5, 1), BigInt::from(2));
    assert!(matches!(RamifiedElement::teichmuller(&ext, &[0]), Err(Error::Domain(_))));
}

#[test]
fn eisenstein_examples() {
    let base = UnramifiedRing::new(5, 1, 10).unwrap();
    assert_eq!(Extension::power_root(base.clone(), 4).unwrap().e(), 4);
    let cyc = Extension::cyclotomic(base.clone(), 1).unwrap();
    assert_eq!(cyc.e(), 4);
    let expect: Vec<BigInt> = [5, 10, 10, 5, 1].iter().map(|&c| BigInt::from(c)).collect();
    assert_eq!(cyc.eisenstein(), &expect[..]);
    let bad = Extension::new(base, &[BigInt::from(-3), BigInt::from(0), BigInt::from(1)]);
    assert!(matches!(bad, Err(Error::NotEisenstein { index: 0, .. })));
}

#[test]
fn valuation_examples() {
    let ext = power(4, 10);
    let pi = RamifiedElement::pi(&ext);
    assert_eq!(RamifiedElement::from_int(&ext, 5).valuation().unwrap(), Ratio::from_integer(1));
    assert_eq!(pi.valuation().unwrap(), Ratio::new(1, 4));
    assert_eq!(pi.pow(3).div_p_pow(1).valuation().unwrap(), Ratio::new(-1, 4));
    let zero = RamifiedElement::zero(&ext);
    assert!(matches!(zero.valuation(), Err(Error::BelowPrecisionFloor { .. })));
}

#[test]
fn delta_examples() {
    let ext = zp(20);
    let two = RamifiedElement::from_int(&ext, 2);
    let d = two.delta_pi().unwrap();
    assert_eq!(int(&d), BigInt::from(-6));
    assert_eq!(d.prec(), two.prec() - 1);
    for e in [1usize, 2, 4] {
        let ext = power(e, 10);
        let pi = RamifiedElement::pi(&ext);
        let want = &RamifiedElement::one(&ext) - &pi.pow(4);
        assert!(pi.delta_pi().unwrap().eq_to_precision(&want));
    }
    let cyc = Extension::cyclotomic(UnramifiedRing::new(5, 1, 10).unwrap(), 1).unwrap();
    let zeta = &RamifiedElement::one(&cyc) + &RamifiedElement::pi(&cyc);
    assert!(zeta.delta_pi().unwrap().eq_to_precision(&RamifiedElement::one(&cyc)));
    let short = RamifiedElement::from_int(&ext, 2).with_prec(0);
    assert!(matches!(short.delta_pi(), Err(Error::PrecisionUnderflow { .. })));
}

#[test]
fn iterated_delta_examples() {
    let ext = zp(20);
    let one = RamifiedElement::one(&ext).iterated_delta(3).unwrap();
    assert!(one[1..].iter().all(|x| x.is_zero()));
    let w = RamifiedElement::teichmuller(&ext, &[2]).unwrap();
    let jets = w.iterated_delta(2).unwrap();
    assert!(jets[1].is_zero() && jets[2].is_zero());
    let jets = RamifiedElement::from_int(&ext, 2).iterated_delta(2).unwrap();
    assert_eq!(int(&jets[1]), BigInt::from(-6));
    assert_eq!(int(&jets[2]), BigInt::from(1554));
    assert_eq!(jets[2].prec(), 18);
    let r = RamifiedElement::from_int(&ext, 2).with_prec(1);
    assert!(r.iterated_delta(2).is_err());
}

#[test]
fn log_examples_against_rational_oracle() {
    let ext = zp(20);
    assert!(padic_log(&RamifiedElement::one(&ext)).unwrap().is_zero());
    for x in [6i64, 11, 26, -4, 126, 31] {
        let l = padic_log(&RamifiedElement::from_int(&ext, x)).unwrap();
        let k = l.abs_prec() as u32;
        let want = to_mod(&log_oracle(&BigInt::from(x), 5, k), 5, k);
        assert_eq!(to_mod(&Ratio::from_integer(int(&l)), 5, k), want, "log({x})");
    }
    let l = padic_log(&RamifiedElement::from_int(&ext, 6)).unwrap();
    assert_eq!(l.valuation().unwrap(), Ratio::from_integer(1));
    let cyc = Extension::cyclotomic(UnramifiedRing::new(5, 1, 12).unwrap(), 1).unwrap();
    let zeta = &RamifiedElement::one(&cyc) + &RamifiedElement::pi(&cyc);
    assert!(padic_log(&zeta).unwrap().is_zero());
    assert!(matches!(padic_log(&RamifiedElement::from_int(&ext, 2)), Err(Error::NotOneModPi)));
}

#[test]
fn gm_character_on_integers_matches_oracle() {
    let ext = zp(24);
    for a in [2i64, 3, 7, 12, 101, -9] {
        let psi = delta_arith::character::gm_char_eval(&RamifiedElement::from_int(&ext, a)).unwrap();
        assert_eq!(psi.shift(), 0);
        let k = psi.abs_prec() as u32;
        assert!(k >= 20);
        assert_eq!(to_mod(&Ratio::from_integer(int(&psi)), 5, k), gm_psi_oracle(a, 5, k), "a = {a}");
    }
}

#[test]
fn valuation_profile_examples() {
    let prof = valuation_profile(1, 5, 50);
    assert_eq!(prof.min_over_n, Ratio::from_integer(1));
    assert_eq!(prof.argmin_over_n, 1);
    assert_eq!(v_pi_n_over_n(10, 4, 5), Ratio::new(3, 2));
    assert_eq!(digit_sum(4096, 5), 12);
    assert_eq!(v_pi_n_over_factorial(4096, 8, 5), Ratio::from_integer(-509));
    for n in 1..200u64 {
        let want = Ratio::new(n as i64, 8) - Ratio::from_integer(((n - digit_sum(n, 5)) / 4) as i64);
        assert_eq!(v_pi_n_over_factorial(n, 8, 5), want);
    }
    assert!(valuation_profile(2, 5, 10).over_factorial_tends_to_infinity);
    assert!(!valuation_profile(4, 5, 10).over_factorial_tends_to_infinity);
}

#[test]
fn wire_round_trip() {
    let ext = power(4, 10);
    let x = (&RamifiedElement::pi(&ext).pow(3).div_p_pow(2) + &RamifiedElement::from_int(&ext, -77)).with_abs_prec(20);
    let w = element_to_wire(&x);
    let text = serde_json::to_string(&w).unwrap();
    let back = element_from_wire(&ext, &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back, x);
    assert_eq!(back.prec(), x.prec());
    assert_eq!(back.shift(), x.shift());
}
