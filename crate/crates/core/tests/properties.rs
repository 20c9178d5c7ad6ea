use num_bigint::BigInt;
use proptest::prelude::*;

use delta_arith::character::gm_char_eval;
use delta_arith::formal_group::FormalGroupLaw;
use delta_arith::ring::{padic_log, Extension, RamifiedElement, UnramifiedRing};
use delta_arith::sample::{random_element, random_in_maximal_ideal, random_unit, sample_rng};
use delta_arith::series::{lambda_sum, twisted_power, word_power, PhiWord};

fn ext_for(kind: u8) -> Extension {
    match kind % 5 {
        0 => Extension::unramified(UnramifiedRing::new(5, 1, 8).unwrap()).unwrap(),
        1 => Extension::power_root(UnramifiedRing::new(5, 1, 8).unwrap(), 2).unwrap(),
        2 => Extension::power_root(UnramifiedRing::new(5, 1, 6).unwrap(), 4).unwrap(),
        3 => Extension::cyclotomic(UnramifiedRing::new(5, 1, 6).unwrap(), 1).unwrap(),
        _ => Extension::power_root(UnramifiedRing::new(5, 2, 6).unwrap(), 3).unwrap(),
    }
}

fn c_pi(x: &RamifiedElement, y: &RamifiedElement) -> RamifiedElement {
    let s = x + y;
    (&(&x.pow(5) + &y.pow(5)) - &s.pow(5)).div_pi().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_axioms(kind in 0u8..5, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 0);
        let x = random_element(&ext, 16, &mut rng);
        let y = random_element(&ext, 16, &mut rng);
        let (dx, dy) = (x.delta_pi().unwrap(), y.delta_pi().unwrap());
        let pi = RamifiedElement::pi(&ext);
        let prod = &(&(&x.pow(5) * &dy) + &(&y.pow(5) * &dx)) + &(&pi * &(&dx * &dy));
        prop_assert!((&x * &y).delta_pi().unwrap().eq_to_precision(&prod));
        let sum = &(&dx + &dy) + &c_pi(&x, &y);
        prop_assert!((&x + &y).delta_pi().unwrap().eq_to_precision(&sum));
        prop_assert!(RamifiedElement::one(&ext).delta_pi().unwrap().is_zero());
    }

    #[test]
    fn frobenius_is_a_lift(kind in 0u8..5, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 1);
        let x = random_element(&ext, 16, &mut rng);
        let y = random_element(&ext, 16, &mut rng);
        let pi = RamifiedElement::pi(&ext);
        prop_assert!(x.frobenius().eq_to_precision(&(&x.pow(5) + &(&pi * &x.delta_pi().unwrap()))));
        prop_assert!((&x * &y).frobenius().eq_to_precision(&(&x.frobenius() * &y.frobenius())));
        prop_assert!((&x + &y).frobenius().eq_to_precision(&(&x.frobenius() + &y.frobenius())));
        if let Ok(v) = x.valuation() {
            prop_assert_eq!(x.frobenius().valuation().unwrap(), v);
        }
    }

    #[test]
    fn valuation_is_additive(kind in 0u8..5, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 2);
        let x = random_element(&ext, 16, &mut rng);
        let y = random_element(&ext, 16, &mut rng);
        if let (Ok(a), Ok(b)) = (x.valuation(), y.valuation()) {
            prop_assert_eq!((&x * &y).valuation().unwrap(), a + b);
        }
    }

    #[test]
    fn precision_ledger_is_sound(kind in 0u8..4, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 3);
        let hi = random_unit(&ext, 21, &mut rng);
        let lo = hi.with_abs_prec(16);
        // delta twice, then the G_m character
        let f = |a: &RamifiedElement| -> (RamifiedElement, RamifiedElement) {
            let d = a.iterated_delta(2).unwrap();
            (d[2].clone(), gm_char_eval(a).unwrap())
        };
        let (d_lo, g_lo) = f(&lo);
        let (d_hi, g_hi) = f(&hi);
        prop_assert!(d_lo.eq_to_precision(&d_hi.with_abs_prec(d_lo.abs_prec())));
        prop_assert!(g_lo.eq_to_precision(&g_hi.with_abs_prec(g_lo.abs_prec())));
        prop_assert!(d_hi.abs_prec() >= d_lo.abs_prec());
        let one = RamifiedElement::one(&ext);
        let t = &(&lo * &lo.inverse().unwrap()) - &one;
        prop_assert!(t.is_zero());
    }

    #[test]
    fn twisted_power_root(seed in any::<u64>(), c1 in -3i64..4, c0 in -3i64..4) {
        let ext = ext_for(1);
        let a = random_unit(&ext, 16, &mut sample_rng(seed, 4));
        let w = PhiWord::from_terms([(1u32, c1), (0, c0)]);
        let wp = w.eval_at_p(5);
        let m = [1i64, 2, 3, 4, 6, 7].into_iter().rev().find(|m| (&wp % BigInt::from(*m)) == BigInt::from(0)).unwrap();
        let x = twisted_power(&a, &w, m).unwrap();
        prop_assert_eq!(x.shift(), 0);
        prop_assert!(x.pow_signed(&BigInt::from(m)).unwrap().eq_to_precision(&word_power(&a, &w).unwrap()));
    }

    #[test]
    fn lambda_words_are_injective(kind in 0u8..4, seed in any::<u64>(), r in 1u32..4) {
        let ext = ext_for(kind);
        let x = random_unit(&ext, 16, &mut sample_rng(seed, 5));
        let y = lambda_sum(r, 5).unwrap().apply_element(&x);
        prop_assert!(!y.is_zero());
        prop_assert!(y.valuation().is_ok());
    }

    #[test]
    fn gm_character_is_additive(kind in 0u8..4, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 6);
        let a = random_unit(&ext, 20, &mut rng);
        let b = random_unit(&ext, 20, &mut rng);
        let d = &(&gm_char_eval(&(&a * &b)).unwrap() - &gm_char_eval(&a).unwrap()) - &gm_char_eval(&b).unwrap();
        prop_assert!(d.is_zero());
    }

    #[test]
    fn log_is_additive(kind in 0u8..4, seed in any::<u64>()) {
        let ext = ext_for(kind);
        let mut rng = sample_rng(seed, 7);
        let one = RamifiedElement::one(&ext);
        let x = &one + &random_in_maximal_ideal(&ext, 20, &mut rng);
        let y = &one + &random_in_maximal_ideal(&ext, 20, &mut rng);
        let d = &(&padic_log(&(&x * &y)).unwrap() - &padic_log(&x).unwrap()) - &padic_log(&y).unwrap();
        prop_assert!(d.is_zero());
    }

    #[test]
    fn group_law_axioms(seed in any::<u64>(), a4 in 1i64..4, a6 in 1i64..4) {
        let ext = ext_for(2);
        let Ok(f) = FormalGroupLaw::weierstrass(&BigInt::from(a4), &BigInt::from(a6), 5, 16) else {
            return Ok(());
        };
        let mut rng = sample_rng(seed, 8);
        let x = random_in_maximal_ideal(&ext, 16, &mut rng);
        let y = random_in_maximal_ideal(&ext, 16, &mut rng);
        let z = random_in_maximal_ideal(&ext, 16, &mut rng);
        prop_assert!(f.combine(&x, &y).unwrap().eq_to_precision(&f.combine(&y, &x).unwrap()));
        let l = f.combine(&f.combine(&x, &y).unwrap(), &z).unwrap();
        let r = f.combine(&x, &f.combine(&y, &z).unwrap()).unwrap();
        prop_assert!(l.eq_to_precision(&r));
        prop_assert!(f.combine(&x, &RamifiedElement::zero(&ext)).unwrap().eq_to_precision(&x));
    }
}
