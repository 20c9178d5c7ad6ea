//! Short Weierstrass curves over the prime field: point counts and traces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::fp::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticCurveData {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub a4: BigInt,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub a6: BigInt,
    pub p: u64,
    /// #E(F_p), including the point at infinity.
    pub count: u64,
    /// a_p = p + 1 - #E(F_p).
    pub ap: i64,
    pub ordinary: bool,
}

fn pow_mod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        k >>= 1;
    }
    r
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// 4 a4^3 + 27 a6^2 mod p.
pub fn discriminant_residue(a4: &BigInt, a6: &BigInt, p: u64) -> u64 {
    let d = BigInt::from(4) * a4 * a4 * a4 + BigInt::from(27) * a6 * a6;
    residue(&d, p)
}

/// Counts the points of y^2 = x^3 + a4 x + a6 over F_p by enumerating x and
/// evaluating the quadratic character of the right-hand side.
pub fn count_points(a4: &BigInt, a6: &BigInt, p: u64) -> Result<EllipticCurveData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::PrimeTooSmall(p));
    }
    if discriminant_residue(a4, a6, p) == 0 {
        return Err(Error::SingularCurve { a4: a4.to_string(), a6: a6.to_string(), p });
    }
    let a = residue(a4, p);
    let b = residue(a6, p);
    let half = (p - 1) / 2;
    let mut count = 1u64;
    for x in 0..p {
        let rhs = ((x as u128 * x as u128 % p as u128 * x as u128 + a as u128 * x as u128 + b as u128) % p as u128) as u64;
        count += if rhs == 0 {
            1
        } else if pow_mod(rhs, half, p) == 1 {
            2
        } else {
            0
        };
    }
    let ap = p as i64 + 1 - count as i64;
    Ok(EllipticCurveData {
        a4: a4.clone(),
        a6: a6.clone(),
        p,
        count,
        ap,
        ordinary: ap.rem_euclid(p as i64) != 0,
    })
}

/// The unit root of x^2 - a_p x + p in Z_p, modulo p^digits.
pub fn unit_root(curve: &EllipticCurveData, digits: u32) -> Result<BigInt> {
    if !curve.ordinary {
        return Err(Error::Supersingular);
    }
    let p = BigInt::from(curve.p);
    let ap = BigInt::from(curve.ap);
    let m = p.pow(digits);
    let mut u = ap.mod_floor(&p);
    // Newton: u <- u - (u^2 - a u + p) / (2u - a); 2u - a = u mod p is a unit
    for _ in 0..64 {
        let f = (&u * &u - &ap * &u + &p).mod_floor(&m);
        if f.is_zero() {
            break;
        }
        let d = (BigInt::from(2) * &u - &ap).mod_floor(&m);
        let g = d.extended_gcd(&m);
        let d_inv = g.x.mod_floor(&m);
        u = (&u - f * d_inv).mod_floor(&m);
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a4: i64, a6: i64) -> Result<EllipticCurveData> {
        count_points(&BigInt::from(a4), &BigInt::from(a6), 5)
    }

    #[test]
    fn worked_counts_over_f5() {
        let c = curve(1, 0).unwrap();
        assert_eq!((c.count, c.ap, c.ordinary), (4, 2, true));
        let c = curve(0, 1).unwrap();
        assert_eq!((c.ap, c.ordinary), (0, false));
        let c = curve(1, 1).unwrap();
        assert_eq!((c.count, c.ap), (9, -3));
    }

    #[test]
    fn singular_and_small_primes() {
        assert!(matches!(curve(0, 0), Err(Error::SingularCurve { .. })));
        assert!(matches!(curve(-3, 2), Err(Error::SingularCurve { .. })));
        assert_eq!(count_points(&BigInt::from(1), &BigInt::from(0), 3), Err(Error::PrimeTooSmall(3)));
        assert_eq!(count_points(&BigInt::from(1), &BigInt::from(0), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn hasse_bound_holds() {
        for p in [5u64, 7, 11, 13, 101] {
            for a4 in 0..4 {
                for a6 in 0..4 {
                    if let Ok(c) = count_points(&BigInt::from(a4), &BigInt::from(a6), p) {
                        assert!((c.ap * c.ap) as u64 <= 4 * p);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_root_satisfies_frobenius_polynomial() {
        let c = curve(1, 0).unwrap();
        let u = unit_root(&c, 12).unwrap();
        let m = BigInt::from(5).pow(12);
        let f = (&u * &u - BigInt::from(c.ap) * &u + BigInt::from(5)).mod_floor(&m);
        assert!(f.is_zero());
        assert!(unit_root(&curve(0, 1).unwrap(), 4).is_err());
    }
}
