//! Exact oracles built from rational arithmetic only, sharing no code with the
//! library's p-adic routines.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn vp(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero rational.
pub fn vp_rational(r: &BigRational, p: u64) -> i64 {
    vp(r.numer(), p) as i64 - vp(r.denom(), p) as i64
}

/// A p-integral rational reduced to [0, p^k).
pub fn to_mod(r: &BigRational, p: u64, k: u32) -> BigInt {
    let m = BigInt::from(p).pow(k);
    let d = r.denom().mod_floor(&m);
    let ext = d.extended_gcd(&m);
    assert!(ext.gcd.is_one(), "denominator divisible by p");
    (r.numer() * ext.x).mod_floor(&m)
}

/// log(x) for an integer x = 1 mod p, as a rational partial sum accurate mod p^digits.
pub fn log_oracle(x: &BigInt, p: u64, digits: u32) -> BigRational {
    let y = BigRational::from_integer(x - 1);
    assert!(vp(&(x - 1), p) >= 1 || (x - 1u32).is_zero());
    if y.is_zero() {
        return BigRational::zero();
    }
    let mut sum = BigRational::zero();
    let mut pow = BigRational::one();
    let mut n: i64 = 1;
    loop {
        pow = &pow * &y;
        // v_p(y^n / n) >= n - log_p n; stop once every later term is below p^digits
        let log_n = (n as f64).ln() / (p as f64).ln();
        if n as f64 - log_n - 1.0 > digits as f64 + 2.0 {
            break;
        }
        let term = &pow / q(n);
        if n % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
        n += 1;
    }
    sum
}

/// psi(a) = (1/p) log(a^(1-p)) for an integer unit a over Z_p (where phi is the identity),
/// reduced mod p^digits.
pub fn gm_psi_oracle(a: i64, p: u64, digits: u32) -> BigInt {
    gm_psi_oracle_big(&BigInt::from(a), p, digits)
}

pub fn gm_psi_oracle_big(a: &BigInt, p: u64, digits: u32) -> BigInt {
    let x = a.pow(p as u32 - 1);
    let l = log_oracle(&x, p, digits + 1);
    let psi = -l / q(p as i64);
    to_mod(&psi, p, digits)
}

/// Truncated univariate rational series.
pub type Uni = Vec<BigRational>;

fn uni_mul(a: &Uni, b: &Uni, d: usize) -> Uni {
    let mut out = vec![BigRational::zero(); d + 1];
    for (i, x) in a.iter().enumerate().take(d + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(d + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn uni_div(a: &Uni, b: &Uni, d: usize) -> Uni {
    let mut out = vec![BigRational::zero(); d + 1];
    let inv = BigRational::one() / &b[0];
    for n in 0..=d {
        let mut acc = a.get(n).cloned().unwrap_or_default();
        for k in 1..=n {
            if let Some(bk) = b.get(k) {
                acc -= bk * &out[n - k];
            }
        }
        out[n] = acc * &inv;
    }
    out
}

/// Logarithm coefficients [A_1, ..., A_d] of y^2 = x^3 + a4 x + a6 in the
/// parameter z = -x/y: w = -1/y solves w = z^3 + a4 z w^2 + a6 w^3 and the
/// invariant differential dx/(2y) equals (z w' - w)/(2 w) dz.
pub fn weierstrass_log_oracle(a4: i64, a6: i64, d: usize) -> Vec<BigRational> {
    let n = d + 4;
    let mut z3 = vec![BigRational::zero(); n + 1];
    z3[3] = q(1);
    let mut w = z3.clone();
    for _ in 0..n {
        let w2 = uni_mul(&w, &w, n);
        let w3 = uni_mul(&w2, &w, n);
        let mut next = z3.clone();
        for i in 0..n {
            next[i + 1] += q(a4) * &w2[i];
        }
        for i in 0..=n {
            next[i] += q(a6) * &w3[i];
        }
        w = next;
    }
    // numerator and denominator divided by z^3
    let num: Uni = (3..=n).map(|i| &w[i] * q(i as i64 - 1)).collect();
    let den: Uni = (3..=n).map(|i| &w[i] * q(2)).collect();
    let omega = uni_div(&num, &den, d - 1);
    omega.iter().enumerate().map(|(i, c)| c / q(i as i64 + 1)).collect()
}

/// Compositional inverse of T + sum_{n>=2} c_n T^n, as [0, 1, b_2, ..., b_d].
pub fn reversion(coeffs: &[BigRational], d: usize) -> Uni {
    // coeffs[i] is the coefficient of T^(i+1)
    let mut f = vec![BigRational::zero(); d + 1];
    for (i, c) in coeffs.iter().enumerate().take(d) {
        f[i + 1] = c.clone();
    }
    let mut g = vec![BigRational::zero(); d + 1];
    g[1] = q(1);
    for n in 2..=d {
        // coefficient of T^n in f(g(T)) must vanish
        let mut comp = vec![BigRational::zero(); d + 1];
        let mut gp = vec![BigRational::zero(); d + 1];
        gp[0] = q(1);
        for k in 1..=n {
            gp = uni_mul(&gp, &g, d);
            if !f[k].is_zero() {
                for i in 0..=d {
                    comp[i] += &f[k] * &gp[i];
                }
            }
        }
        g[n] = -comp[n].clone();
    }
    g
}

pub type Bi = BTreeMap<(u32, u32), BigRational>;

fn bi_mul(a: &Bi, b: &Bi, d: u32) -> Bi {
    let mut out = Bi::new();
    for (&(i, j), x) in a {
        for (&(k, l), y) in b {
            if i + j + k + l <= d {
                *out.entry((i + k, j + l)).or_default() += x * y;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// l^{-1}(l(T1) + l(T2)) to total degree d, from the log coefficients [A_1, ...].
pub fn law_from_log(log: &[BigRational], d: u32) -> Bi {
    let inv = reversion(log, d as usize);
    let mut s = Bi::new();
    for (i, c) in log.iter().enumerate().take(d as usize) {
        let n = i as u32 + 1;
        if !c.is_zero() {
            *s.entry((n, 0)).or_default() += c;
            *s.entry((0, n)).or_default() += c;
        }
    }
    let mut out = Bi::new();
    let mut pow = Bi::new();
    pow.insert((0, 0), q(1));
    for k in 1..=d as usize {
        pow = bi_mul(&pow, &s, d);
        if inv[k].is_zero() {
            continue;
        }
        for (m, c) in &pow {
            *out.entry(*m).or_default() += &inv[k] * c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// v_p(x) >= -log e / log p for x = a/b, decided with integers: e^b >= p^(-a).
pub fn above_log_bound(a: i64, b: i64, e: u64, p: u64) -> bool {
    a >= 0 || BigInt::from(e).pow(b as u32) >= BigInt::from(p).pow((-a) as u32)
}

/// Base-p digit sum.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// Naive point count of y^2 = x^3 + a4 x + a6 over F_p, including infinity.
pub fn naive_count(a4: i64, a6: i64, p: i64) -> i64 {
    let mut n = 1;
    for x in 0..p {
        for y in 0..p {
            if (y * y - x * x * x - a4 * x - a6).rem_euclid(p) == 0 {
                n += 1;
            }
        }
    }
    n
}
