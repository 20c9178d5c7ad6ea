//! Finite-precision slices of the unramified ring W(F_q) = Z_p[g]/(M(g)).
//!
//! Elements are coefficient vectors of length `f` in the power basis of the
//! generator `g`. Arithmetic on representatives is exact over the integers
//! (the modulus is monic with integer coefficients), so callers decide when to
//! reduce modulo a power of `p`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp;
use crate::error::{Error, Result};

/// Descriptor for W(F_{p^f}) to `digits` p-adic digits.
#[derive(Clone, Debug)]
pub struct UnramifiedRing {
    p: u64,
    f: usize,
    digits: u32,
    modulus: Vec<BigInt>,
    frobenius_image: Vec<BigInt>,
    frob_powers: Vec<Vec<BigInt>>,
    p_powers: Vec<BigInt>,
}

impl PartialEq for UnramifiedRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.digits == other.digits
    }
}

impl Eq for UnramifiedRing {}

impl UnramifiedRing {
    /// Builds W(F_{p^f}) to `digits` digits. The modulus is the first monic
    /// irreducible polynomial of degree `f` mod p, and the Frobenius image of
    /// the generator is Hensel-lifted from `g^p`.
    pub fn new(p: u64, f: usize, digits: u32) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p < 5 {
            return Err(Error::PrimeTooSmall(p));
        }
        if f == 0 {
            return Err(Error::InvalidParameter("residue degree f must be at least 1".into()));
        }
        if digits == 0 {
            return Err(Error::InvalidParameter("precision must be at least 1 digit".into()));
        }
        let modulus_fp = fp::first_irreducible(p, f)
            .ok_or_else(|| Error::Internal(format!("no irreducible polynomial of degree {f} mod {p}")))?;
        let modulus: Vec<BigInt> = modulus_fp.iter().map(|&c| BigInt::from(c)).collect();
        let p_powers = (0..=digits + 8).map(|k| BigInt::from(p).pow(k)).collect();
        let mut ring = UnramifiedRing {
            p,
            f,
            digits,
            modulus,
            frobenius_image: vec![BigInt::zero(); f],
            frob_powers: Vec::new(),
            p_powers,
        };
        if f > 1 {
            ring.frobenius_image = ring.lift_frobenius()?;
            let mut powers = Vec::with_capacity(f);
            let mut cur = ring.one();
            for _ in 0..f {
                powers.push(cur.clone());
                cur = ring.reduce(&ring.mul(&cur, &ring.frobenius_image), digits);
            }
            ring.frob_powers = powers;
        }
        Ok(ring)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Monic defining polynomial, low degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// phi(g) to `digits` digits.
    pub fn frobenius_image(&self) -> &[BigInt] {
        &self.frobenius_image
    }

    /// Size of the residue field.
    pub fn q(&self) -> BigUint {
        BigUint::from(self.p).pow(self.f as u32)
    }

    pub fn p_pow(&self, k: u32) -> BigInt {
        match self.p_powers.get(k as usize) {
            Some(v) => v.clone(),
            None => BigInt::from(self.p).pow(k),
        }
    }

    pub(crate) fn p_pow_ref(&self, k: u32) -> Option<&BigInt> {
        self.p_powers.get(k as usize)
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.f]
    }

    pub fn one(&self) -> Vec<BigInt> {
        self.from_int(BigInt::one())
    }

    pub fn from_int(&self, n: BigInt) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = n;
        v
    }

    /// The generator g (zero when f = 1, where the modulus is x).
    pub fn generator(&self) -> Vec<BigInt> {
        let mut v = self.zero();
        if self.f > 1 {
            v[1] = BigInt::one();
        }
        v
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
        a.iter().map(|x| x * k).collect()
    }

    /// Exact product of representatives, reduced by the monic modulus.
    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let f = self.f;
        if f == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![BigInt::zero(); 2 * f - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        for k in (f..2 * f - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..f {
                if !self.modulus[i].is_zero() {
                    prod[k - f + i] -= &c * &self.modulus[i];
                }
            }
        }
        prod.truncate(f);
        prod
    }

    /// Reduces every component into `[0, p^k)`.
    pub fn reduce(&self, a: &[BigInt], k: u32) -> Vec<BigInt> {
        let m = self.p_pow(k);
        a.iter().map(|c| c.mod_floor(&m)).collect()
    }

    /// p-adic valuation of a representative, `None` for zero.
    pub fn valuation(&self, a: &[BigInt]) -> Option<u32> {
        a.iter().filter(|c| !c.is_zero()).map(|c| int_valuation(c, self.p)).min()
    }

    /// Exact division by p; the caller guarantees divisibility.
    pub fn div_p(&self, a: &[BigInt]) -> Vec<BigInt> {
        let p = BigInt::from(self.p);
        a.iter()
            .map(|c| {
                debug_assert!(c.is_multiple_of(&p));
                c / &p
            })
            .collect()
    }

    pub fn is_divisible_by_p(&self, a: &[BigInt]) -> bool {
        let p = BigInt::from(self.p);
        a.iter().all(|c| c.is_multiple_of(&p))
    }

    /// Frobenius lift on a representative, correct modulo p^digits.
    pub fn frobenius(&self, a: &[BigInt]) -> Vec<BigInt> {
        if self.f == 1 {
            return a.to_vec();
        }
        let mut out = self.zero();
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, w) in out.iter_mut().zip(&self.frob_powers[j]) {
                *o += c * w;
            }
        }
        self.reduce(&out, self.digits)
    }

    /// a^n modulo p^k.
    pub fn pow_mod(&self, a: &[BigInt], n: &BigUint, k: u32) -> Vec<BigInt> {
        let mut acc = self.reduce(&self.one(), k);
        let mut base = self.reduce(a, k);
        let bits = n.bits();
        for i in 0..bits {
            if n.bit(i) {
                acc = self.reduce(&self.mul(&acc, &base), k);
            }
            if i + 1 < bits {
                base = self.reduce(&self.mul(&base, &base), k);
            }
        }
        acc
    }

    /// Inverse modulo p^k by Newton iteration from the residue field inverse.
    pub fn inverse_mod(&self, a: &[BigInt], k: u32) -> Option<Vec<BigInt>> {
        let a1 = self.reduce(a, 1);
        if self.is_zero(&a1) {
            return None;
        }
        let q_minus_2 = self.q() - BigUint::from(2u32);
        let mut b = self.pow_mod(&a1, &q_minus_2, 1);
        let two = self.from_int(BigInt::from(2));
        let mut prec = 1u32;
        while prec < k {
            prec = (2 * prec).min(k);
            let ab = self.reduce(&self.mul(a, &b), prec);
            b = self.reduce(&self.mul(&b, &self.sub(&two, &ab)), prec);
        }
        Some(self.reduce(&b, k))
    }

    /// The Teichmüller representative of the residue class `c` (components of
    /// `c` in the power basis mod p), to `digits` digits, via Newton iteration
    /// on x^(q-1) - 1.
    pub fn teichmuller(&self, residue: &[i64]) -> Result<Vec<BigInt>> {
        if residue.len() > self.f {
            return Err(Error::InvalidParameter(format!(
                "residue has {} components, ring has f = {}",
                residue.len(),
                self.f
            )));
        }
        let mut c = self.zero();
        for (slot, &r) in c.iter_mut().zip(residue) {
            *slot = BigInt::from(r);
        }
        let c = self.reduce(&c, 1);
        if self.is_zero(&c) {
            return Err(Error::Domain("Teichmüller lift of 0 is not a root of unity".into()));
        }
        let q_minus_1 = self.q() - BigUint::one();
        let qm1 = BigInt::from(q_minus_1.clone());
        let mut x = c;
        let mut prec = 1u32;
        while prec < self.digits {
            prec = (2 * prec).min(self.digits);
            // x <- x - (x^(q-1) - 1) * x / ((q-1) x^(q-1))
            let xq1 = self.pow_mod(&x, &q_minus_1, prec);
            let num = self.mul(&self.sub(&xq1, &self.one()), &x);
            let den = self.scale(&xq1, &qm1);
            let den_inv = self
                .inverse_mod(&den, prec)
                .ok_or_else(|| Error::Internal("derivative of x^(q-1)-1 vanished".into()))?;
            x = self.reduce(&self.sub(&x, &self.mul(&num, &den_inv)), prec);
        }
        Ok(self.reduce(&x, self.digits))
    }

    fn eval_modulus(&self, y: &[BigInt], k: u32) -> Vec<BigInt> {
        let mut acc = self.zero();
        for c in self.modulus.iter().rev() {
            acc = self.reduce(&self.mul(&acc, y), k);
            acc[0] += c;
        }
        self.reduce(&acc, k)
    }

    fn eval_modulus_derivative(&self, y: &[BigInt], k: u32) -> Vec<BigInt> {
        let mut acc = self.zero();
        for (i, c) in self.modulus.iter().enumerate().skip(1).rev() {
            acc = self.reduce(&self.mul(&acc, y), k);
            acc[0] += c * BigInt::from(i);
        }
        self.reduce(&acc, k)
    }

    fn lift_frobenius(&self) -> Result<Vec<BigInt>> {
        let p = BigUint::from(self.p);
        let mut y = self.pow_mod(&self.generator(), &p, 1);
        let mut prec = 1u32;
        while prec < self.digits {
            prec = (2 * prec).min(self.digits);
            let m = self.eval_modulus(&y, prec);
            let dm = self.eval_modulus_derivative(&y, prec);
            let dm_inv = self
                .inverse_mod(&dm, prec)
                .ok_or_else(|| Error::Internal("modulus is inseparable".into()))?;
            y = self.reduce(&self.sub(&y, &self.mul(&m, &dm_inv)), prec);
        }
        Ok(self.reduce(&y, self.digits))
    }
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    if let Some(small) = n.abs().to_u64() {
        let mut m = small;
        let mut v = 0;
        while m % p == 0 {
            m /= p;
            v += 1;
        }
        return v;
    }
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}
