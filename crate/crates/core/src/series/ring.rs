//! Coefficient rings for the series engine.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{int_valuation, Extension, RamifiedElement};

/// A commutative ring with exactly representable (or precision-tracked) elements.
pub trait CoeffRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// `None` when the rational is not an element of this ring.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Whether two ring handles describe the same ring.
    fn same(&self, other: &Self) -> bool;
    /// Exponent of the p-power denominator carried by `a` (0 when integral).
    fn denominator_exponent(&self, _a: &Self::Elem) -> u32 {
        0
    }
    fn describe(&self) -> String;
    fn write_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A coefficient ring with a Frobenius lift and a chosen uniformizer.
pub trait DeltaRing: CoeffRing {
    fn p(&self) -> u64;
    fn uniformizer(&self) -> Self::Elem;
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;
    /// Exact quotient by the uniformizer, `None` if it does not divide `a`.
    fn div_uniformizer(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// Z, with p = pi and trivial Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integers {
    p: u64,
}

impl Integers {
    pub fn new(p: u64) -> Self {
        Integers { p }
    }
}

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigInt> {
        r.is_integer().then(|| r.to_integer())
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn describe(&self) -> String {
        format!("integers p={}", self.p)
    }
    fn write_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

impl DeltaRing for Integers {
    fn p(&self) -> u64 {
        self.p
    }
    fn uniformizer(&self) -> BigInt {
        BigInt::from(self.p)
    }
    fn frobenius(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn div_uniformizer(&self, a: &BigInt) -> Option<BigInt> {
        let p = BigInt::from(self.p);
        (a % &p).is_zero().then(|| a / p)
    }
}

/// Q, with p = pi and trivial Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals {
    p: u64,
}

impl Rationals {
    pub fn new(p: u64) -> Self {
        Rationals { p }
    }
}

impl CoeffRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigRational> {
        Some(r.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn denominator_exponent(&self, a: &BigRational) -> u32 {
        int_valuation(a.denom(), self.p)
    }
    fn describe(&self) -> String {
        format!("rationals p={}", self.p)
    }
    fn write_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        s.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    }
}

impl DeltaRing for Rationals {
    fn p(&self) -> u64 {
        self.p
    }
    fn uniformizer(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.p))
    }
    fn frobenius(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn div_uniformizer(&self, a: &BigRational) -> Option<BigRational> {
        Some(a / BigInt::from(self.p))
    }
}

/// K_pi = R_pi[1/p] with precision-tracked elements.
#[derive(Clone, Debug, PartialEq)]
pub struct RamifiedRing {
    ext: Extension,
}

impl RamifiedRing {
    pub fn new(ext: &Extension) -> Self {
        RamifiedRing { ext: ext.clone() }
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }
}

impl CoeffRing for RamifiedRing {
    type Elem = RamifiedElement;

    fn zero(&self) -> RamifiedElement {
        RamifiedElement::zero(&self.ext)
    }
    fn one(&self) -> RamifiedElement {
        RamifiedElement::one(&self.ext)
    }
    fn from_int(&self, n: &BigInt) -> RamifiedElement {
        RamifiedElement::from_int(&self.ext, n.clone())
    }
    fn from_rational(&self, r: &BigRational) -> Option<RamifiedElement> {
        Some(RamifiedElement::from_rational(&self.ext, r))
    }
    fn add(&self, a: &RamifiedElement, b: &RamifiedElement) -> RamifiedElement {
        a + b
    }
    fn sub(&self, a: &RamifiedElement, b: &RamifiedElement) -> RamifiedElement {
        a - b
    }
    fn neg(&self, a: &RamifiedElement) -> RamifiedElement {
        -a
    }
    fn mul(&self, a: &RamifiedElement, b: &RamifiedElement) -> RamifiedElement {
        a * b
    }
    fn is_zero(&self, a: &RamifiedElement) -> bool {
        a.is_zero()
    }
    /// Inverse of a unit of R_pi.
    fn inv(&self, a: &RamifiedElement) -> Option<RamifiedElement> {
        if !a.is_unit() {
            return None;
        }
        a.inverse().ok()
    }
    fn same(&self, other: &Self) -> bool {
        self.ext == other.ext
    }
    fn denominator_exponent(&self, a: &RamifiedElement) -> u32 {
        a.shift()
    }
    fn describe(&self) -> String {
        format!(
            "ramified p={} f={} e={} eisenstein={}",
            self.ext.p(),
            self.ext.f(),
            self.ext.e(),
            self.ext
                .eisenstein()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
    /// `prec:shift:r0,r1,...` with the flat representative in decimal.
    fn write_elem(&self, a: &RamifiedElement) -> String {
        let rep: Vec<String> = a.rep().iter().map(|c| c.to_string()).collect();
        format!("{}:{}:{}", a.prec(), a.shift(), rep.join(","))
    }
    fn parse_elem(&self, s: &str) -> Result<RamifiedElement> {
        let bad = || Error::Parse(format!("bad element record {s:?}"));
        let mut parts = s.trim().splitn(3, ':');
        let prec: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let shift: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let rep: Vec<BigInt> = parts
            .next()
            .ok_or_else(bad)?
            .split(',')
            .map(|c| c.parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if rep.len() != self.ext.e() * self.ext.f() {
            return Err(bad());
        }
        let f = self.ext.f();
        let coeffs: Vec<Vec<BigInt>> = rep.chunks(f).map(|c| c.to_vec()).collect();
        RamifiedElement::from_coeffs(&self.ext, &coeffs, prec, shift)
    }
}

impl DeltaRing for RamifiedRing {
    fn p(&self) -> u64 {
        self.ext.p()
    }
    fn uniformizer(&self) -> RamifiedElement {
        RamifiedElement::pi(&self.ext)
    }
    fn frobenius(&self, a: &RamifiedElement) -> RamifiedElement {
        a.frobenius()
    }
    fn div_uniformizer(&self, a: &RamifiedElement) -> Option<RamifiedElement> {
        a.div_pi().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::UnramifiedRing;

    #[test]
    fn integer_division_by_p() {
        let z = Integers::new(5);
        assert_eq!(z.div_uniformizer(&BigInt::from(35)), Some(BigInt::from(7)));
        assert_eq!(z.div_uniformizer(&BigInt::from(36)), None);
        assert_eq!(z.inv(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(z.inv(&BigInt::from(2)), None);
    }

    #[test]
    fn ramified_record_roundtrip() {
        let ext = Extension::power_root(UnramifiedRing::new(5, 1, 6).unwrap(), 2).unwrap();
        let ring = RamifiedRing::new(&ext);
        let x = RamifiedElement::pi(&ext).mul_int(7).div_int(&BigInt::from(5));
        let s = ring.write_elem(&x);
        let y = ring.parse_elem(&s).unwrap();
        assert_eq!(x, y);
        assert_eq!(ring.denominator_exponent(&y), 1);
    }

    #[test]
    fn rational_denominator_exponent() {
        let q = Rationals::new(5);
        let r = BigRational::new(BigInt::from(3), BigInt::from(50));
        assert_eq!(q.denominator_exponent(&r), 2);
    }
}
