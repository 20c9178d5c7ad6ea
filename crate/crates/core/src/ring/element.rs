//! Elements of R_pi and K_pi with a precision ledger.
//!
//! A [`RamifiedElement`] stores a representative `x` of R_pi known modulo
//! `pi^prec` together with a shift `s`; the represented value is `x / p^s`.
//! Every operation returns the canonical representative (coefficient `i` of
//! the pi-expansion reduced modulo `p^ceil((prec - i)/e)`) with the smallest
//! shift the known digits allow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::extension::Extension;
use super::unramified::int_valuation;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RamifiedElement {
    ext: Extension,
    coeffs: Vec<BigInt>,
    prec: i64,
    shift: u32,
}

impl RamifiedElement {
    /// Builds an element from a raw flat representative; reduces and normalizes.
    pub(crate) fn from_rep(ext: &Extension, coeffs: Vec<BigInt>, prec: i64, shift: u32) -> Self {
        debug_assert_eq!(coeffs.len(), ext.rep_len());
        let mut x = RamifiedElement {
            ext: ext.clone(),
            coeffs,
            prec: prec.clamp(0, ext.max_prec()),
            shift,
        };
        x.normalize();
        x
    }

    /// Element from per-power coefficients: `coeffs[i]` is the W-coefficient
    /// of `pi^i` (power basis of the generator, `f` entries or fewer).
    pub fn from_coeffs(ext: &Extension, coeffs: &[Vec<BigInt>], prec: i64, shift: u32) -> Result<Self> {
        if coeffs.len() > ext.e() {
            return Err(Error::InvalidParameter(format!(
                "{} pi-coefficients given for e = {}",
                coeffs.len(),
                ext.e()
            )));
        }
        if prec < 0 {
            return Err(Error::InvalidParameter("precision must be non-negative".into()));
        }
        let f = ext.f();
        let mut rep = ext.rep_zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.len() > f {
                return Err(Error::InvalidParameter(format!("coefficient {i} has more than f = {f} entries")));
            }
            for (j, v) in c.iter().enumerate() {
                rep[i * f + j] = v.clone();
            }
        }
        Ok(Self::from_rep(ext, rep, prec, shift))
    }

    pub fn zero(ext: &Extension) -> Self {
        Self::from_rep(ext, ext.rep_zero(), ext.max_prec(), 0)
    }

    pub fn one(ext: &Extension) -> Self {
        Self::from_int(ext, 1)
    }

    pub fn from_int(ext: &Extension, n: impl Into<BigInt>) -> Self {
        let mut rep = ext.rep_zero();
        rep[0] = n.into();
        Self::from_rep(ext, rep, ext.max_prec(), 0)
    }

    /// Embeds an element of the unramified base ring.
    pub fn from_base(ext: &Extension, w: &[BigInt]) -> Self {
        let mut rep = ext.rep_zero();
        for (slot, c) in rep.iter_mut().zip(w) {
            *slot = c.clone();
        }
        Self::from_rep(ext, rep, ext.max_prec(), 0)
    }

    /// Exact rational number (denominators may involve p).
    pub fn from_rational(ext: &Extension, r: &BigRational) -> Self {
        Self::from_int(ext, r.numer().clone()).div_int(r.denom())
    }

    /// The uniformizer.
    pub fn pi(ext: &Extension) -> Self {
        let mut rep = ext.rep_zero();
        if ext.e() == 1 {
            // E = x + a_0 with a_0 = -p*u, so pi = -a_0
            rep[0] = -ext.eisenstein()[0].clone();
        } else {
            rep[ext.f()] = BigInt::one();
        }
        Self::from_rep(ext, rep, ext.max_prec(), 0)
    }

    /// The generator of the unramified base (zero when f = 1).
    pub fn generator(ext: &Extension) -> Self {
        Self::from_base(ext, &ext.base().generator())
    }

    /// Teichmüller lift of a residue (components in the power basis mod p).
    pub fn teichmuller(ext: &Extension, residue: &[i64]) -> Result<Self> {
        let w = ext.base().teichmuller(residue)?;
        Ok(Self::from_base(ext, &w))
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    /// Precision of the representative in pi-units.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// p-power denominator exponent.
    pub fn shift(&self) -> u32 {
        self.shift
    }

    /// Absolute precision of the represented value: it is known modulo pi^abs_prec.
    pub fn abs_prec(&self) -> i64 {
        self.prec - self.ext.e() as i64 * self.shift as i64
    }

    /// Flat representative: entry `i * f + j` is the coefficient of `g^j pi^i`.
    pub fn rep(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of pi^i in the representative.
    pub fn coeff(&self, i: usize) -> &[BigInt] {
        self.ext.rep_coeff(&self.coeffs, i)
    }

    /// True when the value is zero to its tracked precision.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// pi-adic valuation of the representative (ignoring the shift).
    fn rep_valuation(&self) -> Option<i64> {
        self.ext.rep_valuation(&self.coeffs)
    }

    /// Lower bound for the representative's pi-valuation.
    fn rep_val_floor(&self) -> i64 {
        self.rep_valuation().unwrap_or(self.prec).min(self.prec)
    }

    /// pi-adic valuation of the value (pi-units).
    pub fn pi_valuation(&self) -> Result<i64> {
        self.rep_valuation()
            .map(|v| v - self.ext.e() as i64 * self.shift as i64)
            .ok_or(Error::BelowPrecisionFloor { prec: self.abs_prec() })
    }

    /// v_p of the value, normalized so that v_p(p) = 1.
    pub fn valuation(&self) -> Result<Ratio<i64>> {
        Ok(Ratio::new(self.pi_valuation()?, self.ext.e() as i64))
    }

    /// Smallest nu >= 0 with p^nu * self in R_pi, or `None` when the known
    /// digits cannot decide it (zero to a precision below R_pi).
    pub fn min_shift(&self) -> Option<u32> {
        if self.is_zero() {
            return if self.abs_prec() >= 0 { Some(0) } else { None };
        }
        // normalize() has already removed every removable power of p
        Some(self.shift)
    }

    /// Whether p^nu * self is certified to lie in R_pi: `Some(true/false)`,
    /// or `None` when the precision is too low to decide.
    pub fn certify_shift(&self, nu: u32) -> Option<bool> {
        let e = self.ext.e() as i64;
        match self.rep_valuation() {
            Some(v) => {
                if v - e * self.shift as i64 >= -e * nu as i64 {
                    Some(true)
                } else {
                    Some(false)
                }
            }
            None => {
                if self.abs_prec() >= -e * nu as i64 {
                    Some(true)
                } else {
                    None
                }
            }
        }
    }

    /// Reduces the representative to `prec` and strips removable p-powers from the shift.
    fn normalize(&mut self) {
        let e = self.ext.e() as i64;
        self.ext.rep_reduce(&mut self.coeffs, self.prec);
        while self.shift > 0 && self.prec >= e && self.ext.rep_is_divisible_by_p(&self.coeffs) {
            self.coeffs = self.ext.rep_div_p(&self.coeffs);
            self.prec -= e;
            self.shift -= 1;
        }
    }

    /// Same value with precision lowered to `prec` (no-op if already lower).
    pub fn with_prec(&self, prec: i64) -> Self {
        Self::from_rep(&self.ext, self.coeffs.clone(), prec.min(self.prec), self.shift)
    }

    /// Same value with absolute precision capped at `abs`.
    pub fn with_abs_prec(&self, abs: i64) -> Self {
        let rep_prec = abs + self.ext.e() as i64 * self.shift as i64;
        self.with_prec(rep_prec.max(0))
    }

    fn check_ext(&self, other: &Self) {
        assert!(self.ext.same(&other.ext), "elements belong to different extensions");
    }

    /// Representative scaled to shift `target` (>= self.shift).
    fn rep_at_shift(&self, target: u32) -> (Vec<BigInt>, i64) {
        let d = target - self.shift;
        if d == 0 {
            return (self.coeffs.clone(), self.prec);
        }
        let k = self.ext.base().p_pow(d);
        let prec = (self.prec + self.ext.e() as i64 * d as i64).min(self.ext.max_prec());
        (self.ext.rep_scale(&self.coeffs, &k), prec)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.check_ext(other);
        let s = self.shift.max(other.shift);
        let (a, pa) = self.rep_at_shift(s);
        let (b, pb) = other.rep_at_shift(s);
        let rep: Vec<BigInt> = if negate {
            a.into_iter().zip(b).map(|(x, y)| x - y).collect()
        } else {
            a.into_iter().zip(b).map(|(x, y)| x + y).collect()
        };
        Self::from_rep(&self.ext, rep, pa.min(pb), s)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_ext(other);
        let prec = (self.prec + other.rep_val_floor()).min(other.prec + self.rep_val_floor());
        let rep = self.ext.rep_mul(&self.coeffs, &other.coeffs);
        Self::from_rep(&self.ext, rep, prec, self.shift + other.shift)
    }

    pub fn square(&self) -> Self {
        self.mul_impl(self)
    }

    pub fn pow(&self, n: u64) -> Self {
        self.pow_big(&BigUint::from(n))
    }

    pub fn pow_big(&self, n: &BigUint) -> Self {
        let mut acc = Self::one(&self.ext);
        let bits = n.bits();
        for i in (0..bits).rev() {
            acc = acc.square();
            if n.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow_signed(&self, n: &BigInt) -> Result<Self> {
        let mag = n.magnitude();
        if n.is_negative() {
            Ok(self.inverse()?.pow_big(mag))
        } else {
            Ok(self.pow_big(mag))
        }
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> Self {
        self * &Self::from_int(&self.ext, n)
    }

    /// Division by a nonzero integer; p-parts of `n` go into the shift.
    pub fn div_int(&self, n: &BigInt) -> Self {
        assert!(!n.is_zero(), "division by zero");
        let p = self.ext.p();
        let k = int_valuation(n, p);
        let m = n / self.ext.base().p_pow(k);
        let digits = self.ext.base().digits() + 1;
        let w = self.ext.base();
        let m_inv = w
            .inverse_mod(&w.from_int(m), digits)
            .expect("prime-to-p integer is a unit")
            .swap_remove(0);
        let rep = self.ext.rep_scale(&self.coeffs, &m_inv);
        Self::from_rep(&self.ext, rep, self.prec, self.shift + k)
    }

    /// Multiplies the value by p^(-k).
    pub fn div_p_pow(&self, k: u32) -> Self {
        Self::from_rep(&self.ext, self.coeffs.clone(), self.prec, self.shift + k)
    }

    /// Multiplies the value by p^k.
    pub fn mul_p_pow(&self, k: u32) -> Self {
        if k <= self.shift {
            return Self::from_rep(&self.ext, self.coeffs.clone(), self.prec, self.shift - k);
        }
        let d = k - self.shift;
        let rep = self.ext.rep_scale(&self.coeffs, &self.ext.base().p_pow(d));
        let prec = self.prec + self.ext.e() as i64 * d as i64;
        Self::from_rep(&self.ext, rep, prec, 0)
    }

    /// Exact division of the value by pi^k; borrows p-powers into the shift
    /// when the representative is not divisible enough. Costs k units of
    /// representative precision.
    pub fn div_pi_pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        let e = self.ext.e() as i64;
        let mut rep = self.coeffs.clone();
        let mut prec = self.prec;
        let mut shift = self.shift;
        let floor = self.rep_val_floor();
        if floor < k as i64 {
            let need = Integer::div_ceil(&(k as i64 - floor), &e) as u32;
            rep = self.ext.rep_scale(&rep, &self.ext.base().p_pow(need));
            prec += e * need as i64;
            shift += need;
        }
        if prec < k as i64 {
            return Err(Error::PrecisionUnderflow { needed: k as i64, available: prec });
        }
        self.ext.rep_reduce(&mut rep, prec);
        for _ in 0..k {
            rep = self.ext.rep_div_pi(&rep);
            prec -= 1;
            self.ext.rep_reduce(&mut rep, prec);
        }
        Ok(Self::from_rep(&self.ext, rep, prec, shift))
    }

    pub fn div_pi(&self) -> Result<Self> {
        self.div_pi_pow(1)
    }

    /// Multiplicative inverse; fails for values that are zero to precision.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(&self.ext).checked_div(self)
    }

    /// Quotient `self / other`.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_ext(other);
        let v = other
            .rep_valuation()
            .ok_or(Error::BelowPrecisionFloor { prec: other.abs_prec() })?;
        // other = pi^v * u / p^s with u a unit
        let unit = if v == 0 {
            other.coeffs.clone()
        } else {
            let stripped = Self::from_rep(&self.ext, other.coeffs.clone(), other.prec, 0).div_pi_pow(v as u32)?;
            stripped.coeffs
        };
        let unit_prec = other.prec - v;
        let inv = self
            .ext
            .rep_unit_inverse(&unit, unit_prec)
            .ok_or(Error::NotUnit)?;
        let inv = Self::from_rep(&self.ext, inv, unit_prec, 0);
        let q = (self * &inv).mul_p_pow(other.shift);
        q.div_pi_pow(v as u32)
    }

    /// The Frobenius lift: acts on the W-coefficients and fixes pi.
    pub fn frobenius(&self) -> Self {
        let rep = self.ext.rep_frobenius(&self.coeffs);
        Self::from_rep(&self.ext, rep, self.prec, self.shift)
    }

    /// phi^k.
    pub fn frobenius_pow(&self, k: u32) -> Self {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.frobenius();
        }
        x
    }

    /// The Fermat quotient operator delta_pi(x) = (phi(x) - x^p) / pi.
    pub fn delta_pi(&self) -> Result<Self> {
        if self.shift != 0 {
            return Err(Error::ShiftedElement(self.shift));
        }
        if self.prec < 1 {
            return Err(Error::PrecisionUnderflow { needed: 1, available: self.prec });
        }
        let diff = &self.frobenius() - &self.pow(self.ext.p());
        let diff = diff.with_prec(self.prec);
        debug_assert_eq!(diff.shift, 0);
        let out = diff.div_pi()?;
        Ok(out.with_prec(self.prec - 1))
    }

    /// (x, delta_pi x, ..., delta_pi^r x).
    pub fn iterated_delta(&self, r: usize) -> Result<Vec<Self>> {
        if self.prec < r as i64 {
            return Err(Error::PrecisionUnderflow { needed: r as i64, available: self.prec });
        }
        let mut out = Vec::with_capacity(r + 1);
        out.push(self.clone());
        for i in 0..r {
            let next = out[i].delta_pi()?;
            out.push(next);
        }
        Ok(out)
    }

    /// Equality to the smaller of the two absolute precisions.
    pub fn eq_to_precision(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    /// Number of pi-digits to which the two values are known to agree,
    /// measured from pi^0.
    pub fn agreement(&self, other: &Self) -> i64 {
        let d = self - other;
        match d.pi_valuation() {
            Ok(v) => v,
            Err(_) => d.abs_prec(),
        }
    }

    /// True if the value is a unit of R_pi.
    pub fn is_unit(&self) -> bool {
        matches!(self.pi_valuation(), Ok(0))
    }

    /// Integer value when f = 1, e = 1 and the shift is zero (for display/tests).
    pub fn to_integer_mod(&self) -> Option<BigInt> {
        if self.ext.e() == 1 && self.ext.f() == 1 && self.shift == 0 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Balanced integer representative when e = f = 1 and shift = 0: the
    /// residue in `(-p^k/2, p^k/2]`, handy for reading off small integers.
    pub fn to_balanced_integer(&self) -> Option<BigInt> {
        let n = self.to_integer_mod()?;
        let m = self.ext.base().p_pow(self.prec.max(0) as u32);
        let half = &m / 2;
        Some(if n > half { n - m } else { n })
    }
}

impl PartialEq for RamifiedElement {
    /// Equality to tracked precision.
    fn eq(&self, other: &Self) -> bool {
        self.ext.same(&other.ext) && self.eq_to_precision(other)
    }
}

impl fmt::Debug for RamifiedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RamifiedElement {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fdeg = self.ext.f();
        let e = self.ext.e() as i64;
        let mut terms = Vec::new();
        for i in 0..self.ext.e() {
            // balanced residues modulo the p-power known for this slot
            let k = (self.prec - i as i64 + e - 1).div_euclid(e).max(0) as u32;
            let m = self.ext.base().p_pow(k);
            let half = &m / 2;
            let c: Vec<BigInt> = self.coeff(i).iter().map(|x| if x > &half { x - &m } else { x.clone() }).collect();
            if c.iter().all(|x| x.is_zero()) {
                continue;
            }
            let cs = if fdeg == 1 {
                c[0].to_string()
            } else {
                let parts: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| match j {
                        0 => x.to_string(),
                        1 => format!("{x}*g"),
                        _ => format!("{x}*g^{j}"),
                    })
                    .collect();
                format!("({})", parts.join(" + "))
            };
            terms.push(match i {
                0 => cs,
                1 => format!("{cs}*pi"),
                _ => format!("{cs}*pi^{i}"),
            });
        }
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.shift > 0 {
            write!(fm, "({body})/p^{} + O(pi^{})", self.shift, self.abs_prec())
        } else {
            write!(fm, "{body} + O(pi^{})", self.prec)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a RamifiedElement> for &'a RamifiedElement {
            type Output = RamifiedElement;
            fn $method(self, rhs: &'a RamifiedElement) -> RamifiedElement {
                $body(self, rhs)
            }
        }
        impl $trait<RamifiedElement> for RamifiedElement {
            type Output = RamifiedElement;
            fn $method(self, rhs: RamifiedElement) -> RamifiedElement {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RamifiedElement, b: &RamifiedElement| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &RamifiedElement, b: &RamifiedElement| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &RamifiedElement, b: &RamifiedElement| a.mul_impl(b));

impl Neg for &RamifiedElement {
    type Output = RamifiedElement;
    fn neg(self) -> RamifiedElement {
        let rep = self.coeffs.iter().map(|c| -c).collect();
        RamifiedElement::from_rep(&self.ext, rep, self.prec, self.shift)
    }
}

impl Neg for RamifiedElement {
    type Output = RamifiedElement;
    fn neg(self) -> RamifiedElement {
        -&self
    }
}

/// Integer valuation helper exposed for rational bookkeeping.
pub fn rational_valuation(r: &BigRational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(int_valuation(r.numer(), p) as i64 - int_valuation(r.denom(), p) as i64)
}

/// Reduces a p-integral rational into Z/p^k; `None` if p divides the denominator.
pub fn rational_to_zp(r: &BigRational, p: u64, k: u32) -> Option<BigInt> {
    let m = BigInt::from(p).pow(k);
    let den = r.denom().mod_floor(&m);
    let inv = mod_inverse(&den, &m)?;
    Some((r.numer() * inv).mod_floor(&m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

#[allow(dead_code)]
fn small(x: &BigInt) -> i64 {
    x.to_i64().unwrap_or(i64::MAX)
}
