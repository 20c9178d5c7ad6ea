//! Totally ramified extensions R_pi = W[pi]/(E(pi)) cut out by an Eisenstein
//! polynomial E with coefficients in Z.
//!
//! Because E has integer coefficients it is fixed by Frobenius, so setting
//! phi(pi) = pi extends the Frobenius lift of W to R_pi.
//!
//! Raw representatives used throughout the element code are flat vectors of
//! length `e * f`: entry `i * f + j` is the coefficient of `g^j pi^i`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::unramified::{int_valuation, UnramifiedRing};
use crate::error::{Error, Result};

/// How an extension was specified; named towers serialize by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    /// x^e - p
    PowerRoot,
    /// minimal polynomial of zeta_{p^k} - 1
    Cyclotomic { k: u32 },
    /// any other Eisenstein polynomial over Z
    Custom,
}

#[derive(Debug)]
struct ExtensionData {
    base: UnramifiedRing,
    eisenstein: Vec<BigInt>,
    kind: ExtensionKind,
    e: usize,
    max_prec: i64,
    /// pi^e = sum_i reduction[i] pi^i
    reduction: Vec<BigInt>,
    /// p/pi as integer coefficients of pi^0..pi^(e-1), valid mod p^(digits+1)
    p_over_pi: Vec<BigInt>,
}

/// Descriptor of an Eisenstein extension; cheap to clone and shareable across threads.
#[derive(Clone)]
pub struct Extension {
    inner: Arc<ExtensionData>,
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Extension(p={}, f={}, e={}, E={})", self.p(), self.f(), self.e(), self.polynomial_string())
    }
}

impl PartialEq for Extension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.eisenstein == other.inner.eisenstein)
    }
}

impl Eq for Extension {}

impl Extension {
    /// Builds the extension defined by `coeffs` (low degree first, monic).
    pub fn new(base: UnramifiedRing, coeffs: &[BigInt]) -> Result<Self> {
        Self::with_kind(base, coeffs, ExtensionKind::Custom)
    }

    fn with_kind(base: UnramifiedRing, coeffs: &[BigInt], kind: ExtensionKind) -> Result<Self> {
        check_eisenstein(coeffs, base.p())?;
        let e = coeffs.len() - 1;
        let p = base.p();
        let digits = base.digits();
        let reduction: Vec<BigInt> = coeffs[..e].iter().map(|c| -c).collect();

        // p/pi = -(p/a_0) (pi^(e-1) + a_(e-1) pi^(e-2) + ... + a_1)
        let unit = &coeffs[0] / BigInt::from(p);
        let modk = base.p_pow(digits + 1);
        let unit_inv = base
            .inverse_mod(&base.from_int(unit), digits + 1)
            .ok_or_else(|| Error::Internal("Eisenstein constant term is not p times a unit".into()))?
            .swap_remove(0);
        let p_over_pi: Vec<BigInt> = (0..e)
            .map(|j| (-(&unit_inv * &coeffs[j + 1])).mod_floor(&modk))
            .collect();

        Ok(Extension {
            inner: Arc::new(ExtensionData {
                max_prec: e as i64 * digits as i64,
                base,
                eisenstein: coeffs.to_vec(),
                kind,
                e,
                reduction,
                p_over_pi,
            }),
        })
    }

    /// x^e - p.
    pub fn power_root(base: UnramifiedRing, e: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParameter("ramification index must be at least 1".into()));
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[0] = -BigInt::from(base.p());
        coeffs[e] = BigInt::one();
        Self::with_kind(base, &coeffs, ExtensionKind::PowerRoot)
    }

    /// The unramified ring itself, presented as x - p (so pi = p).
    pub fn unramified(base: UnramifiedRing) -> Result<Self> {
        Self::power_root(base, 1)
    }

    /// Phi_{p^k}(x + 1), the minimal polynomial of zeta_{p^k} - 1.
    pub fn cyclotomic(base: UnramifiedRing, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("cyclotomic level must be at least 1".into()));
        }
        let coeffs = shifted_cyclotomic(base.p(), k);
        Self::with_kind(base, &coeffs, ExtensionKind::Cyclotomic { k })
    }

    pub fn base(&self) -> &UnramifiedRing {
        &self.inner.base
    }

    pub fn p(&self) -> u64 {
        self.inner.base.p()
    }

    pub fn f(&self) -> usize {
        self.inner.base.f()
    }

    /// Ramification index.
    pub fn e(&self) -> usize {
        self.inner.e
    }

    pub fn kind(&self) -> &ExtensionKind {
        &self.inner.kind
    }

    /// Eisenstein polynomial coefficients, low degree first.
    pub fn eisenstein(&self) -> &[BigInt] {
        &self.inner.eisenstein
    }

    /// Largest precision (in pi-units) any element of this extension carries.
    pub fn max_prec(&self) -> i64 {
        self.inner.max_prec
    }

    pub fn polynomial_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.inner.eisenstein.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigInt::one() {
                format!("-{mono}")
            } else {
                format!("{c}{mono}")
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    pub(crate) fn same(&self, other: &Extension) -> bool {
        self == other
    }

    // ---- raw representative arithmetic ----

    pub(crate) fn rep_len(&self) -> usize {
        self.e() * self.f()
    }

    pub(crate) fn rep_zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.rep_len()]
    }

    pub(crate) fn rep_coeff<'a>(&self, a: &'a [BigInt], i: usize) -> &'a [BigInt] {
        let f = self.f();
        &a[i * f..(i + 1) * f]
    }

    /// Exact product of representatives.
    pub(crate) fn rep_mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let e = self.e();
        let f = self.f();
        let w = self.base();
        if e == 1 {
            return w.mul(a, b);
        }
        let mut prod: Vec<Vec<BigInt>> = vec![w.zero(); 2 * e - 1];
        for i in 0..e {
            let ai = self.rep_coeff(a, i);
            if w.is_zero(ai) {
                continue;
            }
            for j in 0..e {
                let bj = self.rep_coeff(b, j);
                if w.is_zero(bj) {
                    continue;
                }
                if f == 1 {
                    prod[i + j][0] += &ai[0] * &bj[0];
                } else {
                    let m = w.mul(ai, bj);
                    for (s, t) in prod[i + j].iter_mut().zip(m) {
                        *s += t;
                    }
                }
            }
        }
        for k in (e..2 * e - 1).rev() {
            let c = std::mem::replace(&mut prod[k], w.zero());
            if w.is_zero(&c) {
                continue;
            }
            for (i, r) in self.inner.reduction.iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                for (s, t) in prod[k - e + i].iter_mut().zip(&c) {
                    *s += t * r;
                }
            }
        }
        prod.truncate(e);
        prod.into_iter().flatten().collect()
    }

    /// Canonical reduction modulo pi^prec: coefficient i lives mod p^ceil((prec - i)/e).
    pub(crate) fn rep_reduce(&self, a: &mut [BigInt], prec: i64) {
        let e = self.e() as i64;
        let f = self.f();
        for i in 0..self.e() {
            let k = div_ceil(prec - i as i64, e).max(0) as u32;
            let slot = &mut a[i * f..(i + 1) * f];
            if k == 0 {
                for c in slot.iter_mut() {
                    c.set_zero();
                }
                continue;
            }
            let owned;
            let m = match self.base().p_pow_ref(k) {
                Some(m) => m,
                None => {
                    owned = self.base().p_pow(k);
                    &owned
                }
            };
            for c in slot.iter_mut() {
                if c.is_negative() || &*c >= m {
                    *c = c.mod_floor(m);
                }
            }
        }
    }

    /// pi-adic valuation of a representative, `None` for zero.
    pub(crate) fn rep_valuation(&self, a: &[BigInt]) -> Option<i64> {
        let e = self.e() as i64;
        (0..self.e())
            .filter_map(|i| {
                self.base()
                    .valuation(self.rep_coeff(a, i))
                    .map(|v| e * v as i64 + i as i64)
            })
            .min()
    }

    pub(crate) fn rep_is_divisible_by_p(&self, a: &[BigInt]) -> bool {
        self.base().is_divisible_by_p(a)
    }

    pub(crate) fn rep_div_p(&self, a: &[BigInt]) -> Vec<BigInt> {
        self.base().div_p(a)
    }

    pub(crate) fn rep_scale(&self, a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
        a.iter().map(|c| c * k).collect()
    }

    /// Exact division by pi; requires the pi^0 coefficient to be divisible by p.
    pub(crate) fn rep_div_pi(&self, a: &[BigInt]) -> Vec<BigInt> {
        let e = self.e();
        let f = self.f();
        let w = self.base();
        let c0 = w.div_p(self.rep_coeff(a, 0));
        let mut out = self.rep_zero();
        out[..(e - 1) * f].clone_from_slice(&a[f..e * f]);
        for (j, s) in self.inner.p_over_pi.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (o, c) in out[j * f..(j + 1) * f].iter_mut().zip(&c0) {
                *o += c * s;
            }
        }
        out
    }

    pub(crate) fn rep_frobenius(&self, a: &[BigInt]) -> Vec<BigInt> {
        if self.f() == 1 {
            return a.to_vec();
        }
        (0..self.e())
            .flat_map(|i| self.base().frobenius(self.rep_coeff(a, i)))
            .collect()
    }

    /// Inverse of a unit representative modulo pi^prec (Newton iteration).
    pub(crate) fn rep_unit_inverse(&self, a: &[BigInt], prec: i64) -> Option<Vec<BigInt>> {
        let w = self.base();
        let c0_inv = w.inverse_mod(self.rep_coeff(a, 0), 1)?;
        let mut b = self.rep_zero();
        b[..self.f()].clone_from_slice(&c0_inv);
        let mut two = self.rep_zero();
        two[0] = BigInt::from(2);
        let mut cur = 1i64;
        while cur < prec {
            cur = (2 * cur).min(prec);
            let mut ab = self.rep_mul(a, &b);
            self.rep_reduce(&mut ab, cur);
            let diff: Vec<BigInt> = two.iter().zip(&ab).map(|(x, y)| x - y).collect();
            b = self.rep_mul(&b, &diff);
            self.rep_reduce(&mut b, cur);
        }
        self.rep_reduce(&mut b, prec);
        Some(b)
    }
}

pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

fn check_eisenstein(coeffs: &[BigInt], p: u64) -> Result<()> {
    if coeffs.len() < 2 {
        return Err(Error::NotEisenstein {
            index: 0,
            reason: "polynomial must have degree at least 1".into(),
        });
    }
    let e = coeffs.len() - 1;
    if !coeffs[e].is_one() {
        return Err(Error::NotEisenstein {
            index: e,
            reason: format!("(leading) is {}, expected 1", coeffs[e]),
        });
    }
    let pb = BigInt::from(p);
    for (i, c) in coeffs[..e].iter().enumerate() {
        if !c.is_multiple_of(&pb) {
            return Err(Error::NotEisenstein {
                index: i,
                reason: format!("is {c}, not divisible by p = {p}"),
            });
        }
    }
    if coeffs[0].is_zero() || int_valuation(&coeffs[0], p) != 1 {
        return Err(Error::NotEisenstein {
            index: 0,
            reason: format!("(constant) is {}, must have p-valuation exactly 1", coeffs[0]),
        });
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Coefficients of Phi_{p^k}(x + 1) = sum_{j<p} (x + 1)^(j p^(k-1)).
pub(crate) fn shifted_cyclotomic(p: u64, k: u32) -> Vec<BigInt> {
    let step = p.pow(k - 1);
    let deg = (p - 1) * step;
    let mut out = vec![BigInt::zero(); deg as usize + 1];
    for j in 0..p {
        let n = j * step;
        for i in 0..=n {
            out[i as usize] += binomial(n, i);
        }
    }
    out
}
