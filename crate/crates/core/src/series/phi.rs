//! Integer combinations of Frobenius powers and their actions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::jet::{JetSeries, JetVars};
use super::ring::DeltaRing;
use crate::error::{Error, Result};
use crate::ring::{rational_to_zp, RamifiedElement};

/// w = sum c_i phi^i.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiWord {
    terms: BTreeMap<u32, BigInt>,
}

impl PhiWord {
    pub fn zero() -> Self {
        PhiWord::default()
    }

    /// The identity word phi^0.
    pub fn identity() -> Self {
        Self::phi_pow(0)
    }

    pub fn phi_pow(i: u32) -> Self {
        Self::from_terms([(i, BigInt::one())])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_terms([(0, c.into())])
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut w = PhiWord::zero();
        for (i, c) in terms {
            w.add_term(i, c.into());
        }
        w
    }

    fn add_term(&mut self, i: u32, c: BigInt) {
        let slot = self.terms.entry(i).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn coeff(&self, i: u32) -> BigInt {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    /// Highest phi-power with a nonzero coefficient.
    pub fn order(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// w(p) = sum c_i p^i.
    pub fn eval_at_p(&self, p: u64) -> BigInt {
        self.terms.iter().map(|(i, c)| c * BigInt::from(p).pow(*i)).sum()
    }

    /// deg(w) = sum c_i.
    pub fn degree(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for (i, c) in &other.terms {
            w.add_term(*i, c.clone());
        }
        w
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, c)| (*i, c * k)))
    }

    /// Composition product: phi^i phi^j = phi^(i+j).
    pub fn mul(&self, other: &Self) -> Self {
        let mut w = PhiWord::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                w.add_term(i + j, a * b);
            }
        }
        w
    }

    /// Additive action on an element: sum c_i phi^i(x).
    pub fn apply_element(&self, x: &RamifiedElement) -> RamifiedElement {
        let mut acc = RamifiedElement::zero(x.ext());
        let mut fx = x.clone();
        let mut level = 0;
        for (i, c) in &self.terms {
            while level < *i {
                fx = fx.frobenius();
                level += 1;
            }
            acc = &acc + &fx.mul_int(c.clone());
        }
        acc
    }

    /// Additive action on a series; the jet order grows by `self.order()`.
    pub fn apply_series<R: DeltaRing>(&self, s: &JetSeries<R>) -> Result<JetSeries<R>> {
        let top = s.vars().order() + self.order() as usize;
        let mut acc = JetSeries::zero(s.ring(), &s.vars().with_order(top), s.trunc()).strict(s.is_strict());
        let mut fs = s.clone();
        let mut level = 0;
        for (i, c) in &self.terms {
            while level < *i {
                fs = fs.phi()?;
                level += 1;
            }
            let k = s.ring().from_int(c);
            acc = acc.add(&fs.scale(&k).with_order(top)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for PhiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms.iter().rev() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let base = match i {
                0 => String::new(),
                1 => "phi".to_string(),
                _ => format!("phi^{i}"),
            };
            match (mag.is_one(), base.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{base}")?,
                (false, false) => write!(f, "{mag}*{base}")?,
            }
        }
        Ok(())
    }
}

/// sum_{j=0}^{r-1} p^j phi^(r-1-j).
pub fn lambda_sum(r: u32, p: u64) -> Result<PhiWord> {
    if r < 1 {
        return Err(Error::InvalidParameter("lambda_sum needs r >= 1".into()));
    }
    Ok(PhiWord::from_terms((0..r).map(|j| (r - 1 - j, BigInt::from(p).pow(j)))))
}

/// The prolongation polynomial P_{pi,i} in x_0, ..., x_i: the unique
/// polynomial with phi^i(x) = x^(p^i) + pi * P_{pi,i}(x, delta x, ..., delta^i x).
pub fn prolongation_polynomial<R: DeltaRing>(ring: &R, i: usize) -> Result<JetSeries<R>> {
    if i == 0 {
        return Err(Error::InvalidParameter("prolongation index must be at least 1".into()));
    }
    let p = ring.p();
    let trunc = p.pow(i as u32) as u32;
    let vars = JetVars::single("x", 0);
    let x = JetSeries::var(ring, &vars, trunc, 0).strict(true);
    let phi_i = x.phi_pow(i)?;
    let mut xp = vec![0u32; i + 1];
    xp[0] = trunc;
    let mut out = JetSeries::zero(ring, phi_i.vars(), trunc).strict(true);
    let mut terms = Vec::new();
    for (m, c) in phi_i.terms() {
        if *m == xp {
            let rest = ring.sub(c, &ring.one());
            if ring.is_zero(&rest) {
                continue;
            }
            terms.push((m.clone(), rest));
        } else {
            terms.push((m.clone(), c.clone()));
        }
    }
    for (m, c) in terms {
        let q = ring
            .div_uniformizer(&c)
            .ok_or_else(|| Error::Internal("prolongation coefficient not divisible by pi".into()))?;
        out = out.add(&JetSeries::from_terms(ring, phi_i.vars(), trunc, [(m, q)])?)?;
    }
    Ok(out)
}

/// Binomial coefficient (gamma choose s) for rational gamma.
pub fn rational_binomial(gamma: &BigRational, s: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..s {
        acc = acc * (gamma - BigRational::from_integer(BigInt::from(j))) / BigRational::from_integer(BigInt::from(j + 1));
    }
    acc
}

/// a^(w/m) for a unit a, gcd(m, p) = 1 and m | w(p), computed as
/// a^(w(p)/m) * prod_i (phi^i(a) / a^(p^i))^(c_i/m) with binomial series.
pub fn twisted_power(a: &RamifiedElement, w: &PhiWord, m: i64) -> Result<RamifiedElement> {
    let ext = a.ext();
    let p = ext.p();
    if m == 0 || m.rem_euclid(p as i64) == 0 {
        return Err(Error::DenominatorDivisibleByP(m));
    }
    let wp = w.eval_at_p(p);
    if !(&wp % BigInt::from(m)).is_zero() {
        return Err(Error::IndivisibleWord { m, wp: wp.to_string() });
    }
    if !a.is_unit() || a.shift() != 0 {
        return Err(Error::NotUnit);
    }
    let target = a.abs_prec();
    let mut result = a.pow_signed(&(wp / BigInt::from(m)))?;
    let digits = ext.base().digits() + 1;
    for (i, c) in w.terms() {
        if i == 0 {
            continue;
        }
        let gamma = BigRational::new(c.clone(), BigInt::from(m));
        let pi_exp = BigInt::from(p).pow(i);
        let api = a.pow_big(pi_exp.magnitude());
        // y = (phi^i(a) - a^(p^i)) / a^(p^i) = pi * P_i / a^(p^i)
        let y = (&a.frobenius_pow(i) - &api).checked_div(&api)?;
        let k = y.pi_valuation().unwrap_or(target).max(1);
        let terms = (target + k - 1) / k;
        let mut factor = RamifiedElement::one(ext);
        let mut ys = RamifiedElement::one(ext);
        for s in 1..=terms.max(0) as u64 {
            ys = &ys * &y;
            let b = rational_binomial(&gamma, s);
            let bz = rational_to_zp(&b, p, digits)
                .ok_or_else(|| Error::Internal("binomial coefficient not p-integral".into()))?;
            factor = &factor + &ys.mul_int(bz);
        }
        result = &result * &factor.with_abs_prec(target);
    }
    Ok(result.with_abs_prec(target))
}

/// Raises a unit to the word w multiplicatively: prod_i phi^i(a)^(c_i).
pub fn word_power(a: &RamifiedElement, w: &PhiWord) -> Result<RamifiedElement> {
    let mut acc = RamifiedElement::one(a.ext());
    for (i, c) in w.terms() {
        acc = &acc * &a.frobenius_pow(i).pow_signed(c)?;
    }
    Ok(acc)
}
