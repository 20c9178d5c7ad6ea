//! Sparse truncated power series in jet variables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::ring::{CoeffRing, DeltaRing};
use crate::error::{Error, Result};

/// Ordered variables: for each base name `t`, the jets `t, dt, d2t, ..., d^r t`.
/// Variable `level` of base `b` has index `b * (order + 1) + level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetVars {
    bases: Vec<String>,
    order: usize,
}

impl JetVars {
    pub fn new<S: Into<String>>(bases: impl IntoIterator<Item = S>, order: usize) -> Self {
        let bases: Vec<String> = bases.into_iter().map(Into::into).collect();
        assert!(!bases.is_empty(), "at least one base variable");
        JetVars { bases, order }
    }

    /// A single base variable `t` with jets up to `order`.
    pub fn single(name: &str, order: usize) -> Self {
        Self::new([name], order)
    }

    pub fn bases(&self) -> &[String] {
        &self.bases
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.bases.len() * (self.order + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, base: usize, level: usize) -> usize {
        assert!(base < self.bases.len() && level <= self.order);
        base * (self.order + 1) + level
    }

    /// (base, level) of a variable index.
    pub fn split(&self, idx: usize) -> (usize, usize) {
        (idx / (self.order + 1), idx % (self.order + 1))
    }

    pub fn name(&self, idx: usize) -> String {
        let (b, l) = self.split(idx);
        match l {
            0 => self.bases[b].clone(),
            1 => format!("d{}", self.bases[b]),
            _ => format!("d{l}{}", self.bases[b]),
        }
    }

    pub fn with_order(&self, order: usize) -> Self {
        JetVars { bases: self.bases.clone(), order }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.name(i)).collect()
    }
}

pub type Monomial = Vec<u32>;

fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// A power series truncated at total degree `trunc`, stored sparsely.
///
/// In strict mode any operation that produces a nonzero term above the
/// truncation degree fails with [`Error::TruncationOverflow`]; otherwise such
/// terms are dropped.
#[derive(Clone, Debug)]
pub struct JetSeries<R: CoeffRing> {
    ring: R,
    vars: JetVars,
    trunc: u32,
    strict: bool,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: CoeffRing> JetSeries<R> {
    pub fn zero(ring: &R, vars: &JetVars, trunc: u32) -> Self {
        JetSeries { ring: ring.clone(), vars: vars.clone(), trunc, strict: false, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, vars: &JetVars, trunc: u32, c: R::Elem) -> Self {
        let mut s = Self::zero(ring, vars, trunc);
        s.insert_unchecked(vec![0; vars.len()], c);
        s
    }

    pub fn one(ring: &R, vars: &JetVars, trunc: u32) -> Self {
        Self::constant(ring, vars, trunc, ring.one())
    }

    /// The variable with index `idx`.
    pub fn var(ring: &R, vars: &JetVars, trunc: u32, idx: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[idx] = 1;
        let mut s = Self::zero(ring, vars, trunc);
        if trunc >= 1 {
            s.insert_unchecked(m, ring.one());
        }
        s
    }

    /// Single-variable series `sum coeffs[n] x^n` in the variable `idx`.
    pub fn univariate(ring: &R, vars: &JetVars, trunc: u32, idx: usize, coeffs: &[R::Elem]) -> Self {
        let mut s = Self::zero(ring, vars, trunc);
        for (n, c) in coeffs.iter().enumerate().take(trunc as usize + 1) {
            let mut m = vec![0; vars.len()];
            m[idx] = n as u32;
            s.insert_unchecked(m, c.clone());
        }
        s
    }

    pub fn from_terms(
        ring: &R,
        vars: &JetVars,
        trunc: u32,
        terms: impl IntoIterator<Item = (Monomial, R::Elem)>,
    ) -> Result<Self> {
        let mut s = Self::zero(ring, vars, trunc);
        for (m, c) in terms {
            if m.len() != vars.len() {
                return Err(Error::IncompatibleSeries(format!(
                    "monomial of length {} for {} variables",
                    m.len(),
                    vars.len()
                )));
            }
            s.accumulate(m, c)?;
        }
        Ok(s)
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &JetVars {
        &self.vars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Highest total degree present.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| degree(m)).max()
    }

    /// Minimal p-power denominator exponent: the smallest nu with p^nu * self integral.
    pub fn shift(&self) -> u32 {
        self.terms.values().map(|c| self.ring.denominator_exponent(c)).max().unwrap_or(0)
    }

    fn insert_unchecked(&mut self, m: Monomial, c: R::Elem) {
        if !self.ring.is_zero(&c) {
            self.terms.insert(m, c);
        } else {
            self.terms.remove(&m);
        }
    }

    /// Adds `c * m`, honouring truncation and strictness.
    fn accumulate(&mut self, m: Monomial, c: R::Elem) -> Result<()> {
        let d = degree(&m);
        if d > self.trunc {
            if self.strict && !self.ring.is_zero(&c) {
                return Err(Error::TruncationOverflow { degree: d, trunc: self.trunc });
            }
            return Ok(());
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                if !self.ring.is_zero(&c) {
                    self.terms.insert(m, c);
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::IncompatibleSeries(format!(
                "variables {:?} vs {:?}",
                self.vars.names(),
                other.vars.names()
            )));
        }
        if !self.ring.same(&other.ring) {
            return Err(Error::IncompatibleSeries("different coefficient rings".into()));
        }
        Ok(())
    }

    fn empty_like(&self, other: Option<&Self>) -> Self {
        let trunc = other.map_or(self.trunc, |o| self.trunc.min(o.trunc));
        let strict = other.map_or(self.strict, |o| self.strict || o.strict);
        JetSeries { ring: self.ring.clone(), vars: self.vars.clone(), trunc, strict, terms: BTreeMap::new() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.empty_like(Some(other));
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.accumulate(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.empty_like(None);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        let mut out = self.empty_like(None);
        for (m, c) in &self.terms {
            out.insert_unchecked(m.clone(), self.ring.mul(c, k));
        }
        out
    }

    /// Maps every coefficient through `f` (which must be additive to make sense).
    pub fn map_coeffs(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let mut out = self.empty_like(None);
        for (m, c) in &self.terms {
            out.insert_unchecked(m.clone(), f(c));
        }
        out
    }

    /// Moves the series into another coefficient ring.
    pub fn map_ring<S: CoeffRing>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> JetSeries<S> {
        let mut out = JetSeries::zero(ring, &self.vars, self.trunc).strict(self.strict);
        for (m, c) in &self.terms {
            out.insert_unchecked(m.clone(), f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.empty_like(Some(other));
        let trunc = out.trunc;
        for (ma, ca) in &self.terms {
            let da = degree(ma);
            for (mb, cb) in &other.terms {
                if da + degree(mb) > trunc && !out.strict {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.accumulate(m, self.ring.mul(ca, cb))?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut acc = Self::one(&self.ring, &self.vars, self.trunc).strict(self.strict);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let c0_inv = self.ring.inv(&c0).ok_or(Error::NotUnit)?;
        // self = c0 (1 + u) with u(0) = 0
        let normalized = self.scale(&c0_inv);
        let one = Self::one(&self.ring, &self.vars, self.trunc);
        let u = normalized.sub(&one)?;
        let neg_u = u.neg();
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.trunc {
            power = power.mul(&neg_u)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&c0_inv).strict(self.strict))
    }

    /// Sets the listed variables to zero.
    pub fn set_zero(&self, idxs: &[usize]) -> Self {
        let mut out = self.empty_like(None);
        for (m, c) in &self.terms {
            if idxs.iter().all(|&i| m[i] == 0) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Re-expresses the series over a variable list with a higher jet order.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        if order < self.vars.order() {
            return Err(Error::IncompatibleSeries("cannot lower the jet order".into()));
        }
        let vars = self.vars.with_order(order);
        let mut out = JetSeries::zero(&self.ring, &vars, self.trunc).strict(self.strict);
        for (m, c) in &self.terms {
            let mut nm = vec![0; vars.len()];
            for (i, &a) in m.iter().enumerate() {
                let (b, l) = self.vars.split(i);
                nm[vars.index(b, l)] = a;
            }
            out.terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    /// Same series with a different truncation degree (dropping terms above it).
    pub fn truncated(&self, trunc: u32) -> Self {
        let mut out = self.empty_like(None);
        out.trunc = trunc;
        for (m, c) in &self.terms {
            if degree(m) <= trunc {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`. All images share a target
    /// variable list and must have zero constant term.
    pub fn substitute(&self, images: &[JetSeries<R>]) -> Result<JetSeries<R>> {
        if images.len() != self.vars.len() {
            return Err(Error::IncompatibleSeries(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = &images[0];
        for im in images {
            target.check_compatible(im)?;
            if !self.ring.is_zero(&im.constant_term()) {
                return Err(Error::IncompatibleSeries("substituted series has a constant term".into()));
            }
        }
        let trunc = images.iter().map(|s| s.trunc).min().unwrap().min(self.trunc);
        let strict = self.strict || images.iter().any(|s| s.strict);
        let tvars = target.vars.clone();
        let one = JetSeries::one(&self.ring, &tvars, trunc).strict(strict);
        // powers[i][k] = images[i]^k, built lazily
        let mut powers: Vec<Vec<JetSeries<R>>> = vec![vec![one.clone()]; images.len()];
        let mut out = JetSeries::zero(&self.ring, &tvars, trunc).strict(strict);
        for (m, c) in &self.terms {
            // every image has order >= 1, so a monomial of degree > trunc only
            // contributes above the truncation
            if degree(m) > trunc {
                if strict {
                    return Err(Error::TruncationOverflow { degree: degree(m), trunc });
                }
                continue;
            }
            let mut term = JetSeries::constant(&self.ring, &tvars, trunc, c.clone()).strict(strict);
            for (i, &a) in m.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().unwrap().mul(&images[i].clone().strict(strict))?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][a as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.accumulate(tm, tc)?;
            }
        }
        Ok(out)
    }

    /// Evaluates at a point (all terms, no tail estimate).
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.vars.len() {
            return Err(Error::IncompatibleSeries(format!(
                "{} coordinates for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut powers: Vec<Vec<R::Elem>> = vec![vec![self.ring.one()]; point.len()];
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &a) in m.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = self.ring.mul(powers[i].last().unwrap(), &point[i]);
                    powers[i].push(next);
                }
                term = self.ring.mul(&term, &powers[i][a as usize]);
            }
            acc = self.ring.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = self.empty_like(None);
        for (m, c) in &self.terms {
            if m[idx] == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm[idx] -= 1;
            let k = self.ring.from_i64(m[idx] as i64);
            out.insert_unchecked(nm, self.ring.mul(c, &k));
        }
        out
    }

    /// Coefficients of a series in the single variable `idx`, degrees 0..=trunc.
    pub fn univariate_coeffs(&self, idx: usize) -> Result<Vec<R::Elem>> {
        let mut out = vec![self.ring.zero(); self.trunc as usize + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &a)| i != idx && a != 0) {
                return Err(Error::IncompatibleSeries("series is not univariate".into()));
            }
            out[m[idx] as usize] = c.clone();
        }
        Ok(out)
    }

    /// Compositional inverse of a univariate series `a_1 x + a_2 x^2 + ...`
    /// with `a_1` a unit.
    pub fn reversion(&self, idx: usize) -> Result<Self> {
        let c = self.univariate_coeffs(idx)?;
        if !self.ring.is_zero(&c[0]) {
            return Err(Error::IncompatibleSeries("series has a constant term".into()));
        }
        if c.len() < 2 {
            return Ok(self.clone());
        }
        let a1_inv = self.ring.inv(&c[1]).ok_or(Error::NotUnit)?;
        let x = Self::var(&self.ring, &self.vars, self.trunc, idx);
        // g <- g - a1^{-1} (f(g) - x), gaining one degree per step
        let mut g = x.scale(&a1_inv);
        for _ in 1..self.trunc {
            let mut images = vec![JetSeries::zero(&self.ring, &self.vars, self.trunc); self.vars.len()];
            images[idx] = g.clone();
            let fg = self.substitute(&images)?;
            let err = fg.sub(&x)?;
            if err.is_zero() {
                break;
            }
            g = g.sub(&err.scale(&a1_inv))?;
        }
        Ok(g)
    }

    /// True if the two series agree to the smaller truncation.
    pub fn eq_series(&self, other: &Self) -> bool {
        let t = self.trunc.min(other.trunc);
        match self.truncated(t).sub(&other.truncated(t)) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl<R: DeltaRing> JetSeries<R> {
    /// Applies the Frobenius lift: coefficients go through `frobenius` and each
    /// jet variable `x_l` becomes `x_l^p + pi x_{l+1}`. The result lives over
    /// variables of jet order one higher. Variables listed in `kill` (indices in
    /// the output variable list) are set to zero as terms are produced.
    pub fn phi_killing(&self, kill: &[usize]) -> Result<Self> {
        let p = self.ring.p();
        let vars = self.vars.with_order(self.vars.order() + 1);
        let mut out = JetSeries::zero(&self.ring, &vars, self.trunc).strict(self.strict);
        let pi = self.ring.uniformizer();
        let mut pi_pows = vec![self.ring.one()];
        let mut killed = vec![false; vars.len()];
        for &k in kill {
            killed[k] = true;
        }
        // output index of the level-l and level-(l+1) jets of variable i
        let slots: Vec<(usize, usize)> = (0..self.vars.len())
            .map(|i| {
                let (b, l) = self.vars.split(i);
                (vars.index(b, l), vars.index(b, l + 1))
            })
            .collect();
        for (m, c) in &self.terms {
            let fc = self.ring.frobenius(c);
            let active: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
            let mut exps = vec![0u32; vars.len()];
            self.phi_expand(
                &active, 0, m, &slots, &killed, p as u32, &mut exps, 0, BigInt::one(), 0, &fc, &pi,
                &mut pi_pows, &mut out,
            )?;
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn phi_expand(
        &self,
        active: &[usize],
        pos: usize,
        m: &[u32],
        slots: &[(usize, usize)],
        killed: &[bool],
        p: u32,
        exps: &mut Vec<u32>,
        deg: u32,
        binom: BigInt,
        pi_power: u32,
        coeff: &R::Elem,
        pi: &R::Elem,
        pi_pows: &mut Vec<R::Elem>,
        out: &mut Self,
    ) -> Result<()> {
        if pos == active.len() {
            while pi_pows.len() <= pi_power as usize {
                let next = self.ring.mul(pi_pows.last().unwrap(), pi);
                pi_pows.push(next);
            }
            let k = self.ring.from_int(&binom);
            let c = self.ring.mul(&self.ring.mul(coeff, &k), &pi_pows[pi_power as usize]);
            return out.accumulate(exps.clone(), c);
        }
        let i = active[pos];
        let a = m[i];
        let (lo, hi) = slots[i];
        let mut b = BigInt::one();
        // k copies of x^p and (a - k) copies of pi * x'
        for k in 0..=a {
            if k > 0 {
                b = b * BigInt::from(a - k + 1) / BigInt::from(k);
            }
            let up = p * k;
            let down = a - k;
            if (up > 0 && killed[lo]) || (down > 0 && killed[hi]) {
                continue;
            }
            let nd = deg + up + down;
            if nd > out.trunc {
                if out.strict {
                    return Err(Error::TruncationOverflow { degree: nd, trunc: out.trunc });
                }
                // degree grows with k
                break;
            }
            exps[lo] += up;
            exps[hi] += down;
            let r = self.phi_expand(
                active,
                pos + 1,
                m,
                slots,
                killed,
                p,
                exps,
                nd,
                &binom * &b,
                pi_power + down,
                coeff,
                pi,
                pi_pows,
                out,
            );
            exps[lo] -= up;
            exps[hi] -= down;
            r?;
        }
        Ok(())
    }

    pub fn phi(&self) -> Result<Self> {
        self.phi_killing(&[])
    }

    /// phi^k, raising the jet order by k.
    pub fn phi_pow(&self, k: usize) -> Result<Self> {
        let mut s = self.clone();
        for _ in 0..k {
            s = s.phi()?;
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ring::{Integers, Rationals};
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn one_plus_t_times_one_minus_t() {
        let z = Integers::new(5);
        let v = JetVars::single("t", 0);
        let t = JetSeries::var(&z, &v, 6, 0);
        let one = JetSeries::one(&z, &v, 6);
        let prod = one.add(&t).unwrap().mul(&one.sub(&t).unwrap()).unwrap();
        let expect = one.sub(&t.mul(&t).unwrap()).unwrap();
        assert!(prod.eq_series(&expect));
    }

    #[test]
    fn log_and_exp_are_inverse() {
        let r = Rationals::new(5);
        let v = JetVars::single("T", 0);
        let d = 12;
        let log: Vec<BigRational> = (0..=d as i64)
            .map(|n| if n == 0 { q(0, 1) } else { q(if n % 2 == 1 { 1 } else { -1 }, n) })
            .collect();
        let mut fact = BigInt::one();
        let mut expm1 = vec![q(0, 1)];
        for n in 1..=d as i64 {
            fact *= n;
            expm1.push(BigRational::new(BigInt::one(), fact.clone()));
        }
        let l = JetSeries::univariate(&r, &v, d, 0, &log);
        let e = JetSeries::univariate(&r, &v, d, 0, &expm1);
        let composed = l.substitute(&[e.clone()]).unwrap();
        assert!(composed.eq_series(&JetSeries::var(&r, &v, d, 0)));
        let rev = l.reversion(0).unwrap();
        assert!(rev.eq_series(&e));
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let z = Integers::new(5);
        let v = JetVars::single("t", 0);
        let one = JetSeries::one(&z, &v, 8);
        let t = JetSeries::var(&z, &v, 8, 0);
        let inv = one.sub(&t).unwrap().inverse().unwrap();
        for n in 0..=8u32 {
            assert_eq!(inv.coeff(&[n]), BigInt::one());
        }
    }

    #[test]
    fn phi_of_t_is_prolongation() {
        let z = Integers::new(5);
        let v = JetVars::single("t", 0);
        let t = JetSeries::var(&z, &v, 10, 0);
        let ft = t.phi().unwrap();
        assert_eq!(ft.vars().order(), 1);
        assert_eq!(ft.coeff(&[5, 0]), BigInt::one());
        assert_eq!(ft.coeff(&[0, 1]), BigInt::from(5));
        assert_eq!(ft.len(), 2);
        let sq = t.mul(&t).unwrap().phi().unwrap();
        assert!(sq.eq_series(&ft.mul(&ft).unwrap()));
    }

    #[test]
    fn strict_mode_reports_overflow() {
        let z = Integers::new(5);
        let v = JetVars::single("t", 0);
        let t = JetSeries::var(&z, &v, 4, 0).strict(true);
        let err = t.phi().unwrap_err();
        assert_eq!(err, Error::TruncationOverflow { degree: 5, trunc: 4 });
        let lax = JetSeries::var(&z, &v, 4, 0);
        assert_eq!(lax.phi().unwrap().len(), 1);
    }

    #[test]
    fn killing_matches_set_zero() {
        let z = Integers::new(5);
        let v = JetVars::single("t", 1);
        let s = JetSeries::var(&z, &v, 12, 0)
            .add(&JetSeries::var(&z, &v, 12, 1))
            .unwrap()
            .pow(2)
            .unwrap();
        let full = s.phi().unwrap().set_zero(&[0]);
        let killed = s.phi_killing(&[0]).unwrap();
        assert!(full.eq_series(&killed));
    }
}
