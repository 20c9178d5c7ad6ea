//! One-parameter formal group laws, their logarithms and [m]-series.

mod curve;
mod lr;

pub use curve::{count_points, discriminant_residue, unit_root, EllipticCurveData};
pub use lr::{jet_coeff, l_r_series, lrp_check, LrpCertificate};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{int_valuation, RamifiedElement};
use crate::series::{CoeffRing, Integers, JetSeries, JetVars, Rationals};

/// Default number of logarithm coefficients kept with a group law.
pub const LOG_DEGREE: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSource {
    Multiplicative,
    Weierstrass {
        #[serde(serialize_with = "crate::report::ser_display")]
        a4: BigInt,
        #[serde(serialize_with = "crate::report::ser_display")]
        a6: BigInt,
    },
}

/// F(T1, T2) over Z to total degree `trunc`, with its logarithm
/// l(T) = sum A_n T^n stored as numerators b_n = n A_n.
#[derive(Clone, Debug)]
pub struct FormalGroupLaw {
    source: GroupSource,
    p: u64,
    law: JetSeries<Integers>,
    /// b_n for n = 1..=len, at index n - 1.
    log_numerators: Vec<BigRational>,
    /// The law is a polynomial (nothing was truncated).
    exact: bool,
}

fn law_vars() -> JetVars {
    JetVars::new(["T1", "T2"], 0)
}

fn uni_vars() -> JetVars {
    JetVars::single("T", 0)
}

impl FormalGroupLaw {
    /// F = T1 + T2 + T1 T2, l(T) = log(1 + T).
    pub fn multiplicative(p: u64, trunc: u32) -> Self {
        let z = Integers::new(p);
        let v = law_vars();
        let t1 = JetSeries::var(&z, &v, trunc, 0);
        let t2 = JetSeries::var(&z, &v, trunc, 1);
        let law = t1.add(&t2).unwrap().add(&t1.mul(&t2).unwrap()).unwrap();
        let log_numerators = (1..=LOG_DEGREE.max(trunc as usize))
            .map(|n| BigRational::from_integer(BigInt::from(if n % 2 == 1 { 1 } else { -1 })))
            .collect();
        FormalGroupLaw { source: GroupSource::Multiplicative, p, law, log_numerators, exact: trunc >= 2 }
    }

    /// The formal group of y^2 = x^3 + a4 x + a6 in the parameter z = -x/y.
    pub fn weierstrass(a4: &BigInt, a6: &BigInt, p: u64, trunc: u32) -> Result<Self> {
        if trunc < 2 {
            return Err(Error::InvalidParameter("group law degree must be at least 2".into()));
        }
        if curve::discriminant_residue(a4, a6, p) == 0 {
            return Err(Error::SingularCurve { a4: a4.to_string(), a6: a6.to_string(), p });
        }
        let w = w_series(a4, a6, p, trunc + 2);
        let law = weierstrass_law(a4, a6, p, trunc, &w)?;
        let log_numerators = weierstrass_log_numerators(a4, a6, p, LOG_DEGREE.max(trunc as usize));
        Ok(FormalGroupLaw {
            source: GroupSource::Weierstrass { a4: a4.clone(), a6: a6.clone() },
            p,
            law,
            log_numerators,
            exact: false,
        })
    }

    pub fn source(&self) -> &GroupSource {
        &self.source
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn trunc(&self) -> u32 {
        self.law.trunc()
    }

    pub fn law(&self) -> &JetSeries<Integers> {
        &self.law
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// b_n = n A_n for n = 1..=n_max (recomputed past the stored range).
    pub fn log_numerators(&self, n_max: usize) -> Vec<BigRational> {
        if n_max <= self.log_numerators.len() {
            return self.log_numerators[..n_max].to_vec();
        }
        match &self.source {
            GroupSource::Multiplicative => (1..=n_max)
                .map(|n| BigRational::from_integer(BigInt::from(if n % 2 == 1 { 1 } else { -1 })))
                .collect(),
            GroupSource::Weierstrass { a4, a6 } => weierstrass_log_numerators(a4, a6, self.p, n_max),
        }
    }

    /// A_n = b_n / n for n = 1..=n_max.
    pub fn log_coeffs(&self, n_max: usize) -> Vec<BigRational> {
        self.log_numerators(n_max)
            .into_iter()
            .enumerate()
            .map(|(i, b)| b / BigInt::from(i + 1))
            .collect()
    }

    /// l(T) as a univariate rational series to degree `trunc`.
    pub fn log_series(&self, trunc: u32) -> JetSeries<Rationals> {
        let q = Rationals::new(self.p);
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(self.log_coeffs(trunc as usize));
        JetSeries::univariate(&q, &uni_vars(), trunc, 0, &coeffs)
    }

    /// Checks that every b_n = n A_n with n <= n_max is p-integral.
    pub fn hazewinkel_check(&self, n_max: usize) -> Result<()> {
        for (i, b) in self.log_numerators(n_max).iter().enumerate() {
            if int_valuation(b.denom(), self.p) > 0 {
                return Err(Error::CorruptedGroupLaw { n: i + 1 });
            }
        }
        Ok(())
    }

    /// F(a, b) for univariate series a, b with zero constant term.
    pub fn combine_series(&self, a: &JetSeries<Integers>, b: &JetSeries<Integers>) -> Result<JetSeries<Integers>> {
        let law = self.law.truncated(a.trunc().min(b.trunc()));
        law.substitute(&[a.clone(), b.clone()])
    }

    /// The [m]-series by a binary addition chain.
    pub fn mult_series(&self, m: i64) -> Result<JetSeries<Integers>> {
        let z = Integers::new(self.p);
        let v = uni_vars();
        let t = JetSeries::var(&z, &v, self.trunc(), 0);
        let base = if m < 0 { self.inverse_series()? } else { t };
        let mut acc = JetSeries::zero(&z, &v, self.trunc());
        let bits = 64 - m.unsigned_abs().leading_zeros();
        for i in (0..bits).rev() {
            acc = self.combine_series(&acc, &acc)?;
            if (m.unsigned_abs() >> i) & 1 == 1 {
                acc = self.combine_series(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    /// The series i(T) with F(T, i(T)) = 0.
    pub fn inverse_series(&self) -> Result<JetSeries<Integers>> {
        let z = Integers::new(self.p);
        let v = uni_vars();
        let t = JetSeries::var(&z, &v, self.trunc(), 0);
        // i <- i - F(T, i); F(T, i) = T + i + (mixed terms), so each step fixes one degree
        let mut i = t.neg();
        for _ in 0..self.trunc() {
            let r = self.combine_series(&t, &i)?;
            if r.is_zero() {
                return Ok(i);
            }
            i = i.sub(&r)?;
        }
        Ok(i)
    }

    /// The logarithm obtained from the law itself: l' = 1 / (dF/dT2)(T, 0).
    pub fn log_from_law(&self) -> Result<Vec<BigRational>> {
        let q = Rationals::new(self.p);
        let trunc = self.trunc();
        let d2 = self.law.derivative(1).set_zero(&[1]);
        let mut coeffs = vec![BigRational::zero(); trunc as usize];
        for (m, c) in d2.terms() {
            if (m[0] as usize) < coeffs.len() {
                coeffs[m[0] as usize] = BigRational::from_integer(c.clone());
            }
        }
        let dl = JetSeries::univariate(&q, &uni_vars(), trunc - 1, 0, &coeffs).inverse()?;
        let dl = dl.univariate_coeffs(0)?;
        Ok((1..=trunc as usize).map(|n| dl[n - 1].clone() / BigInt::from(n)).collect())
    }

    fn check_ball(&self, t: &RamifiedElement) -> Result<()> {
        match t.certify_shift(0) {
            Some(true) => {}
            _ => return Err(Error::NotInMaximalIdeal),
        }
        if t.shift() != 0 {
            return Err(Error::NotInMaximalIdeal);
        }
        match t.pi_valuation() {
            Ok(v) if v >= 1 => Ok(()),
            Ok(_) => Err(Error::NotInMaximalIdeal),
            Err(_) if t.abs_prec() >= 1 => Ok(()),
            Err(_) => Err(Error::NotInMaximalIdeal),
        }
    }

    fn pi_order(t: &RamifiedElement) -> i64 {
        t.pi_valuation().unwrap_or_else(|_| t.abs_prec())
    }

    /// F(t1, t2) at points of the maximal ideal. When the law was truncated,
    /// the result precision is capped at (trunc + 1) * min(v_pi(t1), v_pi(t2)).
    pub fn combine(&self, t1: &RamifiedElement, t2: &RamifiedElement) -> Result<RamifiedElement> {
        self.check_ball(t1)?;
        self.check_ball(t2)?;
        let ext = t1.ext();
        let k = Self::pi_order(t1).min(Self::pi_order(t2));
        let mut p1 = vec![RamifiedElement::one(ext)];
        let mut p2 = vec![RamifiedElement::one(ext)];
        let mut acc = RamifiedElement::zero(ext);
        for (m, c) in self.law.terms() {
            let (i, j) = (m[0] as usize, m[1] as usize);
            while p1.len() <= i {
                let next = p1.last().unwrap() * t1;
                p1.push(next);
            }
            while p2.len() <= j {
                let next = p2.last().unwrap() * t2;
                p2.push(next);
            }
            acc = &acc + &(&p1[i] * &p2[j]).mul_int(c.clone());
        }
        if self.exact {
            Ok(acc)
        } else {
            Ok(acc.with_abs_prec((self.trunc() as i64 + 1) * k))
        }
    }

    /// [m](t) at a point, by doubling and adding.
    pub fn mult(&self, m: i64, t: &RamifiedElement) -> Result<RamifiedElement> {
        self.check_ball(t)?;
        let base = if m < 0 {
            let inv = self.inverse_series()?;
            let ring = crate::series::RamifiedRing::new(t.ext());
            let inv_r = inv.map_ring(&ring, |c| ring.from_int(c));
            let k = Self::pi_order(t);
            let v = inv_r.evaluate(&[t.clone()])?;
            if self.exact {
                v
            } else {
                v.with_abs_prec((self.trunc() as i64 + 1) * k)
            }
        } else {
            t.clone()
        };
        let mut acc = RamifiedElement::zero(t.ext()).with_abs_prec(t.ext().max_prec());
        let bits = 64 - m.unsigned_abs().leading_zeros();
        for i in (0..bits).rev() {
            acc = self.combine(&acc, &acc)?;
            if (m.unsigned_abs() >> i) & 1 == 1 {
                acc = self.combine(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    /// l(t) at a point of the maximal ideal, summed until the tail falls
    /// below the precision of `t`.
    pub fn log_eval(&self, t: &RamifiedElement) -> Result<RamifiedElement> {
        self.check_ball(t)?;
        let ext = t.ext();
        let target = t.abs_prec();
        let k = match t.pi_valuation() {
            Ok(v) => v,
            Err(_) => return Ok(RamifiedElement::zero(ext).with_abs_prec(target)),
        };
        let n_max = crate::ring::series_cutoff(k, ext.e(), ext.p(), target) as usize;
        let coeffs = self.log_coeffs(n_max);
        let mut acc = RamifiedElement::zero(ext);
        let mut power = RamifiedElement::one(ext);
        for a in &coeffs {
            power = &power * t;
            if a.is_zero() {
                continue;
            }
            acc = &acc + &(&power * &RamifiedElement::from_rational(ext, a));
        }
        Ok(acc.with_abs_prec(target))
    }
}

/// w(z) with w = z^3 + a4 z w^2 + a6 w^3, to degree `trunc`.
fn w_series(a4: &BigInt, a6: &BigInt, p: u64, trunc: u32) -> JetSeries<Integers> {
    let z = Integers::new(p);
    let v = uni_vars();
    let t = JetSeries::var(&z, &v, trunc, 0);
    let t3 = t.pow(3).unwrap();
    let mut w = t3.clone();
    for _ in 0..trunc {
        let w2 = w.mul(&w).unwrap();
        let next = t3
            .add(&t.mul(&w2).unwrap().scale(a4))
            .unwrap()
            .add(&w2.mul(&w).unwrap().scale(a6))
            .unwrap();
        if next.eq_series(&w) {
            break;
        }
        w = next;
    }
    w
}

/// Addition law in z = -x/y (a1 = a2 = a3 = 0):
/// F = z1 + z2 + (2 a4 l n + 3 a6 l^2 n) / (1 + a4 l^2 + a6 l^3) where
/// l = sum w_k h_{k-1}(z1, z2) is the chord slope and n = w(z1) - l z1.
fn weierstrass_law(a4: &BigInt, a6: &BigInt, p: u64, trunc: u32, w: &JetSeries<Integers>) -> Result<JetSeries<Integers>> {
    let zr = Integers::new(p);
    let v = law_vars();
    let z1 = JetSeries::var(&zr, &v, trunc, 0);
    let z2 = JetSeries::var(&zr, &v, trunc, 1);
    let wc = w.univariate_coeffs(0)?;
    let mut lambda = JetSeries::zero(&zr, &v, trunc);
    for (k, c) in wc.iter().enumerate() {
        if c.is_zero() || k == 0 {
            continue;
        }
        // h_{k-1}(z1, z2) = sum_{i+j=k-1} z1^i z2^j
        let terms = (0..k as u32).map(|i| (vec![i, k as u32 - 1 - i], c.clone()));
        lambda = lambda.add(&JetSeries::from_terms(&zr, &v, trunc, terms)?)?;
    }
    let w1 = w.truncated(trunc).substitute(&[z1.clone()])?;
    let nu = w1.sub(&lambda.mul(&z1)?)?;
    let l2 = lambda.mul(&lambda)?;
    let l3 = l2.mul(&lambda)?;
    let two_a4 = BigInt::from(2) * a4;
    let three_a6 = BigInt::from(3) * a6;
    let num = lambda.mul(&nu)?.scale(&two_a4).add(&l2.mul(&nu)?.scale(&three_a6))?;
    let den = JetSeries::one(&zr, &v, trunc).add(&l2.scale(a4))?.add(&l3.scale(a6))?;
    z1.add(&z2)?.add(&num.mul(&den.inverse()?)?)
}

/// b_n = n A_n from the invariant differential omega = -x'(z) w(z) / 2 dz.
/// Writing w = z^3 u(z), omega = 1 + z u'(z) / (2 u(z)).
fn weierstrass_log_numerators(a4: &BigInt, a6: &BigInt, p: u64, n_max: usize) -> Vec<BigRational> {
    let trunc = n_max as u32;
    let w = w_series(a4, a6, p, trunc + 3);
    let wc = w.univariate_coeffs(0).unwrap();
    let q = Rationals::new(p);
    let v = uni_vars();
    let u: Vec<BigRational> = (0..=trunc as usize)
        .map(|k| BigRational::from_integer(wc.get(k + 3).cloned().unwrap_or_default()))
        .collect();
    let u = JetSeries::univariate(&q, &v, trunc, 0, &u);
    let zu = JetSeries::var(&q, &v, trunc, 0).mul(&u.derivative(0)).unwrap();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let omega = JetSeries::one(&q, &v, trunc)
        .add(&zu.mul(&u.inverse().unwrap()).unwrap().scale(&half))
        .unwrap();
    let oc = omega.univariate_coeffs(0).unwrap();
    // l' = omega, so A_n = omega_{n-1} / n and b_n = omega_{n-1}
    oc.into_iter().take(n_max).collect()
}
