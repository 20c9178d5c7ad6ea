//! Stable serialized form of elements and extensions.
//!
//! ```json
//! {"p":5,"f":1,"e":4,"eisenstein":["-5","0","0","0","1"],
//!  "prec":24,"shift":0,"digits":[[[2,1]],[[0,3]],[],[]]}
//! ```
//!
//! `digits[i][j]` lists the base-p digits (least significant first) of the
//! coefficient of `g^j pi^i`, where `g` generates the unramified base. Empty
//! lists are zero; trailing zero digits are omitted. The value is
//! `sum digits * g^j * pi^i / p^shift + O(pi^(prec - e*shift))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::element::RamifiedElement;
use super::extension::Extension;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionWire {
    pub p: u64,
    pub f: usize,
    pub e: usize,
    /// Eisenstein coefficients, constant term first, as decimal strings.
    pub eisenstein: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementWire {
    pub p: u64,
    pub f: usize,
    pub e: usize,
    pub eisenstein: Vec<String>,
    pub prec: i64,
    pub shift: u32,
    pub digits: Vec<Vec<Vec<u64>>>,
}

pub fn extension_to_wire(ext: &Extension) -> ExtensionWire {
    ExtensionWire {
        p: ext.p(),
        f: ext.f(),
        e: ext.e(),
        eisenstein: ext.eisenstein().iter().map(|c| c.to_string()).collect(),
    }
}

fn to_digits(c: &BigInt, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut n = c.clone();
    debug_assert!(n >= BigInt::zero());
    let mut out = Vec::new();
    while !n.is_zero() {
        let (q, r) = n.div_mod_floor(&pb);
        out.push(r.to_u64().expect("digit below p"));
        n = q;
    }
    out
}

fn from_digits(d: &[u64], p: u64) -> BigInt {
    d.iter()
        .rev()
        .fold(BigInt::zero(), |acc, &x| acc * BigInt::from(p) + BigInt::from(x))
}

pub fn element_to_wire(x: &RamifiedElement) -> ElementWire {
    let ext = x.ext();
    let p = ext.p();
    let digits = (0..ext.e())
        .map(|i| {
            let c = x.coeff(i);
            let mut comps: Vec<Vec<u64>> = c.iter().map(|v| to_digits(v, p)).collect();
            while comps.last().is_some_and(|v| v.is_empty()) {
                comps.pop();
            }
            comps
        })
        .collect();
    let w = extension_to_wire(ext);
    ElementWire {
        p,
        f: w.f,
        e: w.e,
        eisenstein: w.eisenstein,
        prec: x.prec(),
        shift: x.shift(),
        digits,
    }
}

/// Rebuilds an element inside `ext`, which must match the recorded extension.
pub fn element_from_wire(ext: &Extension, w: &ElementWire) -> Result<RamifiedElement> {
    let ew = extension_to_wire(ext);
    if ew.p != w.p || ew.f != w.f || ew.e != w.e || ew.eisenstein != w.eisenstein {
        return Err(Error::Parse("element belongs to a different extension".into()));
    }
    if w.digits.len() > ext.e() {
        return Err(Error::Parse("too many pi-coefficients".into()));
    }
    let mut coeffs = Vec::with_capacity(w.digits.len());
    for comps in &w.digits {
        if comps.iter().flatten().any(|&d| d >= w.p) {
            return Err(Error::Parse(format!("digit out of range for p = {}", w.p)));
        }
        coeffs.push(comps.iter().map(|d| from_digits(d, w.p)).collect::<Vec<_>>());
    }
    RamifiedElement::from_coeffs(ext, &coeffs, w.prec, w.shift)
}
