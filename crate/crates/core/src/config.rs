//! Run configuration: extension specs, element expressions, validation.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{Extension, RamifiedElement, UnramifiedRing};

/// Extra p-adic digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 10;

/// A parsed `--ext` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtSpec {
    /// pi = p.
    Unramified,
    /// x^e - p.
    PowerRoot(usize),
    /// Phi_{p^k}(x + 1), pi = zeta_{p^k} - 1.
    Cyclotomic(u32),
    /// Eisenstein coefficients, constant term first.
    Raw(Vec<BigInt>),
}

impl ExtSpec {
    /// Accepts `unramified`, `x^e-p` with a number for e (`x^4-p`), `x^e-p:4`,
    /// `cyclotomic:k`, or a comma-separated coefficient list `c0,c1,...,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognized extension {s:?}"));
        if s == "unramified" || s == "x-p" {
            return Ok(ExtSpec::Unramified);
        }
        if let Some(k) = s.strip_prefix("cyclotomic:") {
            let k: u32 = k.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(Error::InvalidParameter("cyclotomic level must be at least 1".into()));
            }
            return Ok(ExtSpec::Cyclotomic(k));
        }
        if let Some(e) = s.strip_prefix("x^e-p:") {
            return Self::power(e.parse().map_err(|_| bad())?);
        }
        if let Some(rest) = s.strip_prefix("x^") {
            if let Some(e) = rest.strip_suffix("-p") {
                return Self::power(e.parse().map_err(|_| bad())?);
            }
        }
        if s.contains(',') {
            let coeffs: Vec<BigInt> = s.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
            return Ok(ExtSpec::Raw(coeffs));
        }
        Err(bad())
    }

    fn power(e: usize) -> Result<Self> {
        match e {
            0 => Err(Error::InvalidParameter("ramification index must be at least 1".into())),
            1 => Ok(ExtSpec::Unramified),
            _ => Ok(ExtSpec::PowerRoot(e)),
        }
    }

    /// Ramification index this extension will have.
    pub fn e(&self, p: u64) -> usize {
        match self {
            ExtSpec::Unramified => 1,
            ExtSpec::PowerRoot(e) => *e,
            ExtSpec::Cyclotomic(k) => ((p - 1) * p.pow(k - 1)) as usize,
            ExtSpec::Raw(c) => c.len().saturating_sub(1),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ExtSpec::Unramified => "unramified".into(),
            ExtSpec::PowerRoot(e) => format!("x^{e}-p"),
            ExtSpec::Cyclotomic(k) => format!("cyclotomic:{k}"),
            ExtSpec::Raw(c) => c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        }
    }

    /// Builds the extension so that precision `prec` (pi-units) fits with guard digits.
    pub fn build(&self, p: u64, f: usize, prec: i64) -> Result<Extension> {
        let e = self.e(p).max(1) as i64;
        let digits = ((prec.max(1) + e - 1) / e) as u32 + GUARD_DIGITS;
        let base = UnramifiedRing::new(p, f, digits)?;
        match self {
            ExtSpec::Unramified => Extension::unramified(base),
            ExtSpec::PowerRoot(e) => Extension::power_root(base, *e),
            ExtSpec::Cyclotomic(k) => Extension::cyclotomic(base, *k),
            ExtSpec::Raw(c) => Extension::new(base, c),
        }
    }
}

/// Everything a CLI run depends on. The seed determines every sampled point.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: u64,
    pub f: usize,
    /// Absolute precision of inputs, in pi-units.
    pub prec: i64,
    pub ext: ExtSpec,
    /// Whether `ext` was given explicitly.
    pub ext_explicit: bool,
    pub trunc: u32,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p: 5,
            f: 1,
            prec: 24,
            ext: ExtSpec::Unramified,
            ext_explicit: false,
            trunc: 20,
            order: 1,
            samples: 100,
            seed: 0,
            strict: false,
        }
    }
}

impl RunConfig {
    /// Checks every numeric field before any computation.
    pub fn validate(&self) -> Result<()> {
        if !crate::ring::fp::is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.p < 5 {
            return Err(Error::PrimeTooSmall(self.p));
        }
        if self.f == 0 {
            return Err(Error::InvalidParameter("--f must be at least 1".into()));
        }
        if self.prec < 1 {
            return Err(Error::InvalidParameter("--prec must be at least 1".into()));
        }
        if self.trunc < 2 {
            return Err(Error::InvalidParameter("--trunc must be at least 2".into()));
        }
        if self.order < 1 {
            return Err(Error::InvalidParameter("--order must be at least 1".into()));
        }
        if self.samples < 1 {
            return Err(Error::InvalidParameter("--samples must be at least 1".into()));
        }
        Ok(())
    }

    pub fn extension(&self) -> Result<Extension> {
        self.ext.build(self.p, self.f, self.prec)
    }

    /// The same configuration over another extension.
    pub fn extension_for(&self, spec: &ExtSpec) -> Result<Extension> {
        spec.build(self.p, self.f, self.prec)
    }
}

/// Parses an element expression over `ext` and caps it at absolute precision `prec`.
///
/// Grammar: sums, differences, products, quotients and non-negative integer
/// powers of integers, `pi`, `p`, `g` (generator of the unramified part),
/// `zeta` (= 1 + pi, meaningful over `cyclotomic:k`) and `teich(c0, ..., c_{f-1})`.
pub fn parse_element(ext: &Extension, src: &str, prec: i64) -> Result<RamifiedElement> {
    let mut parser = Parser { ext, s: src.as_bytes(), pos: 0, src };
    let v = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.s.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(v.with_abs_prec(prec))
}

struct Parser<'a> {
    ext: &'a Extension,
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RamifiedElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RamifiedElement> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RamifiedElement> {
        let base = self.unary()?;
        if self.eat(b'^') {
            let n = self.integer()?;
            let n: u64 = n.try_into().map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<RamifiedElement> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.error("bad integer"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RamifiedElement> {
        let ext = self.ext;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RamifiedElement::from_int(ext, self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let id = self.ident();
                match id.as_str() {
                    "pi" => Ok(RamifiedElement::pi(ext)),
                    "p" => Ok(RamifiedElement::from_int(ext, ext.p())),
                    "g" => Ok(RamifiedElement::generator(ext)),
                    "zeta" => Ok(&RamifiedElement::one(ext) + &RamifiedElement::pi(ext)),
                    "teich" => {
                        if !self.eat(b'(') {
                            return Err(self.error("expected '(' after teich"));
                        }
                        let mut res = Vec::new();
                        loop {
                            let neg = self.eat(b'-');
                            let n = self.integer()?;
                            let n: i64 = n.try_into().map_err(|_| self.error("residue out of range"))?;
                            res.push(if neg { -n } else { n });
                            if self.eat(b')') {
                                break;
                            }
                            if !self.eat(b',') {
                                return Err(self.error("expected ',' or ')'"));
                            }
                        }
                        if res.iter().all(|r| r.is_zero()) {
                            return Err(Error::Domain("teich(0) is not a root of unity".into()));
                        }
                        RamifiedElement::teichmuller(ext, &res)
                    }
                    _ => Err(Error::Parse(format!("unknown name {id:?} in {:?}", self.src))),
                }
            }
            _ => Err(self.error("expected a value")),
        }
    }
}
