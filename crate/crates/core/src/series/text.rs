//! Plain-text round trip for series.
//!
//! ```text
//! # jet-series
//! ring: ramified p=5 f=1 e=4 eisenstein=-5,0,0,0,1
//! vars: t dt
//! trunc: 20
//! 0 1	24:0:1,0,0,0
//! 5 0	24:0:1,0,0,0
//! ```
//!
//! Records are sorted by multidegree (lexicographically, as stored); each line
//! holds the exponents separated by spaces, a tab, and the coefficient in the
//! ring's own record syntax.

use super::jet::{JetSeries, JetVars};
use super::ring::CoeffRing;
use crate::error::{Error, Result};

pub fn dump_series<R: CoeffRing>(s: &JetSeries<R>) -> String {
    let mut out = String::from("# jet-series\n");
    out.push_str(&format!("ring: {}\n", s.ring().describe()));
    out.push_str(&format!("vars: {}\n", s.vars().names().join(" ")));
    out.push_str(&format!("trunc: {}\n", s.trunc()));
    for (m, c) in s.terms() {
        let exps: Vec<String> = m.iter().map(|a| a.to_string()).collect();
        out.push_str(&exps.join(" "));
        out.push('\t');
        out.push_str(&s.ring().write_elem(c));
        out.push('\n');
    }
    out
}

/// Parses a dump produced by [`dump_series`] over the given ring and variables.
pub fn parse_series<R: CoeffRing>(ring: &R, vars: &JetVars, text: &str) -> Result<JetSeries<R>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty series dump".into()))?;
    if header.trim() != "# jet-series" {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    let field = |line: Option<&str>, key: &str| -> Result<String> {
        let line = line.ok_or_else(|| Error::Parse(format!("missing {key} line")))?;
        line.strip_prefix(&format!("{key}: "))
            .map(|s| s.to_string())
            .ok_or_else(|| Error::Parse(format!("expected {key}, got {line:?}")))
    };
    let ring_desc = field(lines.next(), "ring")?;
    if ring_desc != ring.describe() {
        return Err(Error::Parse(format!("ring mismatch: {ring_desc} vs {}", ring.describe())));
    }
    let names = field(lines.next(), "vars")?;
    if names != vars.names().join(" ") {
        return Err(Error::Parse(format!("variable mismatch: {names}")));
    }
    let trunc: u32 = field(lines.next(), "trunc")?
        .parse()
        .map_err(|_| Error::Parse("bad trunc".into()))?;
    let mut terms = Vec::new();
    for line in lines {
        let (exps, coeff) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse(format!("bad record {line:?}")))?;
        let m: Vec<u32> = exps
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad exponent in {line:?}"))))
            .collect::<Result<_>>()?;
        terms.push((m, ring.parse_elem(coeff)?));
    }
    JetSeries::from_terms(ring, vars, trunc, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ring::Rationals;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn roundtrip() {
        let r = Rationals::new(5);
        let v = JetVars::single("t", 1);
        let s = JetSeries::var(&r, &v, 6, 0)
            .add(&JetSeries::var(&r, &v, 6, 1).scale(&BigRational::new(BigInt::from(-3), BigInt::from(25))))
            .unwrap()
            .pow(3)
            .unwrap();
        let text = dump_series(&s);
        let back = parse_series(&r, &v, &text).unwrap();
        assert!(back.eq_series(&s));
        assert_eq!(dump_series(&back), text);
    }
}
