//! Dense polynomials over the prime field F_p, used only to pick the
//! defining polynomial of the unramified ring.
//!
//! Coefficients are stored low degree first and kept reduced into `[0, p)`.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        k >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo a monic-or-not nonzero `m`.
fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = mulmod(r[top], lead_inv, p);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = mulmod(c, mi, p);
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn mulmod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

/// x^(p^k) mod m by repeated p-th powering.
fn x_pow_p_pow(k: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut cur = rem(&[0, 1], m, p);
    for _ in 0..k {
        // cur <- cur^p
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod_poly(&acc, &base, m, p);
            }
            base = mulmod_poly(&base, &base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial of degree `f`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let f = (m.len() - 1) as u32;
    if f == 1 {
        return true;
    }
    let sub_x = |mut v: Vec<u64>| -> Vec<u64> {
        if v.len() < 2 {
            v.resize(2, 0);
        }
        v[1] = (v[1] + p - 1) % p;
        trim(&mut v);
        v
    };
    let full = sub_x(x_pow_p_pow(f, m, p));
    if !full.is_empty() {
        return false;
    }
    for r in prime_factors(f) {
        let h = sub_x(x_pow_p_pow(f / r, m, p));
        let g = gcd(m, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The first monic irreducible polynomial of degree `f` over F_p, in the
/// order of the integer `sum c_i p^i` formed by its lower coefficients.
pub(crate) fn first_irreducible(p: u64, f: usize) -> Option<Vec<u64>> {
    let count = (p as u128).checked_pow(f as u32)?;
    let mut k: u128 = 0;
    while k < count {
        let mut m = Vec::with_capacity(f + 1);
        let mut t = k;
        for _ in 0..f {
            m.push((t % p as u128) as u64);
            t /= p as u128;
        }
        m.push(1);
        if is_irreducible(&m, p) {
            return Some(m);
        }
        k += 1;
    }
    None
}
