//! Factorization over `F_p`: squarefree decomposition, distinct-degree and
//! equal-degree splitting.

use crate::error::{Error, Result};
use crate::modarith::{add_mod, inv_mod_u64, mul_mod, sub_mod};
use crate::poly::UniLaurent;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed of the equal-degree splitting generator.
pub const FACTOR_SEED: u64 = 0x5eed_f00d;

/// Dense polynomial over `F_p`, lowest coefficient first, no trailing zeros.
pub type Fp = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpFactorization {
    pub p: u64,
    pub c: u64,
    /// Exponent of `z`; `-1` allowed for Laurent input.
    pub e0: i32,
    /// Monic irreducible factors other than `z`, with multiplicities, sorted.
    pub factors: Vec<(Fp, u32)>,
    pub seed: u64,
}

impl FpFactorization {
    /// `max e_i`, or 1 when there are no factors.
    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|f| f.1).max().unwrap_or(1)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| deg(&f.0)).collect()
    }

    /// `c * prod R_i^e_i` (without the power of `z`).
    pub fn unit_part_product(&self) -> Fp {
        let p = self.p;
        let mut acc = vec![self.c];
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = mul(&acc, f, p);
            }
        }
        acc
    }
}

pub fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree; the zero polynomial has degree 0 here and callers check `is_empty`.
pub fn deg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p);
    }
    trim(out)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p);
    }
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let lead_inv = inv_mod_u64(*b.last().expect("division by zero polynomial"), p).unwrap();
    let mut r = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0; a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + b.len() - 1], lead_inv, p);
        q[i] = c;
        if c != 0 {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = sub_mod(r[i + j], mul_mod(c, y, p), p);
            }
        }
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    divrem(a, b, p).1
}

pub fn monic(a: &[u64], p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let li = inv_mod_u64(l, p).unwrap();
            a.iter().map(|&c| mul_mod(c, li, p)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(a: &[u64], p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect(),
    )
}

/// `base^e mod f`.
pub fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Fp {
    let mut result = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), f, p);
        }
        b = rem(&mul(&b, &b, p), f, p);
        e >>= 1;
    }
    result
}

fn is_one(a: &[u64]) -> bool {
    a == [1]
}

/// `a(z)^(1/p)` for `a` with `a' = 0`.
fn pth_root(a: &[u64], p: u64) -> Fp {
    a.iter().step_by(p as usize).copied().collect()
}

/// Squarefree parts with multiplicities (Yun, with the characteristic-`p` correction).
fn squarefree(f: &[u64], p: u64) -> Vec<(Fp, u32)> {
    let mut out = Vec::new();
    let fd = derivative(f, p);
    let mut c = gcd(f, &fd, p);
    let mut w = divrem(f, &c, p).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(&w, &c, p);
        let z = divrem(&w, &y, p).0;
        if deg(&z) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = divrem(&c, &w, p).0;
    }
    if !is_one(&c) {
        for (g, m) in squarefree(&pth_root(&c, p), p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Splits a squarefree monic `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let z = vec![0, 1];
    let mut h = z.clone();
    let mut d = 0;
    while deg(&rest) >= 2 * (d + 1) {
        d += 1;
        h = powmod(&h, p, &rest, p);
        let g = gcd(&rest, &sub(&h, &z, p), p);
        if !is_one(&g) {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, d));
        }
    }
    if deg(&rest) > 0 {
        let d = deg(&rest);
        out.push((rest, d));
    }
    out
}

/// `sum_{i<d} a^(p^i)` for `p = 2`, or `(prod_{i<d} a^(p^i))^((p-1)/2)` otherwise.
fn splitting_map(a: &[u64], d: usize, f: &[u64], p: u64) -> Fp {
    if p == 2 {
        let mut t = a.to_vec();
        let mut acc = a.to_vec();
        for _ in 1..d {
            t = powmod(&t, 2, f, p);
            acc = add(&acc, &t, p);
        }
        acc
    } else {
        let mut t = a.to_vec();
        let mut acc = a.to_vec();
        for _ in 1..d {
            t = powmod(&t, p, f, p);
            acc = rem(&mul(&acc, &t, p), f, p);
        }
        let one = vec![1];
        sub(&powmod(&acc, (p - 1) / 2, f, p), &one, p)
    }
}

fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    if deg(f) == d {
        out.push(f.to_vec());
        return;
    }
    loop {
        let a: Fp = trim((0..deg(f)).map(|_| rng.gen_range(0..p)).collect());
        if deg(&a) == 0 {
            continue;
        }
        let g = gcd(f, &splitting_map(&a, d, f, p), p);
        if !is_one(&g) && deg(&g) < deg(f) {
            let other = divrem(f, &g, p).0;
            equal_degree(&g, d, p, rng, out);
            equal_degree(&other, d, p, rng, out);
            return;
        }
    }
}

/// Factors a dense polynomial with nonzero constant term into its unit and monic irreducibles.
pub fn factor_dense(f: &[u64], p: u64) -> Result<(u64, Vec<(Fp, u32)>)> {
    let f = trim(f.iter().map(|c| c % p).collect());
    let Some(&lead) = f.last() else {
        return Err(Error::ZeroPolynomial);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut factors = Vec::new();
    for (part, mult) in squarefree(&monic(&f, p), p) {
        for (block, d) in distinct_degree(&part, p) {
            let mut pieces = Vec::new();
            equal_degree(&block, d, p, &mut rng, &mut pieces);
            factors.extend(pieces.into_iter().map(|g| (g, mult)));
        }
    }
    factors.sort_by(|a, b| {
        (deg(&a.0), a.0.iter().rev().collect::<Vec<_>>())
            .cmp(&(deg(&b.0), b.0.iter().rev().collect()))
    });
    Ok((lead, factors))
}

/// Factorization of `R mod p` as `c z^e0 R_1^e_1 ... R_k^e_k`.
pub fn factor_fp(r: &UniLaurent, p: u64) -> Result<FpFactorization> {
    let r = r.reduce(p);
    let Some(e0) = r.mindeg() else {
        return Err(Error::ZeroPolynomial);
    };
    let dense = to_dense(&r.shift(-e0));
    let (c, factors) = factor_dense(&dense, p)?;
    Ok(FpFactorization {
        p,
        c,
        e0,
        factors,
        seed: FACTOR_SEED,
    })
}

/// Coefficients of a polynomial with nonnegative exponents.
pub fn to_dense(r: &UniLaurent) -> Fp {
    let Some(d) = r.deg() else {
        return Vec::new();
    };
    let mut out = vec![0; d as usize + 1];
    for (e, c) in r.terms() {
        out[*e as usize] = *c;
    }
    out
}

pub fn from_dense(a: &[u64], m: u64) -> UniLaurent {
    UniLaurent::from_terms(a.iter().enumerate().map(|(i, &c)| (i as i32, c)), m)
}
