//! Sparse Laurent polynomials with coefficients in `Z/m`.
//!
//! Coefficients are plain `u64` residues; the modulus is passed to every
//! operation because the digit algorithms move between several powers of `p`.

mod bivariate;
mod curve;
mod multivariate;
mod parse;
mod univariate;

pub use bivariate::{Axis, BiLaurent};
pub use curve::{curve_derived, CurveSpec};
pub use multivariate::{MultiExp, MultiPoly};
pub use parse::{parse, parse_bivariate, parse_univariate, variable_names};
pub use univariate::UniLaurent;

use crate::modarith::{add_mod, inv_mod_u64, mul_mod, sub_mod};
use rustc_hash::FxHashMap;
use std::fmt::Debug;
use std::hash::Hash;

/// Exponent monoid of a polynomial ring, ordered lexicographically.
///
/// The order must be compatible with addition; exact division relies on it.
pub trait Exponent: Clone + Ord + Eq + Hash + Debug + Send + Sync {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// Componentwise minimum.
    fn min_with(&self, other: &Self) -> Self;
    /// Componentwise `>=`.
    fn ge_all(&self, other: &Self) -> bool;

    /// Product of two polynomials; types with a cheap dense box override this.
    fn product(a: &Poly<Self>, b: &Poly<Self>, m: u64) -> Poly<Self> {
        sparse_product(a, b, m)
    }
}

/// A sparse polynomial: terms sorted by exponent, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<E> {
    terms: Vec<(E, u64)>,
}

impl<E> Default for Poly<E> {
    fn default() -> Self {
        Poly { terms: Vec::new() }
    }
}

impl<E: Exponent> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn monomial(e: E, c: u64, m: u64) -> Self {
        Self::from_terms([(e, c)], m)
    }

    /// Collects terms, merging repeated exponents and reducing mod `m`.
    pub fn from_terms<I: IntoIterator<Item = (E, u64)>>(iter: I, m: u64) -> Self {
        let mut v: Vec<(E, u64)> = iter.into_iter().map(|(e, c)| (e, c % m)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(E, u64)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = add_mod(*lc, c, m),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly { terms: out }
    }

    pub fn from_signed_terms<I: IntoIterator<Item = (E, i128)>>(iter: I, m: u64) -> Self {
        Self::from_terms(
            iter.into_iter()
                .map(|(e, c)| (e, c.rem_euclid(m as i128) as u64)),
            m,
        )
    }

    /// Wraps terms already sorted, merged and reduced.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(E, u64)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(E, u64)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(E, u64)> {
        self.terms
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

    pub fn coeff(&self, e: &E) -> u64 {
        match self.terms.binary_search_by(|t| t.0.cmp(e)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(E, u64)> {
        self.terms.last()
    }

    /// Componentwise minimum of all exponents.
    pub fn min_exponent(&self) -> Option<E> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, t| acc.min_with(&t.0)))
    }

    fn merge(&self, other: &Self, m: u64, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: u64| if negate_other { sub_mod(0, c, m) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), fix(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        sub_mod(a[i].1, b[j].1, m)
                    } else {
                        add_mod(a[i].1, b[j].1, m)
                    };
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), fix(t.1))));
        Poly { terms: out }
    }

    /// Sum; both operands must already be reduced mod `m`.
    pub fn add(&self, other: &Self, m: u64) -> Self {
        self.merge(other, m, false)
    }

    pub fn sub(&self, other: &Self, m: u64) -> Self {
        self.merge(other, m, true)
    }

    pub fn neg(&self, m: u64) -> Self {
        self.scale(m - 1, m)
    }

    pub fn scale(&self, c: u64, m: u64) -> Self {
        let c = c % m;
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(e, a)| {
                    let v = mul_mod(*a, c, m);
                    (v != 0).then(|| (e.clone(), v))
                })
                .collect(),
        }
    }

    /// Reduces coefficients modulo a divisor of the current modulus.
    pub fn reduce(&self, m: u64) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let v = c % m;
                    (v != 0).then(|| (e.clone(), v))
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self, m: u64) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        E::product(self, other, m)
    }

    /// `self^e`, with `one` the unit of the ring.
    pub fn pow_with(&self, mut e: u64, m: u64, one: &Self) -> Self {
        let mut base = self.clone();
        let mut acc = one.reduce(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, m);
            }
        }
        acc
    }

    /// Applies an exponent map, re-sorting and merging collisions.
    pub fn map_exponents<F: Fn(&E) -> E>(&self, f: F, m: u64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), *c)), m)
    }

    /// Applies an order-preserving injective exponent map.
    pub fn map_exponents_monotone<F: Fn(&E) -> E>(&self, f: F) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (f(e), *c)).collect(),
        }
    }

    pub fn filter_terms<F: Fn(&E, u64) -> bool>(&self, keep: F) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, c)| keep(e, *c))
                .cloned()
                .collect(),
        }
    }

    pub fn all_divisible_by(&self, q: u64) -> bool {
        self.terms.iter().all(|t| t.1 % q == 0)
    }

    /// Divides every coefficient by `q`, or `None` if some coefficient is not a multiple.
    pub fn div_scalar_exact(&self, q: u64) -> Option<Self> {
        if !self.all_divisible_by(q) {
            return None;
        }
        Some(Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c / q)).collect(),
        })
    }

    /// Exact division over the prime field `F_p`; `None` if `b` does not divide `a`.
    ///
    /// Both inputs must be reduced mod `p`. Quotient exponents are confined to the
    /// box above `min(a) - min(b)`, so the loop terminates even when the division fails.
    pub fn div_exact_mod_p(&self, b: &Self, p: u64) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lower = self.min_exponent()?.sub(&b.min_exponent()?);
        let (lb_e, lb_c) = b.leading()?.clone();
        let lb_inv = inv_mod_u64(lb_c, p)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((le, lc)) = rem.leading().cloned() {
            let qe = le.sub(&lb_e);
            if !qe.ge_all(&lower) {
                return None;
            }
            let qc = mul_mod(lc, lb_inv, p);
            let shifted = Poly {
                terms: b
                    .terms
                    .iter()
                    .map(|(e, c)| (e.add(&qe), mul_mod(*c, qc, p)))
                    .collect(),
            };
            rem = rem.sub(&shifted, p);
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(Poly { terms: quot })
    }
}

/// Hash-map accumulation; the reference product.
pub fn sparse_product<E: Exponent>(a: &Poly<E>, b: &Poly<E>, m: u64) -> Poly<E> {
    let mut acc: FxHashMap<E, u64> = FxHashMap::default();
    acc.reserve(a.len() * b.len() / 2 + 1);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let v = mul_mod(*ca, *cb, m);
            let slot = acc.entry(ea.add(eb)).or_insert(0);
            *slot = add_mod(*slot, v, m);
        }
    }
    let mut terms: Vec<(E, u64)> = acc.into_iter().filter(|t| t.1 != 0).collect();
    terms.sort_by(|x, y| x.0.cmp(&y.0));
    Poly { terms }
}

impl Exponent for i32 {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn min_with(&self, o: &Self) -> Self {
        *self.min(o)
    }
    fn ge_all(&self, o: &Self) -> bool {
        self >= o
    }
    fn product(a: &Poly<Self>, b: &Poly<Self>, m: u64) -> Poly<Self> {
        let lo = a.terms[0].0 + b.terms[0].0;
        let hi = a.terms.last().unwrap().0 + b.terms.last().unwrap().0;
        let width = (hi - lo + 1) as usize;
        if width > 4 * a.len() * b.len() + 64 {
            return sparse_product(a, b, m);
        }
        let mut buf = vec![0u64; width];
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let k = (ea + eb - lo) as usize;
                buf[k] = add_mod(buf[k], mul_mod(*ca, *cb, m), m);
            }
        }
        let terms = buf
            .into_iter()
            .enumerate()
            .filter(|t| t.1 != 0)
            .map(|(k, c)| (lo + k as i32, c))
            .collect();
        Poly { terms }
    }
}

impl Exponent for (i32, i32) {
    fn add(&self, o: &Self) -> Self {
        (self.0 + o.0, self.1 + o.1)
    }
    fn sub(&self, o: &Self) -> Self {
        (self.0 - o.0, self.1 - o.1)
    }
    fn min_with(&self, o: &Self) -> Self {
        (self.0.min(o.0), self.1.min(o.1))
    }
    fn ge_all(&self, o: &Self) -> bool {
        self.0 >= o.0 && self.1 >= o.1
    }
    fn product(a: &Poly<Self>, b: &Poly<Self>, m: u64) -> Poly<Self> {
        bivariate::dense_product(a, b, m).unwrap_or_else(|| sparse_product(a, b, m))
    }
}
