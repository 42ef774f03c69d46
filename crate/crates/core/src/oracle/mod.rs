//! Brute-force ground truth for sequences produced by automata.

pub mod series;

use crate::automaton::{Automaton, DiagonalSpec};
use crate::error::{Error, Result};
use crate::modarith::{inv_mod_u64, mul_mod, sub_mod, RingSpec};
use crate::poly::CurveSpec;
use rustc_hash::FxHashSet;
use series::{inverse, mul_trunc};

/// Largest lattice `diagonal_expand` will allocate.
pub const DEFAULT_LATTICE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Newton,
    Diagonal,
    Automaton,
}

/// `a(0), ..., a(N)` modulo `p^alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub ring: RingSpec,
    pub coeffs: Vec<u64>,
    pub method: Method,
}

impl SeriesPrefix {
    pub fn from_automaton(a: &Automaton, n: usize) -> Self {
        SeriesPrefix {
            ring: a.ring,
            coeffs: (0..=n as u128).map(|k| a.eval(k)).collect(),
            method: Method::Automaton,
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The same prefix reduced mod `p^beta`.
    pub fn reduce(&self, beta: u32) -> Result<Self> {
        let ring = self.ring.with_alpha(beta)?;
        Ok(SeriesPrefix {
            ring,
            coeffs: self.coeffs.iter().map(|c| c % ring.modulus).collect(),
            method: self.method,
        })
    }
}

/// `P(x, y)` as coefficient series `B_j(x)` of `y^j`.
fn y_coefficients(curve: &CurveSpec, n: usize) -> Vec<Vec<u64>> {
    let d = curve.p_poly.degree(1).unwrap_or(0) as usize;
    let mut b = vec![vec![0u64; n]; d + 1];
    for (e, c) in curve.p_poly.terms() {
        let (i, j) = (e[0] as usize, e[1] as usize);
        if i < n {
            b[j][i] = *c;
        }
    }
    b
}

/// Evaluates `sum_j B_j F^j` by Horner's rule mod `x^n`.
fn horner(b: &[Vec<u64>], f: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut acc = b.last().unwrap()[..n].to_vec();
    for bj in b.iter().rev().skip(1) {
        acc = mul_trunc(&acc, f, n, m);
        for (a, v) in acc.iter_mut().zip(&bj[..n]) {
            *a = (*a + v) % m;
        }
    }
    acc
}

/// `a(0..=n)` of the unique `F` with `F(0) = 0` and `P(x, F) = 0`, by Newton iteration.
pub fn series_solve(curve: &CurveSpec, n: usize) -> SeriesPrefix {
    let m = curve.ring.modulus;
    let total = n + 1;
    let b = y_coefficients(curve, total);
    let db: Vec<Vec<u64>> = (1..b.len())
        .map(|j| b[j].iter().map(|&c| mul_mod(c, j as u64 % m, m)).collect())
        .collect();
    let mut f = vec![0u64; 1];
    let mut prec = 1;
    while prec < total {
        prec = (2 * prec).min(total);
        f.resize(prec, 0);
        let value = horner(&b, &f, prec, m);
        let slope = horner(&db, &f, prec, m);
        let correction = mul_trunc(&value, &inverse(&slope, prec, m), prec, m);
        for (a, c) in f.iter_mut().zip(correction) {
            *a = sub_mod(*a, c, m);
        }
    }
    f.truncate(total);
    SeriesPrefix {
        ring: curve.ring,
        coeffs: f,
        method: Method::Newton,
    }
}

/// `P(x, F) mod x^(n+1)` for a prefix `F`; zero for a correct solution.
pub fn residual(curve: &CurveSpec, prefix: &SeriesPrefix) -> Vec<u64> {
    let n = prefix.len();
    horner(
        &y_coefficients(curve, n),
        &prefix.coeffs,
        n,
        curve.ring.modulus,
    )
}

/// Diagonal coefficients of `num/den` up to `n`, from the full lattice `[0, n]^m`.
pub fn diagonal_expand(spec: &DiagonalSpec, n: usize, ring: &RingSpec) -> Result<SeriesPrefix> {
    diagonal_expand_with_budget(spec, n, ring, DEFAULT_LATTICE_BUDGET)
}

pub fn diagonal_expand_with_budget(
    spec: &DiagonalSpec,
    n: usize,
    ring: &RingSpec,
    budget: u64,
) -> Result<SeriesPrefix> {
    let m = ring.modulus;
    let spec = DiagonalSpec::new(&spec.numerator, &spec.denominator, ring)?;
    let k = spec.nvars();
    let side = n + 1;
    let cells = (side as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if cells > budget {
        return Err(Error::BudgetExceeded {
            what: "lattice",
            needed: cells,
            budget,
        });
    }
    let strides: Vec<usize> = (0..k).map(|i| side.pow((k - 1 - i) as u32)).collect();
    let flat = |e: &[i32]| -> Option<usize> {
        e.iter().zip(&strides).try_fold(0usize, |acc, (&v, &s)| {
            ((v as usize) < side).then_some(acc + v as usize * s)
        })
    };
    let c0 = inv_mod_u64(spec.denominator.ct(), m)
        .ok_or_else(|| Error::InvalidDenominator("constant term is not a unit".into()))?;
    let mut g = vec![0u64; cells as usize];
    for (e, c) in spec.numerator.terms() {
        if let Some(i) = flat(e) {
            g[i] = *c;
        }
    }
    let den: Vec<(Vec<usize>, usize, u64)> = spec
        .denominator
        .terms()
        .iter()
        .filter(|(e, _)| e.iter().any(|&v| v != 0))
        .filter_map(|(e, c)| {
            let off = flat(e)?;
            Some((e.iter().map(|&v| v as usize).collect(), off, *c))
        })
        .collect();
    let mut idx = vec![0usize; k];
    for pos in 0..cells as usize {
        let mut acc = g[pos];
        for (e, off, c) in &den {
            if e.iter().zip(&idx).all(|(a, b)| a <= b) {
                acc = sub_mod(acc, mul_mod(*c, g[pos - off], m), m);
            }
        }
        g[pos] = mul_mod(acc, c0, m);
        for d in (0..k).rev() {
            idx[d] += 1;
            if idx[d] < side {
                break;
            }
            idx[d] = 0;
        }
    }
    let diag_stride: usize = strides.iter().sum();
    Ok(SeriesPrefix {
        ring: *ring,
        coeffs: (0..side).map(|i| g[i * diag_stride]).collect(),
        method: Method::Diagonal,
    })
}

/// Number of distinct length-`len` prefixes of `a(p^e n + r)`, `e <= e_max`, `r < p^e`.
pub fn kernel_prefixes(seq: &[u64], p: u64, e_max: u32, len: usize) -> Result<usize> {
    let top = (p as usize).pow(e_max) * len;
    if seq.len() < top {
        return Err(Error::InvalidInput(format!(
            "kernel prefixes need {top} terms, got {}",
            seq.len()
        )));
    }
    let mut seen: FxHashSet<Vec<u64>> = FxHashSet::default();
    for e in 0..=e_max {
        let pe = (p as usize).pow(e);
        for r in 0..pe {
            seen.insert((0..len).map(|n| seq[pe * n + r]).collect());
        }
    }
    Ok(seen.len())
}
