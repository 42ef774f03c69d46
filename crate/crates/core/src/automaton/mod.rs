//! Deterministic finite automata with output (DFAO), read least significant digit first.

mod build;
mod minimize;
mod serialize;

pub use build::{
    build_algebraic, build_algebraic_expanded, build_diagonal, build_diagonal_direct, BuildOptions,
    DiagonalSpec, DEFAULT_STATE_BUDGET,
};
pub use minimize::{minimize, minimize_hopcroft};
pub use serialize::{from_json, serialize, to_dot, to_json};

use crate::modarith::RingSpec;
use crate::numeration::DigitTuple;
use crate::poly::{BiLaurent, MultiPoly};

/// Canonical identity of a state, when kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StateKey {
    Digits(DigitTuple),
    Poly(MultiPoly),
    Expanded(BiLaurent),
}

/// A DFAO over `{0, ..., p-1}` with outputs in `Z/p^alpha`; state 0 is initial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    pub ring: RingSpec,
    pub source: String,
    /// `next[q * p + r]` is the successor of `q` on symbol `r`.
    pub next: Vec<usize>,
    pub outputs: Vec<u64>,
    pub keys: Option<Vec<StateKey>>,
}

impl Automaton {
    pub fn len(&self) -> usize {
        self.outputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outputs.is_empty()
    }

    pub fn p(&self) -> u64 {
        self.ring.p
    }

    pub fn step(&self, q: usize, r: u64) -> usize {
        self.next[q * self.ring.p as usize + r as usize]
    }

    pub fn successors(&self, q: usize) -> &[usize] {
        let p = self.ring.p as usize;
        &self.next[q * p..(q + 1) * p]
    }

    /// Output after reading `word` (first symbol = least significant digit).
    pub fn eval_word(&self, word: &[u64]) -> u64 {
        let q = word.iter().fold(0, |q, &r| self.step(q, r));
        self.outputs[q]
    }

    /// `a(n) mod p^alpha`.
    pub fn eval(&self, n: u128) -> u64 {
        self.eval_word(&base_p_digits(n, self.ring.p))
    }

    /// Whether reading `0` never changes the output.
    pub fn is_leading_zero_insensitive(&self) -> bool {
        (0..self.len()).all(|q| self.outputs[self.step(q, 0)] == self.outputs[q])
    }

    /// Breadth-first depth of the deepest reachable state.
    pub fn depth(&self) -> usize {
        let mut dist = vec![usize::MAX; self.len()];
        dist[0] = 0;
        let mut queue = std::collections::VecDeque::from([0]);
        let mut deepest = 0;
        while let Some(q) = queue.pop_front() {
            deepest = deepest.max(dist[q]);
            for &n in self.successors(q) {
                if dist[n] == usize::MAX {
                    dist[n] = dist[q] + 1;
                    queue.push_back(n);
                }
            }
        }
        deepest
    }
}

/// Digits of `n` in base `p`, least significant first; empty for `n = 0`.
pub fn base_p_digits(mut n: u128, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % p as u128) as u64);
        n /= p as u128;
    }
    out
}

#[cfg(test)]
mod tests;
