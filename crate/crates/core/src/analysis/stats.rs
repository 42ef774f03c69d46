use crate::automaton::Automaton;
use std::collections::{BTreeSet, VecDeque};

/// Which residues the sequence takes, and which it takes infinitely often.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueStats {
    pub modulus: u64,
    pub attained: BTreeSet<u64>,
    pub attained_infinitely: BTreeSet<u64>,
}

impl ResidueStats {
    /// `|attained| / p^alpha` as `(numerator, denominator)`.
    pub fn attained_fraction(&self) -> (u64, u64) {
        (self.attained.len() as u64, self.modulus)
    }

    pub fn infinite_fraction(&self) -> (u64, u64) {
        (self.attained_infinitely.len() as u64, self.modulus)
    }
}

fn reach_from(a: &Automaton, seeds: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; a.len()];
    let mut queue = VecDeque::new();
    for s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &t in a.successors(q) {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

/// States lying on a directed cycle, by Kosaraju's strongly connected components.
fn on_cycle(a: &Automaton, alive: &[bool]) -> Vec<bool> {
    let n = a.len();
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in (0..n).filter(|&q| alive[q]) {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((q, i)) = stack.last_mut() {
            let succ = a.successors(*q);
            if *i < succ.len() {
                let t = succ[*i];
                *i += 1;
                if !visited[t] {
                    visited[t] = true;
                    stack.push((t, 0));
                }
            } else {
                order.push(*q);
                stack.pop();
            }
        }
    }
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for q in (0..n).filter(|&q| alive[q]) {
        for &t in a.successors(q) {
            rev[t].push(q);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        comp[root] = c;
        let mut size = 0;
        let mut stack = vec![root];
        while let Some(q) = stack.pop() {
            size += 1;
            for &s in &rev[q] {
                if comp[s] == usize::MAX {
                    comp[s] = c;
                    stack.push(s);
                }
            }
        }
        sizes.push(size);
    }
    (0..n)
        .map(|q| alive[q] && (sizes[comp[q]] > 1 || a.successors(q).contains(&q)))
        .collect()
}

/// Residue statistics over canonical inputs: `n = 0` is the empty word, and
/// `n > 0` is its base-`p` expansion, least significant digit first, ending in a nonzero digit.
pub fn residue_stats(a: &Automaton) -> ResidueStats {
    let reachable = reach_from(a, [0]);
    let cyclic = on_cycle(a, &reachable);
    let after_cycle = reach_from(a, (0..a.len()).filter(|&q| cyclic[q]));
    let p = a.p();
    let mut attained = BTreeSet::from([a.outputs[0]]);
    let mut attained_infinitely = BTreeSet::new();
    for q in (0..a.len()).filter(|&q| reachable[q]) {
        for s in 1..p {
            let out = a.outputs[a.step(q, s)];
            attained.insert(out);
            if after_cycle[q] {
                attained_infinitely.insert(out);
            }
        }
    }
    ResidueStats {
        modulus: a.ring.modulus,
        attained,
        attained_infinitely,
    }
}
