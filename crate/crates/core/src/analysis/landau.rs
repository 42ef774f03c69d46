//! Landau's function and its multi-argument analogue.

use crate::modarith::lcm;
use std::collections::BTreeSet;

/// Every `lcm(sigma)` over partitions `sigma` of some `i` with `1 <= i <= n`.
pub fn achievable_lcms(n: u32) -> BTreeSet<u64> {
    let n = n as usize;
    // sets[s]: lcms of partitions into distinct part sizes summing to s;
    // repeated parts never change the lcm, and padding with 1s fills any gap.
    let mut sets: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n + 1];
    sets[0].insert(1);
    for j in 1..=n {
        for s in (j..=n).rev() {
            let add: Vec<u64> = sets[s - j].iter().map(|&v| lcm(v, j as u64)).collect();
            sets[s].extend(add);
        }
    }
    sets.into_iter().skip(1).flatten().collect()
}

/// `g(n)`, the largest order of a permutation of `n` elements.
pub fn landau_g(n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    *achievable_lcms(n).iter().next_back().unwrap()
}

/// `max lcm(lcm(sigma_1), ..., lcm(sigma_k))` with `sigma_i` a partition of at most `bounds[i]`.
pub fn lcm_partitions(bounds: &[u32]) -> u64 {
    let mut acc: BTreeSet<u64> = BTreeSet::from([1]);
    for &b in bounds {
        let next = achievable_lcms(b.max(1));
        acc = acc
            .iter()
            .flat_map(|&a| next.iter().map(move |&v| lcm(a, v)))
            .collect();
    }
    *acc.iter().next_back().unwrap()
}
