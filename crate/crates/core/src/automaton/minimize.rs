use super::Automaton;
use rustc_hash::FxHashMap;
use std::collections::VecDeque;

/// Minimal automaton by Moore partition refinement.
pub fn minimize(a: &Automaton) -> Automaton {
    let reach = reachable(a);
    let p = a.p() as usize;
    let mut class = initial_classes(a);
    let mut count = class.iter().copied().max().map_or(0, |c| c + 1);
    loop {
        let mut ids: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
        let next_class: Vec<usize> = (0..a.len())
            .map(|q| {
                let mut sig = Vec::with_capacity(p + 1);
                sig.push(class[q]);
                sig.extend(a.successors(q).iter().map(|&n| class[n]));
                let fresh = ids.len();
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        let new_count = ids.len();
        class = next_class;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    quotient(a, &class, &reach)
}

/// Minimal automaton by Hopcroft's algorithm; agrees with [`minimize`].
pub fn minimize_hopcroft(a: &Automaton) -> Automaton {
    let reach = reachable(a);
    let p = a.p() as usize;
    let n = a.len();
    let mut preds: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; p];
    for q in 0..n {
        for (r, &t) in a.successors(q).iter().enumerate() {
            preds[r][t].push(q);
        }
    }
    let mut class = initial_classes(a);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (q, &c) in class.iter().enumerate() {
        if c >= blocks.len() {
            blocks.resize(c + 1, Vec::new());
        }
        blocks[c].push(q);
    }
    let mut work: VecDeque<(usize, usize)> = VecDeque::new();
    let mut queued = vec![vec![false; p]; blocks.len()];
    for b in 0..blocks.len() {
        for r in 0..p {
            work.push_back((b, r));
            queued[b][r] = true;
        }
    }
    while let Some((splitter, r)) = work.pop_front() {
        queued[splitter][r] = false;
        let mut hit: FxHashMap<usize, Vec<usize>> = FxHashMap::default();
        for &t in &blocks[splitter] {
            for &q in &preds[r][t] {
                hit.entry(class[q]).or_default().push(q);
            }
        }
        let mut touched: Vec<usize> = hit.keys().copied().collect();
        touched.sort_unstable();
        for b in touched {
            let mut inside = hit.remove(&b).unwrap();
            inside.sort_unstable();
            inside.dedup();
            if inside.len() == blocks[b].len() {
                continue;
            }
            let in_set: rustc_hash::FxHashSet<usize> = inside.iter().copied().collect();
            let outside: Vec<usize> = blocks[b]
                .iter()
                .copied()
                .filter(|q| !in_set.contains(q))
                .collect();
            let new_id = blocks.len();
            let (keep, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &q in &moved {
                class[q] = new_id;
            }
            blocks[b] = keep;
            blocks.push(moved);
            queued.push(vec![false; p]);
            for s in 0..p {
                if queued[b][s] {
                    work.push_back((new_id, s));
                    queued[new_id][s] = true;
                } else {
                    let smaller = if blocks[b].len() <= blocks[new_id].len() {
                        b
                    } else {
                        new_id
                    };
                    work.push_back((smaller, s));
                    queued[smaller][s] = true;
                }
            }
        }
    }
    quotient(a, &class, &reach)
}

fn reachable(a: &Automaton) -> Vec<bool> {
    let mut seen = vec![false; a.len()];
    if a.is_empty() {
        return seen;
    }
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
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

fn initial_classes(a: &Automaton) -> Vec<usize> {
    let mut ids: FxHashMap<u64, usize> = FxHashMap::default();
    a.outputs
        .iter()
        .map(|o| {
            let fresh = ids.len();
            *ids.entry(*o).or_insert(fresh)
        })
        .collect()
}

/// Collapses classes and renumbers reachable blocks in BFS order.
fn quotient(a: &Automaton, class: &[usize], reach: &[bool]) -> Automaton {
    let p = a.p() as usize;
    let mut rep_of: FxHashMap<usize, usize> = FxHashMap::default();
    for q in 0..a.len() {
        if reach[q] {
            rep_of.entry(class[q]).or_insert(q);
        }
    }
    let mut number: FxHashMap<usize, usize> = FxHashMap::default();
    let mut order = vec![class[0]];
    number.insert(class[0], 0);
    let mut i = 0;
    while i < order.len() {
        let q = rep_of[&order[i]];
        for &t in a.successors(q) {
            let c = class[t];
            if let std::collections::hash_map::Entry::Vacant(e) = number.entry(c) {
                e.insert(order.len());
                order.push(c);
            }
        }
        i += 1;
    }
    let mut next = Vec::with_capacity(order.len() * p);
    let mut outputs = Vec::with_capacity(order.len());
    for c in &order {
        let q = rep_of[c];
        outputs.push(a.outputs[q]);
        next.extend(a.successors(q).iter().map(|t| number[&class[*t]]));
    }
    Automaton {
        ring: a.ring,
        source: a.source.clone(),
        next,
        outputs,
        keys: None,
    }
}
