use super::{Automaton, StateKey};
use crate::error::{Error, Result};
use crate::modarith::RingSpec;
use crate::numeration::DigitTuple;
use crate::poly::{BiLaurent, MultiPoly};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct AutomatonFile {
    version: u32,
    p: u64,
    alpha: u32,
    source: String,
    initial: usize,
    states: Vec<StateRecord>,
}

#[derive(Serialize, Deserialize)]
struct StateRecord {
    id: usize,
    output: u64,
    next: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    key: Option<KeyRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KeyRecord {
    /// Per digit `T_0, T_1, ...`: `[i, j, coeff]` sorted by `(i, j)`.
    Digits(Vec<Vec<[i64; 3]>>),
    /// Terms of a polynomial state as `[e_1, ..., e_m, coeff]`.
    Poly { nvars: usize, terms: Vec<Vec<i64>> },
    /// Expanded bivariate state, `[i, j, coeff]`.
    Expanded(Vec<[i64; 3]>),
}

fn key_record(k: &StateKey) -> KeyRecord {
    match k {
        StateKey::Digits(t) => KeyRecord::Digits(t.to_term_lists()),
        StateKey::Poly(poly) => KeyRecord::Poly {
            nvars: poly.nvars,
            terms: poly
                .terms()
                .iter()
                .map(|(e, c)| e.iter().map(|&v| v as i64).chain([*c as i64]).collect())
                .collect(),
        },
        StateKey::Expanded(s) => KeyRecord::Expanded(
            s.terms()
                .iter()
                .map(|&((i, j), c)| [i as i64, j as i64, c as i64])
                .collect(),
        ),
    }
}

fn key_from_record(k: KeyRecord, ring: &RingSpec) -> Result<StateKey> {
    let m = ring.modulus;
    Ok(match k {
        KeyRecord::Digits(lists) => StateKey::Digits(DigitTuple::from_term_lists(&lists, ring.p)?),
        KeyRecord::Poly { nvars, terms } => {
            let mut parsed = Vec::with_capacity(terms.len());
            for t in terms {
                if t.len() != nvars + 1 || t[..nvars].iter().any(|&e| e < 0) {
                    return Err(Error::Format("malformed polynomial key term".into()));
                }
                parsed.push((
                    t[..nvars].iter().map(|&e| e as i32).collect(),
                    t[nvars] as u64,
                ));
            }
            StateKey::Poly(MultiPoly::from_terms(nvars, parsed, m))
        }
        KeyRecord::Expanded(terms) => StateKey::Expanded(BiLaurent::from_terms(
            terms
                .iter()
                .map(|t| ((t[0] as i32, t[1] as i32), t[2] as u64)),
            m,
        )),
    })
}

pub fn to_json(a: &Automaton) -> String {
    let p = a.p() as usize;
    let states = (0..a.len())
        .map(|q| StateRecord {
            id: q,
            output: a.outputs[q],
            next: a.next[q * p..(q + 1) * p].to_vec(),
            key: a.keys.as_ref().map(|k| key_record(&k[q])),
        })
        .collect();
    let file = AutomatonFile {
        version: FORMAT_VERSION,
        p: a.ring.p,
        alpha: a.ring.alpha,
        source: a.source.clone(),
        initial: 0,
        states,
    };
    serde_json::to_string_pretty(&file).expect("automaton serializes") + "\n"
}

pub fn from_json(text: &str) -> Result<Automaton> {
    let file: AutomatonFile =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.version != FORMAT_VERSION {
        return Err(Error::Format(format!(
            "unsupported version {}",
            file.version
        )));
    }
    let ring = RingSpec::new(file.p, file.alpha)?;
    if file.initial != 0 {
        return Err(Error::Format("initial state must be 0".into()));
    }
    let n = file.states.len();
    if n == 0 {
        return Err(Error::Format("no states".into()));
    }
    let p = ring.p as usize;
    let with_keys = file.states.iter().all(|s| s.key.is_some());
    let mut next = Vec::with_capacity(n * p);
    let mut outputs = Vec::with_capacity(n);
    let mut keys = Vec::new();
    for (q, s) in file.states.into_iter().enumerate() {
        if s.id != q {
            return Err(Error::Format(format!("state {q} has id {}", s.id)));
        }
        if s.next.len() != p || s.next.iter().any(|&t| t >= n) {
            return Err(Error::Format(format!(
                "state {q} has a malformed transition list"
            )));
        }
        if s.output >= ring.modulus {
            return Err(Error::Format(format!("state {q} output out of range")));
        }
        next.extend(s.next);
        outputs.push(s.output);
        if with_keys {
            keys.push(key_from_record(s.key.unwrap(), &ring)?);
        }
    }
    Ok(Automaton {
        ring,
        source: file.source,
        next,
        outputs,
        keys: with_keys.then_some(keys),
    })
}

/// Graphviz rendering: node labels are outputs, edge labels are input symbols.
pub fn to_dot(a: &Automaton) -> String {
    let mut s = String::from("digraph automaton {\n  rankdir=LR;\n");
    for q in 0..a.len() {
        let shape = if q == 0 { "doublecircle" } else { "circle" };
        writeln!(s, "  q{q} [label=\"{}\", shape={shape}];", a.outputs[q]).unwrap();
    }
    for q in 0..a.len() {
        for (r, t) in a.successors(q).iter().enumerate() {
            writeln!(s, "  q{q} -> q{t} [label=\"{r}\"];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Renders in `"json"` or `"dot"`.
pub fn serialize(a: &Automaton, format: &str) -> Result<String> {
    match format {
        "json" => Ok(to_json(a)),
        "dot" => Ok(to_dot(a)),
        other => Err(Error::UnsupportedFormat(other.to_string())),
    }
}
