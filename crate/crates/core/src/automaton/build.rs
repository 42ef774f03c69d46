use super::{Automaton, StateKey};
use crate::error::{Error, Result};
use crate::modarith::{inv_mod_u64, mul_mod, pow_mod_u64, RingSpec};
use crate::numeration::{
    digit_steps, initial_digits, initial_digits_from, make_q, output_of, Section, ZTable,
    DEFAULT_MONOMIAL_BUDGET,
};
use crate::poly::{BiLaurent, CurveSpec, MultiPoly};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use std::hash::Hash;

pub const DEFAULT_STATE_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOptions {
    pub state_budget: usize,
    /// Cap on monomials in an expanded polynomial state.
    pub monomial_budget: u64,
    pub keep_keys: bool,
    /// Worker threads for frontier expansion; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            state_budget: DEFAULT_STATE_BUDGET,
            monomial_budget: DEFAULT_MONOMIAL_BUDGET,
            keep_keys: true,
            workers: None,
        }
    }
}

/// Rational function `numerator / denominator` in `nvars >= 2` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSpec {
    pub numerator: MultiPoly,
    pub denominator: MultiPoly,
    /// `h_i = max(deg_i(num mod p), deg_i(den mod p))`.
    pub h: Vec<u32>,
}

impl DiagonalSpec {
    pub fn new(numerator: &MultiPoly, denominator: &MultiPoly, ring: &RingSpec) -> Result<Self> {
        let n = numerator.nvars;
        if n < 2 || denominator.nvars != n {
            return Err(Error::InvalidInput(format!(
                "diagonals need matching arity >= 2, got {} and {}",
                numerator.nvars, denominator.nvars
            )));
        }
        if !numerator.is_polynomial() || !denominator.is_polynomial() {
            return Err(Error::InvalidInput(
                "diagonal inputs must be polynomials".into(),
            ));
        }
        let m = ring.modulus;
        let (num, den) = (numerator.reduce(m), denominator.reduce(m));
        if den.ct() % ring.p == 0 {
            return Err(Error::InvalidDenominator(format!(
                "constant term of the denominator is not a unit mod {}",
                ring.p
            )));
        }
        let (np, dp) = (num.reduce(ring.p), den.reduce(ring.p));
        let h = (0..n)
            .map(|k| np.degree(k).unwrap_or(0).max(dp.degree(k).unwrap_or(0)) as u32)
            .collect();
        Ok(DiagonalSpec {
            numerator: num,
            denominator: den,
            h,
        })
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars
    }

    /// `y P_y(xy, y) / (P(xy, y) / y)`, whose diagonal is the series of the curve.
    pub fn shear_of(curve: &CurveSpec) -> Result<Self> {
        let m = curve.ring.modulus;
        let shear = |b: &BiLaurent, dy: i32| {
            MultiPoly::from_bilaurent(&b.map_exponents(|&(i, j)| (i, i + j + dy), m))
        };
        let p = curve.p_poly.to_bilaurent();
        let num = shear(&curve.y_dp_dy(), 0);
        let den = shear(&p, -1);
        DiagonalSpec::new(&num, &den, &curve.ring)
    }

    fn describe(&self) -> String {
        format!("diagonal: ({}) / ({})", self.numerator, self.denominator)
    }
}

/// Breadth-first exploration; numbering follows first discovery with symbols ascending.
fn explore<K, F, O>(
    ring: RingSpec,
    source: String,
    start: K,
    step: F,
    output: O,
    opts: &BuildOptions,
    wrap: fn(K) -> StateKey,
) -> Result<Automaton>
where
    K: Hash + Eq + Clone + Send + Sync,
    F: Fn(&K) -> Result<Vec<K>> + Sync,
    O: Fn(&K) -> u64 + Sync,
{
    let run = || {
        let p = ring.p as usize;
        let mut index: FxHashMap<K, usize> = FxHashMap::default();
        let mut keys = vec![start.clone()];
        index.insert(start, 0);
        let mut next: Vec<usize> = Vec::new();
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let images: Vec<Result<Vec<K>>> =
                frontier.par_iter().map(|&q| step(&keys[q])).collect();
            let mut upcoming = Vec::new();
            for (&q, imgs) in frontier.iter().zip(images) {
                let imgs = imgs?;
                if next.len() < (q + 1) * p {
                    next.resize((q + 1) * p, usize::MAX);
                }
                for (r, img) in imgs.into_iter().enumerate() {
                    let id = match index.get(&img) {
                        Some(&id) => id,
                        None => {
                            let id = keys.len();
                            if id >= opts.state_budget {
                                return Err(Error::BudgetExceeded {
                                    what: "state",
                                    needed: id as u64 + 1,
                                    budget: opts.state_budget as u64,
                                });
                            }
                            index.insert(img.clone(), id);
                            keys.push(img);
                            upcoming.push(id);
                            id
                        }
                    };
                    next[q * p + r] = id;
                }
            }
            frontier = upcoming;
        }
        drop(index);
        let outputs: Vec<u64> = keys.par_iter().map(&output).collect();
        Ok(Automaton {
            ring,
            source: source.clone(),
            next,
            outputs,
            keys: opts.keep_keys.then(|| keys.into_iter().map(wrap).collect()),
        })
    };
    match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Automaton of the Furstenberg series of `curve`, states kept as digit tuples.
pub fn build_algebraic(curve: &CurveSpec, opts: &BuildOptions) -> Result<Automaton> {
    let zt = ZTable::new(&make_q(curve), &curve.ring, Section::Algebraic);
    explore(
        curve.ring,
        format!("algebraic: {}", curve.p_poly),
        initial_digits(curve),
        |t| Ok(digit_steps(t, &zt)),
        |t| output_of(t, &zt),
        opts,
        StateKey::Digits,
    )
}

fn check_size(len: usize, budget: u64) -> Result<()> {
    if len as u64 > budget {
        return Err(Error::BudgetExceeded {
            what: "monomial",
            needed: len as u64,
            budget,
        });
    }
    Ok(())
}

/// Same automaton with fully expanded polynomial states; a cross-check for small cases.
pub fn build_algebraic_expanded(curve: &CurveSpec, opts: &BuildOptions) -> Result<Automaton> {
    let ring = curve.ring;
    let (p, m) = (ring.p, ring.modulus);
    let q = make_q(curve);
    let e = ring.p_pow(ring.alpha - 1);
    let s0 = curve.y_dp_dy().mul(&curve.p_over_y().pow(e - 1, m), m);
    check_size(s0.len(), opts.monomial_budget)?;
    let qpow = q.pow(m - m / p, m);
    let denom = inv_mod_u64(pow_mod_u64(q.ct(), e, m), m).expect("unit constant term");
    explore(
        ring,
        format!("algebraic (expanded): {}", curve.p_poly),
        s0,
        |s| {
            let prod = s.mul(&qpow, m);
            check_size(prod.len(), opts.monomial_budget)?;
            Ok((0..p).map(|r| prod.cartier(r, 0, p)).collect())
        },
        |s| mul_mod(s.ct(), denom, m),
        opts,
        StateKey::Expanded,
    )
}

/// Diagonal automaton: digit tuples for two variables, polynomial states otherwise.
pub fn build_diagonal(
    spec: &DiagonalSpec,
    ring: &RingSpec,
    opts: &BuildOptions,
) -> Result<Automaton> {
    if spec.nvars() != 2 {
        return build_diagonal_direct(spec, ring, opts);
    }
    let spec = DiagonalSpec::new(&spec.numerator, &spec.denominator, ring)?;
    let num = spec.numerator.to_bilaurent();
    let den = spec.denominator.to_bilaurent();
    let q = den.reduce(ring.p);
    let zt = ZTable::new(&q, ring, Section::Diagonal);
    explore(
        *ring,
        spec.describe(),
        initial_digits_from(&num, &den, &q, ring),
        |t| Ok(digit_steps(t, &zt)),
        |t| output_of(t, &zt),
        opts,
        StateKey::Digits,
    )
}

/// Diagonal automaton on expanded polynomial states `S`, with
/// `lambda_r(S) = Lambda_{r,...,r}(S Q^(p^a - p^(a-1)))`.
pub fn build_diagonal_direct(
    spec: &DiagonalSpec,
    ring: &RingSpec,
    opts: &BuildOptions,
) -> Result<Automaton> {
    let spec = DiagonalSpec::new(&spec.numerator, &spec.denominator, ring)?;
    let (p, m) = (ring.p, ring.modulus);
    let e = ring.p_pow(ring.alpha - 1);
    let den = &spec.denominator;
    let s0 = spec.numerator.mul(&den.pow(e - 1, m), m);
    check_size(s0.len(), opts.monomial_budget)?;
    let qpow = den.reduce(p).pow(m - m / p, m);
    let out_scale = inv_mod_u64(pow_mod_u64(den.ct(), e, m), m).expect("unit constant term");
    explore(
        *ring,
        spec.describe(),
        s0,
        |s| {
            let prod = s.mul(&qpow, m);
            check_size(prod.len(), opts.monomial_budget)?;
            Ok((0..p).map(|r| prod.cartier_diagonal(r, p)).collect())
        },
        |s| mul_mod(s.ct(), out_scale, m),
        opts,
        StateKey::Poly,
    )
}
