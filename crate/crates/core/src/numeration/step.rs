use super::digits::{carry_normalize, inverse_powers, DigitTuple};
use crate::modarith::{add_mod, binomial_mod, mul_mod, RingSpec};
use crate::poly::BiLaurent;
use rustc_hash::FxHashMap;

/// Which Cartier section a transition reads: `(r, 0)` for algebraic series,
/// `(r, r)` for bivariate diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Section {
    Algebraic,
    Diagonal,
}

impl Section {
    fn y_residue(self, r: u64) -> u64 {
        match self {
            Section::Algebraic => 0,
            Section::Diagonal => r,
        }
    }
}

/// Monomials of one `Z[j][k]`, split by exponent residues mod `p`.
///
/// Bin `rx * p + ry` holds `((i - rx)/p, (j - ry)/p, coeff)` for `i = rx`, `j = ry mod p`.
#[derive(Debug, Clone)]
struct Bins {
    classes: Vec<Vec<(i32, i32, u64)>>,
}

impl Bins {
    fn new(z: &BiLaurent, p: u64) -> Self {
        let pi = p as i32;
        let mut classes = vec![Vec::new(); (p * p) as usize];
        for &((i, j), c) in z.terms() {
            let (ri, rj) = (i.rem_euclid(pi), j.rem_euclid(pi));
            classes[(ri * pi + rj) as usize].push(((i - ri) / pi, (j - rj) / pi, c));
        }
        Bins { classes }
    }
}

/// Precomputed data for transitions in digit space.
#[derive(Debug, Clone)]
pub struct ZTable {
    pub ring: RingSpec,
    pub section: Section,
    pub q: BiLaurent,
    /// `Q(x^p, y^p) - Q^p mod p^a`.
    pub delta: BiLaurent,
    /// `z[j][k]`, reduced mod `p^(j+1)`.
    pub z: Vec<Vec<BiLaurent>>,
    bins: Vec<Vec<Bins>>,
    /// `q_pows[l][e] = Q^e mod p^l`.
    q_pows: Vec<Vec<BiLaurent>>,
    pub(crate) c_inv_pows: Vec<u64>,
}

impl ZTable {
    pub fn new(q: &BiLaurent, ring: &RingSpec, section: Section) -> Self {
        let (p, m, alpha) = (ring.p, ring.modulus, ring.alpha as u64);
        let q = q.reduce(p);
        let delta = q.frobenius(p).sub(&q.pow(p, m), m);
        assert!(
            delta.all_divisible_by(p),
            "Q(x^p, y^p) - Q^p must vanish mod p"
        );
        let mut z = Vec::new();
        let mut bins = Vec::new();
        for j in 0..alpha {
            let mj = ring.p_pow(j as u32 + 1);
            let mut row = Vec::new();
            let mut row_bins = Vec::new();
            for k in 0..alpha - j {
                let n = k + j + 1;
                let mut acc = BiLaurent::zero();
                for mm in (k + 1)..=n {
                    let c = binomial_mod(n, mm, mj);
                    if c == 0 {
                        continue;
                    }
                    let term = q
                        .pow(p * mm - k - 1, mj)
                        .mul(&delta.reduce(mj).pow(n - mm, mj), mj)
                        .scale(c, mj);
                    acc = acc.add(&term, mj);
                }
                row_bins.push(Bins::new(&acc, p));
                row.push(acc);
            }
            z.push(row);
            bins.push(row_bins);
        }
        let q_pows = (0..=ring.alpha)
            .map(|l| {
                let ml = ring.p_pow(l).max(1);
                let mut v = vec![BiLaurent::one().reduce(ml)];
                for e in 1..=alpha as usize {
                    let next = v[e - 1].mul(&q, ml);
                    v.push(next);
                }
                v
            })
            .collect();
        let c_inv_pows = inverse_powers(q.ct(), ring);
        ZTable {
            ring: *ring,
            section,
            q,
            delta,
            z,
            bins,
            q_pows,
            c_inv_pows,
        }
    }

    fn q_pow(&self, e: usize, level: u32) -> &BiLaurent {
        &self.q_pows[level as usize][e]
    }
}

/// `Lambda_{r, s(r)}(t * Z)` for every `r`, reading `Z` through its bins.
fn cartier_all(t: &BiLaurent, bins: &Bins, p: u64, m: u64, section: Section) -> Vec<BiLaurent> {
    let pi = p as i32;
    let mut acc: Vec<FxHashMap<(i32, i32), u64>> = vec![FxHashMap::default(); p as usize];
    for &((a, b), ct) in t.terms() {
        let (ra, rb) = (a.rem_euclid(pi), b.rem_euclid(pi));
        let (qa, qb) = ((a - ra) / pi, (b - rb) / pi);
        for r in 0..pi {
            let s = section.y_residue(r as u64) as i32;
            let rx = (r - ra).rem_euclid(pi);
            let ry = (s - rb).rem_euclid(pi);
            let cx = (ra + rx - r) / pi;
            let cy = (rb + ry - s) / pi;
            let slot = &mut acc[r as usize];
            for &(i, j, cz) in &bins.classes[(rx * pi + ry) as usize] {
                let e = (qa + i + cx, qb + j + cy);
                let v = slot.entry(e).or_insert(0);
                *v = add_mod(*v, mul_mod(ct, cz, m), m);
            }
        }
    }
    acc.into_iter()
        .map(|h| BiLaurent::from_terms(h, m))
        .collect()
}

/// Digit tuples of `lambda_r(val(t))` for all `r` in `0..p`, plus the `U` tables.
fn step_all(
    t: &DigitTuple,
    zt: &ZTable,
    want: Option<u64>,
) -> Vec<(DigitTuple, Vec<Vec<BiLaurent>>)> {
    let ring = &zt.ring;
    let (p, alpha) = (ring.p, ring.alpha as usize);
    let rs: Vec<u64> = match want {
        Some(r) => vec![r],
        None => (0..p).collect(),
    };
    // lam[k][j][r]
    let mut lam: Vec<Vec<Vec<BiLaurent>>> = Vec::with_capacity(alpha);
    for k in 0..alpha {
        let mut row = Vec::with_capacity(alpha - k);
        for j in 0..alpha - k {
            if t.digits[k].is_zero() {
                row.push(vec![BiLaurent::zero(); p as usize]);
            } else {
                let mj = ring.p_pow(j as u32 + 1);
                row.push(cartier_all(&t.digits[k], &zt.bins[j][k], p, mj, zt.section));
            }
        }
        lam.push(row);
    }
    rs.into_iter()
        .map(|r| {
            let mut u: Vec<Vec<BiLaurent>> = Vec::with_capacity(alpha);
            for k in 0..alpha {
                let mut uk: Vec<BiLaurent> = Vec::with_capacity(alpha - k);
                for j in 0..alpha - k {
                    let level = j as u32 + 1;
                    let mj = ring.p_pow(level);
                    let mut x = lam[k][j][r as usize].clone();
                    for (i, ui) in uk.iter().enumerate() {
                        if ui.is_zero() {
                            continue;
                        }
                        let sub = ui
                            .mul(zt.q_pow(j - i, level), mj)
                            .scale(ring.p_pow(i as u32), mj);
                        x = x.sub(&sub, mj);
                    }
                    let pj = ring.p_pow(j as u32);
                    let x = x.div_scalar_exact(pj).unwrap_or_else(|| {
                        panic!(
                            "digit step: U[{k}][{j}] numerator is not divisible by p^{j} (r = {r})"
                        )
                    });
                    uk.push(x.reduce(p));
                }
                u.push(uk);
            }
            let m = ring.modulus;
            let raw: Vec<BiLaurent> = (0..alpha)
                .map(|mdig| {
                    (0..=mdig).fold(BiLaurent::zero(), |acc, k| acc.add(&u[k][mdig - k], m))
                })
                .collect();
            (carry_normalize(&raw, &zt.q, ring), u)
        })
        .collect()
}

/// Digits of `lambda_r(val(t))`, computed without expanding `val(t)`.
pub fn digit_step(t: &DigitTuple, r: u64, zt: &ZTable) -> DigitTuple {
    step_all(t, zt, Some(r)).pop().unwrap().0
}

/// Like [`digit_step`], also returning `U[k][j]`.
pub fn digit_step_traced(t: &DigitTuple, r: u64, zt: &ZTable) -> (DigitTuple, Vec<Vec<BiLaurent>>) {
    step_all(t, zt, Some(r)).pop().unwrap()
}

/// Images of `t` under every input symbol, in symbol order.
pub fn digit_steps(t: &DigitTuple, zt: &ZTable) -> Vec<DigitTuple> {
    step_all(t, zt, None).into_iter().map(|x| x.0).collect()
}
