use super::factor::{factor_fp, FpFactorization};
use crate::error::{Error, Result};
use crate::modarith::{ceil_log, floor_log, lcm, RingSpec};
use crate::numeration::{digit_step, DigitTuple, ZTable};
use crate::poly::UniLaurent;
use rustc_hash::FxHashMap;
use std::hash::Hash;

pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

/// Transient and period of the iterates `S, f(S), f^2(S), ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitRecord {
    pub transient: usize,
    pub period: usize,
}

impl OrbitRecord {
    /// Number of distinct elements in the orbit.
    pub fn size(&self) -> usize {
        self.transient + self.period
    }
}

/// Iterates `f` from `start` until an element repeats.
pub fn orbit_of<K, F>(start: K, mut f: F, budget: usize) -> Result<OrbitRecord>
where
    K: Hash + Eq + Clone,
    F: FnMut(&K) -> K,
{
    let mut seen: FxHashMap<K, usize> = FxHashMap::default();
    let mut cur = start;
    loop {
        let n = seen.len();
        if let Some(&first) = seen.get(&cur) {
            return Ok(OrbitRecord {
                transient: first,
                period: n - first,
            });
        }
        if n >= budget {
            return Err(Error::BudgetExceeded {
                what: "orbit",
                needed: n as u64 + 1,
                budget: budget as u64,
            });
        }
        let next = f(&cur);
        seen.insert(cur, n);
        cur = next;
    }
}

/// Orbit of a digit tuple under `lambda_{0,0}`.
pub fn orbit_zero(start: &DigitTuple, zt: &ZTable, budget: usize) -> Result<OrbitRecord> {
    orbit_of(start.clone(), |t| digit_step(t, 0, zt), budget)
}

/// `Lambda_0(S R^(p^a - p^(a-1)))` on univariate Laurent polynomials.
pub fn lambda0_univariate(s: &UniLaurent, r_pow: &UniLaurent, ring: &RingSpec) -> UniLaurent {
    s.mul(r_pow, ring.modulus).cartier(0, ring.p)
}

/// Exact univariate orbit together with the theoretical transient `t` and period bound `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateOrbit {
    pub record: OrbitRecord,
    pub t: u64,
    pub ell: u64,
    pub factorization: FpFactorization,
}

impl UnivariateOrbit {
    pub fn bound(&self) -> u64 {
        self.t + self.ell
    }
}

/// `(t, ell)` for `R` from its factorization modulo `p`.
pub fn univariate_bound(f: &FpFactorization, alpha: u32) -> (u64, u64) {
    let p = f.p;
    let e0 = f.e0.max(1) as u64;
    let emax = f.factors.iter().map(|x| x.1 as u64).max().unwrap_or(1);
    let t = (floor_log(e0, p) + alpha).max(ceil_log(emax, p) + 2 * (alpha - 1));
    let ell = f.degrees().iter().fold(1, |acc, &d| lcm(acc, d as u64));
    (t as u64, ell)
}

pub fn univariate_orbit(
    s: &UniLaurent,
    r: &UniLaurent,
    ring: &RingSpec,
) -> Result<UnivariateOrbit> {
    let m = ring.modulus;
    let (s, r) = (s.reduce(m), r.reduce(m));
    if r.mindeg().is_some_and(|e| e < -1) {
        return Err(Error::Precondition("R must lie in z^-1 R[z]".into()));
    }
    let factorization = factor_fp(&r, ring.p)?;
    let rp_deg = r.reduce(ring.p).deg().unwrap() as i64;
    let q = ring.p_pow(ring.alpha - 1) as i64;
    if s.mindeg().is_some_and(|e| (e as i64) < 1 - q) {
        return Err(Error::Precondition(format!(
            "mindeg S must be at least {}",
            1 - q
        )));
    }
    if s.deg().is_some_and(|e| e as i64 > q * rp_deg) {
        return Err(Error::Precondition(format!(
            "deg S must be at most {}",
            q * rp_deg
        )));
    }
    let r_pow = r.pow(m - m / ring.p, m);
    let record = orbit_of(
        s,
        |x| lambda0_univariate(x, &r_pow, ring),
        DEFAULT_ORBIT_BUDGET,
    )?;
    let (t, ell) = univariate_bound(&factorization, ring.alpha);
    Ok(UnivariateOrbit {
        record,
        t,
        ell,
        factorization,
    })
}
