//! Period lengths of `1/R` modulo `p` and of `1/R^(p^(a-1))` modulo `p^a`.

use super::factor::{factor_fp, FpFactorization};
use crate::error::{Error, Result};
use crate::modarith::{ceil_log, inv_mod_u64, lcm, mul_mod, sub_mod, RingSpec};
use crate::poly::UniLaurent;

/// Longest expansion the period detector will compute.
pub const PERIOD_TERM_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub factorization: FpFactorization,
    /// Period `m` of `1/(R mod p)`.
    pub period_mod_p: u64,
    /// `p^ceil(log_p e) L` for `R mod p`.
    pub bound_mod_p: u64,
    /// Period `m_T` of `1/T mod p`, `T = R^(p^(a-1))`.
    pub period_t_mod_p: u64,
    /// `p^ceil(log_p e) L` for `T mod p`.
    pub bound_t_mod_p: u64,
    /// Period of `1/T mod p^a`.
    pub period_mod_palpha: u64,
    /// `p^(a-1) m_T`.
    pub bound_lifted: u64,
    /// `p^(2(a-1)) m`.
    pub bound_combined: u64,
    /// `p^(2(a-1)) m_T`.
    pub bound_combined_t: u64,
    /// Zeros opening and closing the period of `1/T mod p^a`.
    pub leading_zeros: usize,
    pub trailing_zeros: usize,
}

/// First `n` coefficients of the power series `1/t`; `t` has `mindeg <= 0` with a unit there.
pub fn inverse_series(t: &UniLaurent, n: usize, m: u64) -> Result<Vec<u64>> {
    let Some(s) = t.mindeg() else {
        return Err(Error::ZeroPolynomial);
    };
    if s > 0 {
        return Err(Error::Hypothesis("1/R is not a power series".into()));
    }
    let c = inv_mod_u64(t.terms()[0].1, m)
        .ok_or_else(|| Error::Hypothesis("lowest coefficient is not a unit".into()))?;
    // t = z^s t0; 1/t = z^-s / t0
    let t0: Vec<(usize, u64)> = t
        .terms()
        .iter()
        .map(|(e, v)| ((e - s) as usize, *v))
        .collect();
    let shift = (-s) as usize;
    let len = n.saturating_sub(shift);
    let mut b = vec![0u64; len];
    for k in 0..len {
        let mut acc = u64::from(k == 0);
        for &(i, v) in &t0[1..] {
            if i > k {
                break;
            }
            acc = sub_mod(acc, mul_mod(v, b[k - i], m), m);
        }
        b[k] = mul_mod(acc, c, m);
    }
    let mut out = vec![0u64; n.min(shift)];
    out.extend(b);
    Ok(out)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_period(seq: &[u64], period: usize) -> bool {
    seq.iter()
        .zip(&seq[period.min(seq.len())..])
        .all(|(a, b)| a == b)
}

/// Least period of a purely periodic sequence whose period divides `bound`.
///
/// Expands `1/t` to `4 bound` terms and fails if it is not periodic there.
pub fn detect_period(t: &UniLaurent, bound: u64, m: u64) -> Result<(u64, Vec<u64>)> {
    let len = bound
        .checked_mul(4)
        .filter(|&l| l <= PERIOD_TERM_BUDGET)
        .ok_or(Error::BudgetExceeded {
            what: "period term",
            needed: bound.saturating_mul(4),
            budget: PERIOD_TERM_BUDGET,
        })?;
    let mut seq = inverse_series(t, len as usize, m)?;
    if !has_period(&seq, bound as usize) {
        return Err(Error::Hypothesis(format!(
            "expansion of length {len} is not periodic with period dividing {bound}"
        )));
    }
    let mut period = bound;
    for q in prime_factors(bound) {
        while period.is_multiple_of(q) && has_period(&seq, (period / q) as usize) {
            period /= q;
        }
    }
    seq.truncate(period as usize);
    Ok((period, seq))
}

/// `p^ceil(log_p e) lcm(p^deg R_i - 1)` for a polynomial with unit constant term.
pub fn prime_field_bound(f: &FpFactorization) -> Result<u64> {
    let p = f.p;
    let mut l: u64 = 1;
    for d in f.degrees() {
        let q = p.checked_pow(d as u32).ok_or(Error::BudgetExceeded {
            what: "period bound",
            needed: u64::MAX,
            budget: u64::MAX,
        })?;
        l = lcm(l, q - 1);
    }
    let e = f.max_multiplicity() as u64;
    Ok(p.pow(ceil_log(e, p)) * l)
}

fn raised(f: &FpFactorization, k: u32) -> FpFactorization {
    FpFactorization {
        factors: f.factors.iter().map(|(g, e)| (g.clone(), e * k)).collect(),
        e0: f.e0 * k as i32,
        ..f.clone()
    }
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

/// Empirical periods with the bounds they must divide.
pub fn period_rational(r: &UniLaurent, ring: &RingSpec) -> Result<PeriodReport> {
    let (p, m) = (ring.p, ring.modulus);
    let r = r.reduce(m);
    check(
        r.mindeg().is_none_or(|e| e >= -1),
        "R must lie in z^-1 R[z]",
    )?;
    let factorization = factor_fp(&r, p)?;
    let rp = r.reduce(p);
    check(
        matches!(factorization.e0, -1 | 0),
        "the lowest exponent of R mod p must be -1 or 0",
    )?;
    check(rp.deg().unwrap() >= 1, "deg(R mod p) must be at least 1")?;

    let q = ring.p_pow(ring.alpha - 1);
    let bound_mod_p = prime_field_bound(&factorization)?;
    let (period_mod_p, _) = detect_period(&rp, bound_mod_p, p)?;

    let tf = raised(&factorization, q as u32);
    let bound_t_mod_p = prime_field_bound(&tf)?;
    let t = r.pow(q, m);
    let (period_t_mod_p, _) = detect_period(&t.reduce(p), bound_t_mod_p, p)?;

    let over = |v: Option<u64>| {
        v.ok_or(Error::BudgetExceeded {
            what: "period bound",
            needed: u64::MAX,
            budget: u64::MAX,
        })
    };
    let bound_lifted = over(q.checked_mul(period_t_mod_p))?;
    let bound_combined = over(q.checked_mul(q).and_then(|v| v.checked_mul(period_mod_p)))?;
    let bound_combined_t = over(q.checked_mul(q).and_then(|v| v.checked_mul(period_t_mod_p)))?;
    let (period_mod_palpha, period) = detect_period(&t, bound_combined, m)?;
    let leading_zeros = period.iter().take_while(|&&v| v == 0).count();
    let trailing_zeros = period.iter().rev().take_while(|&&v| v == 0).count();
    Ok(PeriodReport {
        factorization,
        period_mod_p,
        bound_mod_p,
        period_t_mod_p,
        bound_t_mod_p,
        period_mod_palpha,
        bound_lifted,
        bound_combined,
        bound_combined_t,
        leading_zeros,
        trailing_zeros,
    })
}
