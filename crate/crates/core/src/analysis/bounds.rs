//! Closed-form upper bounds on automaton sizes.

use super::landau::{landau_g, lcm_partitions};
use crate::automaton::DiagonalSpec;
use crate::error::{Error, Result};
use crate::modarith::{ceil_log, floor_log, RingSpec};
use crate::numeration::make_q;
use crate::poly::{Axis, BiLaurent, CurveSpec};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub p: u64,
    pub alpha: u32,
    pub h: u32,
    pub d: u32,
    /// Exponent of the dominant term.
    pub n: u64,
    pub dim_v: u64,
    pub u: u32,
    pub u_l: u32,
    pub u_r: u32,
    pub u_t: u32,
    /// `L(h, d, d)`.
    pub landau_l: u64,
    /// `g(h + 2d)`, an upper bound for `landau_l`.
    pub landau_g: u64,
    pub p_pow_n: BigUint,
    pub total: BigUint,
    /// `p^dimV + (p^u - 1)/(p - 1)`.
    pub kernel_initial: BigUint,
    /// Sharper bound over the prime field, for `alpha = 1`.
    pub fields_bound: Option<BigUint>,
    /// Orbit-size bound under `lambda_{0,0}`; informational.
    pub orbit_bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalBoundReport {
    pub p: u64,
    pub alpha: u32,
    pub h: Vec<u32>,
    /// `sum_k prod_i ((k+1) h_i + 1)`.
    pub m: u64,
    pub p_pow_m: BigUint,
    /// Bivariate refinement; `None` for three or more variables.
    pub bivariate: Option<BivariateDiagonalBound>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateDiagonalBound {
    pub n: u64,
    pub u: u32,
    /// `u_l, u_r, u_b, u_t`; `None` when a border of the denominator is empty.
    pub border: Option<[u32; 4]>,
    /// `L(h, h, d, d)`.
    pub landau_l: u64,
    pub p_pow_n: BigUint,
    pub total: Option<BigUint>,
}

fn pow(p: u64, e: u64) -> BigUint {
    BigUint::from(p).pow(e as u32)
}

/// `floor(log_p max(v, 1)) + 1`.
fn log_step(v: i64, p: u64) -> u32 {
    floor_log(v.max(1) as u64, p) + 1
}

fn geometric(p: u64, u: u32) -> BigUint {
    (pow(p, u as u64) - 1u32) / BigUint::from(p - 1)
}

fn border_deg(q: &BiLaurent, axis: Axis, idx: i32) -> Option<i64> {
    q.project(axis, idx).deg().map(i64::from)
}

/// `alpha(alpha+1)((2hd-1)alpha + hd + 1)/6`.
pub fn w_exponent(alpha: u32, h: u32, d: u32) -> u64 {
    let (a, hd) = (alpha as u64, (h * d) as u64);
    a * (a + 1) * ((2 * hd - 1) * a + hd + 1) / 6
}

/// `alpha(alpha+1)((2hd-1)alpha + (h+3)d + 1)/6`.
pub fn v_exponent(alpha: u32, h: u32, d: u32) -> u64 {
    let (a, h, d) = (alpha as u64, h as u64, d as u64);
    a * (a + 1) * ((2 * h * d - 1) * a + (h + 3) * d + 1) / 6
}

pub fn bound_report(curve: &CurveSpec) -> Result<BoundReport> {
    let ring = curve.ring;
    let (p, alpha, h, d) = (ring.p, ring.alpha, curve.h, curve.d);
    if h == 0 {
        return Err(Error::Hypothesis(
            "deg_x(P mod p) must be at least 1".into(),
        ));
    }
    let a = alpha as i64;
    let (hi, di) = (h as i64, d as i64);
    let top_h = *curve.h_k.last().unwrap() as i64;
    let top_d = *curve.d_k.last().unwrap() as i64;
    let u = log_step((a * (top_h - hi)).max(a * (top_d - di) + 1), p);

    let q = make_q(curve);
    let scale = ring.p_pow(alpha - 1) as i64;
    let deg = |axis, idx| border_deg(&q, axis, idx).expect("border of Q is nonempty");
    let u_l = log_step(scale * (di - 1 - deg(Axis::X, 0)), p);
    let u_r = log_step(scale * (di - 1 - deg(Axis::X, h as i32)), p);
    let u_t = log_step(scale * (hi - deg(Axis::Y, d as i32 - 1)), p);

    let landau_l = lcm_partitions(&[h, d, d]);
    let landau_g = landau_g(h + 2 * d);
    assert!(landau_l <= landau_g);

    let n = w_exponent(alpha, h, d);
    let dim_v = v_exponent(alpha, h, d);
    let shift = (alpha as u64) * (alpha as u64 + 1) * (h as u64 + d as u64 - 1) / 2;
    let second = pow(p, n.saturating_sub(shift)) * landau_l;
    let hd1 = h.max(d.saturating_sub(1)) as u64;
    let tail = ceil_log(hd1, p) as u64 + (alpha as u64).max(2 * (alpha as u64 - 1));
    let total = pow(p, n) + &second + u_l.max(u_r).max(u_t) + tail + geometric(p, u);
    let kernel_initial = pow(p, dim_v) + geometric(p, u);
    let fields_bound = (alpha == 1).then(|| {
        pow(p, (h * d) as u64)
            + pow(p, ((h - 1) * d.saturating_sub(1)) as u64) * landau_l
            + floor_log(h as u64, p)
            + ceil_log(hd1, p)
            + 3u32
    });
    let sp = ring.p_pow(alpha - 1);
    let orbit_bound =
        second + floor_log((sp * h as u64).max(sp * (d as u64 - 1)).max(1), p) + 1u32 + tail + 1u32;
    Ok(BoundReport {
        p,
        alpha,
        h,
        d,
        n,
        dim_v,
        u,
        u_l,
        u_r,
        u_t,
        landau_l,
        landau_g,
        p_pow_n: pow(p, n),
        total,
        kernel_initial,
        fields_bound,
        orbit_bound,
    })
}

pub fn diagonal_bound_report(spec: &DiagonalSpec, ring: &RingSpec) -> Result<DiagonalBoundReport> {
    let spec = DiagonalSpec::new(&spec.numerator, &spec.denominator, ring)?;
    let p = ring.p;
    let alpha = ring.alpha;
    if spec.h.contains(&0) {
        return Err(Error::Hypothesis("every h_i must be at least 1".into()));
    }
    let m: u64 = (0..alpha as u64)
        .map(|k| {
            spec.h
                .iter()
                .map(|&hi| (k + 1) * hi as u64 + 1)
                .product::<u64>()
        })
        .sum();
    let bivariate = (spec.nvars() == 2).then(|| bivariate_bound(&spec, ring));
    Ok(DiagonalBoundReport {
        p,
        alpha,
        h: spec.h.clone(),
        m,
        p_pow_m: pow(p, m),
        bivariate,
    })
}

fn bivariate_bound(spec: &DiagonalSpec, ring: &RingSpec) -> BivariateDiagonalBound {
    let (p, alpha) = (ring.p, ring.alpha);
    let (h, d) = (spec.h[0], spec.h[1]);
    let a = alpha as u64;
    let n = a * (a + 1) * (2 * a + 1) * (h * d) as u64 / 6;
    let top = |k: usize| {
        spec.numerator
            .degree(k)
            .unwrap_or(0)
            .max(spec.denominator.degree(k).unwrap_or(0)) as i64
    };
    let ai = alpha as i64;
    let u = floor_log(
        (ai * (top(0) - h as i64))
            .max(ai * (top(1) - d as i64))
            .max(1) as u64,
        p,
    );
    let q = spec.denominator.to_bilaurent().reduce(p);
    let scale = ring.p_pow(alpha - 1) as i64;
    let border = (|| {
        Some([
            log_step(scale * (d as i64 - border_deg(&q, Axis::X, 0)?), p),
            log_step(scale * (d as i64 - border_deg(&q, Axis::X, h as i32)?), p),
            log_step(scale * (h as i64 - border_deg(&q, Axis::Y, 0)?), p),
            log_step(scale * (h as i64 - border_deg(&q, Axis::Y, d as i32)?), p),
        ])
    })();
    let landau_l = lcm_partitions(&[h, h, d, d]);
    let shift = a * ((a + 1) * (h + d) as u64 - 2) / 2;
    let total = border.map(|b| {
        pow(p, n)
            + pow(p, n.saturating_sub(shift)) * landau_l
            + *b.iter().max().unwrap()
            + ceil_log(h.max(d) as u64, p)
            + a.max(2 * (a - 1))
            + geometric(p, u)
    });
    BivariateDiagonalBound {
        n,
        u,
        border,
        landau_l,
        p_pow_n: pow(p, n),
        total,
    }
}
