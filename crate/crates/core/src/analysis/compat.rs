//! Checks tying states across precisions and along the borders of their Newton polygons.

use super::orbit::lambda0_univariate;
use crate::error::Result;
use crate::modarith::RingSpec;
use crate::numeration::{digit_step, initial_digits, make_q, Section, ZTable};
use crate::poly::{Axis, BiLaurent, CurveSpec};

/// Feeds `word` to the digit machines at precision `alpha` and `beta` and
/// compares the first `beta` digits after every step.
pub fn digit_compat_check(curve: &CurveSpec, beta: u32, word: &[u64]) -> Result<bool> {
    let low = curve.at_alpha(beta)?;
    let q = make_q(curve);
    let zt_hi = ZTable::new(&q, &curve.ring, Section::Algebraic);
    let zt_lo = ZTable::new(&q, &low.ring, Section::Algebraic);
    let mut hi = initial_digits(curve);
    let mut lo = initial_digits(&low);
    if hi.truncate(beta) != lo {
        return Ok(false);
    }
    for &r in word {
        hi = digit_step(&hi, r, &zt_hi);
        lo = digit_step(&lo, r, &zt_lo);
        if hi.truncate(beta) != lo {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A border of the support box of a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Border {
    /// `x`-exponent 0.
    Left,
    /// `x`-exponent `p^(a-1) h`.
    Right,
    /// `y`-exponent `p^(a-1) (d - 1)`.
    Top,
}

/// Whether projecting onto `border` commutes with one step of `lambda_{0,0}`,
/// the projected step using the matching border of `q` as `R`.
pub fn border_commutes(s: &BiLaurent, q: &BiLaurent, ring: &RingSpec, border: Border) -> bool {
    let m = ring.modulus;
    let scale = ring.p_pow(ring.alpha - 1) as i32;
    let (axis, s_idx, q_idx) = match border {
        Border::Left => (Axis::X, 0, 0),
        Border::Right => {
            let h = q.deg_x().unwrap_or(0);
            (Axis::X, scale * h, h)
        }
        Border::Top => {
            let d1 = q.deg_y().unwrap_or(0);
            (Axis::Y, scale * d1, d1)
        }
    };
    let e = m - m / ring.p;
    let stepped = s.mul(&q.pow(e, m), m).cartier(0, 0, ring.p);
    let r = q.project(axis, q_idx);
    let projected = lambda0_univariate(&s.project(axis, s_idx), &r.pow(e, m), ring);
    stepped.project(axis, s_idx) == projected
}
