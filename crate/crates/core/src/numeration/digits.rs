use super::ZTable;
use crate::error::{Error, Result};
use crate::modarith::{binomial_mod, inv_mod_u64, mul_mod, pow_mod_u64, RingSpec};
use crate::poly::{BiLaurent, CurveSpec};
use serde::{Deserialize, Serialize};

/// Refuse to expand `Q^(p^(a-1)-1)` beyond this many monomials.
pub const DEFAULT_MONOMIAL_BUDGET: u64 = 2_000_000;

/// Digits `(T_0, ..., T_{a-1})` of a state, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitTuple {
    pub digits: Vec<BiLaurent>,
}

impl DigitTuple {
    pub fn zero(alpha: u32) -> Self {
        DigitTuple {
            digits: vec![BiLaurent::zero(); alpha as usize],
        }
    }

    pub fn alpha(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|d| d.is_zero())
    }

    /// Whether every coefficient lies in `{0, ..., p-1}`.
    pub fn is_canonical(&self, p: u64) -> bool {
        self.digits
            .iter()
            .all(|d| d.terms().iter().all(|t| t.1 < p))
    }

    /// Total number of stored monomials.
    pub fn weight(&self) -> usize {
        self.digits.iter().map(|d| d.len()).sum()
    }

    /// The first `beta` digits.
    pub fn truncate(&self, beta: u32) -> DigitTuple {
        DigitTuple {
            digits: self.digits[..beta as usize].to_vec(),
        }
    }

    /// Serializable form: per digit, a list of `[i, j, coeff]`.
    pub fn to_term_lists(&self) -> Vec<Vec<[i64; 3]>> {
        self.digits
            .iter()
            .map(|d| {
                d.terms()
                    .iter()
                    .map(|&((i, j), c)| [i as i64, j as i64, c as i64])
                    .collect()
            })
            .collect()
    }

    pub fn from_term_lists(lists: &[Vec<[i64; 3]>], p: u64) -> Result<Self> {
        let mut digits = Vec::with_capacity(lists.len());
        for list in lists {
            for t in list {
                if t[2] <= 0 || t[2] as u64 >= p {
                    return Err(Error::Format(format!(
                        "digit coefficient {} outside 1..{}",
                        t[2], p
                    )));
                }
            }
            let d = BiLaurent::from_terms(
                list.iter()
                    .map(|t| ((t[0] as i32, t[1] as i32), t[2] as u64)),
                p,
            );
            if d.len() != list.len() {
                return Err(Error::Format("repeated exponent in a digit".into()));
            }
            digits.push(d);
        }
        Ok(DigitTuple { digits })
    }
}

impl std::fmt::Display for DigitTuple {
    /// Most significant digit first, matching the usual positional notation.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.digits.iter().rev().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Digit boxes bounding the exponents of each `T_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoxKind {
    W,
    V,
    VInterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitBox {
    pub kind: BoxKind,
    pub h: u32,
    pub d: u32,
    pub alpha: u32,
}

impl DigitBox {
    pub fn new(kind: BoxKind, h: u32, d: u32, alpha: u32) -> Self {
        DigitBox { kind, h, d, alpha }
    }

    /// Whether `x^i y^j` may occur in digit `k`.
    pub fn admits(&self, k: u32, i: i32, j: i32) -> bool {
        let (k, h, d) = (k as i32, self.h as i32, self.d as i32);
        let j_low = (-k).max(-i);
        let (i_low, i_high, j_high) = match self.kind {
            BoxKind::W => (0, (k + 1) * h - 1, (k + 1) * (d - 1)),
            BoxKind::V => (0, (k + 1) * h, (k + 1) * (d - 1)),
            BoxKind::VInterior => (1, (k + 1) * h - 1, (k + 1) * (d - 1) - 1),
        };
        i >= i_low && i <= i_high && j >= j_low && j <= j_high
    }

    pub fn contains(&self, t: &DigitTuple) -> bool {
        t.alpha() == self.alpha
            && t.digits.iter().enumerate().all(|(k, dig)| {
                dig.terms()
                    .iter()
                    .all(|&((i, j), _)| self.admits(k as u32, i, j))
            })
    }

    /// Number of monomial slots, summed over all digits.
    pub fn slots(&self) -> u64 {
        let mut n = 0;
        for k in 0..self.alpha {
            let hi_i = ((k + 1) * self.h + 1) as i32;
            for i in 0..=hi_i {
                for j in -(k as i32)..=((k + 1) * self.d) as i32 {
                    if self.admits(k, i, j) {
                        n += 1;
                    }
                }
            }
        }
        n
    }
}

/// Lift of `P/y mod p` into digits, with the same support.
pub fn make_q(curve: &CurveSpec) -> BiLaurent {
    curve.p_over_y().reduce(curve.ring.p)
}

/// Digits of `S_0 = y P_y (P/y)^(p^(a-1)-1)`.
pub fn initial_digits(curve: &CurveSpec) -> DigitTuple {
    initial_digits_from(
        &curve.y_dp_dy(),
        &curve.p_over_y(),
        &make_q(curve),
        &curve.ring,
    )
}

/// Digits of `N D^(p^(a-1)-1)` where `q` is a lift of `D mod p`.
///
/// Uses `N D^(p^(a-1)-1) = N Q^(p^(a-1)) / D mod p^a` and solves digit by digit,
/// with `Q^(k+1) / D mod p^(k+1)` expanded as a polynomial.
pub fn initial_digits_from(
    numer: &BiLaurent,
    denom: &BiLaurent,
    q: &BiLaurent,
    ring: &RingSpec,
) -> DigitTuple {
    let p = ring.p;
    let mut digits: Vec<BiLaurent> = Vec::with_capacity(ring.alpha as usize);
    for k in 0..ring.alpha {
        let m = ring.p_pow(k + 1);
        let d = denom.reduce(m);
        let delta = q.sub(&d, m);
        // A_k = sum_{m=1}^{k+1} binom(k+1, m) D^(m-1) delta^(k+1-m)
        let mut a = BiLaurent::zero();
        let mut d_pow = BiLaurent::one();
        for j in 1..=(k + 1) as u64 {
            let c = binomial_mod(k as u64 + 1, j, m);
            let term = d_pow.mul(&delta.pow(k as u64 + 1 - j, m), m).scale(c, m);
            a = a.add(&term, m);
            d_pow = d_pow.mul(&d, m);
        }
        let mut x = numer.reduce(m).mul(&a, m);
        for (i, t) in digits.iter().enumerate() {
            let qk = q.pow((k as usize - i) as u64, m);
            x = x.sub(&t.mul(&qk, m).scale(ring.p_pow(i as u32), m), m);
        }
        let x = x
            .div_scalar_exact(ring.p_pow(k))
            .unwrap_or_else(|| panic!("initial digit {k}: intermediate not divisible by p^{k}"));
        digits.push(x.reduce(p));
    }
    DigitTuple { digits }
}

fn power_size_estimate(q: &BiLaurent, e: u64) -> u64 {
    let (Some(dx), Some(lo), Some(hi), Some(mx)) =
        (q.deg_x(), q.mindeg_y(), q.deg_y(), q.mindeg_x())
    else {
        return 1;
    };
    let wx = (dx - mx) as u64 * e + 1;
    let wy = (hi - lo) as u64 * e + 1;
    wx.saturating_mul(wy)
}

fn check_budget(q: &BiLaurent, e: u64, budget: u64) -> Result<()> {
    let needed = power_size_estimate(q, e);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "monomial",
            needed,
            budget,
        });
    }
    Ok(())
}

/// The value `sum_k T_k p^k Q^(p^(a-1)-1-k)` of a digit tuple.
pub fn val(t: &DigitTuple, q: &BiLaurent, ring: &RingSpec, budget: u64) -> Result<BiLaurent> {
    let m = ring.modulus;
    let a = ring.alpha as u64;
    let e = ring.p_pow(ring.alpha - 1) - 1;
    check_budget(q, e, budget)?;
    let mut acc = BiLaurent::zero();
    for k in 0..a as usize {
        acc = acc
            .mul(q, m)
            .add(&t.digits[k].scale(ring.p_pow(k as u32), m), m);
    }
    Ok(acc.mul(&q.pow(e + 1 - a, m), m))
}

/// The unique digit tuple with value `s`, if one exists.
pub fn rep(s: &BiLaurent, q: &BiLaurent, ring: &RingSpec, budget: u64) -> Result<DigitTuple> {
    let (p, m) = (ring.p, ring.modulus);
    let e = ring.p_pow(ring.alpha - 1) - 1;
    check_budget(q, e, budget)?;
    let mut rest = s.reduce(m);
    let mut digits = Vec::with_capacity(ring.alpha as usize);
    let mut qpow = q.pow(e + 1 - ring.alpha as u64, m);
    let mut qpows = Vec::new();
    for _ in 0..ring.alpha {
        qpows.push(qpow.clone());
        qpow = qpow.mul(q, m);
    }
    for k in 0..ring.alpha {
        let pk = ring.p_pow(k);
        let shifted = rest
            .div_scalar_exact(pk)
            .unwrap_or_else(|| panic!("rep: remainder not divisible by p^{k}"))
            .reduce(p);
        let qk = &qpows[(ring.alpha - 1 - k) as usize];
        let digit = shifted
            .div_exact_mod_p(&qk.reduce(p), p)
            .ok_or(Error::NotRepresentable)?;
        rest = rest.sub(&digit.mul(qk, m).scale(pk, m), m);
        digits.push(digit);
    }
    debug_assert!(rest.is_zero());
    Ok(DigitTuple { digits })
}

/// Canonicalizes raw digits by carrying `T = pU + R` into the next position as `U Q`.
///
/// The carry out of the last digit is beyond the precision `p^a` and is dropped.
pub fn carry_normalize(raw: &[BiLaurent], q: &BiLaurent, ring: &RingSpec) -> DigitTuple {
    let (p, m) = (ring.p, ring.modulus);
    let mut carry = BiLaurent::zero();
    let mut digits = Vec::with_capacity(raw.len());
    for (k, r) in raw.iter().enumerate() {
        let t = r.reduce(m).add(&carry, m);
        let low = t.reduce(p);
        if k + 1 < raw.len() {
            let high = BiLaurent::from_terms(t.terms().iter().map(|(e, c)| (*e, c / p)), m);
            carry = high.mul(q, m);
        }
        digits.push(low);
    }
    DigitTuple { digits }
}

/// Output symbol `sum_k ct(T_k) p^k c^-(k+1)`, `c` the constant term of `Q`.
pub fn output_of(t: &DigitTuple, zt: &ZTable) -> u64 {
    let m = zt.ring.modulus;
    let mut out = 0;
    for (k, d) in t.digits.iter().enumerate() {
        let ct = d.ct();
        if ct != 0 {
            let v = mul_mod(mul_mod(ct, zt.ring.p_pow(k as u32), m), zt.c_inv_pows[k], m);
            out = (out + v) % m;
        }
    }
    out
}

/// `c^-(k+1) mod p^a` for `k < a`.
pub(crate) fn inverse_powers(c: u64, ring: &RingSpec) -> Vec<u64> {
    let m = ring.modulus;
    let ci = inv_mod_u64(c, m).expect("constant term of Q must be a unit");
    (1..=ring.alpha as u64)
        .map(|k| pow_mod_u64(ci, k, m))
        .collect()
}

/// `Lambda_{r,s}(S Q^(p^a - p^(a-1)))`, expanded directly.
pub fn lambda_direct(s: &BiLaurent, r: u64, sy: u64, q: &BiLaurent, ring: &RingSpec) -> BiLaurent {
    let m = ring.modulus;
    let e = ring.modulus - ring.modulus / ring.p;
    s.mul(&q.pow(e, m), m).cartier(r, sy, ring.p)
}
