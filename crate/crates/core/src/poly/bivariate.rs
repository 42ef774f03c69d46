use super::{Exponent, Poly, UniLaurent};
use crate::modarith::{add_mod, mul_mod};
use std::fmt;

/// Laurent polynomial in `x` and `y`; exponent pairs are `(x, y)`.
pub type BiLaurent = Poly<(i32, i32)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

const DENSE_LIMIT: usize = 1 << 22;

pub(super) fn dense_product(a: &BiLaurent, b: &BiLaurent, m: u64) -> Option<BiLaurent> {
    let (ax0, ax1) = (a.terms[0].0 .0, a.terms.last()?.0 .0);
    let (bx0, bx1) = (b.terms[0].0 .0, b.terms.last()?.0 .0);
    let (ay0, ay1) = y_range(a);
    let (by0, by1) = y_range(b);
    let (x0, y0) = (ax0 + bx0, ay0 + by0);
    let wx = (ax1 + bx1 - x0 + 1) as usize;
    let wy = (ay1 + by1 - y0 + 1) as usize;
    let area = wx.checked_mul(wy)?;
    if area > DENSE_LIMIT || area > 8 * a.len() * b.len() + 256 {
        return None;
    }
    let mut buf = vec![0u64; area];
    for ((ai, aj), ca) in &a.terms {
        for ((bi, bj), cb) in &b.terms {
            let k = ((ai + bi - x0) as usize) * wy + (aj + bj - y0) as usize;
            buf[k] = add_mod(buf[k], mul_mod(*ca, *cb, m), m);
        }
    }
    let terms = buf
        .into_iter()
        .enumerate()
        .filter(|t| t.1 != 0)
        .map(|(k, c)| ((x0 + (k / wy) as i32, y0 + (k % wy) as i32), c))
        .collect();
    Some(Poly::from_sorted_unchecked(terms))
}

fn y_range(a: &BiLaurent) -> (i32, i32) {
    a.terms.iter().fold((i32::MAX, i32::MIN), |(lo, hi), t| {
        (lo.min(t.0 .1), hi.max(t.0 .1))
    })
}

impl BiLaurent {
    pub fn one() -> Self {
        Poly::from_sorted_unchecked(vec![((0, 0), 1)])
    }

    pub fn constant(c: u64, m: u64) -> Self {
        Poly::monomial((0, 0), c, m)
    }

    pub fn pow(&self, e: u64, m: u64) -> Self {
        self.pow_with(e, m, &Self::one())
    }

    /// Highest `x` exponent; `None` for the zero polynomial.
    pub fn deg_x(&self) -> Option<i32> {
        self.terms().last().map(|t| t.0 .0)
    }

    pub fn mindeg_x(&self) -> Option<i32> {
        self.terms().first().map(|t| t.0 .0)
    }

    pub fn deg_y(&self) -> Option<i32> {
        self.terms().iter().map(|t| t.0 .1).max()
    }

    pub fn mindeg_y(&self) -> Option<i32> {
        self.terms().iter().map(|t| t.0 .1).min()
    }

    /// Constant term.
    pub fn ct(&self) -> u64 {
        self.coeff(&(0, 0))
    }

    /// Cartier operator: keeps terms with exponents `= (r, s) mod p`, divides exponents by `p`.
    pub fn cartier(&self, r: u64, s: u64, p: u64) -> Self {
        let (r, s, p) = (r as i32, s as i32, p as i32);
        // (i - r) / p is monotone in i, so the lexicographic order survives.
        self.filter_terms(|&(i, j), _| i.rem_euclid(p) == r && j.rem_euclid(p) == s)
            .map_exponents_monotone(|&(i, j)| ((i - r) / p, (j - s) / p))
    }

    /// `S(x^p, y^p)`.
    pub fn frobenius(&self, p: u64) -> Self {
        let p = p as i32;
        self.map_exponents_monotone(|&(i, j)| (i * p, j * p))
    }

    /// Multiplies by `x^dx y^dy`.
    pub fn shift(&self, dx: i32, dy: i32) -> Self {
        self.map_exponents_monotone(|&(i, j)| (i + dx, j + dy))
    }

    /// Coefficient slice at a fixed exponent of `axis`, as a polynomial in the other variable.
    pub fn project(&self, axis: Axis, index: i32) -> UniLaurent {
        match axis {
            Axis::X => UniLaurent::from_sorted_unchecked(
                self.terms()
                    .iter()
                    .filter(|t| t.0 .0 == index)
                    .map(|t| (t.0 .1, t.1))
                    .collect(),
            ),
            Axis::Y => UniLaurent::from_sorted_unchecked(
                self.terms()
                    .iter()
                    .filter(|t| t.0 .1 == index)
                    .map(|t| (t.0 .0, t.1))
                    .collect(),
            ),
        }
    }

    /// Whether every term satisfies `j >= -i`.
    pub fn in_minkowski_cone(&self) -> bool {
        self.terms().iter().all(|t| t.0 .1 >= -t.0 .0)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: u64, vars: &[(&str, i32)]) -> fmt::Result {
    let factors: Vec<String> = vars
        .iter()
        .filter(|v| v.1 != 0)
        .map(|(name, e)| {
            if *e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    match (c, factors.is_empty()) {
        (_, true) => write!(f, "{c}"),
        (1, false) => write!(f, "{}", factors.join("*")),
        _ => write!(f, "{c}*{}", factors.join("*")),
    }
}

pub(super) fn write_terms<E, F>(f: &mut fmt::Formatter<'_>, poly: &Poly<E>, names: F) -> fmt::Result
where
    E: Exponent,
    F: Fn(&E) -> Vec<(&'static str, i32)>,
{
    if poly.is_zero() {
        return write!(f, "0");
    }
    for (k, (e, c)) in poly.terms().iter().rev().enumerate() {
        if k > 0 {
            write!(f, "+")?;
        }
        write_monomial(f, *c, &names(e))?;
    }
    Ok(())
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |&(i, j)| vec![("x", i), ("y", j)])
    }
}
