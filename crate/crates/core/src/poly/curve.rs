use super::{BiLaurent, MultiPoly};
use crate::error::{Error, Result};
use crate::modarith::RingSpec;

/// A validated curve `P(x, y) = 0` over `Z/p^alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    pub ring: RingSpec,
    /// `P` reduced mod `p^alpha`.
    pub p_poly: MultiPoly,
    /// `deg_x(P mod p)`.
    pub h: u32,
    /// `deg_y(P mod p)`.
    pub d: u32,
    /// `h_k = deg_x(P mod p^(k+1))` for `k < alpha`.
    pub h_k: Vec<u32>,
    pub d_k: Vec<u32>,
    /// `h = 0`: the series is a polynomial mod `p`.
    pub trivial: bool,
}

pub fn curve_derived(p_poly: &MultiPoly, ring: RingSpec) -> Result<CurveSpec> {
    if p_poly.nvars != 2 {
        return Err(Error::InvalidCurve(format!(
            "expected a polynomial in x and y, got {} variables",
            p_poly.nvars
        )));
    }
    if !p_poly.is_polynomial() {
        return Err(Error::InvalidCurve("P has negative exponents".into()));
    }
    let p_poly = p_poly.reduce(ring.modulus);
    if p_poly.ct() != 0 {
        return Err(Error::InvalidCurve("P(0,0) is not 0".into()));
    }
    if p_poly.coeff(&[0, 1]).is_multiple_of(ring.p) {
        return Err(Error::InvalidCurve(format!(
            "dP/dy(0,0), the coefficient of y, is not a unit mod {}",
            ring.p
        )));
    }
    let degs = |m: u64| {
        let r = p_poly.reduce(m);
        (
            r.degree(0).unwrap_or(0) as u32,
            r.degree(1).unwrap_or(0) as u32,
        )
    };
    let (h, d) = degs(ring.p);
    let (h_k, d_k) = (0..ring.alpha).map(|k| degs(ring.p_pow(k + 1))).unzip();
    Ok(CurveSpec {
        ring,
        p_poly,
        h,
        d,
        h_k,
        d_k,
        trivial: h == 0,
    })
}

impl CurveSpec {
    pub fn parse(expr: &str, ring: RingSpec) -> Result<Self> {
        curve_derived(&super::parse_bivariate(expr, ring.modulus)?, ring)
    }

    /// `P / y` mod `p^alpha`.
    pub fn p_over_y(&self) -> BiLaurent {
        self.p_poly.to_bilaurent().shift(0, -1)
    }

    /// `y dP/dy` mod `p^alpha`.
    pub fn y_dp_dy(&self) -> BiLaurent {
        self.p_poly
            .euler_derivative(1, self.ring.modulus)
            .to_bilaurent()
    }

    /// The same curve reduced into `Z/p^beta`.
    pub fn at_alpha(&self, beta: u32) -> Result<CurveSpec> {
        curve_derived(&self.p_poly, self.ring.with_alpha(beta)?)
    }
}
