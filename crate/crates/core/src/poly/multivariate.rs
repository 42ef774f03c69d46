use super::bivariate::write_terms;
use super::{BiLaurent, Exponent, Poly, UniLaurent};
use std::fmt;

/// Exponent vector of a multivariate monomial.
pub type MultiExp = Vec<i32>;

impl Exponent for Vec<i32> {
    fn add(&self, o: &Self) -> Self {
        self.iter().zip(o).map(|(a, b)| a + b).collect()
    }
    fn sub(&self, o: &Self) -> Self {
        self.iter().zip(o).map(|(a, b)| a - b).collect()
    }
    fn min_with(&self, o: &Self) -> Self {
        self.iter().zip(o).map(|(a, b)| *a.min(b)).collect()
    }
    fn ge_all(&self, o: &Self) -> bool {
        self.iter().zip(o).all(|(a, b)| a >= b)
    }
}

/// Polynomial in `nvars` variables with non-negative exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    pub nvars: usize,
    pub poly: Poly<MultiExp>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            poly: Poly::zero(),
        }
    }

    pub fn constant(nvars: usize, c: u64, m: u64) -> Self {
        MultiPoly {
            nvars,
            poly: Poly::monomial(vec![0; nvars], c, m),
        }
    }

    /// The variable with index `k`.
    pub fn var(nvars: usize, k: usize, m: u64) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        MultiPoly {
            nvars,
            poly: Poly::monomial(e, 1, m),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiExp, u64)>>(
        nvars: usize,
        iter: I,
        m: u64,
    ) -> Self {
        let poly = Poly::from_terms(iter, m);
        assert!(poly.terms().iter().all(|t| t.0.len() == nvars));
        MultiPoly { nvars, poly }
    }

    fn wrap(&self, poly: Poly<MultiExp>) -> Self {
        MultiPoly {
            nvars: self.nvars,
            poly,
        }
    }

    pub fn terms(&self) -> &[(MultiExp, u64)] {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, e: &[i32]) -> u64 {
        self.poly.coeff(&e.to_vec())
    }

    pub fn ct(&self) -> u64 {
        self.poly.coeff(&vec![0; self.nvars])
    }

    pub fn add(&self, o: &Self, m: u64) -> Self {
        self.wrap(self.poly.add(&o.poly, m))
    }

    pub fn sub(&self, o: &Self, m: u64) -> Self {
        self.wrap(self.poly.sub(&o.poly, m))
    }

    pub fn scale(&self, c: u64, m: u64) -> Self {
        self.wrap(self.poly.scale(c, m))
    }

    pub fn reduce(&self, m: u64) -> Self {
        self.wrap(self.poly.reduce(m))
    }

    pub fn mul(&self, o: &Self, m: u64) -> Self {
        assert_eq!(self.nvars, o.nvars);
        self.wrap(self.poly.mul(&o.poly, m))
    }

    pub fn pow(&self, e: u64, m: u64) -> Self {
        let one = Poly::monomial(vec![0; self.nvars], 1, m);
        self.wrap(self.poly.pow_with(e, m, &one))
    }

    /// Degree in variable `k`; `None` for zero.
    pub fn degree(&self, k: usize) -> Option<i32> {
        self.terms().iter().map(|t| t.0[k]).max()
    }

    /// Total degree.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms().iter().map(|t| t.0.iter().sum()).max()
    }

    /// Diagonal Cartier operator `Lambda_{r,...,r}`.
    pub fn cartier_diagonal(&self, r: u64, p: u64) -> Self {
        let (r, p) = (r as i32, p as i32);
        self.wrap(
            self.poly
                .filter_terms(|e, _| e.iter().all(|&v| v.rem_euclid(p) == r))
                .map_exponents_monotone(|e| e.iter().map(|&v| (v - r) / p).collect()),
        )
    }

    /// `x_k * dP/dx_k`.
    pub fn euler_derivative(&self, k: usize, m: u64) -> Self {
        self.wrap(Poly::from_terms(
            self.terms()
                .iter()
                .map(|(e, c)| (e.clone(), crate::modarith::mul_mod(*c, e[k] as u64 % m, m))),
            m,
        ))
    }

    /// Reinterprets a bivariate polynomial; panics on negative exponents.
    pub fn from_bilaurent(b: &BiLaurent) -> Self {
        MultiPoly {
            nvars: 2,
            poly: Poly::from_sorted_unchecked(
                b.terms()
                    .iter()
                    .map(|&((i, j), c)| {
                        assert!(i >= 0 && j >= 0, "negative exponent");
                        (vec![i, j], c)
                    })
                    .collect(),
            ),
        }
    }

    pub fn to_univariate(&self) -> UniLaurent {
        assert_eq!(self.nvars, 1);
        Poly::from_sorted_unchecked(self.terms().iter().map(|(e, c)| (e[0], *c)).collect())
    }

    /// Whether all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms().iter().all(|(e, _)| e.iter().all(|&v| v >= 0))
    }

    pub fn to_bilaurent(&self) -> BiLaurent {
        assert_eq!(self.nvars, 2);
        Poly::from_sorted_unchecked(
            self.terms()
                .iter()
                .map(|(e, c)| ((e[0], e[1]), *c))
                .collect(),
        )
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::variable_names(self.nvars);
        write_terms(f, &self.poly, |e| {
            names.iter().copied().zip(e.iter().copied()).collect()
        })
    }
}
