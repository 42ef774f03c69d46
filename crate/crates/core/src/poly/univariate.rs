use super::bivariate::write_terms;
use super::Poly;
use std::fmt;

/// Laurent polynomial in one variable `z`.
pub type UniLaurent = Poly<i32>;

impl UniLaurent {
    pub fn one() -> Self {
        Poly::from_sorted_unchecked(vec![(0, 1)])
    }

    pub fn constant(c: u64, m: u64) -> Self {
        Poly::monomial(0, c, m)
    }

    pub fn pow(&self, e: u64, m: u64) -> Self {
        self.pow_with(e, m, &Self::one())
    }

    pub fn deg(&self) -> Option<i32> {
        self.terms().last().map(|t| t.0)
    }

    pub fn mindeg(&self) -> Option<i32> {
        self.terms().first().map(|t| t.0)
    }

    pub fn ct(&self) -> u64 {
        self.coeff(&0)
    }

    /// `Lambda_r`: keeps exponents `= r mod p` and divides them by `p`.
    pub fn cartier(&self, r: u64, p: u64) -> Self {
        let (r, p) = (r as i32, p as i32);
        self.filter_terms(|&e, _| e.rem_euclid(p) == r)
            .map_exponents_monotone(|&e| (e - r) / p)
    }

    pub fn shift(&self, k: i32) -> Self {
        self.map_exponents_monotone(|&e| e + k)
    }

    pub fn frobenius(&self, p: u64) -> Self {
        let p = p as i32;
        self.map_exponents_monotone(|&e| e * p)
    }
}

impl fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |&e| vec![("z", e)])
    }
}
