//! Orbits, periods, factorization, size bounds and residue statistics.

mod bounds;
mod compat;
pub mod factor;
mod landau;
mod orbit;
mod period;
mod stats;

pub use bounds::{
    bound_report, diagonal_bound_report, v_exponent, w_exponent, BivariateDiagonalBound,
    BoundReport, DiagonalBoundReport,
};
pub use compat::{border_commutes, digit_compat_check, Border};
pub use factor::{factor_fp, FpFactorization, FACTOR_SEED};
pub use landau::{achievable_lcms, landau_g, lcm_partitions};
pub use orbit::{
    lambda0_univariate, orbit_of, orbit_zero, univariate_bound, univariate_orbit, OrbitRecord,
    UnivariateOrbit, DEFAULT_ORBIT_BUDGET,
};
pub use period::{detect_period, inverse_series, period_rational, prime_field_bound, PeriodReport};
pub use stats::{residue_stats, ResidueStats};

/// Multiplicative order of `a` modulo `n`, for `gcd(a, n) = 1`.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = crate::modarith::mul_mod(x, a, n);
        k += 1;
    }
    k
}
