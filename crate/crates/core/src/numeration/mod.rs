//! The base `p/Q` numeration system.
//!
//! A state `S` is written as `(T_0 + T_1 p/Q + ... + T_{a-1} (p/Q)^{a-1}) Q^{p^{a-1}-1}`
//! with digits `T_k` whose coefficients lie in `{0, ..., p-1}`.

mod digits;
mod step;

pub use digits::{
    carry_normalize, initial_digits, initial_digits_from, lambda_direct, make_q, output_of, rep,
    val, BoxKind, DigitBox, DigitTuple, DEFAULT_MONOMIAL_BUDGET,
};
pub use step::{digit_step, digit_step_traced, digit_steps, Section, ZTable};
