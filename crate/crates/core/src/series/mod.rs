//! Exact polynomial and rational power-series engine.
//!
//! Every generating function here has a denominator with constant term 1,
//! so coefficients come from the linear recurrence the denominator induces.

mod catalog;
mod formulas;
mod poly;
mod qbinomial;
mod rational;

pub use catalog::{gf_catalog, GfName};
pub use formulas::{
    binomial, closed_form, fib_convolution, recurrence_sequence, recurrence_step, ClosedFormName,
    ConvolutionName, RecurrenceName,
};
pub use poly::IntPoly;
pub use qbinomial::{perimeter_q_row, q_binomial};
pub use rational::{series_coeffs, RationalSeries};
