//! Exact rational arithmetic: Bernoulli machinery, gamma at half-integers,
//! terminating hypergeometric values, and the rational closed form of the
//! kernel inner product.
//!
//! Nothing in this module touches floating point.

pub mod bernoulli;
pub mod closed_form;
pub mod half;
pub mod hypergeom;
pub mod point;
pub mod rational;

pub use bernoulli::{bernoulli, bernoulli_poly, rho};
pub use closed_form::{gamma_cos_zeta_limit, hyp_limit_pair, inner_product, scaled_c1, scaled_c1_terms};
pub use half::{gamma_half, gamma_ratio, Half, HalfPi};
pub use hypergeom::{delta_sign, hyp2f1_half_closed, hyp2f1_terminating};
pub use point::ParityPoint;
pub use rational::{fraction_string, Rat};
