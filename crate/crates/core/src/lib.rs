//! Fourier coefficients of the twisted double Eisenstein series
//! E*_{s,k-s}(z, w; 1/2), their analytic continuation, and the exact
//! rational value of the Petersson inner product of Cohen kernels
//! pi^-2 e^{i pi (s-w)/2} <C_k(., s; 1/2), C_k(., w)>.
//!
//! Two independent computation routes are kept side by side throughout:
//! exact rational closed forms in [`exact`], and truncated-series /
//! quadrature evaluation in [`specfun`], [`eisenstein`] and [`spectral`].
//! The [`suite`] module bundles the cross-checks between them.

pub mod error;
pub mod exact;

pub use error::{Error, Result};
