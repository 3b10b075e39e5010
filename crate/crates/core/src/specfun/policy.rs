use crate::error::{Error, Result};

/// Accuracy target shared by the series and quadrature engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    /// Requested absolute error; 1e-14 is the double-precision floor.
    pub target_abs_err: f64,
    /// Hard cap on series/quadrature work.
    pub max_terms: usize,
}

impl PrecisionPolicy {
    pub fn new(target_abs_err: f64, max_terms: usize) -> Result<Self> {
        if !(target_abs_err >= 1e-14) {
            return Err(Error::Argument(format!(
                "target_abs_err = {target_abs_err} below the 1e-14 floor"
            )));
        }
        if max_terms == 0 {
            return Err(Error::Argument("max_terms must be positive".into()));
        }
        Ok(PrecisionPolicy { target_abs_err, max_terms })
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { target_abs_err: 1e-12, max_terms: 1_000_000 }
    }
}
