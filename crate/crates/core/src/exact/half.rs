//! Exact values of the form rational * pi^(e/2), and the gamma function
//! on half-integers.
//!
//! Gamma ratios with integer offset are evaluated as rising-factorial
//! products, which is the limit value when numerator and denominator are
//! both at poles: Gamma(y+m+eps) = (y+eps)_m Gamma(y+eps) holds exactly,
//! so the ratio tends to (y)_m even through pole collisions. A zero factor
//! in a numerator product is a legitimate zero; a zero factor in a
//! denominator product is a genuine pole and is reported as an error.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::{factorial, pow_i, rat, rat_int, Rat};
use crate::error::{Error, Result};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Half(pub i64);

impl Half {
    pub fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    pub fn value(self) -> Rat {
        rat(self.0, 2)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// coefficient * pi^(pi_half_exponent / 2), exact.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPi {
    coeff: Rat,
    pi_half_exponent: i64,
}

impl HalfPi {
    pub fn new(coeff: Rat, pi_half_exponent: i64) -> Self {
        // zero is normalized to exponent 0 so equality is structural
        if coeff.is_zero() {
            HalfPi { coeff, pi_half_exponent: 0 }
        } else {
            HalfPi { coeff, pi_half_exponent }
        }
    }

    pub fn from_rat(coeff: Rat) -> Self {
        Self::new(coeff, 0)
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn pi_half_exponent(&self) -> i64 {
        self.pi_half_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The exact rational underneath, if the pi power is trivial.
    pub fn as_rational(&self) -> Result<Rat> {
        if self.pi_half_exponent == 0 || self.is_zero() {
            Ok(self.coeff.clone())
        } else {
            Err(Error::Domain(format!(
                "value carries pi^({}/2), not rational",
                self.pi_half_exponent
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.pi_half_exponent + other.pi_half_exponent)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Pole("division by exact zero".into()));
        }
        Ok(Self::new(
            &self.coeff / &other.coeff,
            self.pi_half_exponent - other.pi_half_exponent,
        ))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.coeff * r, self.pi_half_exponent)
    }

    /// Addition is only closed for matching pi powers.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_half_exponent != other.pi_half_exponent {
            return Err(Error::Argument(format!(
                "incompatible pi exponents {} vs {}",
                self.pi_half_exponent, other.pi_half_exponent
            )));
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.pi_half_exponent))
    }

    pub fn to_f64(&self) -> f64 {
        let pi_pow = (std::f64::consts::PI).powf(self.pi_half_exponent as f64 / 2.0);
        super::rational::to_f64(&self.coeff) * pi_pow
    }
}

impl fmt::Display for HalfPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_half_exponent == 0 {
            write!(f, "{}", self.coeff)
        } else if self.pi_half_exponent % 2 == 0 {
            write!(f, "{} * pi^{}", self.coeff, self.pi_half_exponent / 2)
        } else {
            write!(f, "{} * pi^({}/2)", self.coeff, self.pi_half_exponent)
        }
    }
}

/// Gamma at a positive half-integer: Gamma(n) = (n-1)!,
/// Gamma(n + 1/2) = (2n)!/(4^n n!) * pi^(1/2).
pub fn gamma_half(x: Half) -> Result<HalfPi> {
    if !x.is_positive() {
        return Err(Error::Pole(format!(
            "gamma_half({x}): nonpositive arguments only resolve inside ratios"
        )));
    }
    if x.is_integer() {
        let n = (x.0 / 2) as u64;
        Ok(HalfPi::from_rat(Rat::from_integer(factorial(n - 1))))
    } else {
        let n = ((x.0 - 1) / 2) as u64;
        let coeff = Rat::from_integer(factorial(2 * n))
            / (pow_i(&rat_int(4), n as i64) * Rat::from_integer(factorial(n)));
        Ok(HalfPi::new(coeff, 1))
    }
}

/// Gamma(x)/Gamma(y) for half-integers with x - y an integer, as an exact
/// rising-factorial product. Ascending ratios may be zero; descending
/// ratios with a vanishing factor are poles.
pub fn gamma_ratio(x: Half, y: Half) -> Result<Rat> {
    if (x.0 - y.0) % 2 != 0 {
        return Err(Error::Argument(format!(
            "gamma_ratio({x}, {y}): difference is not an integer"
        )));
    }
    let d = (x.0 - y.0) / 2;
    if d >= 0 {
        // (y)(y+1)...(x-1)
        let mut acc = Rat::one();
        for i in 0..d {
            acc *= Half(y.0 + 2 * i).value();
        }
        Ok(acc)
    } else {
        // 1 / [(x)(x+1)...(y-1)]
        let mut acc = Rat::one();
        for i in 0..(-d) {
            let factor = Half(x.0 + 2 * i).value();
            if factor.is_zero() {
                return Err(Error::Pole(format!(
                    "gamma_ratio({x}, {y}): zero factor in denominator product"
                )));
            }
            acc *= factor;
        }
        Ok(acc.recip())
    }
}
