//! Helpers on arbitrary-precision rationals.
//!
//! `Rat` is always kept canonical by construction (reduced, positive
//! denominator); see the proptests for the invariant checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// n! as a big integer. Arguments here stay small (< 100).
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// base^e for integer e of either sign; base must be nonzero when e < 0.
pub fn pow_i(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let p = base.pow(e.unsigned_abs() as i32);
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

/// 2^e as an exact rational, e of either sign.
pub fn two_pow(e: i64) -> Rat {
    pow_i(&rat_int(2), e)
}

/// Renders as "numerator/denominator" in base 10, including a unit denominator.
pub fn fraction_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Rounded f64 value; inputs in this crate stay well inside f64 range.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division when numer/denom individually overflow
        let digits = r.denom().to_string().len() as u32;
        let scale = BigInt::from(10u32).pow(digits.min(300));
        let scaled = (r.numer() * &scale) / r.denom();
        scaled.to_f64().unwrap_or(f64::INFINITY) / 10f64.powi(digits.min(300) as i32)
    })
}

pub fn is_zero(r: &Rat) -> bool {
    r.numer().is_zero()
}

pub fn abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}
