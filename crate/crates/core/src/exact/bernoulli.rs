//! Bernoulli numbers and polynomials, exact.

use std::sync::Mutex;

use num_traits::One;

use super::rational::{binomial, factorial, pow_i, rat, rat_int, Rat};
use crate::error::{Error, Result};

static CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// B_n with the convention B_1 = -1/2, via the defining recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0. Values are memoized; the cache is
/// lock-protected so concurrent callers are safe.
pub fn bernoulli(n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(Error::Argument(format!("bernoulli: n = {n} < 0")));
    }
    let n = n as usize;
    let mut cache = CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = Rat::from_integer(0.into());
        for (j, bj) in cache.iter().enumerate() {
            acc += Rat::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        let bm = -acc / rat_int(m as i64 + 1);
        cache.push(bm);
    }
    Ok(cache[n].clone())
}

/// B_n(x) = sum_j C(n, j) B_j x^{n-j}.
pub fn bernoulli_poly(n: i64, x: &Rat) -> Result<Rat> {
    if n < 0 {
        return Err(Error::Argument(format!("bernoulli_poly: n = {n} < 0")));
    }
    let mut acc = Rat::from_integer(0.into());
    for j in 0..=n {
        acc += Rat::from_integer(binomial(n as u64, j as u64)) * bernoulli(j)? * pow_i(x, n - j);
    }
    Ok(acc)
}

/// rho(2m) = (-1)^{m+1} B_{2m} / (2m)! for m >= 0, and 0 for negative
/// arguments. Positive odd arguments are not in the domain.
pub fn rho(n: i64) -> Result<Rat> {
    if n < 0 {
        return Ok(Rat::from_integer(0.into()));
    }
    if n % 2 != 0 {
        return Err(Error::Argument(format!("rho: positive odd argument {n}")));
    }
    let m = n / 2;
    let sign = if m % 2 == 0 { -1 } else { 1 };
    Ok(rat(sign, 1) * bernoulli(n)? / Rat::from_integer(factorial(n as u64)))
}
