//! Terminating Gauss hypergeometric series and the exact closed form of
//! 2F1(a, b; (a+b+n+1)/2 | 1/2) for integer parameters.

use num_traits::{One, Zero};

use super::half::{gamma_ratio, Half, HalfPi};
use super::rational::{binomial, rat_int, Rat};
use crate::error::{Error, Result};

/// (-1)^r for n >= 0, and +1 for n < 0.
pub fn delta_sign(n: i64, r: u32) -> i64 {
    if n >= 0 && r % 2 == 1 {
        -1
    } else {
        1
    }
}

/// sum_{j=0}^{-a} (a)_j (b)_j / ((c)_j j!) z^j for a <= 0, exact.
///
/// Errors when (c)_j vanishes before the series terminates, i.e. for
/// c in {0, -1, ..., a+1}.
pub fn hyp2f1_terminating(a: i64, b: i64, c: i64, z: &Rat) -> Result<Rat> {
    if a > 0 {
        return Err(Error::Argument(format!("hyp2f1_terminating: a = {a} > 0")));
    }
    let mut acc = Rat::one();
    let mut term = Rat::one();
    for j in 0..(-a) {
        let den = c + j;
        if den == 0 {
            return Err(Error::Pole(format!(
                "hyp2f1_terminating: (c)_j vanishes at c = {c}, j = {}",
                j + 1
            )));
        }
        term = term * rat_int(a + j) * rat_int(b + j) * z / (rat_int(den) * rat_int(j + 1));
        acc += &term;
    }
    Ok(acc)
}

/// 2F1(a, b; (a+b+n+1)/2 | 1/2) in closed form, for integers with a+b+n
/// odd and c = (a+b+n+1)/2 >= 1.
///
/// Every gamma ratio with integer offset is evaluated as a rising-factorial
/// product; the lone pairings Gamma(c) vs Gamma(b/2) or Gamma((b+1)/2) and
/// Gamma(1/2) vs the other one always have integer offset (their parities
/// are complementary). An unresolvable pole (a denominator product with a
/// zero factor) is reported, never silently dropped.
pub fn hyp2f1_half_closed(a: i64, b: i64, n: i64) -> Result<HalfPi> {
    if (a + b + n) % 2 == 0 {
        return Err(Error::Argument(format!(
            "hyp2f1_half_closed({a},{b},{n}): a+b+n must be odd"
        )));
    }
    let c = (a + b + n + 1) / 2;
    if c <= 0 {
        return Err(Error::Domain(format!(
            "hyp2f1_half_closed({a},{b},{n}): c = {c} is a nonpositive integer"
        )));
    }
    let nn = n.unsigned_abs() as i64;

    // Gamma((a-b-|n|+1)/2) / Gamma((a-b+n+1)/2); identical arguments for n < 0.
    let r_front = gamma_ratio(Half(a - b - nn + 1), Half(a - b + n + 1))?;

    // Gamma(1/2) Gamma(c) / (Gamma(b/2) Gamma((b+1)/2)), split into the two
    // integer-offset pairings decided by the parity of b.
    let (r_c, r_half) = if b % 2 == 0 {
        (gamma_ratio(Half::from_int(c), Half(b))?, gamma_ratio(Half(1), Half(b + 1))?)
    } else {
        (gamma_ratio(Half::from_int(c), Half(b + 1))?, gamma_ratio(Half(1), Half(b))?)
    };

    let mut sum = Rat::zero();
    for r in 0..=nn {
        let ratio = gamma_ratio(Half(b + r), Half(a - nn + r + 1))?;
        sum += rat_int(delta_sign(n, r as u32))
            * Rat::from_integer(binomial(nn as u64, r as u64))
            * ratio;
    }

    Ok(HalfPi::from_rat(r_front * r_c * r_half * sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn delta_table() {
        assert_eq!(delta_sign(-3, 5), 1);
        assert_eq!(delta_sign(2, 3), -1);
        assert_eq!(delta_sign(0, 0), 1);
        assert_eq!(delta_sign(0, 1), -1);
    }

    #[test]
    fn terminating_small() {
        let half = rat(1, 2);
        // empty product
        assert_eq!(hyp2f1_terminating(0, 7, 3, &half).unwrap(), rat(1, 1));
        // two-term series: 1 - b/(2c)
        assert_eq!(hyp2f1_terminating(-1, 4, 6, &half).unwrap(), rat(1, 1) - rat(4, 12));
        // three-term expansion done by hand: 1 - 3/5 + 1/10
        assert_eq!(hyp2f1_terminating(-2, 3, 5, &half).unwrap(), rat(1, 2));
        // (c)_j pole inside the range
        assert!(hyp2f1_terminating(-3, 2, -1, &half).is_err());
        assert!(hyp2f1_terminating(1, 2, 3, &half).is_err());
    }

    #[test]
    fn closed_form_constant_series() {
        // a = 0 forces the left side to 1; closed form must agree whenever
        // its ratios resolve (n < b for a = 0).
        for b in 1..=8 {
            for n in (1 - b)..(b) {
                if (b + n) % 2 == 0 {
                    continue;
                }
                if (b + n + 1) / 2 < 1 {
                    continue;
                }
                let v = hyp2f1_half_closed(0, b, n).unwrap();
                assert_eq!(v.as_rational().unwrap(), rat(1, 1), "b={b} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_matches_terminating() {
        // c = 3 gives n = 2c - 1 - a - b = 4 with (a, b) = (-2, 3)
        let closed = hyp2f1_half_closed(-2, 3, 4).unwrap().as_rational().unwrap();
        let series = hyp2f1_terminating(-2, 3, 3, &rat(1, 2)).unwrap();
        assert_eq!(closed, series);
    }

    #[test]
    fn closed_form_pole_reported() {
        // prefactor ratio hits Gamma(0) in a denominator product
        assert!(matches!(hyp2f1_half_closed(1, 1, 1), Err(Error::Pole(_))));
    }
}
