//! Exact rational closed form of the first Fourier coefficient of the
//! twisted double Eisenstein series at integer parameters, and the
//! Petersson inner product of Cohen kernels built from it.
//!
//! `scaled_c1` returns the rational q with 2 (2pi)^(w-k-1) c(1) = q as a
//! sum of six terms: four involving the limit values of
//! Gamma(x) cos(pi x/2) zeta(x, 1/2) at odd integers, and two finite sums
//! coming from the special values of 2F1 at 1/2. The sign of the last two
//! terms is pinned against the convergent-series oracle and the analytic
//! continuation limit (both give the same sign; see the identity suite).

use num_traits::{One, Zero};

use super::bernoulli::rho;
use super::half::HalfPi;
use super::hypergeom::delta_sign;
use super::point::ParityPoint;
use super::rational::{binomial, factorial, rat, rat_int, two_pow, Rat};
use crate::error::{Error, Result};

fn gamma_int(n: i64) -> Rat {
    debug_assert!(n >= 1);
    Rat::from_integer(factorial(n as u64 - 1))
}

/// Limit of Gamma(x) cos(pi x/2) zeta(x, 1/2) at an odd integer m,
/// which equals (2^m - 1) (pi/2) rho(1 - m). Covers the pole collisions
/// at m <= 1 (including the residue value -pi/2 at m = 1) and the zeros
/// at odd m > 1 uniformly.
pub fn gamma_cos_zeta_limit(m: i64) -> Result<HalfPi> {
    if m % 2 == 0 {
        return Err(Error::Argument(format!(
            "gamma_cos_zeta_limit: argument {m} must be odd"
        )));
    }
    let coeff = (two_pow(m) - Rat::one()) * rho(1 - m)? / rat_int(2);
    Ok(HalfPi::new(coeff, 2))
}

fn sign_pow(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn require_f(p: &ParityPoint) -> Result<()> {
    if !p.opposite_parity() {
        return Err(Error::Domain(format!(
            "(s, w) = ({}, {}) must have opposite parity",
            p.s(),
            p.w()
        )));
    }
    if !p.in_f() {
        return Err(Error::Domain(format!(
            "(s, w) = ({}, {}) outside 2 ..= {} at weight {}",
            p.s(),
            p.w(),
            p.k() - 3,
            p.k()
        )));
    }
    Ok(())
}

/// The six summands of `scaled_c1`, in display order.
pub fn scaled_c1_terms(p: &ParityPoint) -> Result<[Rat; 6]> {
    require_f(p)?;
    let (k, s, w) = (p.k(), p.s(), p.w());
    let sgn = rat_int(p.sign_k());
    let nn = (k - 2 * w).abs();

    let t1 = (two_pow(s + w - k) - Rat::one()) / (two_pow(s) * gamma_int(s)) * rho(k - w - s + 1)?;
    let t2 = &sgn * (two_pow(w - s) - Rat::one()) / (two_pow(k - s) * gamma_int(k - s))
        * rho(s - w + 1)?;
    let t3 = (two_pow(k - s - w) - Rat::one()) * gamma_int(w)
        / (two_pow(k - s) * gamma_int(k - s) * gamma_int(k - w))
        * rho(s + w - k + 1)?;
    let t4 = &sgn * (two_pow(s - w) - Rat::one()) * gamma_int(w)
        / (two_pow(s) * gamma_int(s) * gamma_int(k - w))
        * rho(w - s + 1)?;

    // the two terminating sums; factors j + (beta - k - |n| + r)/2 with
    // beta = k - s and beta = s
    let big_sum = |beta: i64| -> Rat {
        let shift = beta - k - nn; // product factor j + (shift + r)/2
        let mut acc = Rat::zero();
        for r in 0..=nn {
            let mut prod = Rat::one();
            for j in 1..=(k + nn - 2) / 2 {
                prod *= rat(2 * j + shift + r, 2);
            }
            acc += rat_int(delta_sign(k - 2 * w, r as u32))
                * Rat::from_integer(binomial(nn as u64, r as u64))
                * prod;
        }
        acc
    };
    let common = gamma_int(w)
        / (rat_int(2) * gamma_int(s) * gamma_int(k - s) * gamma_int((nn + k) / 2));
    let t5 = sign_pow((nn + w - s + 1) / 2) * &common * big_sum(k - s);
    let t6 = sign_pow((nn + w + s + 1) / 2) * &common * big_sum(s);

    Ok([t1, t2, t3, t4, t5, t6])
}

/// The exact rational q with 2 (2pi)^(w-k-1) c(1) = q, for integers s, w
/// of opposite parity with 2 <= s, w <= k-3.
pub fn scaled_c1(p: &ParityPoint) -> Result<Rat> {
    Ok(scaled_c1_terms(p)?.into_iter().sum())
}

/// The last two summands of `scaled_c1`: the exact limits of the two
/// 2F1(.|1/2) continuation terms, scaled by 2 (2pi)^(w-k-1).
pub fn hyp_limit_pair(p: &ParityPoint) -> Result<(Rat, Rat)> {
    let t = scaled_c1_terms(p)?;
    Ok((t[4].clone(), t[5].clone()))
}

/// pi^-2 e^{i pi (s-w)/2} <C_k(., s; 1/2), C_k(., w)> as an exact rational,
/// for integers s, w of opposite parity with 2 <= s, w <= k-2.
///
/// Interior points evaluate `scaled_c1` directly; the boundary s = k-2 or
/// w = k-2 is first mapped inside by the two functional equations of the
/// kernel (s -> k-s picks up (-1)^{k/2}; w -> k-w picks up
/// (-1)^{k/2} Gamma(k-w)/Gamma(w)), tracking the exact factors.
pub fn inner_product(p: &ParityPoint) -> Result<Rat> {
    let (k, s, w) = (p.k(), p.s(), p.w());
    if !p.opposite_parity() {
        return Err(Error::Domain("opposite parity required".into()));
    }
    if !(2..=k - 2).contains(&s) || !(2..=k - 2).contains(&w) {
        return Err(Error::Domain(format!(
            "(s, w) = ({s}, {w}) outside 2 ..= {}",
            k - 2
        )));
    }
    let sgn = rat_int(p.sign_k());
    let mut factor = Rat::one();
    let mut s0 = s;
    let mut w0 = w;
    if s0 == k - 2 {
        s0 = 2;
        factor *= &sgn;
    }
    if w0 == k - 2 {
        w0 = 2;
        factor *= &sgn * gamma_int(k - 2) / gamma_int(2);
    }
    let base = scaled_c1(&ParityPoint::new(k, s0, w0)?)?;
    Ok(base * factor * two_pow(s) * gamma_int(k - 1) / (two_pow(k - 2) * gamma_int(w)))
}
