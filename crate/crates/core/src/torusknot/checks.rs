//! Identities in the torus-knot module. Each one has a `_residual` form
//! returning `left - right` as a reduced element (zero means it holds) and,
//! where it is a named check, a boolean wrapper in the skein-module
//! convention.

use std::ops::RangeInclusive;

use super::{Convention, KnotModule, TkElement};
use crate::coeffs::LaurentPoly;
use crate::families::{big_x, x1_t};
use crate::handlebody::HbElement;
use crate::Result;

fn exp(n: i64) -> i32 {
    i32::try_from(n).expect("exponent out of range")
}

fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Y = t S_{p-1}(y) + t^-1 S_p(y)`
pub fn y_element(m: &KnotModule) -> TkElement {
    let p = m.p() as i64;
    &m.s_y(p - 1).shift(1) + &m.s_y(p).shift(-1)
}

/// `t^{-2n-1} S_{p+n} + t^{2n+1} S_{p-n-1} - (-1)^n S_{2n}(x) Y`
pub fn kbsm_relation_residual(m: &KnotModule, n: i64) -> TkElement {
    let p = m.p() as i64;
    let left = &m.s_y(p + n).shift(-2 * exp(n) - 1) + &m.s_y(p - n - 1).shift(2 * exp(n) + 1);
    &left - &y_element(m).mul_sx(2 * n).scale_int(parity_sign(n))
}

/// `t^{-2n-1} S_{p+n} - t^{2n+1} S_{p-n-1} - S_{2n}(x) (t^-1 S_p - t S_{p-1})`
pub fn rt_relation_residual(m: &KnotModule, n: i64) -> TkElement {
    let p = m.p() as i64;
    let left = &m.s_y(p + n).shift(-2 * exp(n) - 1) - &m.s_y(p - n - 1).shift(2 * exp(n) + 1);
    let bracket = &m.s_y(p).shift(-1) - &m.s_y(p - 1).shift(1);
    &left - &bracket.mul_sx(2 * n)
}

/// `embed(bar(X_1*T_n(y))) - embed(T_n(y) bar(X_{2p}))`
pub fn handle_slide_residual(m: &KnotModule, n: u32) -> TkElement {
    let lhs = m.embed(&x1_t(n).mirror());
    let rhs = m.embed(&HbElement::t_y(n as i64).product(&big_x(2 * m.p()).mirror()));
    &lhs - &rhs
}

pub fn handle_slide_check(p: i64, n: u32) -> Result<bool> {
    Ok(handle_slide_residual(&KnotModule::new(p, Convention::Kbsm)?, n).is_zero())
}

/// `A_n = sum_{k=0}^{2n-1} t^{2k} S_{n-k} + sum_{k=1}^{2p-2} t^{-2k} S_{n+k}`
pub fn a_n(m: &KnotModule, n: i64) -> TkElement {
    a_n_from(m, n, 0)
}

pub(crate) fn a_n_from(m: &KnotModule, n: i64, k0: i64) -> TkElement {
    let p = m.p() as i64;
    let mut out = m.zero();
    for k in k0..2 * n {
        out = &out + &m.s_y(n - k).shift(2 * exp(k));
    }
    for k in 1..=2 * p - 2 {
        out = &out + &m.s_y(n + k).shift(-2 * exp(k));
    }
    out
}

/// `A_{n+1} - t^2 A_n - (-1)^{p+n-1} t^{-2p+2n+3} S_{2n+2p-2}(x) Y`
pub fn telescope_residual(m: &KnotModule, n: i64) -> TkElement {
    telescope_residual_with(m, n, 0, 3)
}

pub(crate) fn telescope_residual_with(m: &KnotModule, n: i64, k0: i64, offset: i32) -> TkElement {
    let p = m.p() as i64;
    let left = &a_n_from(m, n + 1, k0) - &a_n_from(m, n, k0).shift(2);
    let right = y_element(m)
        .mul_sx(2 * n + 2 * p - 2)
        .scale(&LaurentPoly::monomial(exp(-2 * p + 2 * n) + offset, parity_sign(p + n - 1)));
    &left - &right
}

pub fn a_n_telescope_check(p: i64, ns: RangeInclusive<i64>) -> Result<bool> {
    let m = KnotModule::new(p, Convention::Kbsm)?;
    Ok(ns.into_iter().all(|n| telescope_residual(&m, n).is_zero()))
}

/// `(S_{2n+2p-2}(x) + S_{2n+2p-4}(x)) Y - (-1)^{p+n} t^{2p-2n-1} x^2 A_n`
pub fn induction_residual(m: &KnotModule, n: i64) -> TkElement {
    let p = m.p() as i64;
    let y = y_element(m);
    let left = &y.mul_sx(2 * n + 2 * p - 2) + &y.mul_sx(2 * n + 2 * p - 4);
    let right =
        a_n(m, n).mul_x_pow(2).scale(&LaurentPoly::monomial(exp(2 * p - 2 * n - 1), parity_sign(p + n)));
    &left - &right
}

pub fn induction_identity_check(p: i64, n: i64) -> Result<bool> {
    Ok(induction_residual(&KnotModule::new(p, Convention::Kbsm)?, n).is_zero())
}

/// The homogeneous recursion in the Reshetikhin-Turaev convention:
/// `t^{-2n-3} S_{n+p+1} + t^{2n+3} S_{n-p} - t^{-2n-1}(x^2-2) S_{n+p}
///  - t^{2n+1}(x^2-2) S_{n-p-1} + t^{-2n+1} S_{n+p-1} + t^{2n-1} S_{n-p-2}`.
pub fn rt_recursion_residual(m: &KnotModule, n: i64) -> TkElement {
    let p = m.p() as i64;
    let e = exp(n);
    let x2m2 = |a: TkElement| &a.mul_x_pow(2) - &a.scale_int(2);
    [
        m.s_y(n + p + 1).shift(-2 * e - 3),
        m.s_y(n - p).shift(2 * e + 3),
        -x2m2(m.s_y(n + p)).shift(-2 * e - 1),
        -x2m2(m.s_y(n - p - 1)).shift(2 * e + 1),
        m.s_y(n + p - 1).shift(-2 * e + 1),
        m.s_y(n - p - 2).shift(2 * e - 1),
    ]
    .into_iter()
    .fold(m.zero(), |a, b| &a + &b)
}

pub fn rt_recursion_check(p: i64, n: i64) -> Result<bool> {
    Ok(rt_recursion_residual(&KnotModule::new(p, Convention::Rt)?, n).is_zero())
}
