//! Skein families in the genus-two handlebody.
//!
//! `X_1*y^n` and `Y_1*y^n` are generated by a coupled two-term recursion;
//! `X_1*T_n(y)` and `Y_1*T_n(y)` have closed forms in the Chebyshev basis.
//! The skeins `X_i` satisfy a second-order recursion, and `sigma_n` is
//! `t X_1*T_n(y) + t^-1 xz T_n(y)`.
//!
//! The recursions are authoritative. Every closed form here is checked
//! against them, and Chebyshev indices that go negative at small `n` are
//! normalized (`S_{-1} = 0`, `S_{-m} = -S_{m-2}`).

use crate::chebyshev::{cheb_t_ints, normalize_s};
use crate::coeffs::{tm, LaurentPoly};
use crate::handlebody::{Basis, HbElement};
use crate::{Result, SkeinError};

/// The pair `(X_1*y^n, Y_1*y^n)` (or its `T_n(y)` counterpart).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPair {
    pub n: u32,
    pub xpart: HbElement,
    pub ypart: HbElement,
}

fn xz() -> HbElement {
    HbElement::monomial(1, 0, 1, LaurentPoly::one())
}

fn x2_plus_z2() -> HbElement {
    &HbElement::monomial(2, 0, 0, LaurentPoly::one()) + &HbElement::monomial(0, 0, 2, LaurentPoly::one())
}

fn y_pow(n: u32) -> HbElement {
    HbElement::monomial(0, n, 0, LaurentPoly::one())
}

fn sy(n: i64) -> HbElement {
    HbElement::s_y(n)
}

/// `X_1*y^0 = -t^4 y - t^2 xz`
pub fn x1_initial() -> HbElement {
    &HbElement::monomial(0, 1, 0, tm(4, -1)) + &xz().scale(&tm(2, -1))
}

/// `Y_1*y^0 = -t^2 - t^-2`
pub fn y1_initial() -> HbElement {
    HbElement::constant(tm(2, -1) + tm(-2, -1))
}

/// `(X_1*y^j, Y_1*y^j)` for `j = 0..=n_max`.
pub fn x1y1_sequence(n_max: u32) -> Vec<FamilyPair> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let (mut x, mut y) = (x1_initial(), y1_initial());
    let y_curve = HbElement::y();
    // X_{n+1} = t^4 y X_n + (t^-2 - t^6) Y_n + (1 - t^4)(x^2 + z^2) y^n
    // Y_{n+1} = t^-4 y Y_n + (t^2 - t^-6) X_n + 2(1 - t^-4) xz y^n
    let (cx, cy) = (tm(-2, 1) + tm(6, -1), tm(2, 1) + tm(-6, -1));
    let (ix, iy) = (tm(0, 1) + tm(4, -1), tm(0, 2) + tm(-4, -2));
    for n in 0..=n_max {
        out.push(FamilyPair { n, xpart: x.clone(), ypart: y.clone() });
        if n == n_max {
            break;
        }
        let yn = y_pow(n);
        let next_x = &(&y_curve.product(&x).shift(4) + &y.scale(&cx)) + &x2_plus_z2().product(&yn).scale(&ix);
        let next_y = &(&y_curve.product(&y).shift(-4) + &x.scale(&cy)) + &xz().product(&yn).scale(&iy);
        x = next_x;
        y = next_y;
    }
    out
}

pub fn x1y1_recursive(n: u32) -> FamilyPair {
    x1y1_sequence(n).pop().expect("sequence is nonempty")
}

/// `(X_1*T_n(y), Y_1*T_n(y))` by linearity from the recursion:
/// `T_n(y) = sum c_j y^j` gives `sum c_j X_1*y^j`.
pub fn x1y1_t_by_recursion(n: u32) -> FamilyPair {
    let seq = x1y1_sequence(n);
    let mut x = HbElement::zero(Basis::Monomial);
    let mut y = HbElement::zero(Basis::Monomial);
    for (j, c) in cheb_t_ints(n as i64).iter().enumerate() {
        let c = LaurentPoly::constant(c.clone());
        x = &x + &seq[j].xpart.scale(&c);
        y = &y + &seq[j].ypart.scale(&c);
    }
    FamilyPair { n, xpart: x, ypart: y }
}

fn require_positive(what: &'static str, n: i64) -> Result<()> {
    if n < 1 {
        return Err(SkeinError::IndexOutOfDomain { what, index: n, requires: "n >= 1" });
    }
    Ok(())
}

/// Closed form of `X_1*T_n(y)`, `n >= 1`.
pub fn x1_t_closed(n: i64) -> Result<HbElement> {
    require_positive("X_1*T_n(y)", n)?;
    let e = n as i32;
    let mut out = &(&sy(n + 1).scale(&tm(4 * e + 4, -1)) + &sy(n - 1).scale(&tm(-4 * e, -1)))
        + &(&sy(n - 1).shift(4 * e) + &sy(n - 3).shift(-4 * e + 4));
    out = &out + &xz().product(&sy(n)).scale(&tm(4 * e + 2, -1));
    out = &out + &xz().product(&sy(n - 2)).shift(-4 * e + 2);
    let c = tm(0, 1) + tm(4 * e, -1);
    for k in 0..n {
        let k32 = k as i32;
        out = &out + &x2_plus_z2().product(&sy(n - 2 * k - 1)).scale(&(&c * &tm(-4 * k32, 1)));
        out = &out + &xz().product(&sy(n - 2 * k - 2)).scale(&(&c * &tm(-4 * k32 - 2, 2)));
    }
    Ok(out)
}

/// Closed form of `Y_1*T_n(y)`, `n >= 1`.
pub fn y1_t_closed(n: i64) -> Result<HbElement> {
    require_positive("Y_1*T_n(y)", n)?;
    let e = n as i32;
    let mut out = sy(n).scale(&(tm(4 * e + 2, -1) + tm(-4 * e - 2, -1)));
    out = &out + &xz().product(&sy(n - 1)).scale(&(tm(-4 * e, 1) + tm(4 * e, -1)));
    out = &out + &sy(n - 2).scale(&(tm(4 * e - 2, 1) + tm(-4 * e + 2, 1)));
    let c = tm(0, 1) + tm(4 * e, -1);
    for k in 0..n {
        let k32 = k as i32;
        out = &out + &x2_plus_z2().product(&sy(n - 2 * k - 2)).scale(&(&c * &tm(-4 * k32 - 2, 1)));
        out = &out + &xz().product(&sy(n - 2 * k - 3)).scale(&(&c * &tm(-4 * k32 - 4, 2)));
    }
    Ok(out)
}

/// `X_1*T_n(y)` for every `n >= 0`: the closed form for `n >= 1` and
/// `2 X_1*y^0` at `n = 0` (since `T_0 = 2`).
pub fn x1_t(n: u32) -> HbElement {
    match n {
        0 => x1_initial().scale(&LaurentPoly::constant(2)),
        n => x1_t_closed(n as i64).expect("n >= 1"),
    }
}

/// `X_i` from `X_{i+2} = t^2 y X_{i+1} - t^4 X_i - 2 t^2 xz`,
/// `X_0 = -t^2 - t^-2`, `X_1 = -t^4 y - t^2 xz`.
pub fn big_x_sequence(i_max: u32) -> Vec<HbElement> {
    let mut out = vec![y1_initial(), x1_initial()];
    let y = HbElement::y();
    let inhom = xz().scale(&tm(2, -2));
    while out.len() <= i_max as usize {
        let k = out.len();
        let next = &(&y.product(&out[k - 1]).shift(2) - &out[k - 2].shift(4)) + &inhom;
        out.push(next);
    }
    out.truncate(i_max as usize + 1);
    out
}

pub fn big_x(i: u32) -> HbElement {
    big_x_sequence(i).pop().expect("sequence is nonempty")
}

/// Closed form of `X_i`:
/// `-t^{2i+2} S_i(y) - t^{2i} xz S_{i-1}(y) + t^{2i-2} S_{i-2}(y)
///  - 2 t^{2i-2} xz sum_{k=0}^{i-2} t^{-2k} S_{i-k-2}(y)`.
///
/// This is the orientation that satisfies the recursion; the same formula
/// with every `t`-exponent negated describes the mirror image of `X_i`.
pub fn big_x_closed(i: u32) -> HbElement {
    let (n, e) = (i as i64, i as i32);
    let mut out = &sy(n).scale(&tm(2 * e + 2, -1)) + &xz().product(&sy(n - 1)).scale(&tm(2 * e, -1));
    out = &out + &sy(n - 2).shift(2 * e - 2);
    for k in 0..(n - 1).max(0) {
        out = &out + &xz().product(&sy(n - k - 2)).scale(&tm(2 * e - 2 - 2 * k as i32, -2));
    }
    out
}

fn cheb_term(m: u32, n: i64, k: u32, c: LaurentPoly) -> HbElement {
    match normalize_s(n) {
        None => HbElement::zero(Basis::Chebyshev),
        Some((sign, idx)) => HbElement::chebyshev(m, idx, k, c.scale(&sign.into())),
    }
}

/// `sigma_n` from its closed form in the basis `S_m(x) S_n(y) S_k(z)`, `n >= 1`.
///
/// The `t^-1 xz T_n(y)` part enters as `t^-1 S_1(x) (S_n(y) - S_{n-2}(y)) S_1(z)`.
pub fn sigma(n: i64) -> Result<HbElement> {
    require_positive("sigma_n", n)?;
    let e = n as i32;
    let mut out = HbElement::zero(Basis::Chebyshev);
    let mut push = |m: u32, idx: i64, k: u32, c: LaurentPoly| {
        out = &out + &cheb_term(m, idx, k, c);
    };
    push(0, n + 1, 0, tm(4 * e + 5, -1));
    push(0, n - 1, 0, tm(-4 * e + 1, -1));
    push(0, n - 1, 0, tm(4 * e + 1, 1));
    push(0, n - 3, 0, tm(-4 * e + 5, 1));
    push(1, n, 1, tm(4 * e + 3, -1));
    push(1, n - 2, 1, tm(-4 * e + 3, 1));
    push(1, n, 1, tm(-1, 1));
    push(1, n - 2, 1, tm(-1, -1));
    let c = tm(0, 1) + tm(4 * e, -1);
    for k in 0..n {
        let k32 = k as i32;
        // t(1 - t^{4n}) t^{-4k} (S_2(x) + S_2(z) + 2) S_{n-2k-1}(y)
        let ck = &c * &tm(1 - 4 * k32, 1);
        push(2, n - 2 * k - 1, 0, ck.clone());
        push(0, n - 2 * k - 1, 2, ck.clone());
        push(0, n - 2 * k - 1, 0, ck.scale(&2.into()));
        // 2 t^-1 (1 - t^{4n}) t^{-4k} S_1(x) S_{n-2k-2}(y) S_1(z)
        push(1, n - 2 * k - 2, 1, &c * &tm(-1 - 4 * k32, 2));
    }
    Ok(out)
}

/// `sigma_n = t X_1*T_n(y) + t^-1 xz T_n(y)`, `n >= 1`.
pub fn sigma_by_definition(n: i64) -> Result<HbElement> {
    let x1t = x1_t_closed(n)?;
    Ok(&x1t.shift(1) + &xz().product(&HbElement::t_y(n)).shift(-1))
}
