//! The quantum torus `R[L^±1, M^±1] / (LM - t^2 ML)` with `R = Z[t^±1][x]`,
//! acting on sequences by `(M f)(n) = t^{2n} f(n)` and `(L f)(n) = f(n+1)`.
//!
//! Elements are stored in the normal form `sum c_{a,b}(x) M^a L^b`, so that
//! `(M^a L^b)(M^c L^d) = t^{2bc} M^{a+c} L^{b+d}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::{uni_from_ints, LaurentPoly, UniPoly};
use crate::torusknot::{KnotSequence, TkElement};

fn exp(v: i64) -> i32 {
    i32::try_from(v).expect("exponent out of range")
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct QtElement {
    terms: BTreeMap<(i32, i32), UniPoly>,
}

impl QtElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, UniPoly::one())
    }

    /// `c(x) M^a L^b`
    pub fn monomial(a: i32, b: i32, c: UniPoly) -> Self {
        let mut out = Self::zero();
        out.add_term((a, b), c);
        out
    }

    /// A central element `c(x)`.
    pub fn scalar(c: UniPoly) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `t^k`
    pub fn t(k: i32) -> Self {
        Self::scalar(UniPoly::constant(LaurentPoly::t(k)))
    }

    pub fn m_pow(a: i32) -> Self {
        Self::monomial(a, 0, UniPoly::one())
    }

    pub fn l_pow(b: i32) -> Self {
        Self::monomial(0, b, UniPoly::one())
    }

    pub fn m() -> Self {
        Self::m_pow(1)
    }

    pub fn l() -> Self {
        Self::l_pow(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &UniPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `M^a L^b`.
    pub fn coeff(&self, a: i32, b: i32) -> UniPoly {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, key: (i32, i32), c: UniPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.scale(c));
        }
        out
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.scale(&LaurentPoly::t(k))
    }
}

/// `x^2 - 2`
pub fn x2_minus_2() -> UniPoly {
    uni_from_ints(&[-2, 0, 1])
}

pub fn qt_mul(a: &QtElement, b: &QtElement) -> QtElement {
    let mut out = QtElement::zero();
    for (&(a1, b1), c1) in &a.terms {
        for (&(a2, b2), c2) in &b.terms {
            let twist = LaurentPoly::t(exp(2 * b1 as i64 * a2 as i64));
            let key = (exp(a1 as i64 + a2 as i64), exp(b1 as i64 + b2 as i64));
            out.add_term(key, (c1 * c2).scale(&twist));
        }
    }
    out
}

/// `(P f)(n)` with `(c(x) M^a L^b f)(n) = t^{2an} c(x) f(n+b)`.
pub fn qt_apply<S: KnotSequence + ?Sized>(poly: &QtElement, f: &S, n: i64) -> TkElement {
    let mut out = f.module().zero();
    for (&(a, b), c) in &poly.terms {
        let value = f.at(n + b as i64);
        let twist = LaurentPoly::t(exp(2 * a as i64 * n));
        for (d, lc) in c {
            out = &out + &value.mul_x_pow(*d).scale(&(lc * &twist));
        }
    }
    out
}

fn poly_t(k: i32) -> UniPoly {
    UniPoly::constant(LaurentPoly::t(k))
}

/// `L + L^-1 - (x^2 - 2)`
pub fn homogenizer() -> QtElement {
    &(&QtElement::l() + &QtElement::l_pow(-1)) - &QtElement::scalar(x2_minus_2())
}

/// `t^-1 M^-1 L^p + t M L^{-p-1}`, which sends the Reshetikhin-Turaev
/// sequence to `n -> S_{2n}(x) (t^-1 S_p(y) - t S_{p-1}(y))`.
pub fn relation_operator(p: u32) -> QtElement {
    let p = p as i32;
    &QtElement::monomial(-1, p, poly_t(-1)) + &QtElement::monomial(1, -p - 1, poly_t(1))
}

/// The six-term recursion with each `L^a M^b` read as the operator
/// `M^b L^a` (shift first, then multiply):
/// `t^-3 L^{p+1}M^-1 + t^3 L^-p M - t^-1 (x^2-2) L^p M^-1 - t (x^2-2) L^{-p-1} M
///  + t L^{p-1} M^-1 + t^-1 L^{-p-2} M`.
pub fn inhomog_recurrence(p: u32) -> QtElement {
    six_term(p, false)
}

/// The same six terms read literally as algebra elements, `L^a M^b = t^{2ab} M^b L^a`.
pub fn literal_inhomog_recurrence(p: u32) -> QtElement {
    six_term(p, true)
}

fn six_term(p: u32, literal: bool) -> QtElement {
    let p = p as i32;
    let x2 = x2_minus_2();
    let rows: [(i32, i32, UniPoly); 6] = [
        (p + 1, -1, poly_t(-3)),
        (-p, 1, poly_t(3)),
        (p, -1, x2.scale(&LaurentPoly::monomial(-1, -1))),
        (-p - 1, 1, x2.scale(&LaurentPoly::monomial(1, -1))),
        (p - 1, -1, poly_t(1)),
        (-p - 2, 1, poly_t(-1)),
    ];
    let mut out = QtElement::zero();
    for (la, mb, c) in rows {
        let c = if literal { c.scale(&LaurentPoly::t(2 * la * mb)) } else { c };
        out.add_term((mb, la), c);
    }
    out
}

/// `t^{2p+5} L^{p+2} M`
pub fn homogenizing_factor(p: u32) -> QtElement {
    qt_mul(&QtElement::l_pow(p as i32 + 2), &QtElement::m()).shift(2 * p as i32 + 5)
}

/// The recurrence polynomial annihilating the Reshetikhin-Turaev sequence:
/// `t^{2p+2} ([L^2 - t^2(x^2-2)L + t^4] L^{2p+1} + t^{4p+10} M^2 [t^4 L^2 - t^2(x^2-2)L + 1])`,
/// equal to `t^{2p+5} L^{p+2} M` times [`inhomog_recurrence`].
pub fn recurrence_poly(p: u32) -> QtElement {
    let e = p as i32;
    let x2 = QtElement::scalar(x2_minus_2());
    let l = QtElement::l();
    let l2 = QtElement::l_pow(2);
    let first = &(&l2 - &qt_mul(&x2, &l).shift(2)) + &QtElement::t(4);
    let second = &(&l2.shift(4) - &qt_mul(&x2, &l).shift(2)) + &QtElement::one();
    let body = &qt_mul(&first, &QtElement::l_pow(2 * e + 1))
        + &qt_mul(&QtElement::m_pow(2), &second).shift(4 * e + 10);
    body.shift(2 * e + 2)
}

/// `[L^2 - t^4(x^2-2)L + t^8] L^{2p+1} + t^{4p+8} [L^2 - (x^2-2)L + 1] M^2`
/// taken literally as an element of the quantum torus.
pub fn literal_recurrence_poly(p: u32) -> QtElement {
    let e = p as i32;
    let x2 = QtElement::scalar(x2_minus_2());
    let l = QtElement::l();
    let l2 = QtElement::l_pow(2);
    let first = &(&l2 - &qt_mul(&x2, &l).shift(4)) + &QtElement::t(8);
    let second = &(&l2 - &qt_mul(&x2, &l)) + &QtElement::one();
    &qt_mul(&first, &QtElement::l_pow(2 * e + 1)) + &qt_mul(&second, &QtElement::m_pow(2)).shift(4 * e + 8)
}

/// A commutative polynomial in `M^±1, L^±1, x` with integer coefficients,
/// the image of the quantum torus at `t = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommPoly {
    /// `(a, b, d)` means `M^a L^b x^d`.
    terms: BTreeMap<(i32, i32, u32), BigInt>,
}

impl CommPoly {
    fn add_term(&mut self, key: (i32, i32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i32, i32, u32), BigInt> {
        &self.terms
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((a1, b1, d1), c1) in &self.terms {
            for ((a2, b2, d2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2, d1 + d2), c1 * c2);
            }
        }
        out
    }
}

/// The specialization `t -> 1`.
pub fn specialize_t1(q: &QtElement) -> CommPoly {
    let mut out = CommPoly::default();
    for (&(a, b), c) in &q.terms {
        for (d, lc) in c {
            out.add_term((a, b, *d), lc.eval_at_one());
        }
    }
    out
}

/// `(L^2 - (x^2-2)L + 1)` and `(L^{2p+1} + M^2)` as quantum torus elements.
pub fn t1_factors(p: u32) -> (QtElement, QtElement) {
    let l = QtElement::l();
    let first = &(&QtElement::l_pow(2) - &qt_mul(&QtElement::scalar(x2_minus_2()), &l)) + &QtElement::one();
    let second = &QtElement::l_pow(2 * p as i32 + 1) + &QtElement::m_pow(2);
    (first, second)
}

/// Whether `recurrence_poly(p)` at `t = 1` equals `(L^2-(x^2-2)L+1)(L^{2p+1}+M^2)`.
pub fn t1_factor_check(p: u32) -> bool {
    let (a, b) = t1_factors(p);
    specialize_t1(&recurrence_poly(p)) == specialize_t1(&a).mul(&specialize_t1(&b))
}

impl Add for &QtElement {
    type Output = QtElement;
    fn add(self, rhs: &QtElement) -> QtElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Sub for &QtElement {
    type Output = QtElement;
    fn sub(self, rhs: &QtElement) -> QtElement {
        self + &(-rhs)
    }
}

impl Neg for &QtElement {
    type Output = QtElement;
    fn neg(self) -> QtElement {
        QtElement { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Mul for &QtElement {
    type Output = QtElement;
    fn mul(self, rhs: &QtElement) -> QtElement {
        qt_mul(self, rhs)
    }
}

fn fmt_uni(p: &UniPoly) -> String {
    let parts: Vec<String> = p
        .iter()
        .rev()
        .map(|(d, c)| match d {
            0 => format!("({c})"),
            1 => format!("({c})*x"),
            d => format!("({c})*x^{d}"),
        })
        .collect();
    parts.join(" + ")
}

impl fmt::Display for QtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}]", fmt_uni(c))?;
            if *a != 0 {
                write!(f, "*M^{a}")?;
            }
            if *b != 0 {
                write!(f, "*L^{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtElement({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct QtRepr {
    terms: Vec<(i32, i32, UniPoly)>,
}

impl Serialize for QtElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QtRepr { terms: self.terms.iter().map(|((a, b), c)| (*a, *b, c.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = QtRepr::deserialize(d)?;
        let mut out = QtElement::zero();
        for (a, b, c) in r.terms {
            if out.terms.contains_key(&(a, b)) {
                return Err(D::Error::custom(format!("duplicate term ({a}, {b})")));
            }
            out.add_term((a, b), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::tm;
    use crate::torusknot::{rt_recursion_residual, Convention, FnSequence, JonesSequence, KnotModule};

    fn lt(k: i32, c: i64) -> UniPoly {
        UniPoly::constant(tm(k, c))
    }

    #[test]
    fn commutation() {
        let lm = qt_mul(&QtElement::l(), &QtElement::m());
        assert_eq!(lm, QtElement::monomial(1, 1, lt(2, 1)));
        assert_eq!(qt_mul(&QtElement::m(), &QtElement::l()), QtElement::monomial(1, 1, UniPoly::one()));
    }

    #[test]
    fn homogenized_leading_term() {
        for p in 1..=4u32 {
            let e = p as i32;
            let a = qt_mul(&QtElement::l_pow(e + 2), &QtElement::m());
            let b = qt_mul(&QtElement::l_pow(e + 1), &QtElement::m_pow(-1));
            let prod = qt_mul(&a, &b);
            assert_eq!(prod, QtElement::monomial(0, 2 * e + 3, lt(-2 * (e + 1), 1)));
            let first_term = b.shift(-3);
            assert_eq!(qt_mul(&homogenizing_factor(p), &first_term), QtElement::l_pow(2 * e + 3));
        }
    }

    #[test]
    fn recurrence_poly_at_one() {
        let r = recurrence_poly(1);
        let x2 = x2_minus_2();
        assert_eq!(r.coeff(0, 5), lt(4, 1));
        assert_eq!(r.coeff(0, 4), x2.scale(&tm(6, -1)));
        assert_eq!(r.coeff(0, 3), lt(8, 1));
        assert_eq!(r.coeff(2, 0), lt(18, 1));
        assert_eq!(r.coeff(2, 1), x2.scale(&tm(20, -1)));
        assert_eq!(r.coeff(2, 2), lt(22, 1));
        assert_eq!(r.terms().count(), 6);
    }

    #[test]
    fn product_identities() {
        for p in 1..=6 {
            assert_eq!(qt_mul(&homogenizing_factor(p), &inhomog_recurrence(p)), recurrence_poly(p));
            assert_eq!(
                qt_mul(&homogenizing_factor(p), &literal_inhomog_recurrence(p)),
                literal_recurrence_poly(p)
            );
            assert_eq!(qt_mul(&homogenizer(), &relation_operator(p)), inhomog_recurrence(p));
        }
    }

    #[test]
    fn apply_examples() {
        let f = JonesSequence::new(2, Convention::Rt).unwrap();
        assert_eq!(qt_apply(&QtElement::m(), &f, 3), f.at(3).shift(6));
        assert_eq!(qt_apply(&QtElement::l_pow(-1), &f, 5), f.at(4));
        for n in -3..=5 {
            let lm = qt_apply(&qt_mul(&QtElement::l(), &QtElement::m()), &f, n);
            assert_eq!(lm, f.at(n + 1).shift(2 * n as i32 + 2));
            let ml = qt_apply(&QtElement::monomial(1, 1, lt(2, 1)), &f, n);
            assert_eq!(lm, ml);
        }
    }

    #[test]
    fn module_action() {
        let f = JonesSequence::new(2, Convention::Rt).unwrap();
        let ps = [
            QtElement::monomial(1, -2, lt(1, 1)),
            QtElement::monomial(-2, 3, x2_minus_2()),
            &QtElement::l() + &QtElement::monomial(3, 0, lt(-1, 2)),
        ];
        for p in &ps {
            for q in &ps {
                let qf = FnSequence { module: f.module(), f: |m: i64| qt_apply(q, &f, m) };
                for n in -2..=3 {
                    assert_eq!(qt_apply(&qt_mul(p, q), &f, n), qt_apply(p, &qf, n));
                }
            }
        }
    }

    #[test]
    fn relation_operator_value() {
        for p in 1..=3u32 {
            let f = JonesSequence::new(p as i64, Convention::Rt).unwrap();
            let m = f.module();
            let bracket = &m.s_y(p as i64).shift(-1) - &m.s_y(p as i64 - 1).shift(1);
            for n in -4..=6 {
                assert_eq!(qt_apply(&relation_operator(p), &f, n), bracket.mul_sx(2 * n));
            }
        }
    }

    #[test]
    fn six_term_is_the_homogeneous_recursion() {
        for p in 1..=3u32 {
            let m = KnotModule::new(p as i64, Convention::Rt).unwrap();
            let f = JonesSequence::new(p as i64, Convention::Rt).unwrap();
            for n in -5..=8 {
                assert_eq!(qt_apply(&inhomog_recurrence(p), &f, n), rt_recursion_residual(&m, n));
            }
        }
    }

    #[test]
    fn annihilation() {
        for p in 1..=3u32 {
            let f = JonesSequence::new(p as i64, Convention::Rt).unwrap();
            let window = -(p as i64 + 2)..=(2 * p as i64 + 3);
            for n in window {
                assert!(qt_apply(&inhomog_recurrence(p), &f, n).is_zero(), "p = {p}, n = {n}");
                assert!(qt_apply(&recurrence_poly(p), &f, n).is_zero(), "p = {p}, n = {n}");
            }
        }
    }

    #[test]
    fn literal_readings_do_not_annihilate() {
        for p in 1..=3u32 {
            let f = JonesSequence::new(p as i64, Convention::Rt).unwrap();
            let window = || -(p as i64 + 2)..=(2 * p as i64 + 3);
            assert!(window().any(|n| !qt_apply(&literal_inhomog_recurrence(p), &f, n).is_zero()));
            assert!(window().any(|n| !qt_apply(&literal_recurrence_poly(p), &f, n).is_zero()));
        }
    }

    #[test]
    fn factorization_at_t_one() {
        for p in 1..=6 {
            assert!(t1_factor_check(p));
            let (a, b) = t1_factors(p);
            assert_ne!(qt_mul(&a, &b), recurrence_poly(p));
            assert_eq!(specialize_t1(&literal_recurrence_poly(p)), specialize_t1(&recurrence_poly(p)));
        }
    }

    #[test]
    fn json_shape_and_round_trip() {
        let q = QtElement::monomial(1, -2, x2_minus_2().scale(&tm(3, 1)));
        let v = serde_json::to_value(&q).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"terms": [[1, -2, {"x": [[0, {"t": [[3, "-2"]]}], [2, {"t": [[3, "1"]]}]]}]]})
        );
        assert_eq!(serde_json::from_value::<QtElement>(v).unwrap(), q);
        let r = recurrence_poly(2);
        let back: QtElement = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
