#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;

use skein_core::coeffs::UniPoly;
use skein_core::coeffs::{Combination, LaurentPoly, XZPoly};
use skein_core::handlebody::{Basis, HbElement};
use skein_core::qtorus::QtElement;

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    vec((-6i32..=6, -20i64..=20), 0..5).prop_map(LaurentPoly::from_terms)
}

pub fn xz_poly() -> impl Strategy<Value = XZPoly> {
    vec(((0u32..4, 0u32..4), laurent()), 0..4).prop_map(|ts| ts.into_iter().collect())
}

pub fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Monomial), Just(Basis::Chebyshev)]
}

pub fn hb_element() -> impl Strategy<Value = HbElement> {
    (basis(), vec(((0u32..4, 0u32..4, 0u32..4), laurent()), 0..4))
        .prop_map(|(b, ts)| HbElement::from_terms(b, ts.into_iter().collect::<Combination<_>>()))
}

fn uni_poly() -> impl Strategy<Value = UniPoly> {
    vec((0u32..3, laurent()), 0..3).prop_map(|ts| ts.into_iter().collect())
}

/// Quantum torus elements with `|a|, |b| <= 4`.
pub fn qt_element() -> impl Strategy<Value = QtElement> {
    vec((-4i32..=4, -4i32..=4, uni_poly()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(QtElement::zero(), |acc, (a, b, c)| &acc + &QtElement::monomial(a, b, c))
    })
}

pub fn laurent_ring_axioms(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> bool {
    &(a + b) + c == a + &(b + c)
        && a + b == b + a
        && &(a * b) * c == a * &(b * c)
        && a * b == b * a
        && a * &(b + c) == &(a * b) + &(a * c)
        && a * &LaurentPoly::one() == *a
        && (a - &a.clone()).is_zero()
}

pub fn laurent_bar(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    a.bar().bar() == *a && (a * b).bar() == &a.bar() * &b.bar() && (a + b).bar() == &a.bar() + &b.bar()
}

pub fn xz_ring_axioms(a: &XZPoly, b: &XZPoly, c: &XZPoly) -> bool {
    &(a * b) * c == a * &(b * c)
        && a * b == b * a
        && a * &(b + c) == &(a * b) + &(a * c)
        && a * &XZPoly::one() == *a
        && (a.bar().bar() == *a)
        && (a * b).bar() == &a.bar() * &b.bar()
}

pub fn hb_ring_axioms(a: &HbElement, b: &HbElement, c: &HbElement) -> bool {
    a.product(b).product(c) == a.product(&b.product(c))
        && a.product(b) == b.product(a)
        && a.product(&(b + c)) == &a.product(b) + &a.product(c)
        && a.product(&HbElement::one()) == *a
}

pub fn hb_conversions(a: &HbElement, b: &HbElement) -> bool {
    let (mono, cheb) = (Basis::Monomial, Basis::Chebyshev);
    a.convert(cheb).convert(mono).terms() == a.convert(mono).terms()
        && a.convert(cheb).product(&b.convert(cheb)).convert(mono).terms()
            == a.convert(mono).product(&b.convert(mono)).terms()
        && a.mirror().convert(cheb).terms() == a.convert(cheb).mirror().terms()
        && a.mirror().mirror() == *a
        && a.product(b).mirror() == a.mirror().product(&b.mirror())
}

pub fn qt_associative_unital(a: &QtElement, b: &QtElement, c: &QtElement) -> bool {
    &(a * b) * c == a * &(b * c) && a * &QtElement::one() == *a && &QtElement::one() * a == *a
}
