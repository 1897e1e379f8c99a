//! The Kauffman bracket skein module of the genus-two handlebody.
//!
//! The module is free on the multicurves `x^m y^n z^k`, and the three core
//! curves are disjoint, so it is the commutative polynomial ring
//! `Z[t, t^-1][x, y, z]`. An element can also be viewed in the Chebyshev basis
//! `S_m(x) S_n(y) S_k(z)`; both views share the `(m, n, k)` key space.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chebyshev::{cheb_s_ints, monomial_to_s};
use crate::coeffs::{Combination, LaurentPoly, UniPoly};

pub type HbKey = (u32, u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `x^m y^n z^k`
    Monomial,
    /// `S_m(x) S_n(y) S_k(z)`
    Chebyshev,
}

impl std::str::FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "monomial" => Ok(Basis::Monomial),
            "chebyshev" => Ok(Basis::Chebyshev),
            other => Err(format!("unknown basis {other:?} (expected monomial or chebyshev)")),
        }
    }
}

#[derive(Clone)]
pub struct HbElement {
    basis: Basis,
    terms: Combination<HbKey>,
}

impl HbElement {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, terms: Combination::zero() }
    }

    pub fn from_terms(basis: Basis, terms: Combination<HbKey>) -> Self {
        Self { basis, terms }
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_terms(Basis::Monomial, Combination::term((0, 0, 0), c))
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    /// `c x^m y^n z^k`
    pub fn monomial(m: u32, n: u32, k: u32, c: LaurentPoly) -> Self {
        Self::from_terms(Basis::Monomial, Combination::term((m, n, k), c))
    }

    /// `c S_m(x) S_n(y) S_k(z)`
    pub fn chebyshev(m: u32, n: u32, k: u32, c: LaurentPoly) -> Self {
        Self::from_terms(Basis::Chebyshev, Combination::term((m, n, k), c))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 0, LaurentPoly::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 0, LaurentPoly::one())
    }

    pub fn z() -> Self {
        Self::monomial(0, 0, 1, LaurentPoly::one())
    }

    /// The polynomial `p(y)` in the monomial basis.
    pub fn y_poly(p: &UniPoly) -> Self {
        Self::from_terms(Basis::Monomial, p.map_keys(|d| (0, *d, 0)))
    }

    /// `S_n(y)` for any integer `n`, in the monomial basis.
    pub fn s_y(n: i64) -> Self {
        Self::int_y_poly(&cheb_s_ints(n))
    }

    /// `T_n(y)` in the monomial basis.
    pub fn t_y(n: i64) -> Self {
        Self::int_y_poly(&crate::chebyshev::cheb_t_ints(n))
    }

    fn int_y_poly(coeffs: &[BigInt]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| ((0, d as u32, 0), LaurentPoly::constant(c.clone())))
            .collect();
        Self::from_terms(Basis::Monomial, terms)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &Combination<HbKey> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Coefficient of the basis element `key` in the element's own basis.
    pub fn coeff(&self, key: HbKey) -> LaurentPoly {
        self.terms.coeff(&key)
    }

    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Combination::zero();
        match target {
            Basis::Chebyshev => {
                for ((m, n, k), c) in &self.terms {
                    let (sm, sn, sk) = (monomial_to_s(*m), monomial_to_s(*n), monomial_to_s(*k));
                    for (i, ci) in &sm {
                        for (j, cj) in &sn {
                            for (l, cl) in &sk {
                                out.add_term((*i, *j, *l), c.scale(&(ci * cj * cl)));
                            }
                        }
                    }
                }
            }
            Basis::Monomial => {
                for ((m, n, k), c) in &self.terms {
                    let (sm, sn, sk) =
                        (cheb_s_ints(*m as i64), cheb_s_ints(*n as i64), cheb_s_ints(*k as i64));
                    for (i, ci) in sm.iter().enumerate() {
                        for (j, cj) in sn.iter().enumerate() {
                            for (l, cl) in sk.iter().enumerate() {
                                let k = ci * cj * cl;
                                if k != BigInt::from(0) {
                                    out.add_term((i as u32, j as u32, l as u32), c.scale(&k));
                                }
                            }
                        }
                    }
                }
            }
        }
        Self { basis: target, terms: out }
    }

    /// Product; the result is expressed in the basis of `self`.
    pub fn product(&self, other: &Self) -> Self {
        let a = self.convert(Basis::Monomial);
        let b = other.convert(Basis::Monomial);
        let prod = Self { basis: Basis::Monomial, terms: &a.terms * &b.terms };
        prod.convert(self.basis)
    }

    /// Mirror image: `t -> t^-1` on every coefficient.
    pub fn mirror(&self) -> Self {
        Self { basis: self.basis, terms: self.terms.bar() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.scale(&LaurentPoly::t(k))
    }

    /// Substitutes `z -> x`, returning the `(x-degree, y-degree)` polynomial.
    pub fn identify_z_with_x(&self) -> Combination<(u32, u32)> {
        self.convert(Basis::Monomial).terms.map_keys(|(m, n, k)| (m + k, *n))
    }
}

impl PartialEq for HbElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.terms == other.convert(self.basis).terms
        }
    }
}

impl Eq for HbElement {}

impl Add for &HbElement {
    type Output = HbElement;
    fn add(self, rhs: &HbElement) -> HbElement {
        let rhs = rhs.convert(self.basis);
        HbElement { basis: self.basis, terms: &self.terms + &rhs.terms }
    }
}

impl Sub for &HbElement {
    type Output = HbElement;
    fn sub(self, rhs: &HbElement) -> HbElement {
        let rhs = rhs.convert(self.basis);
        HbElement { basis: self.basis, terms: &self.terms - &rhs.terms }
    }
}

impl Add for HbElement {
    type Output = HbElement;
    fn add(self, rhs: HbElement) -> HbElement {
        &self + &rhs
    }
}

impl Sub for HbElement {
    type Output = HbElement;
    fn sub(self, rhs: HbElement) -> HbElement {
        &self - &rhs
    }
}

impl Neg for &HbElement {
    type Output = HbElement;
    fn neg(self) -> HbElement {
        HbElement { basis: self.basis, terms: -&self.terms }
    }
}

impl Neg for HbElement {
    type Output = HbElement;
    fn neg(self) -> HbElement {
        -&self
    }
}

impl Mul for &HbElement {
    type Output = HbElement;
    fn mul(self, rhs: &HbElement) -> HbElement {
        HbElement::product(self, rhs)
    }
}

impl Mul for HbElement {
    type Output = HbElement;
    fn mul(self, rhs: HbElement) -> HbElement {
        HbElement::product(&self, &rhs)
    }
}

impl fmt::Debug for HbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HbElement[{:?}]({self})", self.basis)
    }
}

impl fmt::Display for HbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        let factor = |var: &str, e: u32| -> Option<String> {
            match (self.basis, e) {
                (_, 0) => None,
                (Basis::Monomial, 1) => Some(var.to_string()),
                (Basis::Monomial, e) => Some(format!("{var}^{e}")),
                (Basis::Chebyshev, e) => Some(format!("S_{e}({var})")),
            }
        };
        for (i, ((m, n, k), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> =
                [factor("x", *m), factor("y", *n), factor("z", *k)].into_iter().flatten().collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct HbRepr {
    basis: Basis,
    terms: Vec<(u32, u32, u32, LaurentPoly)>,
}

impl Serialize for HbElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HbRepr {
            basis: self.basis,
            terms: self.terms.iter().map(|((m, n, k), c)| (*m, *n, *k, c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HbElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = HbRepr::deserialize(d)?;
        let mut terms = Combination::zero();
        for (m, n, k, c) in r.terms {
            if terms.get(&(m, n, k)).is_some() {
                return Err(D::Error::custom(format!("duplicate term ({m}, {n}, {k})")));
            }
            terms.add_term((m, n, k), c);
        }
        Ok(HbElement { basis: r.basis, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::tm;

    #[test]
    fn mul_x_z() {
        let xz = HbElement::x().product(&HbElement::z());
        assert_eq!(xz.terms().len(), 1);
        assert_eq!(xz.coeff((1, 0, 1)), LaurentPoly::one());
    }

    #[test]
    fn y_squared_in_chebyshev_basis() {
        let y2 = HbElement::y().product(&HbElement::y()).convert(Basis::Chebyshev);
        let expected = &HbElement::chebyshev(0, 2, 0, LaurentPoly::one())
            + &HbElement::chebyshev(0, 0, 0, LaurentPoly::one());
        assert_eq!(y2.basis(), Basis::Chebyshev);
        assert_eq!(y2.terms(), expected.terms());
    }

    #[test]
    fn chebyshev_product() {
        let s1s1 = HbElement::chebyshev(1, 0, 1, LaurentPoly::one());
        let prod = s1s1.product(&s1s1);
        assert_eq!(prod.basis(), Basis::Chebyshev);
        // (S_2(x) + 1)(S_2(z) + 1)
        let one = LaurentPoly::one;
        let expected = Combination::from_terms([
            ((2, 0, 2), one()),
            ((2, 0, 0), one()),
            ((0, 0, 2), one()),
            ((0, 0, 0), one()),
        ]);
        assert_eq!(prod.terms(), &expected);
    }

    #[test]
    fn convert_examples() {
        let one = HbElement::chebyshev(0, 0, 0, LaurentPoly::one()).convert(Basis::Monomial);
        assert_eq!(one.terms(), HbElement::one().terms());

        let x2z2 = &HbElement::monomial(2, 0, 0, LaurentPoly::one())
            + &HbElement::monomial(0, 0, 2, LaurentPoly::one());
        let cheb = x2z2.convert(Basis::Chebyshev);
        let expected = Combination::from_terms([
            ((2, 0, 0), LaurentPoly::one()),
            ((0, 0, 2), LaurentPoly::one()),
            ((0, 0, 0), LaurentPoly::constant(2)),
        ]);
        assert_eq!(cheb.terms(), &expected);
    }

    #[test]
    fn mirror_examples() {
        let x1 = &HbElement::monomial(0, 1, 0, tm(4, -1)) + &HbElement::monomial(1, 0, 1, tm(2, -1));
        let expected = &HbElement::monomial(0, 1, 0, tm(-4, -1)) + &HbElement::monomial(1, 0, 1, tm(-2, -1));
        assert_eq!(x1.mirror(), expected);
        let sym = HbElement::constant(tm(2, -1) + tm(-2, -1));
        assert_eq!(sym.mirror(), sym);
    }

    #[test]
    fn equality_across_bases() {
        let y2 = HbElement::y().product(&HbElement::y());
        assert_eq!(y2, y2.convert(Basis::Chebyshev));
    }

    #[test]
    fn s_y_matches_chebyshev_view() {
        for n in 0..10 {
            let s = HbElement::s_y(n).convert(Basis::Chebyshev);
            assert_eq!(s.terms(), HbElement::chebyshev(0, n as u32, 0, LaurentPoly::one()).terms());
        }
        assert!(HbElement::s_y(-1).is_zero());
        assert_eq!(HbElement::s_y(-4), -HbElement::s_y(2));
    }

    #[test]
    fn json_round_trip_and_shape() {
        let e = &HbElement::monomial(0, 1, 0, tm(4, -1)) + &HbElement::monomial(1, 0, 1, tm(2, -1));
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"basis":"monomial","terms":[[0,1,0,{"t":[[4,"-1"]]}],[1,0,1,{"t":[[2,"-1"]]}]]}"#);
        let back: HbElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<HbElement>(
            r#"{"basis":"monomial","terms":[[0,0,0,{"t":[[0,"1"]]}],[0,0,0,{"t":[[0,"1"]]}]]}"#
        )
        .is_err());
    }
}
