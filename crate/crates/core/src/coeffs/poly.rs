//! Polynomial extensions of the ground ring: univariate polynomials (in a
//! Chebyshev variable or in the curve `x`), the commutative ring in `x` and
//! `z`, and Laurent polynomials in the auxiliary variable `w`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::combination::{Combination, MonomialKey};
use super::laurent::LaurentPoly;

/// Polynomial in one variable over `Z[t, t^-1]`, keyed by degree.
pub type UniPoly = Combination<u32>;

/// Commutative polynomial in `x` and `z`, keyed by `(x-degree, z-degree)`.
pub type XZPoly = Combination<(u32, u32)>;

/// Laurent polynomial in the auxiliary variable `w`, keyed by `w`-exponent.
pub type WLaurent = Combination<i32>;

/// The variable of a univariate polynomial.
pub fn var() -> UniPoly {
    UniPoly::term(1, LaurentPoly::one())
}

/// Univariate polynomial with integer coefficients, `coeffs[j]` on degree `j`.
pub fn uni_from_ints(coeffs: &[i64]) -> UniPoly {
    coeffs.iter().enumerate().map(|(j, c)| (j as u32, LaurentPoly::constant(*c))).collect()
}

pub fn degree(p: &UniPoly) -> Option<u32> {
    p.keys().next_back().copied()
}

/// Evaluates `p` at an element of any commutative combination ring (Horner).
pub fn substitute<K: MonomialKey>(p: &UniPoly, v: &Combination<K>) -> Combination<K> {
    let Some(deg) = degree(p) else {
        return Combination::zero();
    };
    let mut acc = Combination::zero();
    for j in (0..=deg).rev() {
        acc = &acc * v;
        acc.add_term(K::unit(), p.coeff(&j));
    }
    acc
}

/// Exact evaluation of `p` at a Laurent polynomial in `w`.
pub fn substitute_w(p: &UniPoly, v: &WLaurent) -> WLaurent {
    substitute(p, v)
}

/// `c * w^k`
pub fn w_mono(k: i32, c: LaurentPoly) -> WLaurent {
    WLaurent::term(k, c)
}

pub fn x() -> XZPoly {
    XZPoly::term((1, 0), LaurentPoly::one())
}

pub fn z() -> XZPoly {
    XZPoly::term((0, 1), LaurentPoly::one())
}

// JSON forms. Each is an object with a single variable-named list of
// `[exponents..., {laurent}]` rows in ascending key order.

#[derive(Serialize, Deserialize)]
struct XZRepr {
    xz: Vec<(u32, u32, LaurentPoly)>,
}

impl Serialize for Combination<(u32, u32)> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        XZRepr { xz: self.iter().map(|((a, b), c)| (*a, *b, c.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Combination<(u32, u32)> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = XZRepr::deserialize(d)?;
        Ok(r.xz.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct XRepr {
    x: Vec<(u32, LaurentPoly)>,
}

impl Serialize for Combination<u32> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        XRepr { x: self.iter().map(|(a, c)| (*a, c.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Combination<u32> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(XRepr::deserialize(d)?.x.into_iter().collect())
    }
}

#[derive(Serialize, Deserialize)]
struct WRepr {
    w: Vec<(i32, LaurentPoly)>,
}

impl Serialize for Combination<i32> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WRepr { w: self.iter().map(|(a, c)| (*a, c.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Combination<i32> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(WRepr::deserialize(d)?.w.into_iter().collect())
    }
}
