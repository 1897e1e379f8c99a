use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact Laurent polynomial in `t` with integer coefficients.
///
/// Stored sparsely; a zero coefficient is never kept, so two polynomials are
/// equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

pub(crate) fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// `c * t^exp`
    pub fn monomial<C: Into<BigInt>>(exp: i32, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`
    pub fn t(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The mirror involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (add_exp(*e, k), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Specialization at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (lo, hi) = (
            add_exp(self.min_exp().unwrap(), rhs.min_exp().unwrap()),
            add_exp(self.max_exp().unwrap(), rhs.max_exp().unwrap()),
        );
        let span = (hi as i64 - lo as i64 + 1) as usize;
        // dense accumulation; exponent spans here are a few hundred at most
        if span <= 4096 {
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    acc[(*ea as i64 + *eb as i64 - lo as i64) as usize] += ca * cb;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| ((lo as i64 + i as i64) as i32, c))
                .collect();
            return Self { terms };
        }
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(*ea, *eb), ca * cb);
            }
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.mul_ref(rhs);
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

macro_rules! forward_binops {
    ($($tr:ident $m:ident $assign:ident),*) => {$(
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    )*};
}
forward_binops!(Add add add_assign, Sub sub sub_assign, Mul mul mul_assign);

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending powers of `t`, e.g. `t^8 + t^4 - 1 - t^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{abs}t")?,
                e if unit => write!(f, "t^{e}")?,
                e => write!(f, "{abs}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// JSON: {"t": [[exp, "coeff"], ...]}, ascending exponent, decimal-string coefficients.

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    t: Vec<(i32, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentRepr { t: self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in repr.t {
            let c: BigInt =
                c.parse().map_err(|_| D::Error::custom(format!("invalid integer coefficient {c:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn additive_inverse() {
        let a = lp(&[(2, 1), (-2, 1)]);
        let b = lp(&[(2, -1), (-2, -1)]);
        assert!((a + b).is_zero());
    }

    #[test]
    fn exponent_law() {
        assert!((LaurentPoly::t(2) * LaurentPoly::t(-2)).is_one());
    }

    // (t^-2 - t^6)(-t^2 - t^-2) expanded by hand:
    // -1 - t^-4 + t^8 + t^4
    #[test]
    fn product_by_hand() {
        let a = lp(&[(-2, 1), (6, -1)]);
        let b = lp(&[(2, -1), (-2, -1)]);
        assert_eq!(&a * &b, lp(&[(8, 1), (4, 1), (0, -1), (-4, -1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::monomial(4, -1).bar(), LaurentPoly::monomial(-4, -1));
        let sym = lp(&[(2, 1), (-2, 1)]);
        assert_eq!(sym.bar(), sym);
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut p = lp(&[(3, 2)]);
        p.add_term(3, BigInt::from(-2));
        assert!(p.is_zero());
        assert_eq!(lp(&[(1, 0), (0, 0)]), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(8, 1), (4, 1), (0, -1), (-4, -1)]).to_string(), "t^8 + t^4 - 1 - t^-4");
        assert_eq!(lp(&[(1, -2)]).to_string(), "-2t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let big = LaurentPoly::constant(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
    }

    #[test]
    fn json_shape() {
        let p = lp(&[(-4, -1), (8, 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"t":[[-4,"-1"],[8,"1"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"t":[[0,"x"]]}"#).is_err());
    }

    #[test]
    fn eval_at_one() {
        assert_eq!(lp(&[(8, 1), (4, 1), (0, -1), (-4, -1)]).eval_at_one(), BigInt::zero());
        assert_eq!(lp(&[(3, 5), (-1, 2)]).eval_at_one(), BigInt::from(7));
    }
}
