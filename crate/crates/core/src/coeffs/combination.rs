use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::laurent::LaurentPoly;

/// Exponent keys of a commutative monoid of monomials.
pub trait MonomialKey: Ord + Clone + Debug {
    fn unit() -> Self;
    fn combine(&self, other: &Self) -> Self;
}

impl MonomialKey for u32 {
    fn unit() -> Self {
        0
    }
    fn combine(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("degree overflow")
    }
}

impl MonomialKey for i32 {
    fn unit() -> Self {
        0
    }
    fn combine(&self, other: &Self) -> Self {
        super::laurent::add_exp(*self, *other)
    }
}

impl MonomialKey for (u32, u32) {
    fn unit() -> Self {
        (0, 0)
    }
    fn combine(&self, o: &Self) -> Self {
        (self.0.combine(&o.0), self.1.combine(&o.1))
    }
}

impl MonomialKey for (u32, u32, u32) {
    fn unit() -> Self {
        (0, 0, 0)
    }
    fn combine(&self, o: &Self) -> Self {
        (self.0.combine(&o.0), self.1.combine(&o.1), self.2.combine(&o.2))
    }
}

/// Finite linear combination of keys `K` with [`LaurentPoly`] coefficients.
///
/// This is the common storage of every module element in the crate; zero
/// coefficients are pruned on every update. When `K` is a [`MonomialKey`]
/// the combination is also a commutative ring (polynomials in the variables
/// the key records exponents of).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Debug> Debug for Combination<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: LaurentPoly) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, LaurentPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, LaurentPoly> {
        self.terms.keys()
    }

    pub fn get(&self, key: &K) -> Option<&LaurentPoly> {
        self.terms.get(key)
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coeff(&self, key: &K) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies `t -> t^-1` to every coefficient.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.bar())).collect() }
    }

    /// Rebuilds the combination through a key map; colliding images are summed.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> Combination<K2> {
        Combination::from_terms(self.terms.iter().map(|(k, v)| (f(k), v.clone())))
    }
}

impl<K: MonomialKey> Combination<K> {
    pub fn one() -> Self {
        Self::term(K::unit(), LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::term(K::unit(), c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(mut self, rhs: Combination<K>) -> Combination<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        Combination { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        -&self
    }
}

impl<K: MonomialKey> Mul for &Combination<K> {
    type Output = Combination<K>;
    fn mul(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = Combination::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_term(ka.combine(kb), va * vb);
            }
        }
        out
    }
}

impl<K: MonomialKey> Mul for Combination<K> {
    type Output = Combination<K>;
    fn mul(self, rhs: Combination<K>) -> Combination<K> {
        &self * &rhs
    }
}

impl<K: Ord + Clone> IntoIterator for Combination<K> {
    type Item = (K, LaurentPoly);
    type IntoIter = btree_map::IntoIter<K, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a LaurentPoly);
    type IntoIter = btree_map::Iter<'a, K, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, LaurentPoly)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}
