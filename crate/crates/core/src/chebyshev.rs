//! Normalized Chebyshev polynomials `T_n`, `S_n` for all integer `n`.
//!
//! `S_0 = 1, S_1 = xi, S_{n+1} = xi S_n - S_{n-1}` and `T_0 = 2, T_1 = xi`
//! with the same recursion. Negative indices follow `S_{-1} = 0`,
//! `S_{-n} = -S_{n-2}` and `T_{-n} = T_n`.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffs::{Combination, LaurentPoly, UniPoly};

/// Integer combination of Chebyshev indices, `{j: c_j}` meaning `sum c_j S_j`.
pub type SCombo = BTreeMap<u32, BigInt>;

/// A Chebyshev index of either sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChebIndex(pub i64);

impl ChebIndex {
    /// `S_n` as `sign * S_m` with `m >= 0`, or `None` when `S_n = 0`.
    pub fn normalized_s(self) -> Option<(i64, u32)> {
        normalize_s(self.0)
    }

    /// The nonnegative index with `T_n = T_m`.
    pub fn normalized_t(self) -> u32 {
        u32::try_from(self.0.unsigned_abs()).expect("Chebyshev index out of range")
    }
}

/// `S_n` as `sign * S_m` with `m >= 0`, or `None` for `S_{-1} = 0`.
pub fn normalize_s(n: i64) -> Option<(i64, u32)> {
    let to_u32 = |m: i64| u32::try_from(m).expect("Chebyshev index out of range");
    match n {
        -1 => None,
        n if n >= 0 => Some((1, to_u32(n))),
        n => Some((-1, to_u32(-n - 2))),
    }
}

/// The normalized single-term combination equal to `S_n`.
pub fn s_index(n: i64) -> SCombo {
    let mut c = SCombo::new();
    if let Some((sign, m)) = normalize_s(n) {
        c.insert(m, BigInt::from(sign));
    }
    c
}

pub(crate) fn combo_add(c: &mut SCombo, idx: u32, v: BigInt) {
    if v.is_zero() {
        return;
    }
    let e = c.entry(idx).or_default();
    *e += v;
    if e.is_zero() {
        c.remove(&idx);
    }
}

type IntPoly = Vec<BigInt>;

struct Table {
    s: RwLock<Vec<IntPoly>>,
    t: RwLock<Vec<IntPoly>>,
    powers: RwLock<Vec<SCombo>>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| Table {
        s: RwLock::new(vec![vec![BigInt::one()], vec![BigInt::zero(), BigInt::one()]]),
        t: RwLock::new(vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]]),
        powers: RwLock::new(vec![SCombo::from([(0, BigInt::one())])]),
    })
}

fn three_term(prev: &IntPoly, prev2: &IntPoly) -> IntPoly {
    // xi * prev - prev2
    let mut out = vec![BigInt::zero(); prev.len() + 1];
    for (j, c) in prev.iter().enumerate() {
        out[j + 1] += c;
    }
    for (j, c) in prev2.iter().enumerate() {
        out[j] -= c;
    }
    out
}

fn memo_int_poly(lock: &RwLock<Vec<IntPoly>>, m: usize) -> IntPoly {
    if let Some(p) = lock.read().unwrap().get(m) {
        return p.clone();
    }
    let mut tab = lock.write().unwrap();
    while tab.len() <= m {
        let k = tab.len();
        let next = three_term(&tab[k - 1], &tab[k - 2]);
        tab.push(next);
    }
    tab[m].clone()
}

fn int_poly_to_uni(p: &IntPoly, sign: i64) -> UniPoly {
    p.iter().enumerate().map(|(j, c)| (j as u32, LaurentPoly::constant(c * sign))).collect()
}

/// Second-kind Chebyshev polynomial `S_n(xi)`.
pub fn cheb_s(n: i64) -> UniPoly {
    match normalize_s(n) {
        None => UniPoly::zero(),
        Some((sign, m)) => int_poly_to_uni(&memo_int_poly(&table().s, m as usize), sign),
    }
}

/// First-kind Chebyshev polynomial `T_n(xi)`.
pub fn cheb_t(n: i64) -> UniPoly {
    let m = ChebIndex(n).normalized_t() as usize;
    int_poly_to_uni(&memo_int_poly(&table().t, m), 1)
}

/// Integer coefficients of `T_n` by degree, for building elements in other variables.
pub fn cheb_t_ints(n: i64) -> Vec<BigInt> {
    memo_int_poly(&table().t, ChebIndex(n).normalized_t() as usize)
}

/// Integer coefficients of `S_n` by degree (with sign for negative `n`).
pub fn cheb_s_ints(n: i64) -> Vec<BigInt> {
    match normalize_s(n) {
        None => Vec::new(),
        Some((sign, m)) => memo_int_poly(&table().s, m as usize).into_iter().map(|c| c * sign).collect(),
    }
}

/// `xi^m` in the `S` basis, from `xi * S_j = S_{j+1} + S_{j-1}`.
pub fn monomial_to_s(m: u32) -> SCombo {
    let lock = &table().powers;
    if let Some(c) = lock.read().unwrap().get(m as usize) {
        return c.clone();
    }
    let mut tab = lock.write().unwrap();
    while tab.len() <= m as usize {
        let prev = tab.last().unwrap();
        let mut next = SCombo::new();
        for (j, c) in prev {
            combo_add(&mut next, j + 1, c.clone());
            if *j >= 1 {
                combo_add(&mut next, j - 1, c.clone());
            }
        }
        tab.push(next);
    }
    tab[m as usize].clone()
}

/// Rewrites a polynomial given in powers of `xi` in the `S` basis.
pub fn uni_to_s(p: &UniPoly) -> Combination<u32> {
    let mut out = Combination::zero();
    for (deg, c) in p {
        for (j, k) in monomial_to_s(*deg) {
            out.add_term(j, c.scale(&k));
        }
    }
    out
}

/// Inverse of [`uni_to_s`]: `sum c_j S_j` expanded in powers of `xi`.
pub fn s_to_uni(c: &Combination<u32>) -> UniPoly {
    let mut out = UniPoly::zero();
    for (j, v) in c {
        out.add_scaled(&cheb_s(*j as i64), v);
    }
    out
}

/// `S_k T_n = S_{k+n} + S_{k-n}`, indices normalized.
pub fn s_times_t(k: i64, n: i64) -> SCombo {
    let mut out = s_index(k + n);
    for (j, c) in s_index(k - n) {
        combo_add(&mut out, j, c);
    }
    out
}

/// `S_a S_b = sum_{j=0}^{min(a,b)} S_{a+b-2j}` for `a, b >= 0`.
pub fn s_product(a: u32, b: u32) -> impl Iterator<Item = u32> {
    (0..=a.min(b)).map(move |j| a + b - 2 * j)
}
