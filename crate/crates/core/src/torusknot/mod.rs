//! The skein module of the complement of the `(2p+1, 2)` torus knot.
//!
//! It is free on `S_m(x) S_n(y)` with `m >= 0` and `0 <= n <= p`. Any
//! `S_N(y)` with `N > p` is rewritten through a reduction rule
//!
//! ```text
//! S_{p+n}(y) = e0 s(n) t^{2n+1} S_{2n}(x) (e1 t S_{p-1}(y) + e2 t^-1 S_p(y)) + e3 t^{4n+2} S_{p-n-1}(y)
//! ```
//!
//! where `s(n)` is `(-1)^n` or `1`. The two named conventions are the skein
//! module relation ([`Convention::Kbsm`]) and the Reshetikhin-Turaev one
//! ([`Convention::Rt`]); every other sign pattern is a mutant used to probe
//! the verification checks.

mod checks;

pub use checks::*;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chebyshev::{monomial_to_s, normalize_s, s_product};
use crate::coeffs::{Combination, LaurentPoly};
use crate::handlebody::{Basis, HbElement};
use crate::{Result, SkeinError};

/// Terms keyed by `(m, n)`, meaning `S_m(x) S_n(y)`.
pub type TkTerms = Combination<(u32, u32)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Kbsm,
    Rt,
}

impl Convention {
    pub fn rule(self) -> ReductionRule {
        use Sign::*;
        match self {
            Convention::Kbsm => {
                ReductionRule { overall: Plus, alternating: true, lower: Plus, upper: Plus, tail: Minus }
            }
            Convention::Rt => {
                ReductionRule { overall: Plus, alternating: false, lower: Minus, upper: Plus, tail: Plus }
            }
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Kbsm => "kbsm",
            Convention::Rt => "rt",
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "kbsm" => Ok(Convention::Kbsm),
            "rt" => Ok(Convention::Rt),
            other => Err(format!("unknown convention {other:?} (expected kbsm or rt)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn apply(self, c: LaurentPoly) -> LaurentPoly {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }
}

/// One sign position of a [`ReductionRule`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSign {
    /// `e0`
    Overall,
    /// `(-1)^n` versus `1`
    Alternation,
    /// `e1`, in front of `t S_{p-1}(y)`
    Lower,
    /// `e2`, in front of `t^-1 S_p(y)`
    Upper,
    /// `e3`, in front of `t^{4n+2} S_{p-n-1}(y)`
    Tail,
}

impl RuleSign {
    pub const ALL: [RuleSign; 5] =
        [RuleSign::Overall, RuleSign::Alternation, RuleSign::Lower, RuleSign::Upper, RuleSign::Tail];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReductionRule {
    pub overall: Sign,
    pub alternating: bool,
    pub lower: Sign,
    pub upper: Sign,
    pub tail: Sign,
}

impl ReductionRule {
    pub fn flipped(mut self, which: RuleSign) -> Self {
        match which {
            RuleSign::Overall => self.overall = self.overall.flip(),
            RuleSign::Alternation => self.alternating = !self.alternating,
            RuleSign::Lower => self.lower = self.lower.flip(),
            RuleSign::Upper => self.upper = self.upper.flip(),
            RuleSign::Tail => self.tail = self.tail.flip(),
        }
        self
    }

    /// The named convention this rule is, if any.
    pub fn convention(&self) -> Option<Convention> {
        [Convention::Kbsm, Convention::Rt].into_iter().find(|c| c.rule() == *self)
    }

    /// `e0 s(n)`
    fn head_sign(&self, n: u32) -> Sign {
        if self.alternating && n % 2 == 1 {
            self.overall.flip()
        } else {
            self.overall
        }
    }
}

impl From<Convention> for ReductionRule {
    fn from(c: Convention) -> Self {
        c.rule()
    }
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.convention() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{self:?}"),
        }
    }
}

/// A knot parameter `p >= 1` together with the reduction rule in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnotModule {
    p: u32,
    rule: ReductionRule,
}

impl KnotModule {
    pub fn new(p: i64, rule: impl Into<ReductionRule>) -> Result<Self> {
        match u32::try_from(p) {
            Ok(p) if p >= 1 => Ok(Self { p, rule: rule.into() }),
            _ => Err(SkeinError::InvalidKnotParameter(p)),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rule(&self) -> ReductionRule {
        self.rule
    }

    pub fn zero(&self) -> TkElement {
        TkElement { module: *self, terms: TkTerms::zero() }
    }

    pub fn one(&self) -> TkElement {
        self.basis_element(0, 0, LaurentPoly::one()).expect("0 <= p")
    }

    /// `c S_m(x) S_n(y)`; `n` must already be at most `p`.
    pub fn basis_element(&self, m: u32, n: u32, c: LaurentPoly) -> Result<TkElement> {
        self.from_terms(TkTerms::term((m, n), c))
    }

    pub fn from_terms(&self, terms: TkTerms) -> Result<TkElement> {
        if let Some(&(_, n)) = terms.keys().find(|(_, n)| *n > self.p) {
            return Err(SkeinError::IndexOutOfDomain {
                what: "torus-knot basis y-index",
                index: n as i64,
                requires: "n <= p",
            });
        }
        Ok(TkElement { module: *self, terms })
    }

    /// Reduces a combination of `S_m(x) S_N(y)` with arbitrary `N`.
    pub fn reduce_terms(&self, terms: &TkTerms) -> TkElement {
        let mut out = TkTerms::zero();
        for ((m, n), c) in terms {
            out.add_scaled(&mul_sx(*m as i64, &self.reduce_raw(*n as i64)), c);
        }
        TkElement { module: *self, terms: out }
    }

    /// `S_m(x)` for any integer `m`.
    pub fn s_x(&self, m: i64) -> TkElement {
        TkElement { module: *self, terms: mul_sx(m, &TkTerms::one()) }
    }

    /// `S_N(y)` for any integer `N`, reduced.
    pub fn s_y(&self, n: i64) -> TkElement {
        TkElement { module: *self, terms: self.reduce_raw(n) }
    }

    /// The image of a handlebody skein: `z -> x`, then reduce.
    pub fn embed(&self, h: &HbElement) -> TkElement {
        let mono = h.convert(Basis::Monomial);
        let mut by_y: HashMap<u32, TkTerms> = HashMap::new();
        for ((m, n, k), c) in mono.terms() {
            let entry = by_y.entry(*n).or_default();
            for (i, ci) in monomial_to_s(m + k) {
                entry.add_term((i, 0), c.scale(&ci));
            }
        }
        let mut out = TkTerms::zero();
        for (n, xpart) in by_y {
            let mut ypart = TkTerms::zero();
            for (j, cj) in monomial_to_s(n) {
                ypart.add_scaled(&self.reduce_raw(j as i64), &LaurentPoly::constant(cj));
            }
            for ((i, _), c) in &xpart {
                out.add_scaled(&mul_sx(*i as i64, &ypart), c);
            }
        }
        TkElement { module: *self, terms: out }
    }

    fn reduce_raw(&self, n: i64) -> TkTerms {
        match normalize_s(n) {
            None => TkTerms::zero(),
            Some((1, idx)) => self.reduce_nonneg(idx),
            Some((_, idx)) => -self.reduce_nonneg(idx),
        }
    }

    fn reduce_nonneg(&self, idx: u32) -> TkTerms {
        if idx <= self.p {
            return TkTerms::term((0, idx), LaurentPoly::one());
        }
        let key = (*self, idx);
        if let Some(v) = memo().read().unwrap().get(&key) {
            return v.clone();
        }
        let (p, r) = (self.p, self.rule);
        let n = idx - p;
        let e = i32::try_from(n).expect("reduction index out of range");
        let mut ypart = TkTerms::term((0, p - 1), r.lower.apply(LaurentPoly::t(1)));
        ypart.add_term((0, p), r.upper.apply(LaurentPoly::t(-1)));
        let mut out = mul_sx(2 * n as i64, &ypart).scale(&r.head_sign(n).apply(LaurentPoly::t(2 * e + 1)));
        let tail = self.reduce_raw(p as i64 - n as i64 - 1);
        out.add_scaled(&tail, &r.tail.apply(LaurentPoly::t(4 * e + 2)));
        memo().write().unwrap().insert(key, out.clone());
        out
    }
}

type Memo = RwLock<HashMap<(KnotModule, u32), TkTerms>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Multiplies every term by `S_m(x)` (any integer `m`).
fn mul_sx(m: i64, a: &TkTerms) -> TkTerms {
    let Some((sign, m)) = normalize_s(m) else {
        return TkTerms::zero();
    };
    let mut out = TkTerms::zero();
    for ((j, n), c) in a {
        let c = if sign < 0 { -c } else { c.clone() };
        for i in s_product(m, *j) {
            out.add_term((i, *n), c.clone());
        }
    }
    out
}

/// `S_N(y)` reduced in the module of the `(2p+1, 2)` torus knot.
pub fn reduce_sy(n: i64, p: i64, c: Convention) -> Result<TkElement> {
    Ok(KnotModule::new(p, c)?.s_y(n))
}

pub fn embed(h: &HbElement, p: i64, c: Convention) -> Result<TkElement> {
    Ok(KnotModule::new(p, c)?.embed(h))
}

pub fn tk_mul(a: &TkElement, b: &TkElement) -> Result<TkElement> {
    a.checked_mul(b)
}

#[derive(Clone, PartialEq, Eq)]
pub struct TkElement {
    module: KnotModule,
    terms: TkTerms,
}

impl TkElement {
    pub fn module(&self) -> KnotModule {
        self.module
    }

    pub fn p(&self) -> u32 {
        self.module.p
    }

    pub fn rule(&self) -> ReductionRule {
        self.module.rule
    }

    pub fn terms(&self) -> &TkTerms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, m: u32, n: u32) -> LaurentPoly {
        self.terms.coeff(&(m, n))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self { module: self.module, terms: self.terms.scale(c) }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.scale(&LaurentPoly::t(k))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&LaurentPoly::constant(c))
    }

    /// Multiplication by `S_m(x)`.
    pub fn mul_sx(&self, m: i64) -> Self {
        Self { module: self.module, terms: mul_sx(m, &self.terms) }
    }

    /// Multiplication by `x^d`.
    pub fn mul_x_pow(&self, d: u32) -> Self {
        let mut out = TkTerms::zero();
        for (i, c) in monomial_to_s(d) {
            out.add_scaled(&mul_sx(i as i64, &self.terms), &LaurentPoly::constant(c));
        }
        Self { module: self.module, terms: out }
    }

    fn same_module(&self, other: &Self) -> Result<()> {
        if self.module == other.module {
            Ok(())
        } else {
            Err(SkeinError::ModuleMismatch {
                left: format!("p = {}, {}", self.p(), self.rule()),
                right: format!("p = {}, {}", other.p(), other.rule()),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_module(other)?;
        Ok(Self { module: self.module, terms: &self.terms + &other.terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_module(other)?;
        Ok(Self { module: self.module, terms: &self.terms - &other.terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_module(other)?;
        let module = self.module;
        let mut out = TkTerms::zero();
        for ((m1, n1), c1) in &self.terms {
            for ((m2, n2), c2) in &other.terms {
                let c = c1 * c2;
                for j in s_product(*n1, *n2) {
                    let y = module.reduce_raw(j as i64);
                    for i in s_product(*m1, *m2) {
                        out.add_scaled(&mul_sx(i as i64, &y), &c);
                    }
                }
            }
        }
        Ok(Self { module, terms: out })
    }
}

impl Add for &TkElement {
    type Output = TkElement;
    fn add(self, rhs: &TkElement) -> TkElement {
        self.checked_add(rhs).expect("adding torus-knot elements")
    }
}

impl Sub for &TkElement {
    type Output = TkElement;
    fn sub(self, rhs: &TkElement) -> TkElement {
        self.checked_sub(rhs).expect("subtracting torus-knot elements")
    }
}

impl Mul for &TkElement {
    type Output = TkElement;
    fn mul(self, rhs: &TkElement) -> TkElement {
        self.checked_mul(rhs).expect("multiplying torus-knot elements")
    }
}

impl Add for TkElement {
    type Output = TkElement;
    fn add(self, rhs: TkElement) -> TkElement {
        &self + &rhs
    }
}

impl Sub for TkElement {
    type Output = TkElement;
    fn sub(self, rhs: TkElement) -> TkElement {
        &self - &rhs
    }
}

impl Neg for &TkElement {
    type Output = TkElement;
    fn neg(self) -> TkElement {
        TkElement { module: self.module, terms: -&self.terms }
    }
}

impl Neg for TkElement {
    type Output = TkElement;
    fn neg(self) -> TkElement {
        -&self
    }
}

impl fmt::Display for TkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((m, n), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = [(m, "x"), (n, "y")]
                .into_iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| format!("S_{e}({v})"))
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TkElement[p = {}, {}]({self})", self.p(), self.rule())
    }
}

#[derive(Serialize, Deserialize)]
struct TkRepr {
    p: u32,
    convention: Convention,
    terms: Vec<(u32, u32, LaurentPoly)>,
}

impl Serialize for TkElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let convention = self.rule().convention().ok_or_else(|| S::Error::custom(SkeinError::UnnamedRule))?;
        TkRepr {
            p: self.p(),
            convention,
            terms: self.terms.iter().map(|((m, n), c)| (*m, *n, c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TkElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TkRepr::deserialize(d)?;
        let module = KnotModule::new(r.p as i64, r.convention).map_err(D::Error::custom)?;
        let mut terms = TkTerms::zero();
        for (m, n, c) in r.terms {
            if terms.get(&(m, n)).is_some() {
                return Err(D::Error::custom(format!("duplicate term ({m}, {n})")));
            }
            terms.add_term((m, n), c);
        }
        module.from_terms(terms).map_err(D::Error::custom)
    }
}

/// `n -> S_n(y)` reduced in a fixed module: the colored Jones sequence of
/// the curve `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JonesSequence {
    module: KnotModule,
}

impl JonesSequence {
    pub fn new(p: i64, rule: impl Into<ReductionRule>) -> Result<Self> {
        Ok(Self { module: KnotModule::new(p, rule)? })
    }

    pub fn module(&self) -> KnotModule {
        self.module
    }

    pub fn at(&self, n: i64) -> TkElement {
        self.module.s_y(n)
    }
}

/// Anything that assigns a torus-knot element to each integer.
pub trait KnotSequence {
    fn module(&self) -> KnotModule;
    fn at(&self, n: i64) -> TkElement;
}

impl KnotSequence for JonesSequence {
    fn module(&self) -> KnotModule {
        self.module
    }
    fn at(&self, n: i64) -> TkElement {
        JonesSequence::at(self, n)
    }
}

/// A [`KnotSequence`] given by a closure.
pub struct FnSequence<F> {
    pub module: KnotModule,
    pub f: F,
}

impl<F: Fn(i64) -> TkElement> KnotSequence for FnSequence<F> {
    fn module(&self) -> KnotModule {
        self.module
    }
    fn at(&self, n: i64) -> TkElement {
        (self.f)(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::tm;

    fn kbsm(p: i64) -> KnotModule {
        KnotModule::new(p, Convention::Kbsm).unwrap()
    }

    #[test]
    fn in_range_is_basis() {
        for p in 1..=4 {
            for n in 0..=p {
                let s = reduce_sy(n, p, Convention::Kbsm).unwrap();
                assert_eq!(s.terms(), &TkTerms::term((0, n as u32), LaurentPoly::one()));
            }
        }
    }

    #[test]
    fn reduce_two_at_p_one() {
        let s = reduce_sy(2, 1, Convention::Kbsm).unwrap();
        let expected = TkTerms::from_terms([((2, 0), tm(4, -1)), ((2, 1), tm(2, -1))]);
        assert_eq!(s.terms(), &expected);
    }

    #[test]
    fn minus_one_is_zero() {
        for c in [Convention::Kbsm, Convention::Rt] {
            assert!(reduce_sy(-1, 3, c).unwrap().is_zero());
        }
    }

    #[test]
    fn negative_index_reflects() {
        let m = kbsm(2);
        for n in 0..=9 {
            assert_eq!(m.s_y(-n - 2), -m.s_y(n));
        }
    }

    #[test]
    fn rejects_bad_p() {
        assert_eq!(reduce_sy(3, 0, Convention::Rt).unwrap_err(), SkeinError::InvalidKnotParameter(0));
        assert!(KnotModule::new(-2, Convention::Kbsm).is_err());
    }

    #[test]
    fn reduction_is_idempotent() {
        let m = kbsm(2);
        for n in 0..=10 {
            let s = m.s_y(n);
            assert_eq!(m.reduce_terms(s.terms()), s);
        }
    }

    #[test]
    fn products() {
        let m = kbsm(3);
        let x = m.s_x(1);
        assert_eq!(&x * &x, &m.s_x(2) + &m.one());
        let a = &m.s_y(2) * &m.s_x(3);
        assert_eq!(&m.one() * &a, a);
        let expected = &m.s_y(4) + &m.s_y(2);
        assert_eq!(&m.s_y(1) * &m.s_y(3), expected);
    }

    #[test]
    fn mismatched_modules_are_rejected() {
        let a = kbsm(1).one();
        let b = kbsm(2).one();
        let c = KnotModule::new(1, Convention::Rt).unwrap().one();
        assert!(matches!(tk_mul(&a, &b), Err(SkeinError::ModuleMismatch { .. })));
        assert!(a.checked_add(&c).is_err());
    }

    #[test]
    fn embed_examples() {
        let m = kbsm(2);
        let xz = HbElement::monomial(1, 0, 1, LaurentPoly::one());
        assert_eq!(m.embed(&xz), &m.s_x(2) + &m.one());
        let sq = &HbElement::monomial(2, 0, 0, LaurentPoly::one())
            + &HbElement::monomial(0, 0, 2, LaurentPoly::one());
        assert_eq!(m.embed(&sq), (&m.s_x(2) + &m.one()).scale_int(2));
        assert_eq!(m.embed(&HbElement::one()), m.one());
    }

    // Reduction only touches y-indices, so factors in x and z pass through.
    #[test]
    fn embed_commutes_with_x_and_z_factors() {
        let m = KnotModule::new(2, Convention::Rt).unwrap();
        let a = &HbElement::monomial(1, 2, 0, tm(1, 1)) + &HbElement::monomial(0, 5, 1, tm(-2, 3));
        let b = &HbElement::monomial(3, 0, 2, tm(0, -1)) + &HbElement::z();
        assert_eq!(m.embed(&a.product(&b)), &m.embed(&a) * &m.embed(&b));
    }

    #[test]
    fn product_matches_monomial_route() {
        // S_1(y) S_p(y) = S_{p+1}(y) + S_{p-1}(y)
        for p in 2..=4 {
            let m = kbsm(p);
            assert_eq!(&m.s_y(1) * &m.s_y(p), &m.s_y(p + 1) + &m.s_y(p - 1));
        }
    }

    #[test]
    fn json_shape_and_round_trip() {
        let s = reduce_sy(2, 1, Convention::Kbsm).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "p": 1,
                "convention": "kbsm",
                "terms": [[2, 0, {"t": [[4, "-1"]]}], [2, 1, {"t": [[2, "-1"]]}]]
            })
        );
        let back: TkElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_rejects_out_of_range_and_mutants() {
        let bad = serde_json::json!({"p": 1, "convention": "rt", "terms": [[0, 2, {"t": [[0, "1"]]}]]});
        assert!(serde_json::from_value::<TkElement>(bad).is_err());
        let mutant = KnotModule::new(1, Convention::Kbsm.rule().flipped(RuleSign::Tail)).unwrap();
        assert!(serde_json::to_string(&mutant.s_y(3)).is_err());
    }

    #[test]
    fn rule_names() {
        assert_eq!(Convention::Kbsm.rule().convention(), Some(Convention::Kbsm));
        assert_eq!(Convention::Rt.rule().convention(), Some(Convention::Rt));
        for s in RuleSign::ALL {
            assert_eq!(Convention::Kbsm.rule().flipped(s).convention(), None);
            assert_eq!(Convention::Kbsm.rule().flipped(s).flipped(s), Convention::Kbsm.rule());
        }
    }
}
