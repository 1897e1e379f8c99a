//! Exact ground-ring arithmetic.
//!
//! Everything in the crate is a finite combination with coefficients in
//! `Z[t, t^-1]`. Coefficients are arbitrary-precision integers, so no
//! operation can overflow silently.

mod combination;
mod laurent;
mod poly;

pub use combination::{Combination, MonomialKey};
pub use laurent::LaurentPoly;
pub use poly::{
    degree, substitute, substitute_w, uni_from_ints, var, w_mono, x, z, UniPoly, WLaurent, XZPoly,
};

/// Shorthand for `c * t^exp` with a machine-integer coefficient.
pub fn tm(exp: i32, c: i64) -> LaurentPoly {
    LaurentPoly::monomial(exp, c)
}
