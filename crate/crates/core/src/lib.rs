//! Exact skein-module calculus for the genus-two handlebody and the
//! complement of the `(2p+1, 2)` torus knot.
//!
//! The crate is organised bottom-up:
//!
//! * [`coeffs`]: Laurent polynomials in `t` over big integers and the
//!   polynomial extensions built on them;
//! * [`chebyshev`]: the normalized Chebyshev polynomials `T_n`, `S_n`;
//! * [`handlebody`]: the free module with basis `x^m y^n z^k`;
//! * [`families`]: the skein families `X_1*y^n`, `Y_1*y^n`, `X_i`, `sigma_n`;
//! * [`torusknot`]: the complement module with basis `S_m(x) S_n(y)`,
//!   `0 <= n <= p`, its reduction rules and the identity checks built on them;
//! * [`qtorus`]: the quantum torus acting on colored-Jones sequences.

pub mod chebyshev;
pub mod coeffs;
pub mod error;
pub mod families;
pub mod handlebody;
pub mod qtorus;
pub mod torusknot;

pub use error::{Result, SkeinError};
