//! Finite-precision arithmetic for p-adic power series and Iwasawa algebras.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! * [`padic`]: elements of `O/p^N` for `O = Z_p` or a quadratic extension.
//! * [`cycser`]: the ring `O[[π]]` with Frobenius, `ψ`, the `Γ`-action and the Mellin transform.
//! * [`iwadist`]: `O[[X]]` and the distribution algebras: `ω_n`, `Φ_n`, twists, half-logarithms.
//! * [`logmat`]: change-of-basis matrices and the logarithmic matrix for `a_p = 0`.
//! * [`split`]: the signed splitting solver and the determinant algebra around it.
//! * [`regdiv`]: divisibility checks in truncated multivariate power series rings.
//! * [`galimg`]: matrix group closures over finite fields.
//! * [`qexp`]: theta series, depleted Eisenstein series and Euler products.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cyclo;
pub mod cycser;
pub mod error;
pub mod frac;
pub mod galimg;
pub mod iwadist;
pub mod linalg;
pub mod logmat;
pub mod padic;
pub mod qexp;
pub mod regdiv;
pub mod split;

pub use error::{Error, Result};
pub use padic::{Ext, PadicElt, PrimeCtx, Val};
