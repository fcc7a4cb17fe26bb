//! Horadam polynomials, their generating function, and coefficient bounds for
//! the class of bi-univalent functions whose derivatives are subordinate to
//! the Horadam generating function.
//!
//! * [`poly`]: exact and floating evaluation of `h_n(x)`, characteristic roots,
//!   a closed-form oracle, and the named special families.
//! * [`series`]: truncated power-series arithmetic, composition, inversion and
//!   the generating-function expansion.
//! * [`bounds`]: the `|a2|`, `|a3|` and Fekete-Szegő bounds in published and
//!   derived variants.
//! * [`verify`]: brute-force maximisation over the feasible Schwarz coefficients.
//! * [`cli`]: the `horadam` command-line tool.
//!
//! ```
//! use horadam::poly::{family_params, horadam, Family};
//!
//! let fib = family_params(Family::Fibonacci);
//! assert_eq!(horadam(&fib, 3).unwrap().to_string(), "x^2 + 1");
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod poly;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
