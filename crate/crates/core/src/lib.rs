//! Exact computations with Bethe subalgebras of the Yangian `Y(gl_n)`,
//! shift of argument subalgebras of `U(gl_n)`, and their degenerations.

pub mod bethe;
pub mod centralizer;
pub mod classical;
pub mod error;
pub mod experiments;
pub mod homs;
pub mod laurent;
pub mod limits;
pub mod matrix;
pub mod moduli;
pub mod pbw;
pub mod presentation;
pub mod ratfunc;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::{q, qi, Field, Rational, Ring};
