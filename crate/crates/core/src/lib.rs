//! Exact classes of moduli spaces of one-dimensional sheaves on the plane in
//! the Grothendieck ring of varieties.
//!
//! * [`ring`]: arithmetic in `Z[L]`.
//! * [`atoms`]: classes of projective spaces, Grassmannians, Hilbert schemes of
//!   points on `P^2` and the other building blocks.
//! * [`dsl`]: the expression language the strata are written in.
//! * [`strata`]: the stratum registry and the assembled moduli classes.
//! * [`oracle`]: brute-force point and ideal counts over small finite fields.
//! * [`cli`]: the `motivic` command-line tool.

pub mod atoms;
pub mod cli;
pub mod dsl;
mod error;
pub mod oracle;
pub mod ring;
pub mod strata;

pub use error::{Error, Result, SyntaxError};
pub use ring::MotiveClass;
