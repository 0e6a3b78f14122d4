//! Exact computer algebra for octonion-coefficient Clifford algebras.
//!
//! The crate builds, over arbitrary-precision rationals:
//!
//! - octonion arithmetic with the product generated by seven oriented
//!   index triples ([`octonion`]);
//! - sparse Clifford algebras with every generator squaring to -1
//!   ([`clifford`]);
//! - the tensor algebras of the two, including the multi-slot block variant
//!   ([`tensor`]);
//! - the finite group of eight sign involutions, its sign tables and the
//!   averaging projections it induces ([`involutions`]);
//! - Witt bases, twistor frames, Hermitian variables and the exact
//!   conversions between coordinate systems ([`witt`]);
//! - Dirac-type differential operators and their anticommutation relations
//!   ([`diffops`]);
//! - a batch verification engine with machine-readable reports ([`verify`])
//!   and table renderers ([`tables`]).
//!
//! Everything is exact: there is no floating point anywhere, and every
//! identity check is an equality of canonical forms.

// index loops over parallel 8×8 sign tables read better than iterator chains
#![allow(clippy::needless_range_loop)]

pub mod clifford;
pub mod diffops;
pub mod error;
pub mod involutions;
pub mod octonion;
pub mod rational;
pub mod sample;
pub mod tables;
pub mod tensor;
pub mod verify;
pub mod witt;

pub use error::{Error, Result};
pub use octonion::Octonion;
pub use rational::Rational;
