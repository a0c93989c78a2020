//! Exact arithmetic for real Clifford algebras `Cl(p,q)` together with the
//! family of Z2-gradings that respect the multivector structure of the
//! underlying Grassmann algebra.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`signature`] and [`multivector`]: orthonormal basis blades, sparse
//!   multivectors with rational coefficients and every product on them
//!   (geometric, exterior, contractions) plus the extended metric.
//! * [`parse`]: the textual multivector grammar and its canonical printer.
//! * [`linalg`]: exact Gaussian elimination and symmetric congruence
//!   diagonalisation used by the classification oracle.
//! * [`grading`]: basis-aligned gradings, the grading automorphism, the
//!   projections onto the even/odd parts and validation of general
//!   involutions of `V`.
//! * [`classify`]: closed-form classification tables for Clifford algebras
//!   and even subalgebras, tensor simplification, and a structural oracle
//!   (regular representation, centre, trace form) that checks them.
//! * [`sigchange`]: the deformed products realising a signature change
//!   `Cl(p,q) -> Cl(r,s)` on the same carrier space.
//! * [`laws`]: exhaustive / randomised sweeps of the algebraic laws, shared
//!   by the test suites and the command-line `verify` command.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod error;
pub mod grading;
pub mod laws;
pub mod linalg;
pub mod multivector;
pub mod parse;
pub mod rational;
pub mod sigchange;
pub mod signature;

pub use classify::{AlgebraClass, DivisionRing, SimpleComponent, StructuralInvariants};
pub use error::Error;
pub use grading::{Involution, Z2Grading};
pub use multivector::Multivector;
pub use rational::Rational;
pub use signature::{Blade, Signature};

pub type Result<T, E = Error> = core::result::Result<T, E>;
