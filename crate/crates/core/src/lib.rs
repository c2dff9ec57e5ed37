//! Secret sharing from CSS quantum codes.
//!
//! A classical code `C` over `F_q` with `C⊥ ⊆ C` and `dim C − dim C⊥ = 1`
//! yields an `[[n, 1, d]]_q` CSS code that shares one classical qudit of
//! secret among `n` parties. This crate provides:
//!
//! - exact finite-field and linear-code arithmetic ([`gf`], [`mat`],
//!   [`codes`]),
//! - scheme construction and error classification ([`css`]),
//! - a dense qudit statevector simulator for encoding and share-recovery
//!   circuits ([`qsim`]),
//! - the minimal-codeword access structure and an independent brute-force
//!   oracle that classifies party subsets by expectation-value scans
//!   ([`access`]).
//!
//! The [`example_codes`] module holds the small reference codes the test
//! suite and shipped fixtures are built from.

pub use num_complex;

pub mod access;
pub mod codes;
pub mod css;
pub mod example_codes;
pub mod gf;
pub mod mat;
pub mod qsim;

pub use access::{AccessOracle, AccessStructure, OracleConfig, PartySet, StructureSource};
pub use codes::{Codeword, LinearCode, MinimalCodeword};
pub use css::{ErrorClass, PauliWord, QssScheme};
pub use gf::{Field, FieldElement};
pub use qsim::{StateVector, Tolerance};
