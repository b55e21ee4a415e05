//! Fission of irregular types and pure local wild mapping class groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: exact classical/G₂ root systems, Levi subsystems, kernels
//!   and restricted hyperplane arrangements.
//! - [`fission`]: degree profiles, fission filtrations, decorated fission
//!   trees and the product decomposition of Γ_Q, computed both from the tree
//!   and directly from the restricted arrangements.
//! - [`braid`]: braid words with an exact word problem (Artin action on a
//!   free group), the pure braid operad, and pure cabled braid groups.
//! - [`stokes`]: the SL₃ Stokes-data braiding verifier.
//! - [`io`]: input documents, JSON/DOT tree emission, decomposition strings.
//! - [`suites`]: the randomized and exhaustive agreement suites shared by the
//!   acceptance tests and the `selftest` command.

pub mod braid;
mod error;
pub mod fission;
pub mod io;
mod linalg;
pub mod rootsys;
pub mod stokes;
pub mod suites;

pub use error::{Error, Result};

/// Exact rational scalar used for Cartan elements and Stokes matrices.
pub type Rational = num_rational::BigRational;
