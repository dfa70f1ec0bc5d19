//! Construction and verification of generalized doubly stochastic (g.d.s.)
//! matrices: real square matrices whose row sums and column sums all equal
//! one, with entries of either sign allowed.
//!
//! The crate builds several flavors of these matrices and certifies every
//! construction numerically:
//!
//! * a symmetric 3x3 family parameterized by one entry, in a stable and a
//!   deliberately unstable variant ([`build_gds3_stable`],
//!   [`build_gds3_unstable`]);
//! * orthogonal bases whose first column is `e / sqrt(n)`, via Householder
//!   QR ([`extend_to_un_basis`], [`un_from_reflector`]);
//! * orthogonal g.d.s. matrices from arbitrary orthogonal trailing blocks
//!   and back ([`build_gds_from_block`], [`recover_block`]);
//! * orthogonal g.d.s. matrices with a prescribed spectrum
//!   ([`build_eig_gds`]);
//! * solutions of the Yang-Baxter equation and their orthogonal g.d.s.
//!   conjugates ([`build_ybe_seed`], [`build_ybe_gds`]).
//!
//! Verification lives in [`gds_report`], [`is_gds`], [`ybe_residual`] and
//! [`verify_eigenpairs`]; [`experiment`] reproduces the accompanying
//! numerical experiments from a single 64-bit seed.

mod complex;
mod dot;
mod error;
mod matrix;
mod norm;

pub mod construct;
pub mod experiment;
pub mod qr;
pub mod verify;

pub use complex::ComplexVec;
pub use construct::{
    build_eig_gds, build_gds3_stable, build_gds3_unstable, build_gds_from_block, build_ybe_gds,
    build_ybe_seed, extend_to_un_basis, recover_block, un_from_reflector, EigSpec, YbeSeedSpec,
};
pub use error::{GdsError, Result};
pub use matrix::Matrix;
pub use norm::vec_norm;
pub use qr::{householder_reflector, qr_householder, QrResult};
pub use verify::{gds_report, is_gds, verify_eigenpairs, ybe_residual, GdsReport};
