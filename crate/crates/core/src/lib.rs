//! Completeness testing for partial vertex–facet incidence matrices.
//!
//! A 0/1 matrix `J` whose rows are facets and whose columns are vertices of
//! some `d`-polytope is *complete* when it is the full incidence matrix. This
//! crate decides completeness by computing the reduced Z₂ homology of the
//! crosscut complex of `J` in degree `d - 1` ([`crosscut::decide`]), and it
//! produces and checks short certificates of incompleteness built from the
//! pulling complex ([`pulling::find_certificate`],
//! [`pulling::verify_certificate`]).
//!
//! The combinatorial routines trust that `J` really is a minor of some
//! `d`-polytope; that property cannot be checked from the matrix alone. The
//! [`geometry`] module provides the checkable route: exact rational points and
//! halfspaces, validated and turned into an incidence matrix.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, the command
//! line and file handling live in the `polycomplete-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bits;
pub mod combinatorics;
pub mod crosscut;
mod error;
pub mod fixtures;
pub mod geometry;
pub mod gf2;
pub mod incidence;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod pulling;
pub mod simplex;

pub use crosscut::{decide, HomologyReport, Side, SideChoice};
pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use incidence::{IncidenceMinor, SizeStats};
pub use pulling::{PullingCertificate, PullingFacet};
pub use simplex::Simplex;
