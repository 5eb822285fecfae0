//! Exact computation of the Redei-Berge symmetric function of a labeled digraph
//! in noncommuting variables, with the identities it satisfies.
//!
//! ```
//! use redei_berge::digraph::Digraph;
//! use redei_berge::ncsym::Basis;
//! use redei_berge::redeiberge::w_by_permutations;
//!
//! let w = w_by_permutations(&Digraph::path(2)).unwrap();
//! assert_eq!(w.to_string(), "p[1/2]");
//! assert_eq!(w.to_basis(Basis::M).to_string(), "m[12] + m[1/2]");
//! ```

pub mod digraph;
pub mod error;
pub mod ncsym;
pub mod perm;
pub mod redeiberge;
pub mod setpart;

pub use error::{Error, Result};
