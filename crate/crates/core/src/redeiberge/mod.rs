//! The Redei-Berge function `W_X` and its commutative image `U_X`.

pub mod definition;
pub mod deletion_contraction;
pub mod descents;
pub mod permutations;
pub mod verify;

pub use definition::{count_friendly, w_by_definition, Coloring, MAX_DEFINITION};
pub use deletion_contraction::{
    discrete_w, edge_to_end, w_by_deletion_contraction, w_by_deletion_contraction_with, EdgeRule,
    MAX_DELETION_CONTRACTION,
};
pub use descents::{descent_aggregate, u_by_descents, x_descent_set, QSym, MAX_DESCENTS};
pub use permutations::{
    e_coefficient_formula, for_each_signed_permutation, m_coefficient_formula, w_by_permutations,
    w_tournament, SignedPermutation, MAX_PERMUTATIONS,
};
pub use verify::{
    check_identities, check_identities_with_partner, Check, Outcome, VerificationReport,
};
