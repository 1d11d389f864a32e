//! Graph classes, their exhaustive enumeration, and checkers for the extremal statements.

pub mod classes;
pub mod enumerate;
pub mod random;
pub mod theorems;

pub use classes::{
    canonical_string, claimed_family, class_members, class_members_keyed, extremal_from_members,
    extremal_mu, ExtremalConfig, ExtremalReport, GraphClass, Objective, Scored, DEFAULT_TIE_TOL,
};
pub use enumerate::{
    enumerate_connected, enumerate_connected_keyed, enumerate_trees, enumerate_trees_keyed,
    enumerate_unicyclic, enumerate_unicyclic_keyed, MAX_CONNECTED_ORDER, MAX_TREE_ORDER,
    MAX_UNICYCLIC_ORDER,
};
pub use random::{non_edges, prufer_decode, random_connected, random_tree};
pub use theorems::{
    verify_theorem, CaseResult, TheoremId, Verdict, VerificationReport, VerifyOptions,
};
