//! Log canonical thresholds: the determinantal closed form, Howald's linear
//! program for monomial ideals, monomial-weight upper bounds, and the
//! verifiers built on them.

pub mod formula;
pub mod howald;
pub mod verify;

pub use formula::{
    determinantal_ratios, lct_determinantal, resolution_minimum, LctCertificate, LctMethod,
    LctResult,
};
pub use howald::{
    howald_lct, minimal_monomial_generators, newton_lp, optimal_weights, weight_bound,
    weighted_order, WeightBound,
};
pub use verify::{
    codim2_report, eq1_sanity, gendegree_report, link_ratio, remark_report, triples,
    verify_corollary_vanishing, verify_qibound, verify_theorem1, VerifierCase, VerifierReport,
};
