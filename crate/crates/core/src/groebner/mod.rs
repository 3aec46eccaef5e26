//! Gröbner bases and the ideal operations built on them: membership,
//! equality, elimination, intersection, colon ideals, powers and dimension.

pub mod dimension;
pub mod engine;
pub mod ideal;

pub use engine::{
    is_groebner_basis, normal_form, reduced_gb, reduced_gb_with_stats, s_polynomial, GbConfig,
    GbStats,
};
pub use ideal::Ideal;

#[cfg(test)]
mod tests;
