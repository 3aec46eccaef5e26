//! Determinantal ideals, the stage data of their resolution by repeated
//! blow-ups, generic links, and orders along exceptional divisors.

pub mod chart;
pub mod link;
pub mod order;
pub mod spec;

pub use chart::{blowup_chart_step, ChartState, ExceptionalRecord};
pub use link::{
    codimension, double_link_check, generic_link, stacked_link_matrix, LinkMode, LinkSetup, DEFAULT_SAMPLE_BOUND,
    MAX_SAMPLE_ATTEMPTS,
};
pub use order::{
    computed_link_order, degree_identity, link_min_degree_check, ord_ideal_power,
    ord_variable_block, ord_xblock, order_invariance_check, DegreeReport, InvarianceReport,
    LinkOptions, ModeChoice, Order, OrderReport, OrderStatus, PowerOrder,
};
pub use spec::{
    determinantal_ideal, entry_name, generic_matrix_ring, predicted_link_order, resolution_data,
    MatrixSpec, StageData,
};
