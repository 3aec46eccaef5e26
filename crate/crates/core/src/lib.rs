//! Exact computations around generic links of determinantal ideals:
//! polynomial arithmetic, Gröbner bases and colon ideals, an exact simplex
//! solver, the determinantal resolution bookkeeping, orders along
//! exceptional divisors and log canonical thresholds.

pub mod detlink;
pub mod error;
pub mod groebner;
pub mod lct;
pub mod polyring;
pub mod simplexq;

pub use error::{Error, Result};
