//! Exact tree searches: connection graphs, forbidden tuples, untying graphs
//! and cylinder configurations.

mod connection;
mod cylinders;
mod forbidden;
mod minimal;
pub mod prufer;
mod untying;
mod weight;

pub use connection::{check_connection_graph, ConnectionGraph, ConnectionSearch};
pub use cylinders::decide_cylinders;
pub use forbidden::{canonical, enumerate_forbidden, enumerate_forbidden_shard, enumerate_forbidden_up_to, forbidden_bound, partitions};
pub use minimal::{by_decreasing_argument, collinear_frame, decide_minimal_abelian, is_minimal_abelian, minimal_tuple_decision};
pub use untying::{check_untying, decide_multizero_abelian, is_simple_pole_abelian};
pub use weight::Weight;

pub mod tags {
    pub use super::cylinders::{TAG_CYL, TAG_CYL_BOUND, TAG_CYL_NONE};
    pub use super::minimal::{TAG_CONNECTION, TAG_NO_CONNECTION, TAG_POLYGON};
    pub use super::untying::{TAG_NO_UNTYING, TAG_UNTYING};
}
