//! Exact arithmetic in K = Q(i, √3).

mod qcomplex;
mod qreal;
mod rationalize;

pub use qcomplex::{field_candidates, QComplex};
pub use qreal::QReal;
pub use rationalize::{rationalize, rationalize_within};

mod serde_impl;
