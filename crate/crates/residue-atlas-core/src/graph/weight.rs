use core::fmt::Debug;

use crate::field::QReal;

/// Totally ordered additive weights used by the tree searches.
pub trait Weight: Clone + Ord + Debug {
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
}

impl Weight for i64 {
    fn zero() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
}

impl Weight for QReal {
    fn zero() -> Self {
        QReal::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
}
