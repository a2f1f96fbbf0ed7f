use std::fmt::Debug;

use super::Integer;

/// Commutative ring operations used by the generic matrix code.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// An integral domain with exact division: `a.div_exact(b)` returns the unique
/// `c` with `b * c == a`, or `None` if no such element exists.
pub trait ExactDivision: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn one() -> Self {
        Integer::ONE
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.sub_ref(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
}

impl ExactDivision for Integer {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Integer::div_exact(self, rhs)
    }
}
