use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Numeric type the set functions and integrals are generic over.
///
/// Anything that is a signed, ordered field element convertible from and to
/// primitive numbers qualifies: `f32`, `f64`, `Ratio<i64>`, `Ratio<i128>`.
pub trait Scalar:
    Num
    + Signed
    + PartialOrd
    + FromPrimitive
    + ToPrimitive
    + Copy
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`. Panics only if the target cannot
    /// represent the value at all (e.g. NaN into a rational).
    fn of(x: f64) -> Self {
        Self::from_f64(x).unwrap_or_else(|| panic!("{x} is not representable"))
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).unwrap_or_else(|| panic!("{x} is not representable"))
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn is_finite_value(self) -> bool {
        self.as_f64().is_finite()
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// `x ∨ 0`
    fn positive_part(self) -> Self {
        self.max_of(Self::zero())
    }

    /// `(−x) ∨ 0`
    fn negative_part(self) -> Self {
        (-self).max_of(Self::zero())
    }

    fn total_cmp_lossy(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    fn approx_eq(self, other: Self, tol: Self) -> bool {
        (self - other).abs() <= tol
    }
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + PartialOrd
        + FromPrimitive
        + ToPrimitive
        + Copy
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
