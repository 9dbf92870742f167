//! Set functions on the subset lattice of the criteria and the transforms
//! between their representations.
//!
//! All tables are dense, of length `2^n`, indexed by [`Subset::index`].

mod capacity;
mod json;
mod transform;

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::{Subset, MAX_CRITERIA};

pub use capacity::{conjugate, validate, validate_with_tolerance, Capacity, CapacityProperties};
pub use json::SetFunctionFile;

pub(crate) fn check_table_len(n: usize, len: usize) -> Result<()> {
    if n == 0 || n > MAX_CRITERIA {
        return Err(Error::InvalidCriteriaCount(n));
    }
    let expected = 1usize << n;
    if len != expected {
        return Err(Error::LengthMismatch { expected, got: len });
    }
    Ok(())
}

fn check_empty_is_zero<T: Scalar>(values: &mut [T]) -> Result<()> {
    let v0 = values[0];
    if v0.abs() > T::of(crate::DEFAULT_TOLERANCE) {
        return Err(Error::NotNormalized {
            subset: Subset::EMPTY,
            expected: 0.0,
            got: v0.as_f64(),
        });
    }
    values[0] = T::zero();
    Ok(())
}

/// Real values on all `2^n` subsets with `v(∅) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SetFunction<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> SetFunction<T> {
    /// Builds a set function from a dense table indexed by mask.
    ///
    /// `v(∅)` must be zero up to [`crate::DEFAULT_TOLERANCE`]; it is then
    /// stored as an exact zero.
    pub fn new(n: usize, mut values: Vec<T>) -> Result<Self> {
        check_table_len(n, values.len())?;
        check_empty_is_zero(&mut values)?;
        Ok(SetFunction { n, values })
    }

    pub fn from_fn(n: usize, f: impl FnMut(Subset) -> T) -> Result<Self> {
        if n == 0 || n > MAX_CRITERIA {
            return Err(Error::InvalidCriteriaCount(n));
        }
        SetFunction::new(n, Subset::all(n).map(f).collect())
    }

    pub fn zero(n: usize) -> Result<Self> {
        SetFunction::from_fn(n, |_| T::zero())
    }

    /// Unanimity game `u_B`: 1 on supersets of `B`, 0 elsewhere.
    pub fn unanimity(n: usize, b: Subset) -> Result<Self> {
        if b.is_empty() || !b.fits(n) {
            return Err(Error::SubsetOutOfRange { subset: b, n });
        }
        SetFunction::from_fn(n, |a| {
            if b.is_subset_of(a) {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// Additive set function with the given singleton weights.
    pub fn additive(weights: &[T]) -> Result<Self> {
        SetFunction::from_fn(weights.len(), |a| {
            a.iter().fold(T::zero(), |s, i| s + weights[i])
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn get(&self, a: Subset) -> T {
        self.values[a.index()]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, T)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(m, &v)| (Subset::from_mask(m as u32), v))
    }

    /// `v̄(A) = v(N) − v(Aᶜ)`
    pub fn conjugate(&self) -> SetFunction<T> {
        let top = self.get(self.full());
        let values = Subset::all(self.n)
            .map(|a| top - self.get(a.complement(self.n)))
            .collect();
        SetFunction { n: self.n, values }
    }

    pub fn mobius(&self) -> MobiusRepr<T> {
        mobius(self)
    }

    pub fn co_mobius(&self) -> CoMobiusRepr<T> {
        co_mobius(self)
    }

    /// Largest absolute elementwise difference; `None` on differing `n`.
    pub fn max_abs_diff(&self, other: &SetFunction<T>) -> Option<T> {
        (self.n == other.n).then(|| max_abs_diff(&self.values, &other.values))
    }
}

impl<T: Scalar> Index<Subset> for SetFunction<T> {
    type Output = T;

    fn index(&self, a: Subset) -> &T {
        &self.values[a.index()]
    }
}

pub(crate) fn max_abs_diff<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (&x, &y)| acc.max_of((x - y).abs()))
}

/// Möbius coefficients `m(A) = Σ_{B⊆A} (−1)^{|A∖B|} v(B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusRepr<T> {
    n: usize,
    coefficients: Vec<T>,
}

impl<T: Scalar> MobiusRepr<T> {
    /// `m(∅)` must be zero, matching `v(∅) = 0` on the set-function side.
    pub fn new(n: usize, mut coefficients: Vec<T>) -> Result<Self> {
        check_table_len(n, coefficients.len())?;
        check_empty_is_zero(&mut coefficients)?;
        Ok(MobiusRepr { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn get(&self, a: Subset) -> T {
        self.coefficients[a.index()]
    }

    pub fn zeta(&self) -> SetFunction<T> {
        zeta(self)
    }

    /// Nonzero coefficients with their subsets, skipping `∅`.
    pub fn support(&self) -> impl Iterator<Item = (Subset, T)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, &c)| (Subset::from_mask(m as u32), c))
    }
}

/// Co-Möbius (commonality) coefficients `m̌(A) = Σ_{B⊆A} (−1)^{|B|} v(N∖B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoMobiusRepr<T> {
    n: usize,
    coefficients: Vec<T>,
}

impl<T: Scalar> CoMobiusRepr<T> {
    pub fn new(n: usize, coefficients: Vec<T>) -> Result<Self> {
        check_table_len(n, coefficients.len())?;
        Ok(CoMobiusRepr { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn get(&self, a: Subset) -> T {
        self.coefficients[a.index()]
    }
}

/// Ordinal Möbius coefficients: `m∨(A) = μ(A)` when `μ(A) > μ(A∖{i})` for
/// every `i ∈ A`, zero otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct OrdinalMobiusRepr<T> {
    n: usize,
    coefficients: Vec<T>,
}

impl<T: Scalar> OrdinalMobiusRepr<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn get(&self, a: Subset) -> T {
        self.coefficients[a.index()]
    }

    /// `v(A) = max_{B⊆A} m∨(B)`
    pub fn recover(&self) -> SetFunction<T> {
        let mut values = self.coefficients.clone();
        transform::max_zeta(&mut values);
        SetFunction { n: self.n, values }
    }
}

/// Fast Möbius transform.
pub fn mobius<T: Scalar>(v: &SetFunction<T>) -> MobiusRepr<T> {
    let mut coefficients = v.values.clone();
    transform::mobius(&mut coefficients);
    MobiusRepr {
        n: v.n,
        coefficients,
    }
}

/// Fast zeta transform `v(A) = Σ_{B⊆A} m(B)`; inverse of [`mobius`].
pub fn zeta<T: Scalar>(m: &MobiusRepr<T>) -> SetFunction<T> {
    let mut values = m.coefficients.clone();
    transform::zeta(&mut values);
    SetFunction { n: m.n, values }
}

/// Co-Möbius transform, computed as the zeta transform of
/// `B ↦ (−1)^{|B|} v(N∖B)`.
pub fn co_mobius<T: Scalar>(v: &SetFunction<T>) -> CoMobiusRepr<T> {
    let n = v.n;
    let mut coefficients: Vec<T> = Subset::all(n)
        .map(|b| {
            let x = v.get(b.complement(n));
            if b.len() % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect();
    transform::zeta(&mut coefficients);
    CoMobiusRepr { n, coefficients }
}

/// Ordinal Möbius transform of a monotone set function.
pub fn ordinal_mobius<T: Scalar>(v: &SetFunction<T>) -> OrdinalMobiusRepr<T> {
    let coefficients = Subset::all(v.n)
        .map(|a| {
            let x = v.get(a);
            if a.iter().all(|i| x > v.get(a.without(i))) {
                x
            } else {
                T::zero()
            }
        })
        .collect();
    OrdinalMobiusRepr {
        n: v.n,
        coefficients,
    }
}
