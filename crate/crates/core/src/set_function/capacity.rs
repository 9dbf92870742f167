use std::ops::{Deref, Index};

use rand::Rng;

use super::{ordinal_mobius, OrdinalMobiusRepr, SetFunction};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// A monotone set function with `μ(∅) = 0` and `μ(N) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Capacity<T> {
    base: SetFunction<T>,
    strictly_positive_singletons: bool,
}

/// Attributes reported alongside a successful validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityProperties {
    /// `A ⊊ B ⟹ μ(A) < μ(B)`
    pub strictly_monotone: bool,
    /// `μ(A) = Σ_{i∈A} μ({i})` for every `A`
    pub additive: bool,
    /// `μ({i}) > 0` for every `i`
    pub positive_singletons: bool,
}

impl<T: Scalar> Capacity<T> {
    /// Validates a dense table with the default tolerance, without requiring
    /// positive singletons.
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        validate(&SetFunction::new(n, values)?, false)
    }

    pub fn from_set_function(v: SetFunction<T>) -> Result<Self> {
        validate(&v, false)
    }

    pub fn additive(weights: &[T]) -> Result<Self> {
        validate(&SetFunction::additive(weights)?, false)
    }

    /// Capacity depending only on cardinality: `μ(A) = by_size[|A|]`.
    pub fn symmetric(by_size: &[T]) -> Result<Self> {
        let n = by_size.len().saturating_sub(1);
        validate(&SetFunction::from_fn(n, |a| by_size[a.len()])?, false)
    }

    pub fn unanimity(n: usize, b: Subset) -> Result<Self> {
        validate(&SetFunction::unanimity(n, b)?, false)
    }

    /// A random capacity with strictly positive increments, built bottom-up:
    /// each `μ(A)` is the largest of its lower covers plus a uniform draw,
    /// and the table is scaled so that `μ(N) = 1`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 || n > crate::MAX_CRITERIA {
            return Err(Error::InvalidCriteriaCount(n));
        }
        let mut raw = vec![0.0f64; 1 << n];
        for mask in 1..raw.len() {
            let a = Subset::from_mask(mask as u32);
            let below = a
                .iter()
                .map(|i| raw[a.without(i).index()])
                .fold(0.0, f64::max);
            raw[mask] = below + rng.gen_range(0.01..1.0);
        }
        let top = raw[raw.len() - 1];
        let mut values: Vec<T> = raw.iter().map(|&x| T::of(x / top)).collect();
        let last = values.len() - 1;
        values[last] = T::one();
        validate(&SetFunction::new(n, values)?, true)
    }

    pub fn as_set_function(&self) -> &SetFunction<T> {
        &self.base
    }

    pub fn into_set_function(self) -> SetFunction<T> {
        self.base
    }

    pub fn strictly_positive_singletons(&self) -> bool {
        self.strictly_positive_singletons
    }

    pub fn singleton(&self, i: usize) -> T {
        self.base.get(Subset::singleton(i))
    }

    pub fn conjugate(&self) -> Capacity<T> {
        conjugate(self)
    }

    pub fn ordinal_mobius(&self) -> OrdinalMobiusRepr<T> {
        ordinal_mobius(&self.base)
    }

    pub fn properties(&self) -> CapacityProperties {
        self.properties_with_tolerance(T::of(crate::DEFAULT_TOLERANCE))
    }

    pub fn properties_with_tolerance(&self, tol: T) -> CapacityProperties {
        let v = &self.base;
        let n = v.n();
        let mut strictly_monotone = true;
        for a in Subset::all(n) {
            for i in a.complement(n).iter() {
                if v.get(a.with(i)) - v.get(a) <= tol {
                    strictly_monotone = false;
                }
            }
        }
        let additive = Subset::all(n).all(|a| {
            let sum = a.iter().fold(T::zero(), |s, i| s + self.singleton(i));
            (v.get(a) - sum).abs() <= tol
        });
        CapacityProperties {
            strictly_monotone,
            additive,
            positive_singletons: (0..n).all(|i| self.singleton(i) > tol),
        }
    }
}

impl<T> Deref for Capacity<T> {
    type Target = SetFunction<T>;

    fn deref(&self) -> &SetFunction<T> {
        &self.base
    }
}

impl<T: Scalar> Index<Subset> for Capacity<T> {
    type Output = T;

    fn index(&self, a: Subset) -> &T {
        &self.base[a]
    }
}

/// [`validate_with_tolerance`] with [`crate::DEFAULT_TOLERANCE`].
pub fn validate<T: Scalar>(
    v: &SetFunction<T>,
    require_positive_singletons: bool,
) -> Result<Capacity<T>> {
    validate_with_tolerance(
        v,
        require_positive_singletons,
        T::of(crate::DEFAULT_TOLERANCE),
    )
}

/// Checks monotonicity over every cover `(A, A ∪ {i})` in ascending
/// `(mask, i)` order, then `μ(N) = 1`, then (optionally) positive singletons.
/// The first violation found is returned.
pub fn validate_with_tolerance<T: Scalar>(
    v: &SetFunction<T>,
    require_positive_singletons: bool,
    tol: T,
) -> Result<Capacity<T>> {
    let n = v.n();
    let full = v.full();
    for a in Subset::all(n) {
        for i in a.complement(n).iter() {
            if v.get(a) > v.get(a.with(i)) + tol {
                return Err(Error::NotMonotone {
                    subset: a,
                    criterion: i,
                });
            }
        }
    }
    if (v.get(full) - T::one()).abs() > tol {
        return Err(Error::NotNormalized {
            subset: full,
            expected: 1.0,
            got: v.get(full).as_f64(),
        });
    }
    let positive = (0..n).all(|i| v.get(Subset::singleton(i)) > T::zero());
    if require_positive_singletons {
        if let Some(i) = (0..n).find(|&i| v.get(Subset::singleton(i)) <= tol) {
            return Err(Error::NonPositiveSingleton { criterion: i });
        }
    }
    let mut values = v.values().to_vec();
    let last = values.len() - 1;
    values[last] = T::one();
    Ok(Capacity {
        base: SetFunction::new(n, values)?,
        strictly_positive_singletons: positive,
    })
}

/// `μ̄(A) = 1 − μ(Aᶜ)`
pub fn conjugate<T: Scalar>(mu: &Capacity<T>) -> Capacity<T> {
    let base = mu.base.conjugate();
    let n = base.n();
    let positive = (0..n).all(|i| base.get(Subset::singleton(i)) > T::zero());
    Capacity {
        base,
        strictly_positive_singletons: positive,
    }
}
