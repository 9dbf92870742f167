//! Interaction indices of coalitions and Shapley values.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set_function::Capacity;
use crate::subset::Subset;

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// `I(A) = Σ_{B⊆N∖A} [(n−|B|−|A|)! |B|! / (n−|A|+1)!] Σ_{K⊆A} (−1)^{|A∖K|} μ(K∪B)`.
///
/// The factorial weights are exact integers (`24!` fits in a `u128`); the
/// common denominator `(n−|A|+1)!` is applied once at the end.
pub fn interaction_index<T: Scalar>(mu: &Capacity<T>, a: Subset) -> Result<T> {
    let n = mu.n();
    if a.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    if !a.fits(n) {
        return Err(Error::SubsetOutOfRange { subset: a, n });
    }
    let k = a.len();
    let outside = a.complement(n);
    let mut acc = T::zero();
    for b in outside.subsets() {
        let weight = factorial(n - b.len() - k) * factorial(b.len());
        let mut diff = T::zero();
        for sub in a.subsets() {
            let x = mu.get(sub.union(b));
            diff = if (k - sub.len()).is_multiple_of(2) {
                diff + x
            } else {
                diff - x
            };
        }
        acc = acc + to_scalar::<T>(weight) * diff;
    }
    Ok(acc / to_scalar::<T>(factorial(n - k + 1)))
}

fn to_scalar<T: Scalar>(x: u128) -> T {
    T::from_u128(x).unwrap_or_else(|| T::of(x as f64))
}

/// Shapley value `φ_i = I({i})` of every criterion.
pub fn shapley<T: Scalar>(mu: &Capacity<T>) -> Vec<T> {
    (0..mu.n())
        .map(|i| {
            interaction_index(mu, Subset::singleton(i)).expect("singleton is a valid coalition")
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InteractionKind {
    /// Complementary criteria.
    Positive,
    /// Substitutive criteria.
    Negative,
    NonInteractive,
}

impl fmt::Display for InteractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InteractionKind::Positive => "positive",
            InteractionKind::Negative => "negative",
            InteractionKind::NonInteractive => "non-interactive",
        })
    }
}

pub fn classify<T: Scalar>(value: T, tol: T) -> InteractionKind {
    if value > tol {
        InteractionKind::Positive
    } else if value < -tol {
        InteractionKind::Negative
    } else {
        InteractionKind::NonInteractive
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairInteraction {
    /// 1-based criteria, `i < j`.
    pub i: usize,
    pub j: usize,
    pub value: f64,
    pub kind: InteractionKind,
}

/// Everything [`interaction_index`] says about a capacity.
///
/// Building it evaluates `I(A)` for all `2^n − 1` coalitions, each at a cost
/// of `2^n` capacity lookups.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InteractionReport {
    pub n: usize,
    /// Keyed like the capacity file format (`"1,2"`).
    pub indices: BTreeMap<String, f64>,
    pub shapley: Vec<f64>,
    /// `pair_matrix[i][j] = I({i,j})`; the diagonal holds the Shapley values.
    pub pair_matrix: Vec<Vec<f64>>,
    pub pairs: Vec<PairInteraction>,
}

impl InteractionReport {
    pub fn new<T: Scalar>(mu: &Capacity<T>, tol: T) -> Self {
        let n = mu.n();
        let mut by_mask = vec![0.0; 1 << n];
        for a in Subset::all(n).skip(1) {
            by_mask[a.index()] = interaction_index(mu, a)
                .expect("nonempty coalition")
                .as_f64();
        }
        let shapley: Vec<f64> = (0..n)
            .map(|i| by_mask[Subset::singleton(i).index()])
            .collect();
        let mut pair_matrix = vec![vec![0.0; n]; n];
        let mut pairs = Vec::new();
        for i in 0..n {
            pair_matrix[i][i] = shapley[i];
            for j in i + 1..n {
                let v = by_mask[Subset::from_criteria([i, j]).index()];
                pair_matrix[i][j] = v;
                pair_matrix[j][i] = v;
                pairs.push(PairInteraction {
                    i: i + 1,
                    j: j + 1,
                    value: v,
                    kind: classify(v, tol.as_f64()),
                });
            }
        }
        let indices = Subset::all(n)
            .skip(1)
            .map(|a| (a.key(), by_mask[a.index()]))
            .collect();
        InteractionReport {
            n,
            indices,
            shapley,
            pair_matrix,
            pairs,
        }
    }
}
