//! Extensions of a capacity from `{0,1}^n` to real score vectors.
//!
//! Permutation forms work on the capacity directly in `O(n log n)`; the
//! Möbius forms walk all `2^n` subsets and are mostly useful as a second,
//! independent route.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::set_function::{Capacity, CoMobiusRepr, MobiusRepr, OrdinalMobiusRepr, SetFunction};
use crate::subset::Subset;

/// Scores on commensurable ratio scales, one per criterion. Entries are finite.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreVector<T>(Vec<T>);

impl<T: Scalar> ScoreVector<T> {
    pub fn new(t: Vec<T>) -> Result<Self> {
        if let Some(index) = t.iter().position(|x| !x.is_finite_value()) {
            return Err(Error::NonFiniteScore { index });
        }
        Ok(ScoreVector(t))
    }

    /// Comma-separated reals in criterion order.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let t = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad score '{}'", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(index) = t.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteScore { index });
        }
        Ok(ScoreVector(t.into_iter().map(T::of).collect()))
    }

    pub fn positive_part(&self) -> ScoreVector<T> {
        ScoreVector(self.0.iter().map(|x| x.positive_part()).collect())
    }

    pub fn negative_part(&self) -> ScoreVector<T> {
        ScoreVector(self.0.iter().map(|x| x.negative_part()).collect())
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }
}

impl<T> Deref for ScoreVector<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

fn check_dim<T>(n: usize, t: &[T]) -> Result<()> {
    if t.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: t.len(),
        });
    }
    Ok(())
}

fn positive_parts<T: Scalar>(t: &[T]) -> Vec<T> {
    t.iter().map(|x| x.positive_part()).collect()
}

fn negative_parts<T: Scalar>(t: &[T]) -> Vec<T> {
    t.iter().map(|x| x.negative_part()).collect()
}

/// Criterion indices sorted by ascending score; ties by ascending index.
pub fn ascending_order<T: Scalar>(t: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by(|&i, &j| t[i].total_cmp_lossy(&t[j]).then(i.cmp(&j)));
    order
}

/// `g[A] = t_{a1} ⊙ t_{a2} ⊙ … ` folded in ascending criterion order for
/// every nonempty `A`; `g[∅]` is left at zero and never read.
fn fold_over_subsets<T: Scalar>(t: &[T], op: impl Fn(T, T) -> T) -> Vec<T> {
    let mut g = vec![T::zero(); 1 << t.len()];
    for mask in 1..g.len() {
        let top = 31 - (mask as u32).leading_zeros() as usize;
        let rest = mask & !(1 << top);
        g[mask] = if rest == 0 {
            t[top]
        } else {
            op(g[rest], t[top])
        };
    }
    g
}

/// `Σ_{A≠∅} m(A) · g[A]`
fn mobius_sum<T: Scalar>(m: &MobiusRepr<T>, g: &[T]) -> T {
    m.coefficients()
        .iter()
        .zip(g)
        .skip(1)
        .fold(T::zero(), |acc, (&c, &x)| acc + c * x)
}

/// `t_(1)·v(N) + Σ_{i≥2} (t_(i) − t_(i−1)) · v({(i), …, (n)})`.
///
/// On nonnegative `t` this is the usual definition with `t_(0) = 0`.
fn choquet_sorted<T: Scalar>(v: &SetFunction<T>, t: &[T]) -> T {
    let order = ascending_order(t);
    let mut upper = v.full();
    let mut acc = t[order[0]] * v.get(upper);
    for w in order.windows(2) {
        upper = upper.without(w[0]);
        acc = acc + (t[w[1]] - t[w[0]]) * v.get(upper);
    }
    acc
}

/// Choquet integral (asymmetric extension on negative scores).
pub fn choquet<T: Scalar>(mu: &Capacity<T>, t: &[T]) -> Result<T> {
    check_dim(mu.n(), t)?;
    Ok(choquet_sorted(mu.as_set_function(), t))
}

/// `Σ_A m(A) · min_{i∈A} t_i`; equal to [`choquet`] on all of `ℝ^n`.
pub fn choquet_mobius<T: Scalar>(m: &MobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(m.n(), t)?;
    Ok(mobius_sum(m, &fold_over_subsets(t, T::min_of)))
}

/// `Σ_{A≠∅} (−1)^{|A|+1} m̌(A) · max_{i∈A} t_i`, valid for `t ≥ 0` only.
pub fn choquet_comobius<T: Scalar>(cm: &CoMobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(cm.n(), t)?;
    if let Some(index) = t.iter().position(|x| x.is_negative()) {
        return Err(Error::NegativeScore {
            index,
            value: t[index].as_f64(),
        });
    }
    let maxes = fold_over_subsets(t, T::max_of);
    Ok(Subset::all(cm.n()).skip(1).fold(T::zero(), |acc, a| {
        let term = cm.get(a) * maxes[a.index()];
        if a.len() % 2 == 1 {
            acc + term
        } else {
            acc - term
        }
    }))
}

/// Šipoš (symmetric Choquet) integral `C_μ(t⁺) − C_μ(t⁻)`.
pub fn sipos<T: Scalar>(mu: &Capacity<T>, t: &[T]) -> Result<T> {
    check_dim(mu.n(), t)?;
    let v = mu.as_set_function();
    Ok(choquet_sorted(v, &positive_parts(t)) - choquet_sorted(v, &negative_parts(t)))
}

/// Šipoš integral by the single split sort: with
/// `t_(1) ≤ … ≤ t_(p) < 0 ≤ t_(p+1) ≤ … ≤ t_(n)`,
///
/// ```text
/// Σ_{i<p} (t_(i) − t_(i+1)) μ({(1)..(i)}) + t_(p) μ({(1)..(p)})
///   + t_(p+1) μ({(p+1)..(n)}) + Σ_{i>p+1} (t_(i) − t_(i−1)) μ({(i)..(n)})
/// ```
pub fn sipos_split<T: Scalar>(mu: &Capacity<T>, t: &[T]) -> Result<T> {
    check_dim(mu.n(), t)?;
    let order = ascending_order(t);
    let p = order.iter().take_while(|&&i| t[i].is_negative()).count();
    let (neg, pos) = order.split_at(p);
    let mut acc = T::zero();

    let mut lower = Subset::EMPTY;
    for (k, &i) in neg.iter().enumerate() {
        lower = lower.with(i);
        let step = match neg.get(k + 1) {
            Some(&next) => t[i] - t[next],
            None => t[i],
        };
        acc = acc + step * mu.get(lower);
    }

    let mut upper = Subset::from_criteria(pos.iter().copied());
    let mut prev = T::zero();
    for &i in pos {
        acc = acc + (t[i] - prev) * mu.get(upper);
        upper = upper.without(i);
        prev = t[i];
    }
    Ok(acc)
}

/// `Σ_A m(A) [min_{A} t⁺ − min_{A} t⁻]`
pub fn sipos_mobius<T: Scalar>(m: &MobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(m.n(), t)?;
    let plus = fold_over_subsets(&positive_parts(t), T::min_of);
    let minus = fold_over_subsets(&negative_parts(t), T::min_of);
    Ok(mobius_sum(m, &plus) - mobius_sum(m, &minus))
}

/// Multilinear extension `Σ_A m(A) Π_{i∈A} t_i`.
pub fn mle<T: Scalar>(m: &MobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(m.n(), t)?;
    Ok(mobius_sum(m, &fold_over_subsets(t, |a, b| a * b)))
}

/// Multilinear extension written on the capacity:
/// `Σ_A v(A) Π_{i∈A} t_i Π_{i∉A} (1 − t_i)`. The same polynomial as [`mle`].
pub fn mle_owen<T: Scalar>(v: &SetFunction<T>, t: &[T]) -> Result<T> {
    check_dim(v.n(), t)?;
    let n = v.n();
    Ok(v.iter().fold(T::zero(), |acc, (a, x)| {
        let weight = (0..n).fold(T::one(), |w, i| {
            if a.contains(i) {
                w * t[i]
            } else {
                w * (T::one() - t[i])
            }
        });
        acc + x * weight
    }))
}

/// Symmetric multilinear extension `Σ_A m(A) [Π t⁺ − Π t⁻]`.
pub fn smle<T: Scalar>(m: &MobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(m.n(), t)?;
    let plus = fold_over_subsets(&positive_parts(t), |a, b| a * b);
    let minus = fold_over_subsets(&negative_parts(t), |a, b| a * b);
    Ok(mobius_sum(m, &plus) - mobius_sum(m, &minus))
}

/// Symmetric maximum: `a` if `|a| > |b|`, `0` if `b = −a`, `b` otherwise.
pub fn symmetric_max<T: Scalar>(a: T, b: T) -> T {
    if a.abs() > b.abs() {
        a
    } else if b == -a {
        T::zero()
    } else {
        b
    }
}

/// Symmetric maximum of many values. `⊻` is associative only within one
/// sign class, so positives are reduced by `max`, negatives by `min`, and the
/// two results are combined once.
pub fn symmetric_max_fold<T: Scalar>(values: impl IntoIterator<Item = T>) -> T {
    let (pos, neg) = values
        .into_iter()
        .fold((T::zero(), T::zero()), |(p, q), x| {
            if x.is_positive() {
                (p.max_of(x), q)
            } else {
                (p, q.min_of(x))
            }
        });
    symmetric_max(pos, neg)
}

fn sugeno_nonnegative<T: Scalar>(mv: &OrdinalMobiusRepr<T>, t: &[T]) -> T {
    let mins = fold_over_subsets(t, T::min_of);
    mv.coefficients()
        .iter()
        .zip(&mins)
        .skip(1)
        .fold(T::zero(), |acc, (&c, &x)| acc.max_of(c * x))
}

/// Product variant of the Sugeno integral, `max_B [m∨(B) · min_{i∈B} t_i]`
/// on nonnegative scores, extended as `S(t⁺) ⊻ (−S(t⁻))`.
pub fn sugeno_product<T: Scalar>(mv: &OrdinalMobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(mv.n(), t)?;
    let plus = sugeno_nonnegative(mv, &positive_parts(t));
    let minus = sugeno_nonnegative(mv, &negative_parts(t));
    Ok(symmetric_max_fold([plus, -minus]))
}

/// Two-capacity form `Σ m₁(A) min t⁺ − Σ m₂(A) min t⁻`.
pub fn cpt<T: Scalar>(m1: &MobiusRepr<T>, m2: &MobiusRepr<T>, t: &[T]) -> Result<T> {
    check_dim(m1.n(), t)?;
    check_dim(m2.n(), t)?;
    let plus = fold_over_subsets(&positive_parts(t), T::min_of);
    let minus = fold_over_subsets(&negative_parts(t), T::min_of);
    Ok(mobius_sum(m1, &plus) - mobius_sum(m2, &minus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CptCompatibility {
    pub compatible: bool,
    /// Criteria (0-based) whose singleton weights differ.
    pub violations: Vec<usize>,
}

/// The two-capacity form keeps `F(a e_i) = a F(e_i)` for negative `a` iff
/// `m₂({i}) = m₁({i})` for all `i`.
pub fn cpt_compatible<T: Scalar>(mu1: &Capacity<T>, mu2: &Capacity<T>) -> Result<CptCompatibility> {
    cpt_compatible_with_tolerance(mu1, mu2, T::of(crate::DEFAULT_TOLERANCE))
}

pub fn cpt_compatible_with_tolerance<T: Scalar>(
    mu1: &Capacity<T>,
    mu2: &Capacity<T>,
    tol: T,
) -> Result<CptCompatibility> {
    if mu1.n() != mu2.n() {
        return Err(Error::DimensionMismatch {
            expected: mu1.n(),
            got: mu2.n(),
        });
    }
    let violations: Vec<usize> = (0..mu1.n())
        .filter(|&i| (mu1.singleton(i) - mu2.singleton(i)).abs() > tol)
        .collect();
    Ok(CptCompatibility {
        compatible: violations.is_empty(),
        violations,
    })
}

/// Outcome of sampling the algebraic laws of a pseudo-product on the grid
/// `{0, 1/20, …, 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub commutative: bool,
    pub associative: bool,
    /// Results stay inside `[0, 1]`.
    pub closed: bool,
    pub grid_points: usize,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.commutative && self.associative && self.closed
    }
}

pub const CERTIFICATE_GRID: usize = 21;

type BinaryOp<T> = Arc<dyn Fn(T, T) -> T + Send + Sync>;

/// A binary operation on `[0, 1]` used in place of the product in the
/// multilinear form, together with its sampled certificate.
#[derive(Clone)]
pub struct PseudoProduct<T> {
    name: String,
    op: BinaryOp<T>,
    certificate: Certificate,
}

impl<T: Scalar> PseudoProduct<T> {
    pub fn new(name: impl Into<String>, op: impl Fn(T, T) -> T + Send + Sync + 'static) -> Self {
        let op: BinaryOp<T> = Arc::new(op);
        let certificate = certify(op.as_ref(), T::of(crate::DEFAULT_TOLERANCE));
        PseudoProduct {
            name: name.into(),
            op,
            certificate,
        }
    }

    pub fn minimum() -> Self {
        PseudoProduct::new("min", T::min_of)
    }

    pub fn product() -> Self {
        PseudoProduct::new("product", |a: T, b: T| a * b)
    }

    /// `max(0, a + b − 1)`
    pub fn lukasiewicz() -> Self {
        PseudoProduct::new("lukasiewicz", |a: T, b: T| {
            (a + b - T::one()).max_of(T::zero())
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, a: T, b: T) -> T {
        (self.op)(a, b)
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }
}

impl<T> fmt::Debug for PseudoProduct<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PseudoProduct")
            .field("name", &self.name)
            .field("certificate", &self.certificate)
            .finish()
    }
}

pub(crate) fn unit_grid<T: Scalar>(points: usize) -> Vec<T> {
    let last = T::of_usize(points - 1);
    (0..points).map(|k| T::of_usize(k) / last).collect()
}

fn certify<T: Scalar>(op: &(dyn Fn(T, T) -> T + Send + Sync), tol: T) -> Certificate {
    let grid = unit_grid::<T>(CERTIFICATE_GRID);
    let (lo, hi) = (-tol, T::one() + tol);
    let mut cert = Certificate {
        commutative: true,
        associative: true,
        closed: true,
        grid_points: grid.len(),
    };
    for &a in &grid {
        for &b in &grid {
            let ab = op(a, b);
            if ab < lo || ab > hi {
                cert.closed = false;
            }
            if !ab.approx_eq(op(b, a), tol) {
                cert.commutative = false;
            }
            for &c in &grid {
                if !op(ab, c).approx_eq(op(a, op(b, c)), tol) {
                    cert.associative = false;
                }
            }
        }
    }
    cert
}

/// `Σ_A m(A) · (⊙_{i∈A} t_i)` on `[0,1]^n`, folding the operator over each
/// `A` in ascending criterion order.
pub fn pseudo_product_extension<T: Scalar>(
    m: &MobiusRepr<T>,
    op: &PseudoProduct<T>,
    t: &[T],
) -> Result<T> {
    check_dim(m.n(), t)?;
    if let Some(index) = t.iter().position(|&x| x < T::zero() || x > T::one()) {
        return Err(Error::OutOfDomain {
            index,
            value: t[index].as_f64(),
        });
    }
    let cert = op.certificate();
    if !cert.holds() {
        let mut failed = Vec::new();
        if !cert.commutative {
            failed.push("commutativity");
        }
        if !cert.associative {
            failed.push("associativity");
        }
        if !cert.closed {
            failed.push("closure in [0,1]");
        }
        return Err(Error::UncertifiedOperator {
            name: op.name.clone(),
            reason: format!("{} fail on the sample grid", failed.join(", ")),
        });
    }
    Ok(mobius_sum(m, &fold_over_subsets(t, |a, b| op.apply(a, b))))
}

/// The extensions available as aggregation functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extension {
    Choquet,
    Sipos,
    Mle,
    Smle,
    SugenoProduct,
    Cpt,
}

impl Extension {
    pub const SINGLE_CAPACITY: [Extension; 5] = [
        Extension::Choquet,
        Extension::Sipos,
        Extension::Mle,
        Extension::Smle,
        Extension::SugenoProduct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Extension::Choquet => "choquet",
            Extension::Sipos => "sipos",
            Extension::Mle => "mle",
            Extension::Smle => "smle",
            Extension::SugenoProduct => "sugeno-prod",
            Extension::Cpt => "cpt",
        }
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Extension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "choquet" => Extension::Choquet,
            "sipos" | "šipoš" => Extension::Sipos,
            "mle" => Extension::Mle,
            "smle" => Extension::Smle,
            "sugeno-prod" | "sugeno_prod" | "sugeno-product" | "sugeno_product" => {
                Extension::SugenoProduct
            }
            "cpt" => Extension::Cpt,
            other => return Err(Error::Parse(format!("unknown integral '{other}'"))),
        })
    }
}

/// Where an aggregation function is meant to be evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Real,
    UnitCube,
}

/// A capacity bound to one extension, with the transforms it needs
/// precomputed.
#[derive(Clone, Debug)]
pub struct Aggregation<T> {
    extension: Extension,
    capacity: Capacity<T>,
    mobius: MobiusRepr<T>,
    ordinal: OrdinalMobiusRepr<T>,
    negative: Option<(Capacity<T>, MobiusRepr<T>)>,
    domain: Domain,
}

impl<T: Scalar> Aggregation<T> {
    pub fn new(extension: Extension, capacity: Capacity<T>) -> Result<Self> {
        if extension == Extension::Cpt {
            return Err(Error::MissingSecondCapacity(extension.to_string()));
        }
        Ok(Aggregation {
            extension,
            mobius: capacity.mobius(),
            ordinal: capacity.ordinal_mobius(),
            capacity,
            negative: None,
            domain: Domain::Real,
        })
    }

    /// Two-capacity form: `positive` on gains, `negative` on losses.
    pub fn cpt(positive: Capacity<T>, negative: Capacity<T>) -> Result<Self> {
        if positive.n() != negative.n() {
            return Err(Error::DimensionMismatch {
                expected: positive.n(),
                got: negative.n(),
            });
        }
        let m2 = negative.mobius();
        Ok(Aggregation {
            extension: Extension::Cpt,
            mobius: positive.mobius(),
            ordinal: positive.ordinal_mobius(),
            capacity: positive,
            negative: Some((negative, m2)),
            domain: Domain::Real,
        })
    }

    /// Declares the function for `[0,1]^n` only.
    pub fn restricted_to_unit_cube(mut self) -> Self {
        self.domain = Domain::UnitCube;
        self
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    pub fn capacity(&self) -> &Capacity<T> {
        &self.capacity
    }

    pub fn negative_capacity(&self) -> Option<&Capacity<T>> {
        self.negative.as_ref().map(|(c, _)| c)
    }

    pub fn mobius(&self) -> &MobiusRepr<T> {
        &self.mobius
    }

    pub fn n(&self) -> usize {
        self.capacity.n()
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn evaluate(&self, t: &[T]) -> Result<T> {
        check_dim(self.n(), t)?;
        if self.domain == Domain::UnitCube {
            if let Some(index) = t.iter().position(|&x| x < T::zero() || x > T::one()) {
                return Err(Error::OutOfDomain {
                    index,
                    value: t[index].as_f64(),
                });
            }
        }
        self.evaluate_anywhere(t)
    }

    /// Evaluates without the domain check (dimension is still checked).
    pub fn evaluate_anywhere(&self, t: &[T]) -> Result<T> {
        match self.extension {
            Extension::Choquet => choquet(&self.capacity, t),
            Extension::Sipos => sipos(&self.capacity, t),
            Extension::Mle => mle(&self.mobius, t),
            Extension::Smle => smle(&self.mobius, t),
            Extension::SugenoProduct => sugeno_product(&self.ordinal, t),
            Extension::Cpt => {
                let (_, m2) = self
                    .negative
                    .as_ref()
                    .expect("cpt aggregation carries two capacities");
                cpt(&self.mobius, m2, t)
            }
        }
    }
}
