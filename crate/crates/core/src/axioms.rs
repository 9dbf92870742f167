//! Sampled verification of aggregation axioms.
//!
//! Each check draws inputs deterministically from `(seed, axiom)`, stops at
//! the first violation and returns it as a [`Counterexample`] that can be
//! re-evaluated against the same function.
//!
//! | id   | statement                                                            |
//! |------|----------------------------------------------------------------------|
//! | `HE` | `F(α·1_A, 0) = α·μ(A)` for `α ≥ 0` and every `A`                     |
//! | `A`  | `F(a·e_i) = a·F(e_i)` for every real `a`                             |
//! | `M`  | `t ≤ t′ ⟹ F(t) ≤ F(t′)`                                              |
//! | `M1` | `a ≤ a′ ⟹ F(a·e_i) ≤ F(a′·e_i)`                                      |
//! | `I`  | `F(α,…,α) = α` for `α ≥ 0`                                           |
//! | `A1` | single-criterion difference ratios are preserved for every `α > 0`   |
//! | `A2` | binary-act difference ratios equal those of `μ` for every `α > 0`    |
//! | `C1` | `F(α·t + β) = α·F(t) + β` for `α ≥ 0`, real `β`                      |
//! | `S1` | `F(α·t) = α·F(t)` for every real `α`                                 |

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{unit_grid, Aggregation, Domain, Extension, PseudoProduct};
use crate::scalar::Scalar;
use crate::set_function::Capacity;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomId {
    HE,
    A,
    M,
    M1,
    I,
    A1,
    A2,
    C1,
    S1,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::HE,
        AxiomId::A,
        AxiomId::M,
        AxiomId::M1,
        AxiomId::I,
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::C1,
        AxiomId::S1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::HE => "HE",
            AxiomId::A => "A",
            AxiomId::M => "M",
            AxiomId::M1 => "M1",
            AxiomId::I => "I",
            AxiomId::A1 => "A1",
            AxiomId::A2 => "A2",
            AxiomId::C1 => "C1",
            AxiomId::S1 => "S1",
        }
    }

    /// Axioms quantified over all of `ℝ` that cannot be sampled inside `[0,1]^n`.
    fn needs_real_line(self) -> bool {
        matches!(self, AxiomId::A | AxiomId::A1 | AxiomId::C1 | AxiomId::S1)
    }

    /// Comma-separated list, e.g. `HE,A,M`.
    pub fn parse_list(s: &str) -> Result<Vec<AxiomId>> {
        s.split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse())
            .collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| {
                a.as_str() == up
                    || (up == "C.1" && *a == AxiomId::C1)
                    || (up == "S.1" && *a == AxiomId::S1)
            })
            .ok_or_else(|| Error::UnknownAxiom(s.trim().to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomCheckConfig {
    /// Random draws per check, on top of the fixed probes.
    pub samples: usize,
    pub seed: u64,
    /// Absolute for magnitudes up to 1, relative beyond.
    pub tolerance: f64,
    /// Real-valued scores are drawn from `[-score_bound, score_bound]`.
    pub score_bound: f64,
    /// Scale factors come from a log-spaced grid on `[alpha_min, alpha_max]`
    /// with `alpha_steps` points, plus `α = 1`.
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_steps: usize,
    /// Sample outside a `[0,1]^n` aggregator's domain anyway.
    pub allow_out_of_domain: bool,
}

impl Default for AxiomCheckConfig {
    fn default() -> Self {
        AxiomCheckConfig {
            samples: 1000,
            seed: 42,
            tolerance: crate::DEFAULT_TOLERANCE,
            score_bound: 10.0,
            alpha_min: 1e-3,
            alpha_max: 1e3,
            alpha_steps: 25,
            allow_out_of_domain: false,
        }
    }
}

impl AxiomCheckConfig {
    pub fn alpha_grid(&self) -> Vec<f64> {
        let mut grid = vec![1.0];
        let steps = self.alpha_steps.max(2);
        let (lo, hi) = (self.alpha_min.ln(), self.alpha_max.ln());
        for k in 0..steps {
            let x = (lo + (hi - lo) * k as f64 / (steps - 1) as f64).exp();
            if (x - 1.0).abs() > 1e-12 {
                grid.push(x);
            }
        }
        grid
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Parse("sample count must be at least 1".into()));
        }
        let ok = self.tolerance >= 0.0
            && self.score_bound > 0.0
            && self.alpha_min > 0.0
            && self.alpha_max >= self.alpha_min;
        if !ok {
            return Err(Error::Parse(
                "invalid tolerance, score bound or alpha range".into(),
            ));
        }
        Ok(())
    }
}

/// A function under test: an evaluable on `ℝ^n` plus its declared domain.
pub trait Aggregator<T>: Sync {
    fn n(&self) -> usize;

    fn domain(&self) -> Domain;

    /// Called only with vectors of length `n()`.
    fn eval(&self, t: &[T]) -> T;

    fn label(&self) -> String {
        "F".to_string()
    }
}

impl<T: Scalar> Aggregator<T> for Aggregation<T> {
    fn n(&self) -> usize {
        Aggregation::n(self)
    }

    fn domain(&self) -> Domain {
        Aggregation::domain(self)
    }

    fn eval(&self, t: &[T]) -> T {
        self.evaluate_anywhere(t)
            .expect("checker passes vectors of the right length")
    }

    fn label(&self) -> String {
        match self.domain() {
            Domain::Real => self.extension().to_string(),
            Domain::UnitCube => format!("{} on [0,1]^n", self.extension()),
        }
    }
}

/// Wraps a closure as an [`Aggregator`].
pub struct FnAggregator<F> {
    pub n: usize,
    pub domain: Domain,
    pub name: String,
    pub f: F,
}

impl<T, F> Aggregator<T> for FnAggregator<F>
where
    F: Fn(&[T]) -> T + Sync,
{
    fn n(&self) -> usize {
        self.n
    }

    fn domain(&self) -> Domain {
        self.domain
    }

    fn eval(&self, t: &[T]) -> T {
        (self.f)(t)
    }

    fn label(&self) -> String {
        self.name.clone()
    }
}

/// The inputs of a violated instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `F(point)` should equal `expected`.
    Target { point: Vec<f64>, expected: f64 },
    /// `F(point)` should equal `factor · F(reference) + offset`.
    Scaled {
        point: Vec<f64>,
        reference: Vec<f64>,
        factor: f64,
        offset: f64,
    },
    /// `(F(p0) − F(p1)) / (F(p2) − F(p3))` should equal `expected`.
    Ratio {
        points: [Vec<f64>; 4],
        expected: f64,
    },
    /// `F(lower) ≤ F(upper)` should hold.
    Dominance { lower: Vec<f64>, upper: Vec<f64> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub witness: Witness,
    pub expected: f64,
    pub got: f64,
}

impl Counterexample {
    /// Recomputes `(expected, got)` from the witness alone.
    pub fn reevaluate<T: Scalar, F: Aggregator<T> + ?Sized>(&self, f: &F) -> (f64, f64) {
        let ev = |p: &[f64]| {
            f.eval(&p.iter().map(|&x| T::of(x)).collect::<Vec<_>>())
                .as_f64()
        };
        match &self.witness {
            Witness::Target { point, expected } => (*expected, ev(point)),
            Witness::Scaled {
                point,
                reference,
                factor,
                offset,
            } => (factor * ev(reference) + offset, ev(point)),
            Witness::Ratio { points, expected } => {
                let [a, b, c, d] = points;
                (*expected, (ev(a) - ev(b)) / (ev(c) - ev(d)))
            }
            Witness::Dominance { lower, upper } => (ev(lower), ev(upper)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub function: String,
    pub passed: bool,
    pub samples_tested: usize,
    /// Draws dropped because a precondition failed or a denominator was
    /// below tolerance.
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

fn axis(n: usize, i: usize, a: f64) -> Vec<f64> {
    let mut p = vec![0.0; n];
    p[i] = a;
    p
}

fn indicator(n: usize, set: Subset, a: f64) -> Vec<f64> {
    (0..n)
        .map(|i| if set.contains(i) { a } else { 0.0 })
        .collect()
}

struct Checker<'a, T, F: ?Sized> {
    f: &'a F,
    mu: &'a Capacity<T>,
    cfg: &'a AxiomCheckConfig,
    rng: ChaCha8Rng,
    domain: Domain,
    n: usize,
    tested: usize,
    skipped: usize,
}

impl<'a, T: Scalar, F: Aggregator<T> + ?Sized> Checker<'a, T, F> {
    fn ev(&self, p: &[f64]) -> f64 {
        let t: Vec<T> = p.iter().map(|&x| T::of(x)).collect();
        self.f.eval(&t).as_f64()
    }

    fn score(&mut self) -> f64 {
        match self.domain {
            Domain::Real => self
                .rng
                .gen_range(-self.cfg.score_bound..=self.cfg.score_bound),
            Domain::UnitCube => self.rng.gen_range(0.0..=1.0),
        }
    }

    fn point(&mut self) -> Vec<f64> {
        (0..self.n).map(|_| self.score()).collect()
    }

    fn alphas(&self) -> Vec<f64> {
        let grid = self.cfg.alpha_grid();
        match self.domain {
            Domain::Real => grid,
            Domain::UnitCube => grid.into_iter().filter(|&a| a <= 1.0).collect(),
        }
    }

    fn random_alpha(&mut self) -> f64 {
        let grid = self.alphas();
        grid[self.rng.gen_range(0..grid.len())]
    }

    fn coalitions(&mut self) -> Vec<Subset> {
        if self.n <= 12 {
            Subset::all(self.n).collect()
        } else {
            let full = Subset::full(self.n).mask();
            (0..self.cfg.samples)
                .map(|_| Subset::from_mask(self.rng.gen_range(0..=full)))
                .collect()
        }
    }

    /// Absolute below magnitude 1, relative above.
    fn slack(&self, reference: f64) -> f64 {
        self.cfg.tolerance * reference.abs().max(1.0)
    }

    fn close(&self, expected: f64, got: f64) -> bool {
        (got - expected).abs() <= self.slack(expected)
    }

    fn target(&mut self, point: Vec<f64>, expected: f64) -> Option<Counterexample> {
        self.tested += 1;
        let got = self.ev(&point);
        (!self.close(expected, got)).then_some(Counterexample {
            witness: Witness::Target { point, expected },
            expected,
            got,
        })
    }

    fn scaled(
        &mut self,
        point: Vec<f64>,
        reference: Vec<f64>,
        factor: f64,
        offset: f64,
    ) -> Option<Counterexample> {
        self.tested += 1;
        let expected = factor * self.ev(&reference) + offset;
        let got = self.ev(&point);
        (!self.close(expected, got)).then_some(Counterexample {
            witness: Witness::Scaled {
                point,
                reference,
                factor,
                offset,
            },
            expected,
            got,
        })
    }

    fn dominance(&mut self, lower: Vec<f64>, upper: Vec<f64>) -> Option<Counterexample> {
        self.tested += 1;
        let (lo, hi) = (self.ev(&lower), self.ev(&upper));
        (lo > hi + self.slack(lo)).then_some(Counterexample {
            witness: Witness::Dominance { lower, upper },
            expected: lo,
            got: hi,
        })
    }

    fn ratio(&mut self, points: [Vec<f64>; 4], expected: f64) -> Option<Counterexample> {
        let values: Vec<f64> = points.iter().map(|p| self.ev(p)).collect();
        let den = values[2] - values[3];
        if den.abs() < self.cfg.tolerance {
            self.skipped += 1;
            return None;
        }
        self.tested += 1;
        let got = (values[0] - values[1]) / den;
        (!self.close(expected, got)).then_some(Counterexample {
            witness: Witness::Ratio { points, expected },
            expected,
            got,
        })
    }

    fn run(&mut self, axiom: AxiomId) -> Option<Counterexample> {
        match axiom {
            AxiomId::HE => self.homogeneous_extension(),
            AxiomId::A => self.restricted_affinity(),
            AxiomId::M => self.monotonicity(),
            AxiomId::M1 => self.restricted_monotonicity(),
            AxiomId::I => self.idempotence(),
            AxiomId::A1 => self.intra_ratio(),
            AxiomId::A2 => self.inter_ratio(),
            AxiomId::C1 => self.affine_invariance(),
            AxiomId::S1 => self.homogeneity(),
        }
    }

    fn homogeneous_extension(&mut self) -> Option<Counterexample> {
        let mut alphas = vec![0.0];
        alphas.extend(self.alphas());
        for a in self.coalitions() {
            let mu_a = self.mu.get(a).as_f64();
            for &alpha in &alphas {
                if let Some(c) = self.target(indicator(self.n, a, alpha), alpha * mu_a) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn restricted_affinity(&mut self) -> Option<Counterexample> {
        let b = self.cfg.score_bound;
        let per_axis = (self.cfg.samples / self.n).max(1);
        for i in 0..self.n {
            let unit = axis(self.n, i, 1.0);
            for a in [-1.0, 1.0, -b, b, 0.0] {
                if let Some(c) = self.scaled(axis(self.n, i, a), unit.clone(), a, 0.0) {
                    return Some(c);
                }
            }
            for _ in 0..per_axis {
                let a = self.score();
                if let Some(c) = self.scaled(axis(self.n, i, a), unit.clone(), a, 0.0) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn monotonicity(&mut self) -> Option<Counterexample> {
        let n = self.n;
        let mut diagonal: Vec<f64> = vec![0.0, 1.0, 3.0];
        diagonal.extend(self.alphas());
        if self.domain == Domain::Real {
            diagonal.extend(self.alphas().into_iter().map(|a| -a));
        } else {
            diagonal.retain(|&a| a <= 1.0);
        }
        // The (1,…,1) → (3,…,3) pair first, then the rest of the diagonal.
        if self.domain == Domain::Real {
            if let Some(c) = self.dominance(vec![1.0; n], vec![3.0; n]) {
                return Some(c);
            }
        }
        diagonal.sort_by(f64::total_cmp);
        diagonal.dedup();
        for w in diagonal.windows(2) {
            if let Some(c) = self.dominance(vec![w[0]; n], vec![w[1]; n]) {
                return Some(c);
            }
        }
        for _ in 0..self.cfg.samples {
            let lower = self.point();
            let upper: Vec<f64> = lower
                .iter()
                .map(|&x| {
                    let room = match self.domain {
                        Domain::Real => self.cfg.score_bound,
                        Domain::UnitCube => 1.0 - x,
                    };
                    x + self.rng.gen_range(0.0..=1.0) * room
                })
                .collect();
            if let Some(c) = self.dominance(lower, upper) {
                return Some(c);
            }
        }
        None
    }

    fn restricted_monotonicity(&mut self) -> Option<Counterexample> {
        let per_axis = (self.cfg.samples / self.n).max(1);
        for i in 0..self.n {
            for _ in 0..per_axis {
                let (x, y) = (self.score(), self.score());
                let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
                if let Some(c) = self.dominance(axis(self.n, i, lo), axis(self.n, i, hi)) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn idempotence(&mut self) -> Option<Counterexample> {
        let mut alphas = vec![0.0];
        alphas.extend(self.alphas());
        for alpha in alphas {
            if let Some(c) = self.target(vec![alpha; self.n], alpha) {
                return Some(c);
            }
        }
        None
    }

    fn intra_ratio(&mut self) -> Option<Counterexample> {
        let n = self.n;
        let quad = |i: usize, alpha: f64, [a, b, c, d]: [f64; 4]| {
            [
                axis(n, i, alpha * a),
                axis(n, i, alpha * b),
                axis(n, i, alpha * c),
                axis(n, i, alpha * d),
            ]
        };
        // One pair on each side of the neutral level.
        for i in 0..n {
            for alpha in self.alphas() {
                if let Some(c) = self.ratio(quad(i, alpha, [1.0, 0.0, 0.0, -1.0]), 1.0) {
                    return Some(c);
                }
            }
        }
        let per_axis = (self.cfg.samples / n).max(1);
        for i in 0..n {
            for _ in 0..per_axis {
                let abcd = [self.score(), self.score(), self.score(), self.score()];
                if (abcd[2] - abcd[3]).abs() < self.cfg.tolerance {
                    self.skipped += 1;
                    continue;
                }
                let expected = (abcd[0] - abcd[1]) / (abcd[2] - abcd[3]);
                let alpha = self.random_alpha();
                if let Some(c) = self.ratio(quad(i, alpha, abcd), expected) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn inter_ratio(&mut self) -> Option<Counterexample> {
        let n = self.n;
        let tol = self.cfg.tolerance;
        let mu = |s: Subset| self.mu.get(s).as_f64();
        let full = Subset::full(n);
        let mut quads: Vec<[Subset; 4]> = self
            .coalitions()
            .into_iter()
            .map(|a| [a, Subset::EMPTY, full, Subset::EMPTY])
            .collect();
        for _ in 0..self.cfg.samples {
            let mut draw = || Subset::from_mask(self.rng.gen_range(0..=full.mask()));
            quads.push([draw(), draw(), draw(), draw()]);
        }
        for [a, b, c, d] in quads {
            let (num, den) = (mu(a) - mu(b), mu(c) - mu(d));
            if num <= tol || den <= tol {
                self.skipped += 1;
                continue;
            }
            let alpha = self.random_alpha();
            let points = [
                indicator(n, a, alpha),
                indicator(n, b, alpha),
                indicator(n, c, alpha),
                indicator(n, d, alpha),
            ];
            if let Some(c) = self.ratio(points, num / den) {
                return Some(c);
            }
        }
        None
    }

    fn affine_invariance(&mut self) -> Option<Counterexample> {
        let b = self.cfg.score_bound;
        for _ in 0..self.cfg.samples {
            let t = self.point();
            let alpha = if self.rng.gen_bool(0.1) {
                0.0
            } else {
                self.random_alpha()
            };
            let beta = self.rng.gen_range(-b..=b);
            let point = t.iter().map(|x| alpha * x + beta).collect();
            if let Some(c) = self.scaled(point, t, alpha, beta) {
                return Some(c);
            }
        }
        None
    }

    fn homogeneity(&mut self) -> Option<Counterexample> {
        for _ in 0..self.cfg.samples {
            let t = self.point();
            let mut alpha = if self.rng.gen_bool(0.1) {
                0.0
            } else {
                self.random_alpha()
            };
            if self.rng.gen_bool(0.5) {
                alpha = -alpha;
            }
            let point = t.iter().map(|x| alpha * x).collect();
            if let Some(c) = self.scaled(point, t, alpha, 0.0) {
                return Some(c);
            }
        }
        None
    }
}

/// Samples one axiom against `f`. `mu` supplies the capacity the axiom
/// refers to (HE, A2) and must have `f.n()` criteria.
pub fn check_axiom<T: Scalar, F: Aggregator<T> + ?Sized>(
    axiom: AxiomId,
    f: &F,
    mu: &Capacity<T>,
    cfg: &AxiomCheckConfig,
) -> Result<AxiomReport> {
    cfg.validate()?;
    if f.n() != mu.n() {
        return Err(Error::DimensionMismatch {
            expected: mu.n(),
            got: f.n(),
        });
    }
    let restricted = f.domain() == Domain::UnitCube && !cfg.allow_out_of_domain;
    if restricted && axiom.needs_real_line() {
        return Err(Error::DomainMismatch {
            axiom: axiom.to_string(),
        });
    }
    let seed = cfg.seed ^ (axiom as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut checker = Checker {
        f,
        mu,
        cfg,
        rng: ChaCha8Rng::seed_from_u64(seed),
        domain: if restricted {
            Domain::UnitCube
        } else {
            Domain::Real
        },
        n: f.n(),
        tested: 0,
        skipped: 0,
    };
    let counterexample = checker.run(axiom);
    Ok(AxiomReport {
        axiom,
        function: f.label(),
        passed: counterexample.is_none(),
        samples_tested: checker.tested,
        skipped: checker.skipped,
        counterexample,
    })
}

/// Runs several checks concurrently; reports come back in input order.
pub fn check_axioms<T: Scalar, F: Aggregator<T> + ?Sized>(
    axioms: &[AxiomId],
    f: &F,
    mu: &Capacity<T>,
    cfg: &AxiomCheckConfig,
) -> Result<Vec<AxiomReport>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = axioms
            .iter()
            .map(|&a| s.spawn(move || check_axiom(a, f, mu, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("axiom check panicked"))
            .collect()
    })
}

/// Both axiom systems evaluated on the same draws.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceReport {
    /// A1, A2, I
    pub scale_axioms: Vec<AxiomReport>,
    /// HE, A
    pub extension_axioms: Vec<AxiomReport>,
    /// Reported on its own; it belongs to both systems and does not affect
    /// the equivalence.
    pub monotonicity: AxiomReport,
    pub scale_axioms_hold: bool,
    pub extension_axioms_hold: bool,
    /// `false` means one system passed while the other failed, which points
    /// at a defect in `F` or in the checks themselves.
    pub consistent: bool,
}

pub fn check_equivalence<T: Scalar, F: Aggregator<T> + ?Sized>(
    f: &F,
    mu: &Capacity<T>,
    cfg: &AxiomCheckConfig,
) -> Result<EquivalenceReport> {
    let mut reports = check_axioms(
        &[
            AxiomId::A1,
            AxiomId::A2,
            AxiomId::I,
            AxiomId::HE,
            AxiomId::A,
            AxiomId::M,
        ],
        f,
        mu,
        cfg,
    )?;
    let monotonicity = reports.pop().expect("six reports");
    let extension_axioms = reports.split_off(3);
    let scale_axioms = reports;
    let scale_axioms_hold = scale_axioms.iter().all(|r| r.passed);
    let extension_axioms_hold = extension_axioms.iter().all(|r| r.passed);
    Ok(EquivalenceReport {
        scale_axioms,
        extension_axioms,
        monotonicity,
        scale_axioms_hold,
        extension_axioms_hold,
        consistent: scale_axioms_hold == extension_axioms_hold,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperatorWitness {
    pub args: Vec<f64>,
    pub expected: f64,
    pub got: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionResult {
    pub condition: &'static str,
    pub holds: bool,
    /// The sampled instance with the largest violation.
    pub witness: Option<OperatorWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PseudoProductReport {
    pub operator: String,
    pub conditions: Vec<ConditionResult>,
    pub all_hold: bool,
    pub max_deviation_from_min: f64,
    /// All conditions hold and the operator agrees with `min` on every
    /// sampled point.
    pub min_equivalent: bool,
}

impl PseudoProductReport {
    pub fn condition(&self, name: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.condition == name)
    }
}

pub mod condition {
    pub const COMMUTATIVE: &str = "commutative";
    pub const ASSOCIATIVE: &str = "associative";
    pub const NONDECREASING: &str = "nondecreasing";
    pub const ZERO_ZERO: &str = "0*0=0";
    pub const ONE_ONE: &str = "1*1=1";
    pub const ABSORBING_ZERO: &str = "a*0=0";
    pub const IDEMPOTENT: &str = "a*a=a";
    pub const NEUTRAL_ONE: &str = "1*a=a";
}

struct Worst {
    condition: &'static str,
    tol: f64,
    worst: Option<(f64, OperatorWitness)>,
}

impl Worst {
    fn new(condition: &'static str, tol: f64) -> Self {
        Worst {
            condition,
            tol,
            worst: None,
        }
    }

    /// `violation` is how far the instance is from satisfying the condition.
    fn observe(&mut self, violation: f64, args: &[f64], expected: f64, got: f64) {
        if violation > self.tol && self.worst.as_ref().is_none_or(|(v, _)| violation > *v) {
            self.worst = Some((
                violation,
                OperatorWitness {
                    args: args.to_vec(),
                    expected,
                    got,
                },
            ));
        }
    }

    fn finish(self) -> ConditionResult {
        ConditionResult {
            condition: self.condition,
            holds: self.worst.is_none(),
            witness: self.worst.map(|(_, w)| w),
        }
    }
}

/// Samples the laws a pseudo-product needs on the grid `{0, 1/20, …, 1}`
/// plus `cfg.samples` random points.
pub fn check_pseudo_product<T: Scalar>(
    op: &PseudoProduct<T>,
    cfg: &AxiomCheckConfig,
) -> Result<PseudoProductReport> {
    use condition::*;
    cfg.validate()?;
    let tol = cfg.tolerance;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points: Vec<f64> = unit_grid::<f64>(crate::integrals::CERTIFICATE_GRID);
    points.extend((0..cfg.samples.min(200)).map(|_| rng.gen_range(0.0..=1.0)));
    let f = |a: f64, b: f64| op.apply(T::of(a), T::of(b)).as_f64();

    let mut comm = Worst::new(COMMUTATIVE, tol);
    let mut assoc = Worst::new(ASSOCIATIVE, tol);
    let mut mono = Worst::new(NONDECREASING, tol);
    let mut absorb = Worst::new(ABSORBING_ZERO, tol);
    let mut idem = Worst::new(IDEMPOTENT, tol);
    let mut neutral = Worst::new(NEUTRAL_ONE, tol);
    let mut zero_zero = Worst::new(ZERO_ZERO, tol);
    let mut one_one = Worst::new(ONE_ONE, tol);
    let mut dev_min: f64 = 0.0;

    let got = f(0.0, 0.0);
    zero_zero.observe(got.abs(), &[0.0, 0.0], 0.0, got);
    let got = f(1.0, 1.0);
    one_one.observe((got - 1.0).abs(), &[1.0, 1.0], 1.0, got);

    let triples = (cfg.samples).max(1);
    for &a in &points {
        let got = f(a, 0.0);
        absorb.observe(got.abs(), &[a, 0.0], 0.0, got);
        let got = f(a, a);
        idem.observe((got - a).abs(), &[a, a], a, got);
        let got = f(1.0, a);
        neutral.observe((got - a).abs(), &[1.0, a], a, got);
        for &b in &points {
            let ab = f(a, b);
            let ba = f(b, a);
            comm.observe((ab - ba).abs(), &[a, b], ab, ba);
            dev_min = dev_min.max((ab - a.min(b)).abs());
            if a < b {
                for &c in &points {
                    let (lo, hi) = (f(a, c), f(b, c));
                    mono.observe(lo - hi, &[a, b, c], lo, hi);
                }
            }
        }
    }
    let grid: Vec<f64> = unit_grid::<f64>(crate::integrals::CERTIFICATE_GRID);
    let mut assoc_check = |a: f64, b: f64, c: f64| {
        let left = f(f(a, b), c);
        let right = f(a, f(b, c));
        assoc.observe((left - right).abs(), &[a, b, c], left, right);
    };
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                assoc_check(a, b, c);
            }
        }
    }
    for _ in 0..triples {
        let (a, b, c) = (
            rng.gen_range(0.0..=1.0),
            rng.gen_range(0.0..=1.0),
            rng.gen_range(0.0..=1.0),
        );
        assoc_check(a, b, c);
    }

    let conditions: Vec<ConditionResult> =
        [comm, assoc, mono, zero_zero, one_one, absorb, idem, neutral]
            .into_iter()
            .map(Worst::finish)
            .collect();
    let all_hold = conditions.iter().all(|c| c.holds);
    Ok(PseudoProductReport {
        operator: op.name().to_string(),
        conditions,
        all_hold,
        max_deviation_from_min: dev_min,
        min_equivalent: all_hold && dev_min <= tol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub point: Vec<f64>,
    pub choquet: f64,
    pub sipos: f64,
    pub mle: f64,
    pub smle: f64,
    pub sugeno_product: f64,
}

/// Verdicts for one extension: intra-criterion ratios (A1), binary-act
/// ratios (A2), absolute levels (I) and monotonicity (M).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyVerdicts {
    pub extension: String,
    pub intra_criterion: bool,
    pub inter_criteria: bool,
    pub absolute_information: bool,
    pub monotonicity: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
    pub verdicts: Vec<PropertyVerdicts>,
}

/// Evaluates the five single-capacity extensions side by side on `grid`.
pub fn compare_extensions<T: Scalar>(
    mu: &Capacity<T>,
    grid: &[Vec<T>],
    cfg: &AxiomCheckConfig,
) -> Result<ComparisonTable> {
    let aggs = Extension::SINGLE_CAPACITY
        .into_iter()
        .map(|e| Aggregation::new(e, mu.clone()))
        .collect::<Result<Vec<_>>>()?;
    let rows = grid
        .iter()
        .map(|t| {
            let v = aggs
                .iter()
                .map(|a| a.evaluate(t).map(|x| x.as_f64()))
                .collect::<Result<Vec<_>>>()?;
            Ok(ComparisonRow {
                point: t.iter().map(|x| x.as_f64()).collect(),
                choquet: v[0],
                sipos: v[1],
                mle: v[2],
                smle: v[3],
                sugeno_product: v[4],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verdicts = aggs
        .iter()
        .map(|agg| {
            let r = check_axioms(
                &[AxiomId::A1, AxiomId::A2, AxiomId::I, AxiomId::M],
                agg,
                mu,
                cfg,
            )?;
            Ok(PropertyVerdicts {
                extension: agg.extension().to_string(),
                intra_criterion: r[0].passed,
                inter_criteria: r[1].passed,
                absolute_information: r[2].passed,
                monotonicity: r[3].passed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonTable { rows, verdicts })
}
