//! Per-criterion utility scales, acts, and their aggregation into a single
//! attractiveness score.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrals::{Aggregation, Extension};
use crate::scalar::Scalar;
use crate::set_function::{validate, Capacity, SetFunction, SetFunctionFile};
use crate::subset::Subset;

pub const NEUTRAL: &str = "neutral";
pub const GOOD: &str = "good";

/// Score gap at or below which two ranked acts are reported as indifferent.
pub const INDIFFERENCE_THRESHOLD: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct UtilityScale<T> {
    criterion: usize,
    levels: BTreeMap<String, T>,
}

impl<T: Scalar> UtilityScale<T> {
    /// `levels` must map `"neutral"` to exactly 0 and `"good"` to exactly 1.
    pub fn new(criterion: usize, levels: BTreeMap<String, T>) -> Result<Self> {
        for (name, want) in [(NEUTRAL, T::zero()), (GOOD, T::one())] {
            match levels.get(name) {
                None => {
                    return Err(Error::InvalidScale {
                        criterion,
                        reason: format!("missing level '{name}'"),
                    })
                }
                Some(&u) if u != want => {
                    return Err(Error::InvalidScale {
                        criterion,
                        reason: format!("level '{name}' must be {want}, got {u}"),
                    })
                }
                Some(_) => {}
            }
        }
        if let Some((name, _)) = levels.iter().find(|(_, u)| !u.is_finite_value()) {
            return Err(Error::InvalidScale {
                criterion,
                reason: format!("level '{name}' is not finite"),
            });
        }
        Ok(UtilityScale { criterion, levels })
    }

    /// Just the two reference levels.
    pub fn binary(criterion: usize) -> Self {
        let levels = BTreeMap::from([
            (NEUTRAL.to_string(), T::zero()),
            (GOOD.to_string(), T::one()),
        ]);
        UtilityScale { criterion, levels }
    }

    pub fn criterion(&self) -> usize {
        self.criterion
    }

    pub fn levels(&self) -> &BTreeMap<String, T> {
        &self.levels
    }

    pub fn utility(&self, level: &str) -> Result<T> {
        self.levels
            .get(level)
            .copied()
            .ok_or_else(|| Error::UnknownLevel {
                criterion: self.criterion,
                level: level.to_string(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActEntry<T> {
    Value(T),
    Level(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Act<T> {
    pub name: Option<String>,
    pub entries: Vec<ActEntry<T>>,
}

impl<T> Act<T> {
    pub fn new(entries: Vec<ActEntry<T>>) -> Self {
        Act {
            name: None,
            entries,
        }
    }

    pub fn named(name: impl Into<String>, entries: Vec<ActEntry<T>>) -> Self {
        Act {
            name: Some(name.into()),
            entries,
        }
    }

    /// An act given by level names only.
    pub fn from_levels<S: AsRef<str>>(name: impl Into<String>, levels: &[S]) -> Self {
        Act::named(
            name,
            levels
                .iter()
                .map(|s| ActEntry::Level(s.as_ref().to_string()))
                .collect(),
        )
    }

    /// `good` on `a`, `neutral` elsewhere.
    pub fn binary(n: usize, a: Subset) -> Self {
        let entries = (0..n)
            .map(|i| ActEntry::Level(if a.contains(i) { GOOD } else { NEUTRAL }.to_string()))
            .collect();
        Act {
            name: Some(a.to_string()),
            entries,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AggregationModel<T> {
    scales: Vec<UtilityScale<T>>,
    aggregation: Aggregation<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankedAct {
    /// Position in the input list.
    pub index: usize,
    pub name: Option<String>,
    pub score: f64,
    /// Within the threshold of the act ranked just above.
    pub indifferent_to_previous: bool,
}

impl<T: Scalar> AggregationModel<T> {
    /// Every capacity involved must have strictly positive singletons.
    pub fn new(scales: Vec<UtilityScale<T>>, aggregation: Aggregation<T>) -> Result<Self> {
        let n = aggregation.n();
        if scales.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: scales.len(),
            });
        }
        for mu in std::iter::once(aggregation.capacity()).chain(aggregation.negative_capacity()) {
            validate(mu.as_set_function(), true)?;
        }
        if let Some(s) = scales.iter().enumerate().find(|(i, s)| s.criterion != *i) {
            return Err(Error::InvalidScale {
                criterion: s.0,
                reason: format!("scale is labelled criterion {}", s.1.criterion + 1),
            });
        }
        Ok(AggregationModel {
            scales,
            aggregation,
        })
    }

    /// Binary scales on every criterion.
    pub fn binary(aggregation: Aggregation<T>) -> Result<Self> {
        let scales = (0..aggregation.n()).map(UtilityScale::binary).collect();
        AggregationModel::new(scales, aggregation)
    }

    pub fn n(&self) -> usize {
        self.scales.len()
    }

    pub fn scales(&self) -> &[UtilityScale<T>] {
        &self.scales
    }

    pub fn aggregation(&self) -> &Aggregation<T> {
        &self.aggregation
    }

    /// `(u_1(x_1), …, u_n(x_n))`.
    pub fn utilities(&self, act: &Act<T>) -> Result<Vec<T>> {
        if act.entries.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: act.entries.len(),
            });
        }
        act.entries
            .iter()
            .zip(&self.scales)
            .map(|(e, s)| match e {
                ActEntry::Value(v) => Ok(*v),
                ActEntry::Level(l) => s.utility(l),
            })
            .collect()
    }

    pub fn evaluate_act(&self, act: &Act<T>) -> Result<T> {
        self.aggregation.evaluate(&self.utilities(act)?)
    }

    /// Best first; equal scores keep input order.
    pub fn rank_acts(&self, acts: &[Act<T>]) -> Result<Vec<RankedAct>> {
        if acts.is_empty() {
            return Err(Error::EmptyActList);
        }
        let mut scored = acts
            .iter()
            .enumerate()
            .map(|(index, act)| Ok((index, self.evaluate_act(act)?.as_f64())))
            .collect::<Result<Vec<_>>>()?;
        scored.sort_by(|a, b| b.1.total_cmp(&a.1));
        let mut ranked: Vec<RankedAct> = Vec::with_capacity(scored.len());
        for (index, score) in scored {
            let indifferent_to_previous = ranked
                .last()
                .is_some_and(|prev| (prev.score - score).abs() <= INDIFFERENCE_THRESHOLD);
            ranked.push(RankedAct {
                index,
                name: acts[index].name.clone(),
                score,
                indifferent_to_previous,
            });
        }
        Ok(ranked)
    }
}

/// Builds `μ(A)` from the attractiveness of the binary acts `(1_A, 0_{Aᶜ})`.
pub fn capacity_from_binary_acts<T: Scalar>(
    n: usize,
    attractiveness: &BTreeMap<Subset, T>,
) -> Result<Capacity<T>> {
    crate::set_function::check_table_len(n, 1 << n.min(crate::MAX_CRITERIA))?;
    if let Some(s) = attractiveness.keys().find(|s| !s.fits(n)) {
        return Err(Error::SubsetOutOfRange { subset: *s, n });
    }
    let values = Subset::all(n)
        .map(|a| {
            attractiveness
                .get(&a)
                .copied()
                .ok_or_else(|| Error::Parse(format!("no attractiveness given for {a}")))
        })
        .collect::<Result<Vec<_>>>()?;
    validate(&SetFunction::new(n, values)?, true)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleFile {
    pub levels: BTreeMap<String, f64>,
}

/// On-disk model: capacity, per-criterion level tables and the extension name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub capacity: SetFunctionFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacity2: Option<SetFunctionFile>,
    pub extension: String,
    #[serde(default)]
    pub scales: Vec<ScaleFile>,
}

impl ModelFile {
    /// Missing `scales` means binary scales on every criterion.
    pub fn build<T: Scalar>(&self) -> Result<AggregationModel<T>> {
        let load = |f: &SetFunctionFile| -> Result<Capacity<T>> {
            let table = f.to_table()?;
            validate(
                &SetFunction::new(f.n, table.into_iter().map(T::of).collect())?,
                true,
            )
        };
        let mu = load(&self.capacity)?;
        let extension: Extension = self.extension.parse()?;
        let aggregation = match (extension, &self.capacity2) {
            (Extension::Cpt, Some(c2)) => Aggregation::cpt(mu, load(c2)?)?,
            (Extension::Cpt, None) => {
                return Err(Error::MissingSecondCapacity(extension.to_string()))
            }
            (e, _) => Aggregation::new(e, mu)?,
        };
        if self.scales.is_empty() {
            return AggregationModel::binary(aggregation);
        }
        let scales = self
            .scales
            .iter()
            .enumerate()
            .map(|(i, s)| {
                UtilityScale::new(
                    i,
                    s.levels
                        .iter()
                        .map(|(k, &v)| (k.clone(), T::of(v)))
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        AggregationModel::new(scales, aggregation)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum ActRecord {
    Plain(Vec<ActEntry<f64>>),
    Named {
        name: String,
        levels: Vec<ActEntry<f64>>,
    },
}

/// Acts file: a JSON array whose items are either arrays of level names
/// and numbers, or `{"name": .., "levels": [..]}` objects.
pub fn parse_acts<T: Scalar>(s: &str) -> Result<Vec<Act<T>>> {
    let records: Vec<ActRecord> = serde_json::from_str(s)?;
    let convert = |v: Vec<ActEntry<f64>>| -> Vec<ActEntry<T>> {
        v.into_iter()
            .map(|e| match e {
                ActEntry::Value(x) => ActEntry::Value(T::of(x)),
                ActEntry::Level(l) => ActEntry::Level(l),
            })
            .collect()
    };
    Ok(records
        .into_iter()
        .map(|r| match r {
            ActRecord::Plain(v) => Act::new(convert(v)),
            ActRecord::Named { name, levels } => Act::named(name, convert(levels)),
        })
        .collect())
}
