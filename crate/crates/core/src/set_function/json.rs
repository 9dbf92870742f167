//! JSON form of set functions and capacities.
//!
//! ```json
//! {"n": 2, "values": {"": 0.0, "1": 0.3, "2": 0.6, "1,2": 1.0}}
//! {"n": 2, "values_by_mask": [0.0, 0.3, 0.6, 1.0]}
//! ```
//!
//! Keys are ascending 1-based criteria joined by commas; every one of the
//! `2^n` subsets must appear. Output always uses `values_by_mask`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{check_table_len, Capacity, MobiusRepr, SetFunction};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFunctionFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<BTreeMap<String, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values_by_mask: Option<Vec<f64>>,
}

impl SetFunctionFile {
    pub fn dense<T: Scalar>(n: usize, values: &[T]) -> Self {
        SetFunctionFile {
            n,
            values: None,
            values_by_mask: Some(values.iter().map(|v| v.as_f64()).collect()),
        }
    }

    /// Dense table in mask order, before any semantic checks.
    pub fn to_table(&self) -> Result<Vec<f64>> {
        let n = self.n;
        match (&self.values, &self.values_by_mask) {
            (Some(_), Some(_)) => Err(Error::Parse(
                "give either 'values' or 'values_by_mask', not both".into(),
            )),
            (None, None) => Err(Error::Parse("missing 'values' or 'values_by_mask'".into())),
            (None, Some(dense)) => {
                check_table_len(n, dense.len())?;
                Ok(dense.clone())
            }
            (Some(map), None) => {
                check_table_len(n, 1 << n)?;
                let mut table = vec![None; 1 << n];
                for (key, &x) in map {
                    let a = Subset::parse_key(key, n)?;
                    if table[a.index()].replace(x).is_some() {
                        return Err(Error::Parse(format!("subset {a} given twice")));
                    }
                }
                table
                    .into_iter()
                    .enumerate()
                    .map(|(m, x)| {
                        x.ok_or_else(|| {
                            let key = Subset::from_mask(m as u32).key();
                            Error::Parse(format!("missing value for subset key \"{key}\""))
                        })
                    })
                    .collect()
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn table<T: Scalar>(s: &str) -> Result<(usize, Vec<T>)> {
    let file = SetFunctionFile::parse(s)?;
    let values = file.to_table()?;
    if let Some(i) = values.iter().position(|x| !x.is_finite()) {
        return Err(Error::Parse(format!("value at mask {i} is not finite")));
    }
    Ok((file.n, values.into_iter().map(T::of).collect()))
}

impl<T: Scalar> SetFunction<T> {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let (n, values) = table(s)?;
        SetFunction::new(n, values)
    }

    pub fn to_json(&self) -> SetFunctionFile {
        SetFunctionFile::dense(self.n, &self.values)
    }
}

impl<T: Scalar> Capacity<T> {
    pub fn from_json_str(s: &str, require_positive_singletons: bool) -> Result<Self> {
        super::validate(&SetFunction::from_json_str(s)?, require_positive_singletons)
    }

    pub fn to_json(&self) -> SetFunctionFile {
        self.as_set_function().to_json()
    }
}

impl<T: Scalar> MobiusRepr<T> {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let (n, values) = table(s)?;
        MobiusRepr::new(n, values)
    }

    pub fn to_json(&self) -> SetFunctionFile {
        SetFunctionFile::dense(self.n, &self.coefficients)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keyed_and_dense_forms_agree() {
        let keyed = r#"{"n": 2, "values": {"": 0.0, "1": 0.3, "2": 0.6, "1,2": 1.0}}"#;
        let dense = r#"{"n": 2, "values_by_mask": [0.0, 0.3, 0.6, 1.0]}"#;
        let a: Capacity<f64> = Capacity::from_json_str(keyed, true).unwrap();
        let b: Capacity<f64> = Capacity::from_json_str(dense, true).unwrap();
        assert_eq!(a, b);
        let out = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(out, r#"{"n":2,"values_by_mask":[0.0,0.3,0.6,1.0]}"#);
    }

    #[test]
    fn missing_key_is_reported() {
        let s = r#"{"n": 2, "values": {"": 0.0, "1": 0.3, "1,2": 1.0}}"#;
        let err = SetFunction::<f64>::from_json_str(s).unwrap_err();
        assert_eq!(
            err,
            Error::Parse("missing value for subset key \"2\"".into())
        );
    }

    #[test]
    fn duplicate_and_malformed_keys_are_rejected() {
        let dup = r#"{"n": 2, "values": {"": 0, "1": 0.3, "2": 0.6, "1,2": 1, " 1,2": 1}}"#;
        assert!(SetFunction::<f64>::from_json_str(dup).is_err());
        let both = r#"{"n": 1, "values": {"": 0, "1": 1}, "values_by_mask": [0, 1]}"#;
        assert!(SetFunction::<f64>::from_json_str(both).is_err());
        let unordered = r#"{"n": 2, "values": {"": 0, "1": 0.3, "2": 0.6, "2,1": 1}}"#;
        assert!(SetFunction::<f64>::from_json_str(unordered).is_err());
    }
}
