//! JSON instance files.

use std::path::Path;

use log::warn;
use serde::{Deserialize, Serialize};
use specmm::{InstanceSet, SymMatrix};

const ASYMMETRY_WARN: f64 = 1e-9;
const ASYMMETRY_MAX: f64 = 1e-6;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub m: usize,
    pub matrices: Vec<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<InstanceSet, String> {
        if self.n == 0 {
            return Err("field `n`: must be at least 1".into());
        }
        if self.m == 0 {
            return Err("field `m`: must be at least 1".into());
        }
        if self.matrices.len() != self.m {
            return Err(format!(
                "field `matrices`: expected m = {} matrices, found {}",
                self.m,
                self.matrices.len()
            ));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.m {
                return Err(format!(
                    "field `labels`: expected {} labels, found {}",
                    self.m,
                    labels.len()
                ));
            }
        }
        let mut out = Vec::with_capacity(self.m);
        for (k, rows) in self.matrices.iter().enumerate() {
            if rows.len() != self.n {
                return Err(format!(
                    "matrix {k}: expected n = {} rows, found {}",
                    self.n,
                    rows.len()
                ));
            }
            if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != self.n) {
                return Err(format!(
                    "matrix {k}: row {i} has {} entries, expected {}",
                    r.len(),
                    self.n
                ));
            }
            let asym = SymMatrix::asymmetry(rows).unwrap_or(0.0);
            if asym > ASYMMETRY_MAX {
                return Err(format!("matrix {k}: asymmetry {asym:e} exceeds {ASYMMETRY_MAX:e}"));
            }
            if asym > ASYMMETRY_WARN {
                warn!("matrix {k}: asymmetry {asym:e}, symmetrizing");
            }
            out.push(SymMatrix::from_rows(rows).map_err(|e| format!("matrix {k}: {e}"))?);
        }
        InstanceSet::new(out).map_err(|e| e.to_string())
    }
}

pub fn load(path: &Path) -> Result<InstanceSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file: InstanceFile = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.into_instance().map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorsFile {
    pub vectors: Vec<Vec<f64>>,
}

/// Parses inline rows such as `"1,0;0,1"`.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<f64>>, String> {
    text.split(';')
        .enumerate()
        .map(|(i, row)| {
            row.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| format!("--rows: row {i}: bad number {:?}", v.trim()))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(matrices: Vec<Vec<Vec<f64>>>) -> InstanceFile {
        InstanceFile {
            n: 2,
            m: matrices.len(),
            matrices,
            labels: None,
        }
    }

    #[test]
    fn symmetrizes_small_noise() {
        let inst = file(vec![vec![vec![1.0, 0.5], vec![0.5 + 1e-8, 2.0]]])
            .into_instance()
            .unwrap();
        assert_eq!(inst.matrix(0).get(0, 1), inst.matrix(0).get(1, 0));
    }

    #[test]
    fn rejects_large_asymmetry() {
        let err = file(vec![vec![vec![1.0, 0.5], vec![0.6, 2.0]]])
            .into_instance()
            .unwrap_err();
        assert!(err.starts_with("matrix 0: asymmetry"), "{err}");
    }

    #[test]
    fn names_offending_matrix() {
        let mut f = file(vec![vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![vec![1.0]]]);
        assert_eq!(
            f.clone().into_instance().unwrap_err(),
            "matrix 1: expected n = 2 rows, found 1"
        );
        f.m = 3;
        assert!(f.into_instance().unwrap_err().starts_with("field `matrices`"));
    }

    #[test]
    fn inline_rows() {
        assert_eq!(parse_rows("1,0; 0,1").unwrap(), vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert!(parse_rows("1,x").is_err());
    }
}
