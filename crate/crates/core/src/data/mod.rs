//! Ingestion and encoding of categorical sequence datasets.
//!
//! A dataset is a rectangular table of `n` rows over `N` categorical
//! positions. Tokens are mapped to dense integer codes per column in
//! first-appearance order, so a file plus its schema fully determines the
//! encoding. The original tokens are retained for decoding.

mod csv_io;

pub use csv_io::{CsvSchema, MissingPolicy};

use std::collections::BTreeMap;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Guard for exact enumeration of the sequence space.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// Integer-coded categorical sequence data: `n` rows of `N` symbols with
/// per-position alphabet sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoricalDataset {
    rows: Vec<Vec<usize>>,
    dims: Vec<usize>,
    /// Original token per code, per column. Empty for synthetic data.
    coding: Vec<Vec<String>>,
    /// Label column values when one was designated at ingestion; models
    /// never see these.
    labels: Option<Vec<usize>>,
    label_coding: Vec<String>,
    provenance: String,
}

impl CategoricalDataset {
    pub fn from_rows(rows: Vec<Vec<usize>>, dims: Vec<usize>, provenance: &str) -> Result<Self> {
        for row in &rows {
            if row.len() != dims.len() {
                return Err(Error::LengthMismatch {
                    expected: dims.len(),
                    got: row.len(),
                });
            }
            for (i, (&s, &d)) in row.iter().zip(dims.iter()).enumerate() {
                if s >= d {
                    return Err(Error::SymbolOutOfRange {
                        site: i,
                        symbol: s,
                        dim: d,
                    });
                }
            }
        }
        Ok(Self {
            rows,
            dims,
            coding: Vec::new(),
            labels: None,
            label_coding: Vec::new(),
            provenance: provenance.to_string(),
        })
    }

    pub(crate) fn with_coding(
        rows: Vec<Vec<usize>>,
        dims: Vec<usize>,
        coding: Vec<Vec<String>>,
        labels: Option<Vec<usize>>,
        label_coding: Vec<String>,
        provenance: String,
    ) -> Self {
        Self {
            rows,
            dims,
            coding,
            labels,
            label_coding,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of positions per row.
    pub fn horizon(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Original tokens for a coded row; positions without coding metadata
    /// print as the bare integer code.
    pub fn decode_row(&self, row: &[usize]) -> Vec<String> {
        row.iter()
            .enumerate()
            .map(|(i, &s)| {
                self.coding
                    .get(i)
                    .and_then(|col| col.get(s).cloned())
                    .unwrap_or_else(|| s.to_string())
            })
            .collect()
    }

    /// Deterministic disjoint split into `(train, test)` with `fraction`
    /// of rows (rounded) in the train part.
    pub fn split(&self, fraction: f64, seed: u64) -> Result<(Self, Self)> {
        if !(0.0..1.0).contains(&fraction) || fraction == 0.0 {
            return Err(Error::DegenerateSplit {
                n: self.len(),
                fraction,
            });
        }
        let n = self.len();
        let k = (n as f64 * fraction).round() as usize;
        if k == 0 || k >= n {
            return Err(Error::DegenerateSplit { n, fraction });
        }
        let mut idx: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        idx.shuffle(&mut rng);
        let take = |ids: &[usize]| -> Self {
            Self {
                rows: ids.iter().map(|&i| self.rows[i].clone()).collect(),
                dims: self.dims.clone(),
                coding: self.coding.clone(),
                labels: self
                    .labels
                    .as_ref()
                    .map(|l| ids.iter().map(|&i| l[i]).collect()),
                label_coding: self.label_coding.clone(),
                provenance: format!("{} [split seed={seed}]", self.provenance),
            }
        };
        Ok((take(&idx[..k]), take(&idx[k..])))
    }

    /// Subset by row indices (duplicates allowed), preserving metadata.
    pub fn select(&self, ids: &[usize]) -> Self {
        Self {
            rows: ids.iter().map(|&i| self.rows[i].clone()).collect(),
            dims: self.dims.clone(),
            coding: self.coding.clone(),
            labels: self
                .labels
                .as_ref()
                .map(|l| ids.iter().map(|&i| l[i]).collect()),
            label_coding: self.label_coding.clone(),
            provenance: self.provenance.clone(),
        }
    }

    /// Exact empirical distribution over full sequences. Errors when the
    /// sequence space exceeds [`ENUMERATION_LIMIT`].
    pub fn empirical_distribution(&self) -> Result<EmpiricalDistribution> {
        let size: u128 = self.dims.iter().map(|&d| d as u128).product();
        if size > ENUMERATION_LIMIT {
            return Err(Error::StateSpaceTooLarge {
                size,
                limit: ENUMERATION_LIMIT,
            });
        }
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for row in &self.rows {
            *counts.entry(row.clone()).or_insert(0) += 1;
        }
        Ok(EmpiricalDistribution {
            counts,
            total: self.rows.len() as u64,
        })
    }

    pub fn save_json(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        serde_json::to_writer_pretty(std::io::BufWriter::new(f), self)?;
        Ok(())
    }

    pub fn load_json(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        let ds: Self = serde_json::from_reader(std::io::BufReader::new(f))?;
        // Re-validate invariants on the way in.
        Self::from_rows(ds.rows.clone(), ds.dims.clone(), "")?;
        Ok(ds)
    }
}

/// Sequence frequencies held as exact counts over a common total, so the
/// distribution sums to one by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    counts: BTreeMap<Vec<usize>, u64>,
    total: u64,
}

impl EmpiricalDistribution {
    pub fn counts(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn frequency(&self, x: &[usize]) -> f64 {
        *self.counts.get(x).unwrap_or(&0) as f64 / self.total as f64
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, f64)> {
        self.counts
            .iter()
            .map(move |(k, &c)| (k, c as f64 / self.total as f64))
    }
}
