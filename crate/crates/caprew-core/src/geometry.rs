//! Vector math for the query-diversity gate.
//!
//! Diversity of a query set is the population variance of all pairwise
//! cosine similarities between the query embeddings: identical queries and
//! fully orthogonal queries both have zero variance, while a mix of related
//! and unrelated queries scores high. Curation prunes the query whose
//! removal raises that variance the most (equivalently, lowers it the
//! least).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("need at least {need} vectors, got {got}")]
    TooFewQueries { got: usize, need: usize },
    #[error("embedding values must be finite")]
    NonFinite,
    #[error("embedding must have at least one dimension")]
    Empty,
}

/// A dense embedding. All values are finite; dimension is fixed at
/// construction. The all-zero vector is a legal value (it is what the mock
/// embedder returns for empty text) but cannot take part in cosines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct EmbeddingVector {
    values: Vec<f64>,
}

impl EmbeddingVector {
    pub fn new(values: Vec<f64>) -> Result<Self, GeometryError> {
        if values.is_empty() {
            return Err(GeometryError::Empty);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { values })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl TryFrom<Vec<f64>> for EmbeddingVector {
    type Error = GeometryError;

    fn try_from(values: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl From<EmbeddingVector> for Vec<f64> {
    fn from(v: EmbeddingVector) -> Self {
        v.values
    }
}

/// Diversity of a query set: the population variance of its pairwise
/// cosine similarities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiversityReport {
    /// The variance itself; zero whenever fewer than two distinct pairs
    /// exist or all pairs agree.
    pub v: f64,
    /// Mean pairwise cosine similarity.
    pub mean_similarity: f64,
    /// Number of unordered pairs, m(m-1)/2.
    pub pair_count: usize,
}

/// Cosine similarity, clamped into [-1, 1] against rounding spill.
pub fn cosine_similarity(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64, GeometryError> {
    if a.dim() != b.dim() {
        return Err(GeometryError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    if a.is_zero() || b.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    Ok((dot / (a.l2_norm() * b.l2_norm())).clamp(-1.0, 1.0))
}

fn pairwise_cosines(embeddings: &[EmbeddingVector]) -> Result<Vec<f64>, GeometryError> {
    let m = embeddings.len();
    let mut out = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            out.push(cosine_similarity(&embeddings[i], &embeddings[j])?);
        }
    }
    Ok(out)
}

/// Variance of pairwise cosine similarities over the set.
///
/// Requires at least two vectors; with exactly two the single pair has no
/// variance and the score is zero. Order-invariant.
pub fn diversity(embeddings: &[EmbeddingVector]) -> Result<DiversityReport, GeometryError> {
    let m = embeddings.len();
    if m < 2 {
        return Err(GeometryError::TooFewQueries { got: m, need: 2 });
    }
    let cosines = pairwise_cosines(embeddings)?;
    let n = cosines.len() as f64;
    let mean = cosines.iter().sum::<f64>() / n;
    let v = cosines.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / n;
    Ok(DiversityReport { v, mean_similarity: mean, pair_count: cosines.len() })
}

/// Leave-one-out diversity contribution of each vector:
/// `contribution[i] = V(Q) - V(Q \ {i})`.
///
/// A negative contribution means the set is more diverse without that
/// vector.
pub fn leave_one_out_contributions(
    embeddings: &[EmbeddingVector],
) -> Result<Vec<f64>, GeometryError> {
    let m = embeddings.len();
    if m < 3 {
        return Err(GeometryError::TooFewQueries { got: m, need: 3 });
    }
    let full = diversity(embeddings)?.v;
    let mut contributions = Vec::with_capacity(m);
    let mut reduced: Vec<EmbeddingVector> = Vec::with_capacity(m - 1);
    for i in 0..m {
        reduced.clear();
        reduced.extend(embeddings.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.clone()));
        contributions.push(full - diversity(&reduced)?.v);
    }
    Ok(contributions)
}

/// Index of the vector contributing least to diversity (the one whose
/// removal raises, or least lowers, the variance). Ties break to the lowest
/// index. Requires at least three vectors so removal leaves a valid pair
/// set.
pub fn least_contributing_index(embeddings: &[EmbeddingVector]) -> Result<usize, GeometryError> {
    let contributions = leave_one_out_contributions(embeddings)?;
    let mut best = 0;
    for (i, c) in contributions.iter().enumerate().skip(1) {
        if *c < contributions[best] {
            best = i;
        }
    }
    Ok(best)
}
