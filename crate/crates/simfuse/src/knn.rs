//! Exact k-nearest-neighbor retrieval over one row of a similarity matrix.
//!
//! Neighbor order is a total order: similarity descending, then entity index
//! ascending. That makes every downstream consumer (consistency weights,
//! diffusion affinities, the base predictor) deterministic across runs and
//! thread counts. The datasets are small, so each query is a linear scan.

use crate::types::SimilarityView;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnnError {
    #[error("no candidates left for query {query} after masking")]
    EmptyCandidatePool { query: usize },
}

/// Neighbors of one query, most similar first.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborList {
    pub indices: Vec<usize>,
    pub similarities: Vec<f64>,
}

impl NeighborList {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.indices
            .iter()
            .copied()
            .zip(self.similarities.iter().copied())
    }
}

/// Similarity-descending, index-ascending comparison on (index, similarity).
fn closer(a: &(usize, f64), b: &(usize, f64)) -> std::cmp::Ordering {
    b.1.partial_cmp(&a.1)
        .expect("similarity values must not be NaN")
        .then(a.0.cmp(&b.0))
}

/// The k most similar candidates to `query` in `view`, excluding the query
/// itself and, when given, anything outside `candidates`.
///
/// Zero-similarity neighbors are admitted; a fully-zero row still yields
/// neighbors in index order, with weight 0 downstream.
pub fn knn_of(
    view: &SimilarityView,
    query: usize,
    k: usize,
    candidates: Option<&[usize]>,
) -> Result<NeighborList, KnnError> {
    debug_assert!(k >= 1, "k must be at least 1");
    let row = view.row(query);
    let mut pool: Vec<(usize, f64)> = match candidates {
        Some(set) => set
            .iter()
            .copied()
            .filter(|&j| j != query)
            .map(|j| (j, row[j]))
            .collect(),
        None => (0..row.len())
            .filter(|&j| j != query)
            .map(|j| (j, row[j]))
            .collect(),
    };
    if pool.is_empty() {
        return Err(KnnError::EmptyCandidatePool { query });
    }
    let k = k.min(pool.len());
    if k < pool.len() {
        pool.select_nth_unstable_by(k - 1, closer);
        pool.truncate(k);
    }
    pool.sort_unstable_by(closer);
    Ok(NeighborList {
        indices: pool.iter().map(|&(j, _)| j).collect(),
        similarities: pool.iter().map(|&(_, s)| s).collect(),
    })
}
