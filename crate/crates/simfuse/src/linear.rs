//! Linear similarity integration: AVE, KA, HSIC, and LIC.
//!
//! All four produce a per-view weight vector on the probability simplex and
//! fuse views as the entry-wise convex combination `S = sum_h w_h S_h`. They
//! differ only in how the weights are derived:
//!
//! * AVE: uniform weights.
//! * KA: weights proportional to the Frobenius alignment between each view
//!   and the ideal similarity `Z = Y Y^T` (or `Y^T Y` on the target side).
//! * HSIC: weights maximizing a trace-dependence objective plus two quadratic
//!   terms, solved by projected gradient ascent on the simplex.
//! * LIC: weights proportional to each view's mean local interaction
//!   consistency over the known interacting pairs.

use crate::knn::knn_of;
use crate::types::{EntityKind, FusedSimilarity, InteractionMatrix, Method, SimilarityView};
use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinearError {
    #[error("view {index} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        index: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("{0} weights for {1} views")]
    WeightCountMismatch(usize, usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("all view alignments are zero")]
    AllZeroAlignment,
    #[error("objective became non-finite")]
    NonFinite,
    #[error("interaction matrix has no interacting pairs")]
    NoInteractions,
    #[error(
        "literal consistency indicator needs neighbor index {index} < {n_targets} targets"
    )]
    LiteralIndicatorOutOfRange { index: usize, n_targets: usize },
}

/// One weight per view, on the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalWeights {
    pub weights: Vec<f64>,
    pub method: Method,
}

impl GlobalWeights {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum within `tol` of 1 and every entry nonnegative.
    pub fn is_simplex(&self, tol: f64) -> bool {
        let sum: f64 = self.weights.iter().sum();
        (sum - 1.0).abs() <= tol && self.weights.iter().all(|&w| w >= 0.0)
    }
}

/// Interaction-profile inner-product matrix `Y Y^T` (drug side) or
/// `Y^T Y` (target side).
#[derive(Debug, Clone)]
pub struct IdealSimilarity {
    pub matrix: Array2<f64>,
}

impl IdealSimilarity {
    pub fn for_side(y: &InteractionMatrix, side: EntityKind) -> Self {
        let oriented = y.oriented(side);
        let matrix = oriented.dot(&oriented.t());
        Self { matrix }
    }
}

fn check_shapes(views: &[SimilarityView]) -> Result<(usize, usize), LinearError> {
    let expected = views[0].matrix.dim();
    for (index, v) in views.iter().enumerate() {
        if v.matrix.dim() != expected {
            return Err(LinearError::ShapeMismatch {
                index,
                expected,
                found: v.matrix.dim(),
            });
        }
    }
    Ok(expected)
}

/// Entry-wise convex combination of the views under `w`.
pub fn fuse_linear(
    views: &[SimilarityView],
    w: &GlobalWeights,
) -> Result<FusedSimilarity, LinearError> {
    if views.len() != w.weights.len() {
        return Err(LinearError::WeightCountMismatch(
            w.weights.len(),
            views.len(),
        ));
    }
    let dim = check_shapes(views)?;
    let mut fused = Array2::<f64>::zeros(dim);
    for (view, &wh) in views.iter().zip(&w.weights) {
        fused.scaled_add(wh, &view.matrix);
    }
    let mut out = FusedSimilarity::new(fused, w.method);
    for (h, wh) in w.weights.iter().enumerate() {
        out.params.insert(format!("w{h}"), format!("{wh}"));
    }
    Ok(out)
}

/// Uniform weights `1/m`.
pub fn ave_weights(m: usize) -> GlobalWeights {
    assert!(m >= 1, "need at least one view");
    GlobalWeights {
        weights: vec![1.0 / m as f64; m],
        method: Method::Ave,
    }
}

/// Frobenius alignment `<A, Z> / sqrt(<A, A> <Z, Z>)`.
pub fn kernel_alignment(a: &Array2<f64>, z: &Array2<f64>) -> Result<f64, LinearError> {
    if a.dim() != z.dim() {
        return Err(LinearError::DegenerateInput(format!(
            "alignment needs equal shapes, got {:?} and {:?}",
            a.dim(),
            z.dim()
        )));
    }
    let inner: f64 = a.iter().zip(z.iter()).map(|(&x, &y)| x * y).sum();
    let norm_a: f64 = a.iter().map(|&x| x * x).sum::<f64>().sqrt();
    let norm_z: f64 = z.iter().map(|&x| x * x).sum::<f64>().sqrt();
    if norm_a == 0.0 || norm_z == 0.0 {
        return Err(LinearError::DegenerateInput(
            "alignment with an all-zero matrix".into(),
        ));
    }
    Ok(inner / (norm_a * norm_z))
}

/// KA weights: per-view alignment with the ideal similarity, normalized.
pub fn ka_weights(
    views: &[SimilarityView],
    y: &InteractionMatrix,
) -> Result<GlobalWeights, LinearError> {
    check_shapes(views)?;
    let z = IdealSimilarity::for_side(y, views[0].entity_kind);
    let alignments: Vec<f64> = views
        .iter()
        .map(|v| kernel_alignment(&v.matrix, &z.matrix))
        .collect::<Result<_, _>>()?;
    let total: f64 = alignments.iter().sum();
    if total == 0.0 {
        return Err(LinearError::AllZeroAlignment);
    }
    Ok(GlobalWeights {
        weights: alignments.iter().map(|a| a / total).collect(),
        method: Method::Ka,
    })
}

/// Euclidean projection of `v` onto the probability simplex.
pub fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable_by(|a, b| b.partial_cmp(a).expect("no NaN weights"));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (i as f64 + 1.0);
        if u - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// The HSIC weight-learning problem reduced to its m-dimensional form.
///
/// The trace term is linear in `w`: `tr(S H Z H)/n^2 = sum_h w_h a_h` with
/// `a_h = tr(S_h H Z H)/n^2`, and the pairwise-alignment term uses
/// `L = Lambda - U` where `U_ij` is the alignment between views i and j.
#[derive(Debug, Clone)]
pub struct HsicProblem {
    pub linear: Vec<f64>,
    pub laplacian: Array2<f64>,
}

impl HsicProblem {
    pub fn build(views: &[SimilarityView], y: &InteractionMatrix) -> Result<Self, LinearError> {
        let (n, _) = check_shapes(views)?;
        let z = IdealSimilarity::for_side(y, views[0].entity_kind).matrix;

        // H Z H without forming H: double-center Z.
        let nf = n as f64;
        let row_means: Vec<f64> = z.rows().into_iter().map(|r| r.sum() / nf).collect();
        let col_means: Vec<f64> = z.columns().into_iter().map(|c| c.sum() / nf).collect();
        let grand = z.sum() / (nf * nf);
        let mut centered = z;
        for ((i, j), v) in centered.indexed_iter_mut() {
            *v = *v - row_means[i] - col_means[j] + grand;
        }

        let linear: Vec<f64> = views
            .iter()
            .map(|v| {
                v.matrix
                    .iter()
                    .zip(centered.iter())
                    .map(|(&s, &m)| s * m)
                    .sum::<f64>()
                    / (nf * nf)
            })
            .collect();

        let m = views.len();
        let mut u = Array2::<f64>::zeros((m, m));
        for i in 0..m {
            for j in i..m {
                let a = kernel_alignment(&views[i].matrix, &views[j].matrix)?;
                u[[i, j]] = a;
                u[[j, i]] = a;
            }
        }
        let mut laplacian = -u.clone();
        for i in 0..m {
            laplacian[[i, i]] += u.row(i).sum();
        }
        Ok(Self { linear, laplacian })
    }

    /// The maximized objective, exactly as the reduction states it:
    /// linear trace term plus `l1 w'Lw + l2 ||w||^2`.
    pub fn objective(&self, w: &[f64], lambda1: f64, lambda2: f64) -> f64 {
        let lin: f64 = self.linear.iter().zip(w).map(|(a, x)| a * x).sum();
        let mut quad = 0.0;
        for i in 0..w.len() {
            for j in 0..w.len() {
                quad += w[i] * self.laplacian[[i, j]] * w[j];
            }
        }
        let norm2: f64 = w.iter().map(|x| x * x).sum();
        lin + lambda1 * quad + lambda2 * norm2
    }

    fn gradient(&self, w: &[f64], lambda1: f64, lambda2: f64) -> Vec<f64> {
        (0..w.len())
            .map(|i| {
                let lw: f64 = (0..w.len()).map(|j| self.laplacian[[i, j]] * w[j]).sum();
                self.linear[i] + 2.0 * lambda1 * lw + 2.0 * lambda2 * w[i]
            })
            .collect()
    }

    fn ascend(
        &self,
        start: Vec<f64>,
        step: f64,
        lambda1: f64,
        lambda2: f64,
        max_iters: usize,
        tol: f64,
    ) -> Result<(Vec<f64>, f64), LinearError> {
        let mut w = start;
        let mut value = self.objective(&w, lambda1, lambda2);
        if !value.is_finite() {
            return Err(LinearError::NonFinite);
        }
        for _ in 0..max_iters {
            let grad = self.gradient(&w, lambda1, lambda2);
            let mut t = step;
            let (next, next_value) = loop {
                let cand: Vec<f64> =
                    project_to_simplex(&w.iter().zip(&grad).map(|(x, g)| x + t * g).collect::<Vec<_>>());
                let cand_value = self.objective(&cand, lambda1, lambda2);
                if !cand_value.is_finite() {
                    return Err(LinearError::NonFinite);
                }
                // Keep the trajectory monotone: shrink until no decrease.
                if cand_value >= value {
                    break (cand, cand_value);
                }
                t *= 0.5;
                if t < 1e-18 {
                    break (w.clone(), value);
                }
            };
            let improved = next_value - value;
            w = next;
            value = next_value;
            if improved < tol {
                break;
            }
        }
        Ok((w, value))
    }
}

/// HSIC-based weights via projected gradient ascent on the simplex.
///
/// The objective is maximized as printed (both quadratic terms enter with a
/// plus sign), which makes it convex; the ascent therefore restarts from the
/// uniform point and from every vertex and keeps the best endpoint, so the
/// result is never beaten by any single view.
pub fn hsic_weights(
    views: &[SimilarityView],
    y: &InteractionMatrix,
    lambda1: f64,
    lambda2: f64,
    max_iters: usize,
    tol: f64,
) -> Result<GlobalWeights, LinearError> {
    let m = views.len();
    if m == 1 {
        return Ok(GlobalWeights {
            weights: vec![1.0],
            method: Method::Hsic,
        });
    }
    let problem = HsicProblem::build(views, y)?;

    // 1 / Lipschitz estimate of the gradient (infinity norm of the Hessian).
    let mut lipschitz = 0.0f64;
    for i in 0..m {
        let row: f64 = (0..m)
            .map(|j| {
                let mut h = 2.0 * lambda1 * problem.laplacian[[i, j]];
                if i == j {
                    h += 2.0 * lambda2;
                }
                h.abs()
            })
            .sum();
        lipschitz = lipschitz.max(row);
    }
    let step = 1.0 / lipschitz.max(1e-9);

    let mut starts = vec![vec![1.0 / m as f64; m]];
    for v in 0..m {
        let mut vertex = vec![0.0; m];
        vertex[v] = 1.0;
        starts.push(vertex);
    }
    let mut best: Option<(Vec<f64>, f64)> = None;
    for start in starts {
        let (w, value) = problem.ascend(start, step, lambda1, lambda2, max_iters, tol)?;
        if best.as_ref().is_none_or(|(_, b)| value > *b) {
            best = Some((w, value));
        }
    }
    let (weights, _) = best.expect("at least one start");
    Ok(GlobalWeights {
        weights: project_to_simplex(&weights),
        method: Method::Hsic,
    })
}

/// How the consistency indicator reads the interaction matrix.
///
/// `NeighborLabel` compares the neighbor's interaction with the same target,
/// which is the guilt-by-association reading and the default everywhere.
/// `LiteralRowIndex` reproduces the printed subscript (the neighbor index
/// used as a column index); it is only well-defined while every neighbor
/// index is a valid target index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConsistencyIndicator {
    #[default]
    NeighborLabel,
    LiteralRowIndex,
}

/// Local interaction consistency matrix of one view under `indicator`.
pub fn lic_consistency_matrix_with(
    view: &SimilarityView,
    y: &InteractionMatrix,
    k: usize,
    indicator: ConsistencyIndicator,
) -> Result<Array2<f64>, LinearError> {
    let y = y.oriented(view.entity_kind);
    let (n, n_other) = y.dim();
    let mut c = Array2::<f64>::zeros((n, n_other));
    for i in 0..n {
        let neighbors = match knn_of(view, i, k, None) {
            Ok(nn) => nn,
            // Single-entity side: no neighbors means no evidence.
            Err(_) => continue,
        };
        let denom: f64 = neighbors.similarities.iter().sum();
        if denom == 0.0 {
            // Uninformative neighborhood contributes no evidence.
            continue;
        }
        for j in 0..n_other {
            let mut agree = 0.0;
            for (l, sim) in neighbors.iter() {
                let label = match indicator {
                    ConsistencyIndicator::NeighborLabel => y[[l, j]],
                    ConsistencyIndicator::LiteralRowIndex => {
                        if l >= n_other {
                            return Err(LinearError::LiteralIndicatorOutOfRange {
                                index: l,
                                n_targets: n_other,
                            });
                        }
                        y[[i, l]]
                    }
                };
                if label == y[[i, j]] {
                    agree += sim;
                }
            }
            c[[i, j]] = agree / denom;
        }
    }
    Ok(c)
}

/// Local interaction consistency with the default indicator.
pub fn lic_consistency_matrix(
    view: &SimilarityView,
    y: &InteractionMatrix,
    k: usize,
) -> Array2<f64> {
    lic_consistency_matrix_with(view, y, k, ConsistencyIndicator::NeighborLabel)
        .expect("default indicator cannot fail")
}

/// LIC weights: per-view mean consistency over interacting pairs, normalized.
pub fn lic_weights(
    views: &[SimilarityView],
    y: &InteractionMatrix,
    k: usize,
) -> Result<GlobalWeights, LinearError> {
    check_shapes(views)?;
    let oriented = y.oriented(views[0].entity_kind);
    let interacting: Vec<(usize, usize)> = oriented
        .indexed_iter()
        .filter(|(_, &v)| v == 1.0)
        .map(|((i, j), _)| (i, j))
        .collect();
    if interacting.is_empty() {
        return Err(LinearError::NoInteractions);
    }
    let consistencies: Vec<f64> = views
        .iter()
        .map(|view| {
            let c = lic_consistency_matrix(view, y, k);
            interacting.iter().map(|&(i, j)| c[[i, j]]).sum::<f64>() / interacting.len() as f64
        })
        .collect();
    let total: f64 = consistencies.iter().sum();
    let weights = if total == 0.0 {
        log::warn!("all per-view consistencies are zero; falling back to uniform weights");
        vec![1.0 / views.len() as f64; views.len()]
    } else {
        consistencies.iter().map(|c| c / total).collect()
    };
    Ok(GlobalWeights {
        weights,
        method: Method::Lic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    fn dview(matrix: Array2<f64>) -> SimilarityView {
        SimilarityView::new(matrix, EntityKind::Drug, "test")
    }

    fn ym(matrix: Array2<f64>) -> InteractionMatrix {
        InteractionMatrix::with_anonymous_ids(matrix)
    }

    #[test]
    fn fuse_identical_views_is_fixed_point() {
        let a = array![[1.0, 0.3], [0.3, 1.0]];
        let views = vec![dview(a.clone()), dview(a.clone())];
        let w = GlobalWeights {
            weights: vec![0.7, 0.3],
            method: Method::Ave,
        };
        let fused = fuse_linear(&views, &w).unwrap();
        assert_abs_diff_eq!(fused.matrix, a, epsilon = 1e-15);
    }

    #[test]
    fn fuse_vertex_weight_returns_that_view() {
        let a = array![[1.0, 0.3], [0.3, 1.0]];
        let b = array![[1.0, 0.9], [0.9, 1.0]];
        let views = vec![dview(a.clone()), dview(b)];
        let w = GlobalWeights {
            weights: vec![1.0, 0.0],
            method: Method::Ave,
        };
        let fused = fuse_linear(&views, &w).unwrap();
        assert_eq!(fused.matrix, a);
    }

    #[test]
    fn fuse_half_half_arithmetic() {
        let a = array![[1.0, 0.0], [0.0, 1.0]];
        let b = array![[1.0, 1.0], [1.0, 1.0]];
        let views = vec![dview(a), dview(b)];
        let w = GlobalWeights {
            weights: vec![0.5, 0.5],
            method: Method::Ave,
        };
        let fused = fuse_linear(&views, &w).unwrap();
        assert_eq!(fused.matrix, array![[1.0, 0.5], [0.5, 1.0]]);
    }

    #[test]
    fn fuse_shape_mismatch_errors() {
        let views = vec![dview(Array2::eye(2)), dview(Array2::eye(3))];
        assert!(fuse_linear(&views, &ave_weights(2)).is_err());
    }

    #[test]
    fn ave_is_uniform() {
        for m in [1usize, 4, 9] {
            let w = ave_weights(m);
            assert_eq!(w.weights.len(), m);
            assert!(w.is_simplex(1e-12));
            for &x in &w.weights {
                assert_abs_diff_eq!(x, 1.0 / m as f64);
            }
        }
    }

    #[test]
    fn alignment_equality_and_scale_invariance() {
        let z = array![[2.0, 1.0], [1.0, 1.0]];
        assert_abs_diff_eq!(kernel_alignment(&z, &z).unwrap(), 1.0, epsilon = 1e-15);
        let scaled = z.mapv(|v| 3.0 * v);
        assert_abs_diff_eq!(
            kernel_alignment(&scaled, &z).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn alignment_hand_example() {
        // <I, Z> / (sqrt(2) sqrt(7)) = 3 / sqrt(14)
        let a = array![[1.0, 0.0], [0.0, 1.0]];
        let z = array![[2.0, 1.0], [1.0, 1.0]];
        assert_abs_diff_eq!(
            kernel_alignment(&a, &z).unwrap(),
            3.0 / 14.0f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn alignment_zero_matrix_is_degenerate() {
        let a = Array2::zeros((2, 2));
        let z = array![[1.0, 0.0], [0.0, 1.0]];
        assert!(matches!(
            kernel_alignment(&a, &z),
            Err(LinearError::DegenerateInput(_))
        ));
    }

    #[test]
    fn ka_equal_alignments_split_evenly() {
        let a = array![[1.0, 0.5], [0.5, 1.0]];
        let views = vec![dview(a.clone()), dview(a)];
        let y = ym(array![[1.0, 0.0], [0.0, 1.0]]);
        let w = ka_weights(&views, &y).unwrap();
        assert_abs_diff_eq!(w.weights[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(w.weights[1], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn simplex_projection_basics() {
        let p = project_to_simplex(&[0.2, 0.3, 0.5]);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p[2], 0.5, epsilon = 1e-12);

        let p = project_to_simplex(&[10.0, 0.0, 0.0]);
        assert_abs_diff_eq!(p[0], 1.0, epsilon = 1e-12);
        assert_eq!(p[1], 0.0);

        let p = project_to_simplex(&[-5.0, -5.0]);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn hsic_single_view_is_trivial() {
        let views = vec![dview(array![[1.0, 0.4], [0.4, 1.0]])];
        let y = ym(array![[1.0, 0.0], [0.0, 1.0]]);
        let w = hsic_weights(&views, &y, 0.25, 0.25, 500, 1e-9).unwrap();
        assert_eq!(w.weights, vec![1.0]);
    }

    #[test]
    fn hsic_weights_are_simplex_and_beat_vertices() {
        let a = array![
            [1.0, 0.8, 0.1, 0.0],
            [0.8, 1.0, 0.2, 0.1],
            [0.1, 0.2, 1.0, 0.7],
            [0.0, 0.1, 0.7, 1.0]
        ];
        let b = array![
            [1.0, 0.1, 0.8, 0.3],
            [0.1, 1.0, 0.4, 0.6],
            [0.8, 0.4, 1.0, 0.2],
            [0.3, 0.6, 0.2, 1.0]
        ];
        let c = array![
            [1.0, 0.5, 0.5, 0.5],
            [0.5, 1.0, 0.5, 0.5],
            [0.5, 0.5, 1.0, 0.5],
            [0.5, 0.5, 0.5, 1.0]
        ];
        let views = vec![dview(a), dview(b), dview(c)];
        let y = ym(array![
            [1.0, 0.0, 1.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 1.0, 1.0]
        ]);
        let (l1, l2) = (0.25, 0.25);
        let w = hsic_weights(&views, &y, l1, l2, 500, 1e-9).unwrap();
        assert!(w.is_simplex(1e-9), "{:?}", w.weights);

        let problem = HsicProblem::build(&views, &y).unwrap();
        let returned = problem.objective(&w.weights, l1, l2);
        for v in 0..3 {
            let mut vertex = vec![0.0; 3];
            vertex[v] = 1.0;
            let at_vertex = problem.objective(&vertex, l1, l2);
            assert!(
                returned >= at_vertex - 1e-9,
                "vertex {v} beats solver: {at_vertex} > {returned}"
            );
        }
    }

    #[test]
    fn lic_consistency_perfect_agreement() {
        // Two drugs with identical interaction rows: the sole neighbor always
        // agrees, so every consistency entry is 1.
        let y = ym(array![[1.0, 0.0], [1.0, 0.0]]);
        let view = dview(array![[1.0, 0.6], [0.6, 1.0]]);
        let c = lic_consistency_matrix(&view, &y, 1);
        assert_eq!(c, array![[1.0, 1.0], [1.0, 1.0]]);
    }

    #[test]
    fn lic_consistency_total_disagreement() {
        let y = ym(array![[1.0, 0.0], [0.0, 1.0]]);
        let view = dview(array![[1.0, 0.6], [0.6, 1.0]]);
        let c = lic_consistency_matrix(&view, &y, 1);
        assert_eq!(c, array![[0.0, 0.0], [0.0, 0.0]]);
    }

    #[test]
    fn lic_consistency_weighted_three_drugs() {
        // Literal re-evaluation of the weighted-agreement sum with k = 2.
        let view = dview(array![[1.0, 0.7, 0.2], [0.7, 1.0, 0.5], [0.2, 0.5, 1.0]]);
        let y = ym(array![[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        let c = lic_consistency_matrix(&view, &y, 2);
        // Drug 0: neighbors 1 (0.7) and 2 (0.2), denom 0.9.
        // Target 0: labels y10=1 agrees with y00=1 (0.7), y20=0 disagrees.
        assert_abs_diff_eq!(c[[0, 0]], 0.7 / 0.9, epsilon = 1e-12);
        // Target 1: y01=0; y11=1 disagrees, y21=1 disagrees.
        assert_abs_diff_eq!(c[[0, 1]], 0.0, epsilon = 1e-12);
        // Drug 2: neighbors 1 (0.5) and 0 (0.2), denom 0.7.
        // Target 0: y20=0; y10=1 disagrees, y00=1 disagrees.
        assert_abs_diff_eq!(c[[2, 0]], 0.0, epsilon = 1e-12);
        // Target 1: y21=1; y11=1 agrees (0.5), y01=0 disagrees.
        assert_abs_diff_eq!(c[[2, 1]], 0.5 / 0.7, epsilon = 1e-12);
    }

    #[test]
    fn lic_weights_normalize_consistencies() {
        let y = ym(array![[1.0, 0.0], [1.0, 0.0]]);
        let good = dview(array![[1.0, 0.9], [0.9, 1.0]]);
        let views = vec![good.clone(), good];
        let w = lic_weights(&views, &y, 1).unwrap();
        assert_abs_diff_eq!(w.weights[0], 0.5, epsilon = 1e-12);
        assert!(w.is_simplex(1e-12));
    }

    #[test]
    fn lic_weights_need_interactions() {
        let y = ym(Array2::zeros((2, 2)));
        let views = vec![dview(Array2::eye(2))];
        assert!(matches!(
            lic_weights(&views, &y, 1),
            Err(LinearError::NoInteractions)
        ));
    }

    #[test]
    fn literal_indicator_errors_when_wider_than_targets() {
        // 3 drugs but only 2 targets: neighbor index 2 cannot be a column.
        let view = dview(array![[1.0, 0.2, 0.9], [0.2, 1.0, 0.4], [0.9, 0.4, 1.0]]);
        let y = ym(array![[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]);
        let err = lic_consistency_matrix_with(&view, &y, 2, ConsistencyIndicator::LiteralRowIndex);
        assert!(matches!(
            err,
            Err(LinearError::LiteralIndicatorOutOfRange { .. })
        ));
    }
}
