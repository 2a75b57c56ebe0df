//! Core data model: similarity views, the interaction matrix, datasets,
//! weight matrices, and fused outputs.
//!
//! Everything here is immutable after construction and safe to share across
//! threads. Validation is report-based: [`validate_dataset`] lists every
//! violation it finds and never mutates its input.

use ndarray::{Array2, ArrayView1};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which side of the interaction matrix an object describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EntityKind {
    Drug,
    Target,
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntityKind::Drug => write!(f, "drug"),
            EntityKind::Target => write!(f, "target"),
        }
    }
}

/// The similarity integration method that produced a fused matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ave,
    Ka,
    Hsic,
    Lic,
    Snf,
    SnfH,
    SnfF,
    Fgs,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Ave,
        Method::Ka,
        Method::Hsic,
        Method::Lic,
        Method::Snf,
        Method::SnfH,
        Method::SnfF,
        Method::Fgs,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Ave => "ave",
            Method::Ka => "ka",
            Method::Hsic => "hsic",
            Method::Lic => "lic",
            Method::Snf => "snf",
            Method::SnfH => "snf-h",
            Method::SnfF => "snf-f",
            Method::Fgs => "fgs",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        Method::ALL.iter().copied().find(|m| m.name() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One n x n similarity matrix over drugs or over targets.
///
/// Entries are expected in `[0, 1]` with unit diagonal. Symmetry is not
/// required: fused outputs and some raw sources are asymmetric.
#[derive(Debug, Clone)]
pub struct SimilarityView {
    pub matrix: Array2<f64>,
    pub entity_kind: EntityKind,
    /// Provenance tag, e.g. `"SIMCOMP"` or `"AERS-b"`.
    pub label: String,
}

impl SimilarityView {
    pub fn new(matrix: Array2<f64>, entity_kind: EntityKind, label: impl Into<String>) -> Self {
        Self {
            matrix,
            entity_kind,
            label: label.into(),
        }
    }

    /// Number of entities the view covers.
    pub fn len(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.nrows() == 0
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.matrix.row(i)
    }
}

/// Binary drug-target interaction matrix with entity identifiers.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionMatrix {
    pub matrix: Array2<f64>,
    pub drug_ids: Vec<String>,
    pub target_ids: Vec<String>,
}

impl InteractionMatrix {
    pub fn new(matrix: Array2<f64>, drug_ids: Vec<String>, target_ids: Vec<String>) -> Self {
        Self {
            matrix,
            drug_ids,
            target_ids,
        }
    }

    /// Anonymous ids `d0..`, `t0..` for synthetic or in-memory matrices.
    pub fn with_anonymous_ids(matrix: Array2<f64>) -> Self {
        let drug_ids = (0..matrix.nrows()).map(|i| format!("d{i}")).collect();
        let target_ids = (0..matrix.ncols()).map(|j| format!("t{j}")).collect();
        Self::new(matrix, drug_ids, target_ids)
    }

    pub fn n_drugs(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n_targets(&self) -> usize {
        self.matrix.ncols()
    }

    /// Interactions of the requested side: rows are that side's entities.
    pub fn oriented(&self, side: EntityKind) -> Array2<f64> {
        match side {
            EntityKind::Drug => self.matrix.clone(),
            EntityKind::Target => self.matrix.t().to_owned(),
        }
    }
}

/// Fraction of known interacting pairs.
pub fn sparsity(y: &InteractionMatrix) -> f64 {
    let cells = y.matrix.len();
    if cells == 0 {
        return 0.0;
    }
    let ones = y.matrix.iter().filter(|&&v| v == 1.0).count();
    ones as f64 / cells as f64
}

/// Indices of all-zero rows (new drugs) and all-zero columns (new targets).
///
/// Computed fresh from the matrix so the sets can never go stale.
pub fn new_entities(y: &InteractionMatrix) -> (Vec<usize>, Vec<usize>) {
    let drugs = y
        .matrix
        .rows()
        .into_iter()
        .enumerate()
        .filter(|(_, row)| row.iter().all(|&v| v == 0.0))
        .map(|(i, _)| i)
        .collect();
    let targets = y
        .matrix
        .columns()
        .into_iter()
        .enumerate()
        .filter(|(_, col)| col.iter().all(|&v| v == 0.0))
        .map(|(j, _)| j)
        .collect();
    (drugs, targets)
}

/// New/known index split for one side of the interaction matrix.
pub fn side_split(y: &InteractionMatrix, side: EntityKind) -> (Vec<usize>, Vec<usize>) {
    let (new_drugs, new_targets) = new_entities(y);
    let (n, new_set) = match side {
        EntityKind::Drug => (y.n_drugs(), new_drugs),
        EntityKind::Target => (y.n_targets(), new_targets),
    };
    let mut is_new = vec![false; n];
    for &i in &new_set {
        is_new[i] = true;
    }
    let known = (0..n).filter(|&i| !is_new[i]).collect();
    (new_set, known)
}

/// A training set: one or more similarity views per side plus interactions.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub drug_views: Vec<SimilarityView>,
    pub target_views: Vec<SimilarityView>,
    pub interactions: InteractionMatrix,
}

impl Dataset {
    pub fn n_drugs(&self) -> usize {
        self.interactions.n_drugs()
    }

    pub fn n_targets(&self) -> usize {
        self.interactions.n_targets()
    }

    pub fn views(&self, side: EntityKind) -> &[SimilarityView] {
        match side {
            EntityKind::Drug => &self.drug_views,
            EntityKind::Target => &self.target_views,
        }
    }
}

/// Per-entity, per-view fusion weights (n x m).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    pub matrix: Array2<f64>,
    pub entity_kind: EntityKind,
}

impl WeightMatrix {
    pub fn new(matrix: Array2<f64>, entity_kind: EntityKind) -> Self {
        Self {
            matrix,
            entity_kind,
        }
    }

    pub fn n_entities(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n_views(&self) -> usize {
        self.matrix.ncols()
    }
}

/// Output of a similarity integrator, tagged with how it was produced.
#[derive(Debug, Clone)]
pub struct FusedSimilarity {
    pub matrix: Array2<f64>,
    pub method: Method,
    /// Hyperparameters that produced the matrix, for report echoes.
    pub params: BTreeMap<String, String>,
}

impl FusedSimilarity {
    pub fn new(matrix: Array2<f64>, method: Method) -> Self {
        Self {
            matrix,
            method,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// One invariant breach found by [`validate_dataset`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NonSquareView,
    ViewShapeMismatch,
    NonFiniteValue,
    ValueOutOfRange,
    DiagonalNotOne,
    NonBinaryInteraction,
    IdLengthMismatch,
    TooFewEntities,
    NoViews,
}

/// The full list of violations; empty means the dataset is valid.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, kind: ViolationKind, message: String) {
        self.violations.push(Violation { kind, message });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{:?}: {}", v.kind, v.message)?;
        }
        Ok(())
    }
}

fn validate_view(report: &mut ValidationReport, view: &SimilarityView, expected: usize, pos: usize) {
    let tag = format!("{} view {} ({})", view.entity_kind, pos, view.label);
    let (r, c) = view.matrix.dim();
    if r != c {
        report.push(
            ViolationKind::NonSquareView,
            format!("{tag}: {r}x{c} is not square"),
        );
        return;
    }
    if r != expected {
        report.push(
            ViolationKind::ViewShapeMismatch,
            format!("{tag}: {r}x{c}, expected {expected}x{expected}"),
        );
        return;
    }
    let mut oor = 0usize;
    for ((i, j), &v) in view.matrix.indexed_iter() {
        if !v.is_finite() {
            report.push(
                ViolationKind::NonFiniteValue,
                format!("{tag}: non-finite entry at ({i}, {j})"),
            );
            return;
        }
        if !(0.0..=1.0).contains(&v) {
            oor += 1;
        }
        if i == j && v != 1.0 {
            report.push(
                ViolationKind::DiagonalNotOne,
                format!("{tag}: diagonal entry ({i}, {i}) = {v}"),
            );
            return;
        }
    }
    if oor > 0 {
        report.push(
            ViolationKind::ValueOutOfRange,
            format!("{tag}: {oor} entries outside [0, 1]"),
        );
    }
}

/// Check every core invariant and report all violations found.
pub fn validate_dataset(ds: &Dataset) -> ValidationReport {
    let mut report = ValidationReport::default();
    let y = &ds.interactions;
    let (n_d, n_t) = y.matrix.dim();

    if n_d < 2 || n_t < 2 {
        report.push(
            ViolationKind::TooFewEntities,
            format!("need at least 2 drugs and 2 targets, got {n_d} and {n_t}"),
        );
    }
    if y.drug_ids.len() != n_d {
        report.push(
            ViolationKind::IdLengthMismatch,
            format!("{} drug ids for {n_d} rows", y.drug_ids.len()),
        );
    }
    if y.target_ids.len() != n_t {
        report.push(
            ViolationKind::IdLengthMismatch,
            format!("{} target ids for {n_t} columns", y.target_ids.len()),
        );
    }
    for ((i, j), &v) in y.matrix.indexed_iter() {
        if v != 0.0 && v != 1.0 {
            report.push(
                ViolationKind::NonBinaryInteraction,
                format!("interaction ({i}, {j}) = {v} is not 0 or 1"),
            );
            break;
        }
    }
    if ds.drug_views.is_empty() {
        report.push(ViolationKind::NoViews, "no drug similarity views".into());
    }
    if ds.target_views.is_empty() {
        report.push(ViolationKind::NoViews, "no target similarity views".into());
    }
    for (pos, view) in ds.drug_views.iter().enumerate() {
        validate_view(&mut report, view, n_d, pos);
    }
    for (pos, view) in ds.target_views.iter().enumerate() {
        validate_view(&mut report, view, n_t, pos);
    }
    report
}
