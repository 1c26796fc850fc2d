//! Entanglement Matrix analysis of graph states.
//!
//! Qubits sit on a regular polygon, edges are drawn as chords, and chord
//! midpoints index an integer matrix of bipartition entropies (see
//! [`entmatrix`]). Two entropy backends are provided: GF(2) cut rank
//! ([`graph::entropy_cut_rank`]) and dense state-vector simulation
//! ([`sim`]).

pub mod classify;
pub mod entmatrix;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod graph;
pub mod sim;

pub use classify::{classify, enumerate_classes, ClassRecord, ClassificationTable, Descriptor};
pub use entmatrix::{
    build_entanglement_matrix, build_entanglement_matrix_with_tol, edge_attribution,
    label_midpoints, label_midpoints_with_tol, total_entanglement, EntanglementMatrix,
    EntropyBackend,
};
pub use error::{Error, Result};
pub use formulas::{
    compare_report, compare_report_with_jobs, emax_constructive, emax_formula, CaseTag,
    MaxEntBreakdown,
};
pub use geometry::{build_midpoint_census, MidpointCensus, Restriction};
pub use graph::{canonical_form, CanonicalForm, Graph};
