//! F-index, Zagreb indices and total transformation graphs.
//!
//! The crate is split so that the two sides of every verified identity stay
//! independent:
//!
//! * [`graph`], [`graph6`], [`io`], [`generate`]: labeled simple graphs,
//!   their text formats and corpus generators.
//! * [`indices`]: exact degree-based invariants (`M1`, `M2`, `F`, `xi4`,
//!   `ReZG3`).
//! * [`transform`]: the semitotal graphs `T1`, `T2` and the eight total
//!   transformation graphs `G^xyz`, plus closed-form degree tables.
//! * [`formulas`]: closed forms evaluated from an [`IndexSet`] alone.
//! * [`verify`]: the construction-based oracle and the corpus harness.

pub mod formulas;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod io;
pub mod transform;
pub mod verify;

pub use formulas::{
    aux_edge_count_formula, aux_m1_formula, f_complement_formula, f_formula, FormulaError,
    FormulaId,
};
pub use generate::{generate, parse_family_list, random_gnm, Family, GenerateError};
pub use graph::{graphs_equal, EdgeLabel, Graph, GraphBuilder, GraphError, Vertex};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use indices::{edge_form_check, index_set, IndexSet, Int};
pub use io::{parse_edge_list, to_edge_list, GraphReader, InputError, InputFormat};
pub use transform::{
    predicted_degrees, transform, verify_complement_pairing, DegreePrediction, Sign, Signs,
    TransformError, TransformKind,
};
pub use verify::{
    oracle_f, verify_corpus, verify_graph, CorpusError, CorpusMode, CorpusReport, CorpusSpec,
    FormulaCheck, VerificationReport, VerifyOptions,
};

/// Complement of `g`.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
