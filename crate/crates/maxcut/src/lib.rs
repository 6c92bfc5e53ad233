//! Max-Cut construction heuristics on dense complete graphs.
//!
//! The centerpiece is the stabilizer contraction heuristic: pick the edge of
//! maximum absolute weight, merge its endpoints additively when the weight is
//! negative and subtractively when positive, and read the final partition off
//! the signed forest of picked edges. The classic EC, DEC, SG and SG3
//! construction heuristics are provided for comparison, together with a
//! brute-force exact oracle for small instances, readers for TSPLIB and MCUT
//! instance files, and a benchmark CLI (`maxcut`).
//!
//! ```
//! use maxcut::{stabilizer, SolvePolicy, WeightMatrix};
//!
//! let m = WeightMatrix::from_edges(3, &[(0, 1, 1i64), (0, 2, 2), (1, 2, 3)]).unwrap();
//! let out = stabilizer::solve(&m, &SolvePolicy::default()).unwrap();
//! assert_eq!(out.cut.cut_weight(), 5);
//! ```

pub mod baselines;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod mcut;
pub mod oracle;
pub mod report;
pub mod stabilizer;
pub mod tsplib;

pub use baselines::{DecDirection, DecOutcome, EcOutcome, SgOrder};
pub use contraction::{ContractionState, ContractionTrace, SurvivorRule, TraceStep};
pub use error::{GraphError, ParseError, SolveError};
pub use graph::{CutAssignment, DynWeightMatrix, Weight, WeightMatrix};
pub use oracle::{OracleResult, DEFAULT_MAX_N};
pub use report::{ReportFormat, RunReport, WeightValue};
pub use stabilizer::{
    Engine, SignedForestEdge, SolvePolicy, StabilizerForest, StabilizerOutcome, TieBreak,
};
