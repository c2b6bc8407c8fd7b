//! Exact comparison of every identity with its independent oracle, and a
//! JSON-lines report of the outcome.

mod combinatorial;
mod conjecture;
mod explore;
mod report;
mod suite;
pub mod symbolic;

pub use combinatorial::{
    check_schedule, check_shift_recursion, check_square_to_dyck, classes, qt_sum, ratio_term, Classes,
};
pub use conjecture::{
    check_additivity, check_conjecture, check_identity, check_pipeline, check_valley_square_forms, path_family,
    symmetric_side,
};
pub use explore::{mixed_decorations, MixedSeries};
pub use report::{CheckName, CheckReport, CheckSpec, Diff, Params, Status, Summary};
pub use suite::{catalogue, group, parse_families, run_spec, run_suite, CLASS_MAX_K};
