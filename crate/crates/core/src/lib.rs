//! Reduction of CNF satisfiability to 2-SAT and 1-SAT through
//! compatibility-matrix elimination over an exactly-one indicator encoding,
//! with an exhaustive-enumeration oracle that referees every step.

pub mod compat;
pub mod encoder;
pub mod formula;
pub mod harness;
pub mod oracle;
pub mod reducer;

pub use compat::{run_formula, run_simplified, run_with_permutation, CompatRun, Outcome, Stage, Verdict};
pub use encoder::{
    build_system, complementary_pairs, size_report, ConstraintSystem, IndicatorId, SizeReport,
};
pub use formula::{
    evaluate, parse_dimacs, serialize_dimacs, simplify, Assignment, Clause, CnfFormula, Literal,
};
pub use oracle::{brute_force_sat, brute_force_system, OracleResult};
pub use reducer::{
    reduce_to_1sat, reduce_to_2sat, solve_2sat, OneSatInstance, TwoSatInstance, TwoSatReduction,
};
