//! Instance generation, claim-by-claim comparison against the oracle,
//! counterexample mining and model extraction.

pub mod compare;
pub mod extract;
pub mod generate;
pub mod mine;

pub use compare::{compare, Agreement, ComparisonRecord, TwoSatForm};
pub use extract::{extract_model, locate_witness, ContradictionReport, Extraction, TrailStep};
pub use generate::{
    clause_alphabet, exhaustive_space, generate, generate_capped, GenError, GenMode, GenParams,
};
pub use mine::{mine, mine_formulas, Counterexample, MineError, MineOptions, MiningReport, Totals};
