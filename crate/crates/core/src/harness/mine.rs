use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::compare::{compare, ComparisonRecord};
use super::extract::{extract_model, locate_witness, Extraction};
use super::generate::{generate_capped, GenError, GenMode, GenParams, DEFAULT_SPACE_CAP};
use crate::compat::Outcome;
use crate::formula::{serialize_dimacs, CnfFormula};
use crate::oracle::{VarLimitExceeded, DEFAULT_VAR_LIMIT};

pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MineOptions {
    pub counterexample_cap: usize,
    pub var_limit: u32,
    pub space_cap: u128,
    /// Run model extraction on every instance both sides accept.
    pub extract_models: bool,
}

impl Default for MineOptions {
    fn default() -> Self {
        Self {
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            var_limit: DEFAULT_VAR_LIMIT,
            space_cap: DEFAULT_SPACE_CAP,
            extract_models: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum MineError {
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error(transparent)]
    Oracle(#[from] VarLimitExceeded),
    #[error("FATAL: engine refuted a satisfiable instance (#{index}):\n{dimacs}")]
    SoundnessViolation { index: usize, dimacs: String },
    #[error(
        "FATAL: model extraction failed on #{index} with no refuted residual the engine accepts:\n{dimacs}"
    )]
    UnexplainedContradiction { index: usize, dimacs: String },
}

/// Echo of the generation parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsEcho {
    pub vars: u32,
    pub clauses: usize,
    pub width: usize,
    pub mode: GenMode,
    pub seed: Option<u64>,
    pub count: Option<usize>,
}

impl From<&GenParams> for ParamsEcho {
    fn from(p: &GenParams) -> Self {
        let random = p.mode == GenMode::Random;
        Self {
            vars: p.max_vars,
            clauses: p.max_clauses,
            width: p.max_width,
            mode: p.mode,
            seed: random.then_some(p.seed),
            count: random.then_some(p.sample_count),
        }
    }
}

/// Verdict pairs, oracle first then engine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub ss: u64,
    pub su: u64,
    pub us: u64,
    pub uu: u64,
}

impl Totals {
    pub fn sum(&self) -> u64 {
        self.ss + self.su + self.us + self.uu
    }

    fn add(&mut self, oracle: Outcome, pipeline: Outcome) {
        match (oracle, pipeline) {
            (Outcome::Sat, Outcome::Sat) => self.ss += 1,
            (Outcome::Sat, Outcome::Unsat) => self.su += 1,
            (Outcome::Unsat, Outcome::Sat) => self.us += 1,
            (Outcome::Unsat, Outcome::Unsat) => self.uu += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub dimacs: String,
    pub oracle: Outcome,
    pub pipeline: Outcome,
    pub twosat: Outcome,
    /// Engine stage label, or `extract` for a residual found by model
    /// extraction.
    pub stage: String,
}

/// Model-extraction tallies; not part of the JSON report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtractionStats {
    pub attempted: u64,
    pub models: u64,
    pub contradictions: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MiningReport {
    pub params: ParamsEcho,
    pub totals: Totals,
    pub iff_claim_violations: u64,
    pub soundness_violations: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    pub version: String,
    #[serde(skip)]
    pub counterexample_total: u64,
    #[serde(skip)]
    pub extraction: ExtractionStats,
}

impl MiningReport {
    fn new(params: &GenParams) -> Self {
        Self {
            params: params.into(),
            totals: Totals::default(),
            iff_claim_violations: 0,
            soundness_violations: Vec::new(),
            counterexamples: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            counterexample_total: 0,
            extraction: ExtractionStats::default(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn push_counterexample(&mut self, cap: usize, c: Counterexample) {
        self.counterexample_total += 1;
        if self.counterexamples.len() < cap {
            self.counterexamples.push(c);
        }
    }
}

struct Processed {
    record: ComparisonRecord,
    extraction: Option<Extraction>,
    formula: CnfFormula,
}

fn process(f: CnfFormula, opts: &MineOptions) -> Result<Processed, VarLimitExceeded> {
    let record = compare(&f, opts.var_limit)?;
    let both_sat = record.oracle_verdict == Outcome::Sat && record.pipeline_verdict == Outcome::Sat;
    let extraction = (opts.extract_models && both_sat).then(|| extract_model(&f));
    Ok(Processed {
        record,
        extraction,
        formula: f,
    })
}

/// Folds `compare` (and model extraction) over the generated stream.
pub fn mine(params: &GenParams, opts: &MineOptions) -> Result<MiningReport, MineError> {
    let formulas: Vec<CnfFormula> = generate_capped(params, opts.space_cap)?.collect();
    mine_formulas(params, formulas, opts)
}

/// Same fold over an explicit instance list; `params` is only echoed.
pub fn mine_formulas(
    params: &GenParams,
    formulas: Vec<CnfFormula>,
    opts: &MineOptions,
) -> Result<MiningReport, MineError> {
    let processed: Vec<Processed> = formulas
        .into_par_iter()
        .map(|f| process(f, opts))
        .collect::<Result<_, _>>()?;

    let mut report = MiningReport::new(params);
    for (index, p) in processed.into_iter().enumerate() {
        let r = &p.record;
        if r.is_soundness_violation() {
            return Err(MineError::SoundnessViolation {
                index,
                dimacs: r.instance.clone(),
            });
        }
        report.totals.add(r.oracle_verdict, r.pipeline_verdict);
        if !r.agreement.two_sat_literal {
            report.iff_claim_violations += 1;
        }
        if r.is_pipeline_counterexample() || !r.agreement.two_sat_literal {
            report.push_counterexample(
                opts.counterexample_cap,
                Counterexample {
                    dimacs: r.instance.clone(),
                    oracle: r.oracle_verdict,
                    pipeline: r.pipeline_verdict,
                    twosat: r.two_sat_literal_verdict,
                    stage: r.stage_label(),
                },
            );
        }
        match p.extraction {
            None => {}
            Some(Extraction::Model(_)) => {
                report.extraction.attempted += 1;
                report.extraction.models += 1;
            }
            Some(Extraction::Refuted) => unreachable!("extraction only runs on engine-accepted input"),
            Some(Extraction::Contradiction(c)) => {
                report.extraction.attempted += 1;
                report.extraction.contradictions += 1;
                let witness = locate_witness(&p.formula, &c, opts.var_limit).ok_or_else(|| {
                    MineError::UnexplainedContradiction {
                        index,
                        dimacs: r.instance.clone(),
                    }
                })?;
                let w = compare(&witness, opts.var_limit)?;
                report.push_counterexample(
                    opts.counterexample_cap,
                    Counterexample {
                        dimacs: serialize_dimacs(&witness),
                        oracle: w.oracle_verdict,
                        pipeline: w.pipeline_verdict,
                        twosat: w.two_sat_literal_verdict,
                        stage: "extract".to_owned(),
                    },
                );
            }
        }
    }
    Ok(report)
}
