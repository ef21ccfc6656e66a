use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::compat::{run_simplified, Outcome, Stage};
use crate::encoder::build_system;
use crate::formula::{serialize_dimacs, CnfFormula};
use crate::oracle::{brute_force_sat, VarLimitExceeded};
use crate::reducer::{one_sat_from_run, solve_2sat, two_sat_from_run, TwoSatReduction};

/// How the 2-SAT reduction came out for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TwoSatForm {
    Emitted,
    SingularFalse,
    SingularOneSat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Agreement {
    /// Engine verdict (final-matrix test) equals the oracle.
    pub pipeline: bool,
    /// Satisfiability of the emitted 2-SAT formula equals the oracle.
    pub two_sat_literal: bool,
    /// Continuing elimination from the box matrix equals the oracle.
    pub two_sat_continuation: bool,
    pub one_sat: bool,
}

fn micros<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_micros() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    #[serde(rename = "oracleMicros", serialize_with = "micros")]
    pub oracle: Duration,
    #[serde(rename = "pipelineMicros", serialize_with = "micros")]
    pub pipeline: Duration,
    #[serde(rename = "reductionMicros", serialize_with = "micros")]
    pub reduction: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComparisonRecord {
    pub instance: String,
    pub oracle_verdict: Outcome,
    pub pipeline_verdict: Outcome,
    pub two_sat_form: TwoSatForm,
    pub two_sat_literal_verdict: Outcome,
    pub two_sat_continuation_verdict: Outcome,
    pub one_sat_verdict: Outcome,
    pub one_sat_literals: usize,
    /// Step at which a matrix emptied, if one did.
    pub early_stage: Option<usize>,
    pub final_dims: Option<(usize, usize)>,
    pub agreement: Agreement,
    pub timings: Timings,
}

impl ComparisonRecord {
    /// Engine accepts an instance the oracle refutes.
    pub fn is_pipeline_counterexample(&self) -> bool {
        self.oracle_verdict == Outcome::Unsat && self.pipeline_verdict == Outcome::Sat
    }

    pub fn is_soundness_violation(&self) -> bool {
        self.oracle_verdict == Outcome::Sat && self.pipeline_verdict == Outcome::Unsat
    }

    pub fn stage_label(&self) -> String {
        match (self.early_stage, self.final_dims) {
            (Some(k), _) => Stage::EarlyStep(k).to_string(),
            (None, Some(_)) => Stage::Final.to_string(),
            (None, None) => Stage::Singular.to_string(),
        }
    }
}

/// Runs oracle, engine, 2-SAT emission and solve, and 1-SAT emission.
pub fn compare(f: &CnfFormula, var_limit: u32) -> Result<ComparisonRecord, VarLimitExceeded> {
    let oracle = brute_force_sat(f, var_limit)?;

    let start = Instant::now();
    let sys = build_system(f);
    let run = run_simplified(&sys);
    let pipeline_time = start.elapsed();

    let start = Instant::now();
    let two = two_sat_from_run(f, &sys, &run);
    let (two_sat_form, two_sat_literal_verdict) = match &two {
        TwoSatReduction::Instance(inst) => (
            TwoSatForm::Emitted,
            solve_2sat(&inst.formula)
                .expect("emitted clauses have width at most 2")
                .outcome(),
        ),
        TwoSatReduction::SingularFalse { .. } => (TwoSatForm::SingularFalse, Outcome::Unsat),
        TwoSatReduction::SingularOneSat => (TwoSatForm::SingularOneSat, Outcome::Sat),
    };
    let one = one_sat_from_run(&run);
    let reduction_time = start.elapsed();

    let early_stage = match run.verdict.stage {
        Stage::EarlyStep(k) => Some(k),
        _ => None,
    };
    let pipeline_verdict = run.outcome();
    let one_sat_verdict = one.outcome();
    let truth = oracle.verdict;
    Ok(ComparisonRecord {
        instance: serialize_dimacs(f),
        oracle_verdict: truth,
        pipeline_verdict,
        two_sat_form,
        two_sat_literal_verdict,
        two_sat_continuation_verdict: pipeline_verdict,
        one_sat_verdict,
        one_sat_literals: one.literal_count(),
        early_stage,
        final_dims: run.final_matrix.as_ref().map(|r| r.dims()),
        agreement: Agreement {
            pipeline: pipeline_verdict == truth,
            two_sat_literal: two_sat_literal_verdict == truth,
            two_sat_continuation: pipeline_verdict == truth,
            one_sat: one_sat_verdict == truth,
        },
        timings: Timings {
            oracle: oracle.elapsed,
            pipeline: pipeline_time,
            reduction: reduction_time,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_VAR_LIMIT;

    fn cnf(clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(clauses)
    }

    #[test]
    fn complementary_units() {
        let r = compare(&cnf(&[&[1], &[-1]]), DEFAULT_VAR_LIMIT).unwrap();
        assert_eq!(r.oracle_verdict, Outcome::Unsat);
        assert_eq!(r.pipeline_verdict, Outcome::Unsat);
        assert_eq!(r.early_stage, Some(1));
        assert_eq!(r.two_sat_form, TwoSatForm::SingularFalse);
        assert_eq!(r.stage_label(), "step 1");
        assert!(r.agreement.pipeline && r.agreement.two_sat_literal && r.agreement.one_sat);
    }

    #[test]
    fn single_clause() {
        let r = compare(&cnf(&[&[1, 2]]), DEFAULT_VAR_LIMIT).unwrap();
        assert_eq!(
            (r.oracle_verdict, r.pipeline_verdict),
            (Outcome::Sat, Outcome::Sat)
        );
        assert_eq!(r.two_sat_form, TwoSatForm::SingularOneSat);
        assert_eq!(r.stage_label(), "singular");
        assert!(r.agreement.pipeline && r.agreement.two_sat_literal && r.agreement.one_sat);
    }

    #[test]
    fn emitted_instances_are_always_sat() {
        // Unsatisfiable, with enough complementary pairs to reach emission.
        let f = cnf(&[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        let r = compare(&f, DEFAULT_VAR_LIMIT).unwrap();
        assert_eq!(r.oracle_verdict, Outcome::Unsat);
        if r.two_sat_form == TwoSatForm::Emitted {
            assert_eq!(r.two_sat_literal_verdict, Outcome::Sat);
            assert!(!r.agreement.two_sat_literal);
        }
    }

    #[test]
    fn serializes_camel_case() {
        let r = compare(&cnf(&[&[1], &[-1]]), DEFAULT_VAR_LIMIT).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["oracleVerdict"], "unsat");
        assert_eq!(json["earlyStage"], 1);
        assert!(json["timings"]["oracleMicros"].is_u64());
    }
}
