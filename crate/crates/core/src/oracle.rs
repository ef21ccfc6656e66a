//! Exhaustive-enumeration referee.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::compat::Outcome;
use crate::encoder::ConstraintSystem;
use crate::formula::{Assignment, CnfFormula};

pub const DEFAULT_VAR_LIMIT: u32 = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{vars} variables exceed the enumeration limit {limit}")]
pub struct VarLimitExceeded {
    pub vars: u32,
    pub limit: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub verdict: Outcome,
    /// Least satisfying assignment in enumeration order.
    pub model: Option<Assignment>,
    pub model_count: Option<u64>,
    pub elapsed: Duration,
}

fn check_limit(vars: u32, limit: u32) -> Result<(), VarLimitExceeded> {
    if vars > limit.min(63) {
        Err(VarLimitExceeded { vars, limit })
    } else {
        Ok(())
    }
}

/// Bit `i` of a mask is the value of `x(i+1)`; masks are tried in
/// increasing order.
fn clause_masks(f: &CnfFormula) -> Vec<(u64, u64)> {
    f.clauses()
        .iter()
        .map(|c| {
            c.literals().iter().fold((0u64, 0u64), |(pos, neg), l| {
                let bit = 1u64 << (l.var() - 1);
                if l.is_negated() {
                    (pos, neg | bit)
                } else {
                    (pos | bit, neg)
                }
            })
        })
        .collect()
}

fn satisfies(masks: &[(u64, u64)], x: u64) -> bool {
    masks.iter().all(|&(pos, neg)| x & pos != 0 || !x & neg != 0)
}

fn enumerate(f: &CnfFormula, limit: u32, count: bool) -> Result<OracleResult, VarLimitExceeded> {
    check_limit(f.num_vars(), limit)?;
    let start = Instant::now();
    let masks = clause_masks(f);
    let mut first = None;
    let mut models = 0u64;
    for x in 0..1u64 << f.num_vars() {
        if satisfies(&masks, x) {
            first.get_or_insert(x);
            models += 1;
            if !count {
                break;
            }
        }
    }
    Ok(OracleResult {
        verdict: Outcome::from_bool(first.is_some()),
        model: first.map(|x| Assignment::from_mask(f.num_vars(), x)),
        model_count: count.then_some(models),
        elapsed: start.elapsed(),
    })
}

/// Stops at the first model.
pub fn brute_force_sat(f: &CnfFormula, var_limit: u32) -> Result<OracleResult, VarLimitExceeded> {
    enumerate(f, var_limit, false)
}

/// Visits every assignment and reports the model count.
pub fn count_models(f: &CnfFormula, var_limit: u32) -> Result<OracleResult, VarLimitExceeded> {
    enumerate(f, var_limit, true)
}

/// Satisfying indicator vector of a constraint system, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemResult {
    pub verdict: Outcome,
    pub model: Option<Vec<bool>>,
    pub model_count: u64,
    pub elapsed: Duration,
}

/// Enumerates every indicator vector and counts those meeting every
/// exactly-one and NAND constraint.
pub fn brute_force_system(sys: &ConstraintSystem, var_limit: u32) -> Result<SystemResult, VarLimitExceeded> {
    let width = sys.indicator_count() as u32;
    check_limit(width, var_limit)?;
    let start = Instant::now();
    let mut first = None;
    let mut count = 0u64;
    let mut values = vec![false; width as usize];
    for x in 0..1u64 << width {
        for (k, v) in values.iter_mut().enumerate() {
            *v = x >> k & 1 == 1;
        }
        if sys.is_satisfied_by(&values) {
            count += 1;
            first.get_or_insert_with(|| values.clone());
        }
    }
    Ok(SystemResult {
        verdict: Outcome::from_bool(first.is_some()),
        model: first,
        model_count: count,
        elapsed: start.elapsed(),
    })
}
