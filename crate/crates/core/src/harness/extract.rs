//! Model extraction by self-reduction: fix variables one at a time in index
//! order, keeping `true` whenever the engine still calls the residual
//! satisfiable.

use crate::compat::{run_formula, Outcome};
use crate::formula::{evaluate, simplify, Assignment, CnfFormula, Simplified};
use crate::oracle::brute_force_sat;

/// One binding of the loop and the formula left after applying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailStep {
    pub var: u32,
    pub value: bool,
    pub residual: Simplified,
}

/// The loop ended on an assignment that does not satisfy the formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContradictionReport {
    pub assignment: Assignment,
    pub trail: Vec<TrailStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    Model(Assignment),
    Contradiction(ContradictionReport),
    /// The engine already calls the input unsatisfiable.
    Refuted,
}

fn engine_sat(f: &CnfFormula) -> bool {
    run_formula(f).outcome() == Outcome::Sat
}

fn complete(f: &CnfFormula, mut a: Assignment, trail: Vec<TrailStep>) -> Extraction {
    for v in 1..=f.num_vars() {
        if a.get(v).is_none() {
            a.set(v, false);
        }
    }
    if evaluate(f, &a).expect("total assignment") {
        Extraction::Model(a)
    } else {
        Extraction::Contradiction(ContradictionReport { assignment: a, trail })
    }
}

pub fn extract_model(f: &CnfFormula) -> Extraction {
    if !engine_sat(f) {
        return Extraction::Refuted;
    }
    let mut a = Assignment::empty(f.num_vars());
    let mut trail = Vec::new();
    for v in 1..=f.num_vars() {
        let attempt = a.clone().with(v, true);
        match simplify(f, &attempt) {
            Simplified::True => {
                trail.push(TrailStep {
                    var: v,
                    value: true,
                    residual: Simplified::True,
                });
                return complete(f, attempt, trail);
            }
            Simplified::Formula(g) if engine_sat(&g) => {
                a = attempt;
                trail.push(TrailStep {
                    var: v,
                    value: true,
                    residual: Simplified::Formula(g),
                });
                continue;
            }
            _ => {}
        }
        a.set(v, false);
        let residual = simplify(f, &a);
        trail.push(TrailStep {
            var: v,
            value: false,
            residual: residual.clone(),
        });
        match residual {
            Simplified::True => return complete(f, a, trail),
            Simplified::False => {
                return Extraction::Contradiction(ContradictionReport { assignment: a, trail });
            }
            Simplified::Formula(_) => {}
        }
    }
    complete(f, a, trail)
}

/// First formula along `f`, then the trail residuals, that the oracle
/// refutes. When the engine's refutations are sound this formula is one the
/// engine wrongly accepts; `None` if no such formula exists.
pub fn locate_witness(f: &CnfFormula, report: &ContradictionReport, var_limit: u32) -> Option<CnfFormula> {
    let chain = std::iter::once(f).chain(report.trail.iter().filter_map(|s| match &s.residual {
        Simplified::Formula(g) => Some(g),
        _ => None,
    }));
    for g in chain {
        let oracle = brute_force_sat(g, var_limit).ok()?;
        if oracle.verdict == Outcome::Unsat {
            return engine_sat(g).then(|| g.clone());
        }
    }
    None
}
