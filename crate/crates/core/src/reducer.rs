//! Emission of the 2-SAT instance (exclusion clauses plus one unit literal
//! per box-matrix element) and the 1-SAT instance (one unit literal per
//! final-matrix cell), DIMACS output for both, and a linear-time 2-SAT
//! decision procedure.

use std::fmt::Write as _;

use thiserror::Error;

use crate::compat::{run_simplified, BoxMatrix, CompatRun, Outcome};
use crate::encoder::{build_system, ConstraintSystem, IndicatorId};
use crate::formula::{write_dimacs_body, Assignment, Clause, CnfFormula, Literal};

/// Box-matrix coordinate behind a fresh variable `b_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementRef {
    pub mu: usize,
    pub nu: usize,
    pub row: usize,
    pub col: usize,
    pub value: bool,
}

/// `h ∧ w` over a flat numbering: original variables first, then one
/// variable per indicator (clause-major), then `b_1..b_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSatInstance {
    pub formula: CnfFormula,
    /// Count of original variables preceding the indicator block.
    pub base_vars: u32,
    /// `indicators[k]` is flat variable `base_vars + k + 1`.
    pub indicators: Vec<IndicatorId>,
    /// `elements[i-1]` is the coordinate behind `b_i`.
    pub elements: Vec<ElementRef>,
    /// Number of leading exclusion clauses.
    pub exclusion_count: usize,
}

impl TwoSatInstance {
    pub fn b_offset(&self) -> u32 {
        self.base_vars + self.indicators.len() as u32
    }

    pub fn b_var(&self, i: usize) -> u32 {
        self.b_offset() + i as u32
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        out.push_str("c 2-SAT: exclusion clauses then box-matrix units\n");
        for (k, id) in self.indicators.iter().enumerate() {
            let _ = writeln!(
                out,
                "c map x{} = xi({},{})",
                self.base_vars as usize + k + 1,
                id.clause,
                id.position
            );
        }
        let _ = writeln!(out, "c b_offset {}", self.b_offset());
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(
                out,
                "c map b{} = box({},{}) cell({},{}) val({})",
                i + 1,
                e.mu,
                e.nu,
                e.row + 1,
                e.col + 1,
                u8::from(e.value)
            );
        }
        write_dimacs_body(&mut out, &self.formula);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoSatReduction {
    Instance(TwoSatInstance),
    /// A matrix emptied within the first `m` steps.
    SingularFalse {
        step: usize,
    },
    /// No complementary pairs: the exactly-one conjunction alone.
    SingularOneSat,
}

/// Canonical DIMACS text for the constant-false formula.
pub const FALSE_DIMACS: &str = "c FALSE\np cnf 0 1\n0\n";

/// DIMACS text for the no-exclusion singular case.
pub const SINGULAR_ONE_SAT_DIMACS: &str = "c SINGULAR 1SAT\np cnf 0 0\n";

impl TwoSatReduction {
    pub fn to_dimacs(&self) -> String {
        match self {
            TwoSatReduction::Instance(inst) => inst.to_dimacs(),
            TwoSatReduction::SingularFalse { .. } => FALSE_DIMACS.to_owned(),
            TwoSatReduction::SingularOneSat => SINGULAR_ONE_SAT_DIMACS.to_owned(),
        }
    }
}

fn emit_two_sat(f: &CnfFormula, sys: &ConstraintSystem, boxes: &BoxMatrix) -> TwoSatInstance {
    let base_vars = f.num_vars();
    let indicators: Vec<IndicatorId> = (0..sys.indicator_count()).map(|k| sys.indicator_at(k)).collect();
    let flat = |id: IndicatorId| base_vars + sys.indicator_index(id) as u32 + 1;
    let b_offset = base_vars + indicators.len() as u32;

    let mut clauses: Vec<Clause> = sys
        .exclusions()
        .iter()
        .map(|p| {
            Clause::new([Literal::neg(flat(p.first)), Literal::neg(flat(p.second))]).expect("two literals")
        })
        .collect();
    let elements: Vec<ElementRef> = boxes
        .elements()
        .map(|(mu, nu, row, col, value)| ElementRef {
            mu,
            nu,
            row,
            col,
            value,
        })
        .collect();
    for (i, e) in elements.iter().enumerate() {
        let var = b_offset + i as u32 + 1;
        clauses.push(Clause::new([Literal::new(var, !e.value)]).expect("one literal"));
    }
    let num_vars = b_offset + elements.len() as u32;
    TwoSatInstance {
        formula: CnfFormula::new(num_vars, clauses).expect("variables in range"),
        base_vars,
        indicators,
        elements,
        exclusion_count: sys.num_exclusions(),
    }
}

/// Builds the reduction from a completed engine run on `build_system(f)`.
pub fn two_sat_from_run(f: &CnfFormula, sys: &ConstraintSystem, run: &CompatRun) -> TwoSatReduction {
    if run.n == 0 {
        return TwoSatReduction::SingularOneSat;
    }
    if let crate::compat::Stage::EarlyStep(step) = run.verdict.stage {
        if step <= run.m {
            return TwoSatReduction::SingularFalse { step };
        }
    }
    let empty = BoxMatrix::empty(run.n);
    let boxes = run.boxes.as_ref().unwrap_or(&empty);
    TwoSatReduction::Instance(emit_two_sat(f, sys, boxes))
}

pub fn reduce_to_2sat(f: &CnfFormula) -> TwoSatReduction {
    let sys = build_system(f);
    let run = run_simplified(&sys);
    two_sat_from_run(f, &sys, &run)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TwoSatError {
    #[error("clause {clause} has {width} literals; 2-SAT admits at most 2")]
    ClauseTooWide { clause: usize, width: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoSatOutcome {
    Sat(Assignment),
    Unsat,
}

impl TwoSatOutcome {
    pub fn outcome(&self) -> Outcome {
        match self {
            TwoSatOutcome::Sat(_) => Outcome::Sat,
            TwoSatOutcome::Unsat => Outcome::Unsat,
        }
    }
}

/// Node `2(v-1)` is `x_v`, node `2(v-1)+1` is `¬x_v`.
fn node(lit: Literal) -> usize {
    2 * (lit.var() as usize - 1) + usize::from(lit.is_negated())
}

/// Iterative Tarjan. Component ids come out in reverse topological order.
fn strong_components(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == UNSET {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component member");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// Decides a CNF whose clauses have at most two literals via the
/// implication graph's strong components.
pub fn solve_2sat(f: &CnfFormula) -> Result<TwoSatOutcome, TwoSatError> {
    let vars = f.num_vars() as usize;
    let mut adj = vec![Vec::new(); 2 * vars];
    for (k, clause) in f.clauses().iter().enumerate() {
        match *clause.literals() {
            [a] => adj[node(a.complement())].push(node(a)),
            [a, b] => {
                adj[node(a.complement())].push(node(b));
                adj[node(b.complement())].push(node(a));
            }
            _ => {
                return Err(TwoSatError::ClauseTooWide {
                    clause: k + 1,
                    width: clause.len(),
                })
            }
        }
    }
    let comp = strong_components(&adj);
    let mut model = Assignment::empty(f.num_vars());
    for v in 1..=f.num_vars() {
        let pos = comp[node(Literal::pos(v))];
        let neg = comp[node(Literal::neg(v))];
        if pos == neg {
            return Ok(TwoSatOutcome::Unsat);
        }
        // Tarjan numbers sinks first; pick the literal later in topological order.
        model.set(v, pos < neg);
    }
    Ok(TwoSatOutcome::Sat(model))
}

/// Final-matrix cell behind a fresh 1-SAT variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellRef {
    pub row: usize,
    pub col: usize,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneSatInstance {
    False,
    /// Unit literal `i` is over variable `i + 1` and describes `cells[i]`.
    Units {
        literals: Vec<Literal>,
        cells: Vec<CellRef>,
        dims: Option<(usize, usize)>,
    },
}

impl OneSatInstance {
    pub fn is_false(&self) -> bool {
        matches!(self, OneSatInstance::False)
    }

    pub fn literal_count(&self) -> usize {
        match self {
            OneSatInstance::False => 0,
            OneSatInstance::Units { literals, .. } => literals.len(),
        }
    }

    /// Conjunction of units over distinct variables: false only as the
    /// constant.
    pub fn outcome(&self) -> Outcome {
        Outcome::from_bool(!self.is_false())
    }

    pub fn formula(&self) -> Option<CnfFormula> {
        match self {
            OneSatInstance::False => None,
            OneSatInstance::Units { literals, .. } => Some(
                CnfFormula::new(
                    literals.len() as u32,
                    literals
                        .iter()
                        .map(|&l| Clause::new([l]).expect("unit"))
                        .collect(),
                )
                .expect("variables in range"),
            ),
        }
    }

    pub fn to_dimacs(&self) -> String {
        match self {
            OneSatInstance::False => FALSE_DIMACS.to_owned(),
            OneSatInstance::Units { cells, .. } => {
                let mut out = String::from("c 1-SAT: final-matrix units\n");
                for (i, c) in cells.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "c map b{} = cell({},{}) val({})",
                        i + 1,
                        c.row + 1,
                        c.col + 1,
                        u8::from(c.value)
                    );
                }
                write_dimacs_body(&mut out, &self.formula().expect("units"));
                out
            }
        }
    }
}

pub fn one_sat_from_run(run: &CompatRun) -> OneSatInstance {
    if run.outcome() == Outcome::Unsat {
        return OneSatInstance::False;
    }
    let Some(r) = &run.final_matrix else {
        return OneSatInstance::Units {
            literals: Vec::new(),
            cells: Vec::new(),
            dims: None,
        };
    };
    let cells: Vec<CellRef> = r
        .cells()
        .map(|(row, col, value)| CellRef { row, col, value })
        .collect();
    let literals = cells
        .iter()
        .enumerate()
        .map(|(i, c)| Literal::new(i as u32 + 1, !c.value))
        .collect();
    OneSatInstance::Units {
        literals,
        cells,
        dims: Some(r.dims()),
    }
}

pub fn reduce_to_1sat(f: &CnfFormula) -> OneSatInstance {
    one_sat_from_run(&run_simplified(&build_system(f)))
}
