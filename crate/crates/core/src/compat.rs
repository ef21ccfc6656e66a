//! Compatibility-matrix engine.
//!
//! Every constraint of a [`ConstraintSystem`] is replaced by the table of
//! its satisfying local rows, and every pair of constraints `i < j` gets a
//! Boolean matrix whose cell `(a, b)` says row `a` of `i` and row `b` of `j`
//! agree on their shared indicators. Constraints are then eliminated in
//! system order. Eliminating `k` keeps cell `(a, b)` of `M_ij` only if some
//! row `r` of `k` is compatible with both, and afterwards drops every matrix
//! touching `k`. A matrix with no true cell left is a proof of
//! unsatisfiability. After the exactly-one block is gone only the 3×3
//! matrices between exclusion constraints remain (the box matrix); the last
//! surviving matrix decides the run.

use std::fmt;

use crate::encoder::{build_system, Constraint, ConstraintSystem, IndicatorId};
use crate::formula::CnfFormula;

/// Satisfying local rows of a constraint, over `vars` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrueRows {
    pub vars: Vec<IndicatorId>,
    pub rows: Vec<Vec<bool>>,
}

impl TrueRows {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn value(&self, row: usize, var: IndicatorId) -> Option<bool> {
        self.vars
            .iter()
            .position(|&v| v == var)
            .map(|k| self.rows[row][k])
    }
}

/// Exactly-one over `k` indicators has `k` rows, row `i` setting only the
/// `i`-th indicator. NAND has `(F,F), (F,T), (T,F)`.
pub fn true_rows(c: &Constraint) -> TrueRows {
    match c {
        Constraint::ExactlyOne(ids) => TrueRows {
            vars: ids.clone(),
            rows: (0..ids.len())
                .map(|i| (0..ids.len()).map(|k| k == i).collect())
                .collect(),
        },
        Constraint::Nand(a, b) => TrueRows {
            vars: vec![*a, *b],
            rows: vec![vec![false, false], vec![false, true], vec![true, false]],
        },
    }
}

/// Bit-packed Boolean matrix between two constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompatMatrix {
    /// 1-based system positions of the row and column constraints.
    pub between: (usize, usize),
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl CompatMatrix {
    pub fn filled(between: (usize, usize), rows: usize, cols: usize, value: bool) -> Self {
        let words = cols.div_ceil(64).max(1);
        let mut m = Self {
            between,
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        };
        if value {
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn from_rows(between: (usize, usize), cells: &[Vec<bool>]) -> Self {
        let cols = cells.first().map_or(0, Vec::len);
        let mut m = Self::filled(between, cells.len(), cols, false);
        for (r, row) in cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let word = &mut self.bits[r * self.words + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    pub fn true_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_all_false(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn element_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Row-major first true cell.
    pub fn first_true(&self) -> Option<(usize, usize)> {
        self.cells().find(|&(_, _, v)| v).map(|(r, c, _)| (r, c))
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| (r, c, self.get(r, c))))
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect()
    }

    /// 1×cols matrix marking columns with at least one true cell.
    pub fn column_support(&self) -> CompatMatrix {
        let mut out = CompatMatrix::filled((self.between.1, self.between.1), 1, self.cols, false);
        for (_, c, v) in self.cells() {
            if v {
                out.set(0, c, true);
            }
        }
        out
    }
}

impl fmt::Display for CompatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "T" } else { "F" })?;
            }
            if r + 1 < self.rows {
                f.write_str("/")?;
            }
        }
        Ok(())
    }
}

/// Cell `(r, s)` is true iff row `r` of `a` and row `s` of `b` agree on
/// every shared indicator.
pub fn initial_matrix(between: (usize, usize), a: &TrueRows, b: &TrueRows) -> CompatMatrix {
    let shared: Vec<IndicatorId> = a.vars.iter().copied().filter(|v| b.vars.contains(v)).collect();
    let mut m = CompatMatrix::filled(between, a.len(), b.len(), false);
    for r in 0..a.len() {
        for s in 0..b.len() {
            let agree = shared.iter().all(|&v| a.value(r, v) == b.value(s, v));
            m.set(r, s, agree);
        }
    }
    m
}

/// Outcome of one elimination step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub step: usize,
    /// Matrices updated by the support rule.
    pub pairs: usize,
    pub cleared: usize,
    /// First matrix (1-based constraint positions) left without a true cell.
    pub all_false: Option<(usize, usize)>,
}

impl fmt::Display for StepTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}: pairs={} cleared={} allfalse?={}",
            self.step,
            self.pairs,
            self.cleared,
            self.all_false.is_some()
        )
    }
}

/// Live pairwise matrices among the constraints not yet eliminated.
#[derive(Debug, Clone)]
pub struct EliminationState {
    size: usize,
    row_counts: Vec<usize>,
    matrices: Vec<Option<CompatMatrix>>,
    eliminated: usize,
}

impl EliminationState {
    pub fn new(sys: &ConstraintSystem) -> Self {
        let tables: Vec<TrueRows> = sys.constraints().map(|c| true_rows(&c)).collect();
        let size = tables.len();
        let mut matrices = vec![None; size * size];
        for i in 0..size {
            for j in i + 1..size {
                matrices[i * size + j] = Some(initial_matrix((i + 1, j + 1), &tables[i], &tables[j]));
            }
        }
        Self {
            size,
            row_counts: tables.iter().map(TrueRows::len).collect(),
            matrices,
            eliminated: 0,
        }
    }

    /// Number of constraints.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn eliminated(&self) -> usize {
        self.eliminated
    }

    pub fn row_count(&self, constraint: usize) -> usize {
        self.row_counts[constraint - 1]
    }

    /// Matrix between 1-based constraints `i < j`, if still live.
    pub fn matrix(&self, i: usize, j: usize) -> Option<&CompatMatrix> {
        if i == 0 || i >= j || j > self.size {
            return None;
        }
        self.matrices[(i - 1) * self.size + (j - 1)].as_ref()
    }

    pub fn live_matrices(&self) -> impl Iterator<Item = &CompatMatrix> {
        self.matrices.iter().flatten()
    }

    pub fn true_count(&self) -> usize {
        self.live_matrices().map(CompatMatrix::true_count).sum()
    }

    /// Eliminates the next constraint `k = eliminated + 1`.
    ///
    /// Panics if fewer than two constraints would remain afterwards.
    pub fn eliminate_step(&mut self) -> StepTrace {
        let k = self.eliminated;
        let n = self.size;
        assert!(k + 2 < n, "at least two constraints must survive a step");
        let mut trace = StepTrace {
            step: k + 1,
            pairs: 0,
            cleared: 0,
            all_false: None,
        };
        let rows_k = self.row_counts[k];

        for i in k + 1..n {
            for j in i + 1..n {
                let mut target = self.matrices[i * n + j].take().expect("live matrix");
                let via_i = self.matrices[k * n + i].as_ref().expect("live matrix");
                let via_j = self.matrices[k * n + j].as_ref().expect("live matrix");
                let before = target.true_count();
                let mut support = vec![0u64; target.words];
                for a in 0..target.rows {
                    support.iter_mut().for_each(|w| *w = 0);
                    for r in 0..rows_k {
                        if via_i.get(r, a) {
                            for (s, w) in support.iter_mut().zip(via_j.row_words(r)) {
                                *s |= w;
                            }
                        }
                    }
                    let words = target.words;
                    for (t, s) in target.bits[a * words..(a + 1) * words].iter_mut().zip(&support) {
                        *t &= s;
                    }
                }
                trace.pairs += 1;
                trace.cleared += before - target.true_count();
                if trace.all_false.is_none() && target.is_all_false() {
                    trace.all_false = Some((i + 1, j + 1));
                }
                self.matrices[i * n + j] = Some(target);
            }
        }
        for j in k + 1..n {
            self.matrices[k * n + j] = None;
        }
        self.eliminated += 1;
        trace
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Sat,
    Unsat,
}

impl Outcome {
    pub fn from_bool(sat: bool) -> Self {
        if sat {
            Outcome::Sat
        } else {
            Outcome::Unsat
        }
    }

    pub fn is_sat(self) -> bool {
        self == Outcome::Sat
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Sat => "sat",
            Outcome::Unsat => "unsat",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where the run reached its outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    /// No exclusion constraints: decided without elimination.
    Singular,
    /// A matrix emptied at this elimination step.
    EarlyStep(usize),
    /// Decided by the final matrix.
    Final,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Singular => f.write_str("singular"),
            Stage::EarlyStep(k) => write!(f, "step {k}"),
            Stage::Final => f.write_str("final"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub stage: Stage,
    /// Row-major first true cell of the final matrix.
    pub witness: Option<(usize, usize)>,
}

/// One 3×3 block of the box matrix, between exclusion constraints `mu < nu`
/// (1-based within the exclusion block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxEntry {
    pub mu: usize,
    pub nu: usize,
    pub matrix: CompatMatrix,
}

/// Upper-triangular collection of the matrices among exclusion constraints,
/// snapshotted right after the exactly-one block is eliminated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxMatrix {
    pub n: usize,
    pub boxes: Vec<BoxEntry>,
}

impl BoxMatrix {
    pub fn empty(n: usize) -> Self {
        Self { n, boxes: Vec::new() }
    }

    fn snapshot(state: &EliminationState, m: usize, n: usize) -> Self {
        let mut boxes = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for mu in 1..=n {
            for nu in mu + 1..=n {
                let matrix = state.matrix(m + mu, m + nu).expect("live box").clone();
                boxes.push(BoxEntry { mu, nu, matrix });
            }
        }
        Self { n, boxes }
    }

    pub fn element_count(&self) -> usize {
        self.boxes.iter().map(|b| b.matrix.element_count()).sum()
    }

    /// `(mu, nu, row, col, value)` with boxes in `(mu, nu)` order and cells
    /// row-major inside each box.
    pub fn elements(&self) -> impl Iterator<Item = (usize, usize, usize, usize, bool)> + '_ {
        self.boxes
            .iter()
            .flat_map(|b| b.matrix.cells().map(move |(r, c, v)| (b.mu, b.nu, r, c, v)))
    }
}

/// Result of a full engine run.
#[derive(Debug, Clone)]
pub struct CompatRun {
    pub verdict: Verdict,
    /// Exactly-one constraint count.
    pub m: usize,
    /// Exclusion constraint count.
    pub n: usize,
    pub boxes: Option<BoxMatrix>,
    pub final_matrix: Option<CompatMatrix>,
    pub trace: Vec<StepTrace>,
}

impl CompatRun {
    pub fn outcome(&self) -> Outcome {
        self.verdict.outcome
    }

    /// Whether a matrix emptied within the exactly-one block's steps.
    pub fn early_unsat_within_m(&self) -> bool {
        matches!(self.verdict.stage, Stage::EarlyStep(k) if k <= self.m)
    }

    pub fn trace_text(&self) -> String {
        self.trace.iter().map(|t| format!("{t}\n")).collect()
    }
}

/// Runs elimination for steps `1..=m+n-2`.
///
/// With no exclusions the run is decided as satisfiable without stepping.
/// With one exclusion the final matrix is the 1×3 column support of the
/// last exactly-one/NAND matrix. Otherwise it is the 3×3 matrix between the
/// last two exclusion constraints.
pub fn run_simplified(sys: &ConstraintSystem) -> CompatRun {
    let m = sys.num_exactly_one();
    let n = sys.num_exclusions();
    if n == 0 {
        return CompatRun {
            verdict: Verdict {
                outcome: Outcome::Sat,
                stage: Stage::Singular,
                witness: None,
            },
            m,
            n,
            boxes: None,
            final_matrix: None,
            trace: Vec::new(),
        };
    }

    let mut state = EliminationState::new(sys);
    let total = m + n;
    let mut trace = Vec::with_capacity(total - 2);
    let mut boxes = None;
    for k in 1..=total - 2 {
        let step = state.eliminate_step();
        let emptied = step.all_false.is_some();
        trace.push(step);
        if emptied {
            return CompatRun {
                verdict: Verdict {
                    outcome: Outcome::Unsat,
                    stage: Stage::EarlyStep(k),
                    witness: None,
                },
                m,
                n,
                boxes,
                final_matrix: None,
                trace,
            };
        }
        if k == m && n >= 2 {
            boxes = Some(BoxMatrix::snapshot(&state, m, n));
        }
    }

    let last = state.matrix(total - 1, total).expect("last matrix").clone();
    let r = if n == 1 { last.column_support() } else { last };
    let witness = r.first_true();
    CompatRun {
        verdict: Verdict {
            outcome: Outcome::from_bool(witness.is_some()),
            stage: Stage::Final,
            witness,
        },
        m,
        n,
        boxes,
        final_matrix: Some(r),
        trace,
    }
}

/// Runs the engine on a formula in its given clause order.
pub fn run_formula(f: &CnfFormula) -> CompatRun {
    run_simplified(&build_system(f))
}

/// Run on a clause order that puts the two shortest clauses last.
#[derive(Debug, Clone)]
pub struct PermutedRun {
    /// `order[k]` is the original position of clause `k` in the permuted formula.
    pub order: Vec<usize>,
    pub formula: CnfFormula,
    pub run: CompatRun,
    pub final_dims: Option<(usize, usize)>,
    /// When both trailing clauses have fewer than 3 literals: whether the
    /// final matrix came out smaller than 3×3. `None` otherwise.
    pub shrink_observed: Option<bool>,
}

/// Stable sort of clause positions by descending width.
pub fn shortest_last_order(f: &CnfFormula) -> Vec<usize> {
    let mut order: Vec<usize> = (0..f.num_clauses()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(f.clauses()[i].len()));
    order
}

pub fn run_with_permutation(f: &CnfFormula) -> PermutedRun {
    let order = shortest_last_order(f);
    let formula = f.permuted(&order);
    let run = run_formula(&formula);
    let final_dims = run.final_matrix.as_ref().map(CompatMatrix::dims);
    let widths = formula.clause_sizes();
    let short_tail = widths.len() >= 2 && widths[widths.len() - 2..].iter().all(|&w| w < 3);
    let shrink_observed = short_tail.then(|| final_dims.is_some_and(|(a, b)| a * b < 9));
    PermutedRun {
        order,
        formula,
        run,
        final_dims,
        shrink_observed,
    }
}
