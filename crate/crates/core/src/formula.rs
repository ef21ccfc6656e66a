//! CNF data model: literals, clauses, formulas, assignments, DIMACS I/O,
//! evaluation, simplification under a partial assignment, and the
//! DNF-expansion satisfiability check.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

/// A propositional literal over a 1-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: u32,
    negated: bool,
}

impl Literal {
    /// Panics if `var` is zero.
    pub fn new(var: u32, negated: bool) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        Self { var, negated }
    }

    pub fn pos(var: u32) -> Self {
        Self::new(var, false)
    }

    pub fn neg(var: u32) -> Self {
        Self::new(var, true)
    }

    /// Signed DIMACS encoding. Returns `None` for 0.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 || value.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        Some(Self::new(value.unsigned_abs() as u32, value < 0))
    }

    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }

    pub fn var(self) -> u32 {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn complement(self) -> Self {
        Self {
            var: self.var,
            negated: !self.negated,
        }
    }

    pub fn is_complement_of(self, other: Literal) -> bool {
        self.var == other.var && self.negated != other.negated
    }

    /// The truth value this literal takes when its variable is `value`.
    pub fn eval(self, value: bool) -> bool {
        value != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// A nonempty disjunction of literals. Duplicate literals are dropped on
/// construction, first occurrence wins; complementary pairs are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Self, FormulaError> {
        let mut out: Vec<Literal> = Vec::new();
        for lit in literals {
            if !out.contains(&lit) {
                out.push(lit);
            }
        }
        if out.is_empty() {
            return Err(FormulaError::EmptyClause);
        }
        Ok(Self { literals: out })
    }

    /// Builds a clause from signed DIMACS integers. Panics on 0 or an empty
    /// slice; meant for literals written inline.
    pub fn from_dimacs(values: &[i64]) -> Self {
        Self::new(
            values
                .iter()
                .map(|&v| Literal::from_dimacs(v).expect("nonzero literal")),
        )
        .expect("nonempty clause")
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn max_var(&self) -> u32 {
        self.literals.iter().map(|l| l.var()).max().unwrap_or(0)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lit) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str("∨")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("clause has no literals")]
    EmptyClause,
    #[error("literal over x{var} exceeds the declared variable count {num_vars}")]
    VariableOutOfRange { var: u32, num_vars: u32 },
    #[error("assignment binds {got} variables, formula has {expected}")]
    AssignmentSize { got: usize, expected: usize },
    #[error("assignment leaves x{0} unbound")]
    PartialAssignment(u32),
}

/// A conjunction of clauses over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self, FormulaError> {
        for clause in &clauses {
            for lit in clause.literals() {
                if lit.var() > num_vars {
                    return Err(FormulaError::VariableOutOfRange {
                        var: lit.var(),
                        num_vars,
                    });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Sizes the variable range to the largest index referenced.
    pub fn from_clauses(clauses: Vec<Clause>) -> Self {
        let num_vars = clauses.iter().map(Clause::max_var).max().unwrap_or(0);
        Self { num_vars, clauses }
    }

    /// Convenience constructor from signed DIMACS clause lists.
    pub fn from_dimacs_clauses(clauses: &[&[i64]]) -> Self {
        Self::from_clauses(clauses.iter().map(|c| Clause::from_dimacs(c)).collect())
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// The clause count `m`.
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Clause widths `n_1..n_m`.
    pub fn clause_sizes(&self) -> Vec<usize> {
        self.clauses.iter().map(Clause::len).collect()
    }

    /// Same formula with clauses reordered; `order[k]` names the source
    /// position of the k-th output clause.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            num_vars: self.num_vars,
            clauses: order.iter().map(|&i| self.clauses[i].clone()).collect(),
        }
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{clause}")?;
        }
        f.write_str("}")
    }
}

/// Variable bindings for `1..=num_vars`; unbound entries are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn empty(num_vars: u32) -> Self {
        Self {
            values: vec![None; num_vars as usize],
        }
    }

    pub fn total(values: &[bool]) -> Self {
        Self {
            values: values.iter().map(|&v| Some(v)).collect(),
        }
    }

    /// Total assignment whose bit `i` of `mask` holds the value of `x(i+1)`.
    pub fn from_mask(num_vars: u32, mask: u64) -> Self {
        Self {
            values: (0..num_vars).map(|i| Some(mask >> i & 1 == 1)).collect(),
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, var: u32) -> Option<bool> {
        self.values.get(var as usize - 1).copied().flatten()
    }

    /// Panics if `var` is outside `1..=num_vars`.
    pub fn set(&mut self, var: u32, value: bool) {
        assert!(var >= 1 && var <= self.num_vars(), "x{var} out of range");
        self.values[var as usize - 1] = Some(value);
    }

    pub fn with(mut self, var: u32, value: bool) -> Self {
        self.set(var, value);
        self
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn bound_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    /// Iterates `(var, value)` over bound variables in index order.
    pub fn bindings(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|b| (i as u32 + 1, b)))
    }

    pub fn lit_value(&self, lit: Literal) -> Option<bool> {
        self.get(lit.var()).map(|v| lit.eval(v))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (var, value)) in self.bindings().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{var}:{}", if value { 'T' } else { 'F' })?;
        }
        f.write_str("}")
    }
}

/// Evaluates `f` under a total assignment.
pub fn evaluate(f: &CnfFormula, a: &Assignment) -> Result<bool, FormulaError> {
    if a.num_vars() != f.num_vars() {
        return Err(FormulaError::AssignmentSize {
            got: a.num_vars() as usize,
            expected: f.num_vars() as usize,
        });
    }
    if let Some(var) = (1..=f.num_vars()).find(|&v| a.get(v).is_none()) {
        return Err(FormulaError::PartialAssignment(var));
    }
    Ok(f.clauses()
        .iter()
        .all(|c| c.literals().iter().any(|&l| a.lit_value(l) == Some(true))))
}

/// Result of substituting a partial assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplified {
    True,
    False,
    Formula(CnfFormula),
}

/// Drops satisfied clauses and falsified literals. Variable indices are kept.
pub fn simplify(f: &CnfFormula, p: &Assignment) -> Simplified {
    let mut residual = Vec::with_capacity(f.num_clauses());
    for clause in f.clauses() {
        let mut kept = Vec::with_capacity(clause.len());
        let mut satisfied = false;
        for &lit in clause.literals() {
            match p.lit_value(lit) {
                Some(true) => {
                    satisfied = true;
                    break;
                }
                Some(false) => {}
                None => kept.push(lit),
            }
        }
        if satisfied {
            continue;
        }
        if kept.is_empty() {
            return Simplified::False;
        }
        residual.push(Clause { literals: kept });
    }
    if residual.is_empty() {
        Simplified::True
    } else {
        Simplified::Formula(CnfFormula {
            num_vars: f.num_vars(),
            clauses: residual,
        })
    }
}

/// A DNF term: one literal picked from each clause, in clause order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DnfTerm {
    pub picks: Vec<Literal>,
}

impl DnfTerm {
    /// First complementary pair of picks `(i, j)`, `i < j`, if any.
    pub fn first_conflict(&self) -> Option<(usize, usize)> {
        for i in 0..self.picks.len() {
            for j in i + 1..self.picks.len() {
                if self.picks[i].is_complement_of(self.picks[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_contradictory(&self) -> bool {
        self.first_conflict().is_some()
    }
}

/// `p = n_1 · n_2 · … · n_m`, exact.
pub fn dnf_term_count(f: &CnfFormula) -> BigUint {
    f.clauses()
        .iter()
        .fold(BigUint::from(1u32), |acc, c| acc * BigUint::from(c.len()))
}

/// All DNF terms in mixed-radix order, last clause varying fastest.
pub fn dnf_terms(f: &CnfFormula) -> impl Iterator<Item = DnfTerm> + '_ {
    let sizes = f.clause_sizes();
    let mut digits = vec![0usize; sizes.len()];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let term = DnfTerm {
            picks: digits
                .iter()
                .enumerate()
                .map(|(i, &d)| f.clauses()[i].literals()[d])
                .collect(),
        };
        done = true;
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < sizes[i] {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        Some(term)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("DNF expansion has {terms} terms, budget is {budget}")]
pub struct DnfBudgetExceeded {
    pub terms: BigUint,
    pub budget: u64,
}

/// Satisfiable iff some DNF term is free of complementary picks.
pub fn dnf_expansion_satisfiable(f: &CnfFormula, term_budget: u64) -> Result<bool, DnfBudgetExceeded> {
    let terms = dnf_term_count(f);
    if terms > BigUint::from(term_budget) {
        return Err(DnfBudgetExceeded {
            terms,
            budget: term_budget,
        });
    }
    Ok(dnf_terms(f).any(|t| !t.is_contradictory()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: clause before the `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("line {line}: literal {literal} exceeds declared variable count {num_vars}")]
    VariableOutOfRange {
        line: usize,
        literal: i64,
        num_vars: u32,
    },
    #[error("line {line}: clause is missing its 0 terminator")]
    MissingTerminator { line: usize },
    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: header declares {declared} clauses, found {found}")]
    ClauseCount {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("no `p cnf` header found")]
    NoHeader,
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MalformedHeader { line, .. }
            | ParseError::MissingHeader { line }
            | ParseError::EmptyClause { line }
            | ParseError::VariableOutOfRange { line, .. }
            | ParseError::MissingTerminator { line }
            | ParseError::InvalidToken { line, .. }
            | ParseError::ClauseCount { line, .. } => Some(*line),
            ParseError::NoHeader => None,
        }
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(u32, usize), ParseError> {
    let malformed = |reason: &str| ParseError::MalformedHeader {
        line: lineno,
        reason: reason.to_owned(),
    };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
        return Err(malformed("expected `p cnf <vars> <clauses>`"));
    }
    let vars = fields[2]
        .parse::<u32>()
        .map_err(|_| malformed("variable count is not a nonnegative integer"))?;
    let clauses = fields[3]
        .parse::<usize>()
        .map_err(|_| malformed("clause count is not a nonnegative integer"))?;
    Ok((vars, clauses))
}

/// Parses DIMACS CNF. Each line carrying literals must end in `0`; several
/// clauses may share a line. Lines starting with `c` are comments and a `%`
/// line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::MalformedHeader {
                    line: lineno,
                    reason: "duplicate header".into(),
                });
            }
            let (vars, count) = parse_header(line, lineno)?;
            header = Some((vars, count, lineno));
            continue;
        }
        let Some((num_vars, _, _)) = header else {
            return Err(ParseError::MissingHeader { line: lineno });
        };

        let mut pending: Vec<Literal> = Vec::new();
        let mut terminated = true;
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| ParseError::InvalidToken {
                line: lineno,
                token: token.to_owned(),
            })?;
            if value == 0 {
                if pending.is_empty() {
                    return Err(ParseError::EmptyClause { line: lineno });
                }
                clauses.push(Clause::new(pending.drain(..)).expect("nonempty"));
                terminated = true;
                continue;
            }
            let lit = Literal::from_dimacs(value)
                .filter(|l| l.var() <= num_vars)
                .ok_or(ParseError::VariableOutOfRange {
                    line: lineno,
                    literal: value,
                    num_vars,
                })?;
            pending.push(lit);
            terminated = false;
        }
        if !terminated {
            return Err(ParseError::MissingTerminator { line: lineno });
        }
    }

    let (num_vars, declared, header_line) = header.ok_or(ParseError::NoHeader)?;
    if clauses.len() != declared {
        return Err(ParseError::ClauseCount {
            line: if clauses.len() > declared {
                header_line
            } else {
                last_line.max(header_line)
            },
            declared,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula { num_vars, clauses })
}

/// Writes `p cnf` header and one clause per line.
pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = String::new();
    write_dimacs_body(&mut out, f);
    out
}

pub(crate) fn write_dimacs_body(out: &mut String, f: &CnfFormula) {
    let _ = writeln!(out, "p cnf {} {}", f.num_vars(), f.num_clauses());
    for clause in f.clauses() {
        for lit in clause.literals() {
            let _ = write!(out, "{} ", lit.to_dimacs());
        }
        out.push_str("0\n");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cnf(clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(clauses)
    }

    #[test]
    fn parses_basic_formula() {
        let f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n").unwrap();
        assert_eq!(f, cnf(&[&[1, 2], &[-1, 2]]));
        assert_eq!(f.num_vars(), 2);
    }

    #[test]
    fn parse_dedups_literals() {
        let f = parse_dimacs("p cnf 1 1\n1 1 0\n").unwrap();
        assert_eq!(f.clauses()[0].literals(), &[Literal::pos(1)]);
        assert_eq!(f.clause_sizes(), vec![1]);
    }

    #[test]
    fn parse_rejects_trailing_garbage() {
        let err = parse_dimacs("p cnf 1 1\n1 0 extra").unwrap_err();
        assert_eq!(err.line(), Some(2));
    }

    #[test]
    fn parse_error_kinds() {
        assert!(matches!(
            parse_dimacs("p cnf x 1\n1 0\n"),
            Err(ParseError::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\n0\n"),
            Err(ParseError::EmptyClause { line: 2 })
        ));
        assert!(matches!(
            parse_dimacs("c hi\np cnf 1 1\n2 0\n"),
            Err(ParseError::VariableOutOfRange {
                line: 3,
                literal: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 2\n"),
            Err(ParseError::MissingTerminator { line: 2 })
        ));
        assert!(matches!(
            parse_dimacs("1 0\n"),
            Err(ParseError::MissingHeader { line: 1 })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 2\n1 0\n"),
            Err(ParseError::ClauseCount {
                declared: 2,
                found: 1,
                ..
            })
        ));
        assert_eq!(parse_dimacs("c only\n"), Err(ParseError::NoHeader));
    }

    #[test]
    fn parse_keeps_duplicate_clauses_and_tautologies() {
        let f = parse_dimacs("c x\np cnf 2 3\n1 -1 0\n2 0 2 0\n").unwrap();
        assert_eq!(f.num_clauses(), 3);
        assert_eq!(f.clauses()[1], f.clauses()[2]);
        assert_eq!(f.clauses()[0].len(), 2);
    }

    #[test]
    fn serializes() {
        assert_eq!(
            serialize_dimacs(&cnf(&[&[1, 2], &[-1, 2]])),
            "p cnf 2 2\n1 2 0\n-1 2 0\n"
        );
    }

    #[test]
    fn evaluate_examples() {
        let f = cnf(&[&[1, 2], &[-1, 2]]);
        assert!(evaluate(&f, &Assignment::total(&[true, true])).unwrap());
        let g = cnf(&[&[1], &[-1]]);
        assert!(!evaluate(&g, &Assignment::total(&[true])).unwrap());
        assert!(!evaluate(&g, &Assignment::total(&[false])).unwrap());
        let h = cnf(&[&[1, -2]]);
        assert!(!evaluate(&h, &Assignment::total(&[false, true])).unwrap());
    }

    #[test]
    fn evaluate_rejects_partial() {
        let f = cnf(&[&[1, 2]]);
        let a = Assignment::empty(2).with(1, true);
        assert_eq!(evaluate(&f, &a), Err(FormulaError::PartialAssignment(2)));
    }

    #[test]
    fn simplify_examples() {
        let f = cnf(&[&[1, 2], &[-1, 2]]);
        assert_eq!(
            simplify(&f, &Assignment::empty(2).with(2, true)),
            Simplified::True
        );
        let g = cnf(&[&[1], &[-1]]);
        assert_eq!(
            simplify(&g, &Assignment::empty(1).with(1, true)),
            Simplified::False
        );
        let h = cnf(&[&[1, 2, 3]]);
        let Simplified::Formula(r) = simplify(&h, &Assignment::empty(3).with(1, false)) else {
            panic!("expected residual formula");
        };
        assert_eq!(r.clauses(), &[Clause::from_dimacs(&[2, 3])]);
        assert_eq!(r.num_vars(), 3);
    }

    #[test]
    fn dnf_examples() {
        assert!(!dnf_expansion_satisfiable(&cnf(&[&[1], &[-1]]), 100).unwrap());
        assert!(dnf_expansion_satisfiable(&cnf(&[&[1, 2], &[-1, 2]]), 100).unwrap());
        let wide = CnfFormula::from_clauses(vec![Clause::from_dimacs(&[1, 2, 3]); 50]);
        let err = dnf_expansion_satisfiable(&wide, 1_000_000).unwrap_err();
        assert_eq!(err.terms, BigUint::from(3u32).pow(50));
    }

    #[test]
    fn dnf_terms_enumerates_product() {
        let f = cnf(&[&[1, 2], &[-1, 3, 2]]);
        let terms: Vec<_> = dnf_terms(&f).collect();
        assert_eq!(terms.len(), 6);
        assert_eq!(terms[0].picks, vec![Literal::pos(1), Literal::neg(1)]);
        assert_eq!(terms[0].first_conflict(), Some((0, 1)));
    }

    pub(crate) fn arb_formula() -> impl Strategy<Value = CnfFormula> {
        let lit = (1u32..=4, any::<bool>()).prop_map(|(v, n)| Literal::new(v, n));
        let clause = prop::collection::vec(lit, 1..=3).prop_map(|l| Clause::new(l).unwrap());
        (prop::collection::vec(clause, 1..=5), 0u32..=2).prop_map(|(cs, extra)| {
            let f = CnfFormula::from_clauses(cs);
            CnfFormula::new(f.num_vars() + extra, f.clauses().to_vec()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn dimacs_round_trip(f in arb_formula()) {
            prop_assert_eq!(parse_dimacs(&serialize_dimacs(&f)).unwrap(), f);
        }

        #[test]
        fn simplify_total_matches_evaluate(f in arb_formula(), mask in any::<u64>()) {
            let a = Assignment::from_mask(f.num_vars(), mask);
            let value = evaluate(&f, &a).unwrap();
            prop_assert_eq!(simplify(&f, &a) == Simplified::True, value);
            prop_assert_eq!(simplify(&f, &a) == Simplified::False, !value);
        }

        #[test]
        fn evaluate_monotone_under_clause_removal(f in arb_formula(), mask in any::<u64>(), drop in any::<prop::sample::Index>()) {
            let a = Assignment::from_mask(f.num_vars(), mask);
            let mut clauses = f.clauses().to_vec();
            clauses.remove(drop.index(clauses.len()));
            let g = CnfFormula::new(f.num_vars(), clauses).unwrap();
            if evaluate(&f, &a).unwrap() {
                prop_assert!(evaluate(&g, &a).unwrap());
            }
        }
    }
}
