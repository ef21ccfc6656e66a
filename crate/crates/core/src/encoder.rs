//! Indicator encoding of a CNF formula: one exactly-one constraint per
//! clause over its literal selectors, followed by one NAND per
//! complementary pair of literals in distinct clauses.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::formula::{dnf_term_count, Assignment, CnfFormula, Literal};

/// Selector for literal `position` of clause `clause`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndicatorId {
    pub clause: usize,
    pub position: usize,
}

impl IndicatorId {
    pub fn new(clause: usize, position: usize) -> Self {
        Self { clause, position }
    }

    pub fn literal(self, f: &CnfFormula) -> Literal {
        f.clauses()[self.clause - 1].literals()[self.position - 1]
    }
}

impl fmt::Display for IndicatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ξ({},{})", self.clause, self.position)
    }
}

/// Two selectors in distinct clauses whose literals are complementary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExclusionPair {
    pub first: IndicatorId,
    pub second: IndicatorId,
}

/// Exclusion pairs ordered by `(i, j, μ, ν)`.
pub fn complementary_pairs(f: &CnfFormula) -> Vec<ExclusionPair> {
    let clauses = f.clauses();
    let mut pairs = Vec::new();
    for i in 0..clauses.len() {
        for j in i + 1..clauses.len() {
            for (mu, &a) in clauses[i].literals().iter().enumerate() {
                for (nu, &b) in clauses[j].literals().iter().enumerate() {
                    if a.is_complement_of(b) {
                        pairs.push(ExclusionPair {
                            first: IndicatorId::new(i + 1, mu + 1),
                            second: IndicatorId::new(j + 1, nu + 1),
                        });
                    }
                }
            }
        }
    }
    pairs
}

/// A single constraint of the combined system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    ExactlyOne(Vec<IndicatorId>),
    Nand(IndicatorId, IndicatorId),
}

impl Constraint {
    pub fn indicators(&self) -> Vec<IndicatorId> {
        match self {
            Constraint::ExactlyOne(ids) => ids.clone(),
            Constraint::Nand(a, b) => vec![*a, *b],
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::ExactlyOne(ids) => {
                write!(f, "EO {}..{}", ids[0], ids[ids.len() - 1])
            }
            Constraint::Nand(a, b) => write!(f, "NAND {a} {b}"),
        }
    }
}

/// Exactly-one block followed by the exclusion block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    clause_sizes: Vec<usize>,
    offsets: Vec<usize>,
    exclusions: Vec<ExclusionPair>,
}

impl ConstraintSystem {
    /// The clause count `m`.
    pub fn num_exactly_one(&self) -> usize {
        self.clause_sizes.len()
    }

    /// The exclusion count `n`.
    pub fn num_exclusions(&self) -> usize {
        self.exclusions.len()
    }

    pub fn len(&self) -> usize {
        self.num_exactly_one() + self.num_exclusions()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clause_sizes(&self) -> &[usize] {
        &self.clause_sizes
    }

    pub fn exclusions(&self) -> &[ExclusionPair] {
        &self.exclusions
    }

    pub fn indicator_count(&self) -> usize {
        self.clause_sizes.iter().sum()
    }

    /// Dense 0-based index of an indicator, clause-major.
    pub fn indicator_index(&self, id: IndicatorId) -> usize {
        self.offsets[id.clause - 1] + id.position - 1
    }

    pub fn indicator_at(&self, index: usize) -> IndicatorId {
        let clause = self.offsets.partition_point(|&o| o <= index);
        IndicatorId::new(clause, index - self.offsets[clause - 1] + 1)
    }

    pub fn exactly_one(&self, clause: usize) -> Vec<IndicatorId> {
        (1..=self.clause_sizes[clause - 1])
            .map(|p| IndicatorId::new(clause, p))
            .collect()
    }

    /// Constraint at 0-based system position `k`.
    pub fn constraint(&self, k: usize) -> Constraint {
        let m = self.num_exactly_one();
        if k < m {
            Constraint::ExactlyOne(self.exactly_one(k + 1))
        } else {
            let p = self.exclusions[k - m];
            Constraint::Nand(p.first, p.second)
        }
    }

    pub fn constraints(&self) -> impl Iterator<Item = Constraint> + '_ {
        (0..self.len()).map(|k| self.constraint(k))
    }

    /// Whether a dense indicator vector satisfies every constraint.
    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        let eo_ok = (1..=self.num_exactly_one()).all(|i| {
            let start = self.offsets[i - 1];
            values[start..start + self.clause_sizes[i - 1]]
                .iter()
                .filter(|&&v| v)
                .count()
                == 1
        });
        eo_ok
            && self
                .exclusions
                .iter()
                .all(|p| !(values[self.indicator_index(p.first)] && values[self.indicator_index(p.second)]))
    }

    /// One line per constraint.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in self.constraints() {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

pub fn build_system(f: &CnfFormula) -> ConstraintSystem {
    let clause_sizes = f.clause_sizes();
    let offsets = clause_sizes
        .iter()
        .scan(0usize, |acc, &n| {
            let start = *acc;
            *acc += n;
            Some(start)
        })
        .collect();
    ConstraintSystem {
        clause_sizes,
        offsets,
        exclusions: complementary_pairs(f),
    }
}

/// Size accounting for the encoding and the box matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub m: usize,
    pub indicator_count: usize,
    /// Number of exclusion clauses.
    pub n: usize,
    pub t1: usize,
    /// Second entry of the descending clause-size row; 0 when `m < 2`.
    pub t2: usize,
    pub p: BigUint,
    /// `9 · C(n, 2)`.
    pub e: u64,
}

pub fn size_report(f: &CnfFormula) -> SizeReport {
    let mut sizes = f.clause_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let n = complementary_pairs(f).len();
    SizeReport {
        m: f.num_clauses(),
        indicator_count: sizes.iter().sum(),
        n,
        t1: sizes.first().copied().unwrap_or(0),
        t2: sizes.get(1).copied().unwrap_or(0),
        p: dnf_term_count(f),
        e: box_element_count(n),
    }
}

pub fn box_element_count(n: usize) -> u64 {
    let n = n as u64;
    9 * (n * n.saturating_sub(1) / 2)
}

/// Two picks bind a variable to opposite values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PickConflict {
    pub first: IndicatorId,
    pub second: IndicatorId,
    pub var: u32,
}

/// Turns one chosen indicator per clause into the partial assignment that
/// makes every picked literal true.
pub fn indicators_to_assignment(chosen: &[IndicatorId], f: &CnfFormula) -> Result<Assignment, PickConflict> {
    let mut sorted = chosen.to_vec();
    sorted.sort();
    let mut out = Assignment::empty(f.num_vars());
    let mut owner: Vec<Option<IndicatorId>> = vec![None; f.num_vars() as usize];
    for id in sorted {
        let lit = id.literal(f);
        let slot = lit.var() as usize - 1;
        match out.get(lit.var()) {
            Some(v) if v != lit.eval(true) => {
                return Err(PickConflict {
                    first: owner[slot].expect("bound var has an owner"),
                    second: id,
                    var: lit.var(),
                });
            }
            Some(_) => {}
            None => {
                out.set(lit.var(), !lit.is_negated());
                owner[slot] = Some(id);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{dnf_terms, CnfFormula};

    fn cnf(clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(clauses)
    }

    fn xi(i: usize, j: usize) -> IndicatorId {
        IndicatorId::new(i, j)
    }

    fn pair(a: IndicatorId, b: IndicatorId) -> ExclusionPair {
        ExclusionPair { first: a, second: b }
    }

    /// Tests every literal couple directly, independent of loop order.
    fn brute_pairs(f: &CnfFormula) -> Vec<ExclusionPair> {
        let mut all = Vec::new();
        for (i, ci) in f.clauses().iter().enumerate() {
            for (j, cj) in f.clauses().iter().enumerate() {
                for (mu, a) in ci.literals().iter().enumerate() {
                    for (nu, b) in cj.literals().iter().enumerate() {
                        if i < j && a.var() == b.var() && a.is_negated() != b.is_negated() {
                            all.push(pair(xi(i + 1, mu + 1), xi(j + 1, nu + 1)));
                        }
                    }
                }
            }
        }
        all.sort_by_key(|p| {
            (
                p.first.clause,
                p.second.clause,
                p.first.position,
                p.second.position,
            )
        });
        all
    }

    #[test]
    fn pair_examples() {
        assert_eq!(
            complementary_pairs(&cnf(&[&[1, 2], &[-1, 3]])),
            vec![pair(xi(1, 1), xi(2, 1))]
        );
        assert!(complementary_pairs(&cnf(&[&[1], &[1]])).is_empty());
        let both = complementary_pairs(&cnf(&[&[1, -2], &[-1, 2]]));
        assert_eq!(both, vec![pair(xi(1, 1), xi(2, 1)), pair(xi(1, 2), xi(2, 2))]);
    }

    #[test]
    fn pairs_match_brute_enumeration() {
        let f = cnf(&[&[1, -2, 3], &[-1, 2], &[-3, -1, 2], &[1, 3]]);
        assert_eq!(complementary_pairs(&f), brute_pairs(&f));
    }

    #[test]
    fn system_examples() {
        let sys = build_system(&cnf(&[&[1], &[-1]]));
        let cs: Vec<_> = sys.constraints().collect();
        assert_eq!(
            cs,
            vec![
                Constraint::ExactlyOne(vec![xi(1, 1)]),
                Constraint::ExactlyOne(vec![xi(2, 1)]),
                Constraint::Nand(xi(1, 1), xi(2, 1)),
            ]
        );
        assert_eq!(
            sys.dump(),
            "EO ξ(1,1)..ξ(1,1)\nEO ξ(2,1)..ξ(2,1)\nNAND ξ(1,1) ξ(2,1)\n"
        );

        let single = build_system(&cnf(&[&[1, 2]]));
        assert_eq!(single.len(), 1);
        assert_eq!(single.num_exclusions(), 0);
    }

    #[test]
    fn indicator_index_round_trips() {
        let sys = build_system(&cnf(&[&[1, 2, 3], &[1], &[-2, 3]]));
        for k in 0..sys.indicator_count() {
            assert_eq!(sys.indicator_index(sys.indicator_at(k)), k);
        }
        assert_eq!(sys.indicator_at(3), xi(2, 1));
    }

    /// Indicator solutions of the full system correspond one-to-one with
    /// non-contradictory DNF terms.
    #[test]
    fn system_solutions_biject_with_consistent_terms() {
        let f = cnf(&[&[1, 2], &[-1, 3]]);
        let sys = build_system(&f);
        let width = sys.indicator_count();
        let mut from_system = Vec::new();
        for mask in 0u32..1 << width {
            let values: Vec<bool> = (0..width).map(|k| mask >> k & 1 == 1).collect();
            if sys.is_satisfied_by(&values) {
                let picks: Vec<Literal> = (0..width)
                    .filter(|&k| values[k])
                    .map(|k| sys.indicator_at(k).literal(&f))
                    .collect();
                from_system.push(picks);
            }
        }
        let mut from_terms: Vec<Vec<Literal>> = dnf_terms(&f)
            .filter(|t| !t.is_contradictory())
            .map(|t| t.picks)
            .collect();
        from_system.sort();
        from_terms.sort();
        assert_eq!(from_system, from_terms);
        assert_eq!(from_terms.len(), 3);
    }

    #[test]
    fn size_examples() {
        let r = size_report(&cnf(&[&[1, 2], &[-1, 3], &[-2, -3]]));
        assert_eq!((r.n, r.e), (3, 27));
        assert_eq!(r.p, BigUint::from(8u32));

        let r = size_report(&cnf(&[&[1], &[-1]]));
        assert_eq!((r.m, r.n, r.e), (2, 1, 0));
        assert_eq!(r.p, BigUint::from(1u32));

        let r = size_report(&cnf(&[&[1, 2, 3], &[2], &[1, 3]]));
        assert_eq!((r.n, r.e, r.t1, r.t2, r.indicator_count), (0, 0, 3, 2, 6));
    }

    #[test]
    fn pair_counts_respect_min_bound() {
        let f = cnf(&[&[1, -2, 3], &[-1, 2, -3], &[1, 2], &[-1]]);
        let pairs = complementary_pairs(&f);
        let sizes = f.clause_sizes();
        for i in 1..=f.num_clauses() {
            for j in i + 1..=f.num_clauses() {
                let count = pairs
                    .iter()
                    .filter(|p| p.first.clause == i && p.second.clause == j)
                    .count();
                assert!(count <= sizes[i - 1].min(sizes[j - 1]));
            }
        }
        assert_eq!(pairs.len(), 3 + 1 + 1 + 1 + 1);
    }

    #[test]
    fn assignment_examples() {
        let f = cnf(&[&[1, 2], &[-1, 3]]);
        let a = indicators_to_assignment(&[xi(1, 2), xi(2, 1)], &f).unwrap();
        assert_eq!(a, Assignment::empty(3).with(2, true).with(1, false));

        let g = cnf(&[&[1], &[-1]]);
        let err = indicators_to_assignment(&[xi(1, 1), xi(2, 1)], &g).unwrap_err();
        assert_eq!(
            err,
            PickConflict {
                first: xi(1, 1),
                second: xi(2, 1),
                var: 1
            }
        );

        let h = cnf(&[&[1, 2]]);
        assert_eq!(
            indicators_to_assignment(&[xi(1, 1)], &h).unwrap(),
            Assignment::empty(2).with(1, true)
        );
    }
}
