use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::formula::{Clause, CnfFormula, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GenParams {
    pub max_vars: u32,
    pub max_clauses: usize,
    pub max_width: usize,
    pub mode: GenMode,
    pub seed: u64,
    pub sample_count: usize,
}

impl GenParams {
    pub fn exhaustive(max_vars: u32, max_clauses: usize, max_width: usize) -> Self {
        Self {
            max_vars,
            max_clauses,
            max_width,
            mode: GenMode::Exhaustive,
            seed: 0,
            sample_count: 0,
        }
    }

    pub fn random(
        max_vars: u32,
        max_clauses: usize,
        max_width: usize,
        seed: u64,
        sample_count: usize,
    ) -> Self {
        Self {
            max_vars,
            max_clauses,
            max_width,
            mode: GenMode::Random,
            seed,
            sample_count,
        }
    }
}

/// Largest exhaustive space `generate` will enumerate.
pub const DEFAULT_SPACE_CAP: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("exhaustive space holds {size} formulas, cap is {cap}")]
    SpaceTooLarge { size: u128, cap: u128 },
    #[error("invalid parameters: {0}")]
    Invalid(&'static str),
}

/// Every clause over `1..=max_vars` with distinct variables, sorted by
/// variable, of width `1..=max_width`. Ordered by width, then variable set,
/// then sign pattern (bit `k` negates the `k`-th variable).
pub fn clause_alphabet(max_vars: u32, max_width: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for width in 1..=max_width.min(max_vars as usize) {
        let mut vars: Vec<u32> = (1..=width as u32).collect();
        loop {
            for signs in 0u32..1 << width {
                out.push(
                    Clause::new(
                        vars.iter()
                            .enumerate()
                            .map(|(k, &v)| Literal::new(v, signs >> k & 1 == 1)),
                    )
                    .expect("nonempty"),
                );
            }
            // Next combination in lexicographic order.
            let Some(k) = (0..width)
                .rev()
                .find(|&k| vars[k] < max_vars - (width - 1 - k) as u32)
            else {
                break;
            };
            vars[k] += 1;
            for t in k + 1..width {
                vars[t] = vars[t - 1] + 1;
            }
        }
    }
    out
}

/// Number of formulas exhaustive mode emits: clause sequences of length
/// `1..=max_clauses` over the alphabet, repetition allowed.
pub fn exhaustive_space(max_vars: u32, max_clauses: usize, max_width: usize) -> u128 {
    let a = clause_alphabet_len(max_vars, max_width);
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..max_clauses {
        power = power.saturating_mul(a);
        total = total.saturating_add(power);
    }
    total
}

fn clause_alphabet_len(max_vars: u32, max_width: usize) -> u128 {
    let v = max_vars as u128;
    let mut total = 0u128;
    let mut choose = 1u128;
    for w in 1..=max_width.min(max_vars as usize) as u128 {
        choose = choose * (v - w + 1) / w;
        total = total.saturating_add(choose.saturating_mul(1u128 << w.min(127)));
    }
    total
}

/// Formula stream described by `params`.
pub fn generate(params: &GenParams) -> Result<Box<dyn Iterator<Item = CnfFormula> + Send>, GenError> {
    generate_capped(params, DEFAULT_SPACE_CAP)
}

pub fn generate_capped(
    params: &GenParams,
    cap: u128,
) -> Result<Box<dyn Iterator<Item = CnfFormula> + Send>, GenError> {
    if params.max_width == 0 {
        return Err(GenError::Invalid("width must be at least 1"));
    }
    if params.max_vars == 0 {
        return Err(GenError::Invalid("at least one variable is required"));
    }
    match params.mode {
        GenMode::Exhaustive => {
            let size = exhaustive_space(params.max_vars, params.max_clauses, params.max_width);
            if size > cap {
                return Err(GenError::SpaceTooLarge { size, cap });
            }
            Ok(Box::new(Exhaustive::new(
                clause_alphabet(params.max_vars, params.max_width),
                params.max_clauses,
            )))
        }
        GenMode::Random => Ok(Box::new(RandomStream {
            rng: ChaCha8Rng::seed_from_u64(params.seed),
            remaining: params.sample_count,
            max_vars: params.max_vars,
            max_clauses: params.max_clauses.max(1),
            max_width: params.max_width,
        })),
    }
}

struct Exhaustive {
    alphabet: Vec<Clause>,
    max_len: usize,
    digits: Vec<usize>,
}

impl Exhaustive {
    fn new(alphabet: Vec<Clause>, max_len: usize) -> Self {
        let digits = if alphabet.is_empty() || max_len == 0 {
            Vec::new()
        } else {
            vec![0]
        };
        Self {
            alphabet,
            max_len,
            digits,
        }
    }
}

impl Iterator for Exhaustive {
    type Item = CnfFormula;

    fn next(&mut self) -> Option<CnfFormula> {
        if self.digits.is_empty() {
            return None;
        }
        let f = CnfFormula::from_clauses(self.digits.iter().map(|&d| self.alphabet[d].clone()).collect());
        let base = self.alphabet.len();
        let mut carry = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            if self.digits.len() < self.max_len {
                self.digits = vec![0; self.digits.len() + 1];
            } else {
                self.digits.clear();
            }
        }
        Some(f)
    }
}

struct RandomStream {
    rng: ChaCha8Rng,
    remaining: usize,
    max_vars: u32,
    max_clauses: usize,
    max_width: usize,
}

impl Iterator for RandomStream {
    type Item = CnfFormula;

    fn next(&mut self) -> Option<CnfFormula> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let count = self.rng.random_range(1..=self.max_clauses);
        let clauses = (0..count)
            .map(|_| {
                let width = self.rng.random_range(1..=self.max_width);
                let lits: Vec<Literal> = (0..width)
                    .map(|_| {
                        Literal::new(
                            self.rng.random_range(1..=self.max_vars),
                            self.rng.random_bool(0.5),
                        )
                    })
                    .collect();
                Clause::new(lits).expect("width at least one")
            })
            .collect();
        Some(CnfFormula::from_clauses(clauses))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_space() {
        let all: Vec<_> = generate(&GenParams::exhaustive(1, 1, 1)).unwrap().collect();
        assert_eq!(
            all,
            vec![
                CnfFormula::from_dimacs_clauses(&[&[1]]),
                CnfFormula::from_dimacs_clauses(&[&[-1]]),
            ]
        );
    }

    #[test]
    fn alphabet_sizes() {
        let a = clause_alphabet(2, 2);
        assert_eq!(a.len(), 8);
        assert_eq!(a.iter().filter(|c| c.len() == 2).count(), 4);
        assert_eq!(clause_alphabet(3, 3).len(), 26);
        assert_eq!(clause_alphabet_len(3, 3), 26);
        assert_eq!(clause_alphabet_len(8, 3), 16 + 28 * 4 + 56 * 8);
        assert_eq!(clause_alphabet(8, 3).len(), 16 + 28 * 4 + 56 * 8);
    }

    #[test]
    fn exhaustive_counts_match_space() {
        assert_eq!(exhaustive_space(2, 2, 2), 8 + 64);
        assert_eq!(generate(&GenParams::exhaustive(2, 2, 2)).unwrap().count(), 72);
        assert_eq!(exhaustive_space(3, 3, 3), 26 + 26 * 26 + 26 * 26 * 26);
    }

    #[test]
    fn alphabet_clauses_are_canonical() {
        for c in clause_alphabet(4, 3) {
            let vars: Vec<u32> = c.literals().iter().map(|l| l.var()).collect();
            assert!(vars.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn space_cap_enforced() {
        let err = generate_capped(&GenParams::exhaustive(3, 3, 3), 1000)
            .err()
            .unwrap();
        assert!(matches!(
            err,
            GenError::SpaceTooLarge {
                size: 18278,
                cap: 1000
            }
        ));
    }

    #[test]
    fn random_is_seeded() {
        let p = GenParams::random(8, 10, 3, 42, 50);
        let a: Vec<_> = generate(&p).unwrap().collect();
        let b: Vec<_> = generate(&p).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert!(a
            .iter()
            .all(|f| f.num_vars() <= 8 && (1..=10).contains(&f.num_clauses())));
        assert!(a
            .iter()
            .flat_map(|f| f.clauses())
            .all(|c| (1..=3).contains(&c.len())));
        let c: Vec<_> = generate(&GenParams::random(8, 10, 3, 43, 50)).unwrap().collect();
        assert_ne!(a, c);
    }
}
