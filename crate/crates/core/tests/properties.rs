//! Cross-checks of the engine, encoder and reducers against brute force on
//! generated instances.

use proptest::prelude::*;

use sat_compat::compat::{run_with_permutation, Outcome};
use sat_compat::formula::{dnf_expansion_satisfiable, evaluate, simplify, Simplified};
use sat_compat::harness::{extract_model, generate, Extraction, GenParams};
use sat_compat::oracle::{brute_force_system, count_models};
use sat_compat::{
    brute_force_sat, build_system, reduce_to_1sat, reduce_to_2sat, run_formula, size_report, solve_2sat,
    Assignment, Clause, CnfFormula, Literal, TwoSatReduction,
};

const LIMIT: u32 = 26;

fn formula(max_var: u32, max_width: usize, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    let lit = (1..=max_var, any::<bool>()).prop_map(|(v, n)| Literal::new(v, n));
    let clause = prop::collection::vec(lit, 1..=max_width).prop_map(|l| Clause::new(l).unwrap());
    prop::collection::vec(clause, 1..=max_clauses).prop_map(CnfFormula::from_clauses)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn engine_refutations_are_sound(f in formula(6, 3, 9)) {
        if run_formula(&f).outcome() == Outcome::Unsat {
            prop_assert_eq!(brute_force_sat(&f, LIMIT).unwrap().verdict, Outcome::Unsat);
        }
    }

    #[test]
    fn indicator_system_matches_oracle(f in formula(4, 3, 5)) {
        let sys = brute_force_system(&build_system(&f), LIMIT).unwrap();
        prop_assert_eq!(sys.verdict, brute_force_sat(&f, LIMIT).unwrap().verdict);
    }

    #[test]
    fn dnf_matches_oracle(f in formula(4, 3, 6)) {
        let dnf = dnf_expansion_satisfiable(&f, 1 << 20).unwrap();
        prop_assert_eq!(Outcome::from_bool(dnf), brute_force_sat(&f, LIMIT).unwrap().verdict);
    }

    #[test]
    fn solve_2sat_matches_oracle(f in formula(10, 2, 25)) {
        let truth = brute_force_sat(&f, LIMIT).unwrap().verdict;
        let got = solve_2sat(&f).unwrap();
        prop_assert_eq!(got.outcome(), truth);
        if let sat_compat::reducer::TwoSatOutcome::Sat(m) = got {
            prop_assert!(evaluate(&f, &m).unwrap());
        }
    }

    #[test]
    fn reductions_have_claimed_shapes(f in formula(5, 3, 7)) {
        let sizes = size_report(&f);
        let one = reduce_to_1sat(&f);
        prop_assert!(one.is_false() || one.literal_count() <= 9);
        prop_assert_eq!(one.outcome(), run_formula(&f).outcome());
        if let TwoSatReduction::Instance(inst) = reduce_to_2sat(&f) {
            prop_assert_eq!(inst.formula.num_clauses() as u64, sizes.n as u64 + sizes.e);
            prop_assert!(inst.formula.clauses().iter().all(|c| c.len() <= 2));
            prop_assert_eq!(solve_2sat(&inst.formula).unwrap().outcome(), Outcome::Sat);
        }
    }

    #[test]
    fn permutation_keeps_oracle_verdict(f in formula(5, 3, 7)) {
        let p = run_with_permutation(&f);
        prop_assert_eq!(
            brute_force_sat(&p.formula, LIMIT).unwrap().verdict,
            brute_force_sat(&f, LIMIT).unwrap().verdict
        );
        if p.run.outcome() == Outcome::Unsat {
            prop_assert_eq!(brute_force_sat(&f, LIMIT).unwrap().verdict, Outcome::Unsat);
        }
    }

    #[test]
    fn extraction_never_returns_a_bad_model(f in formula(6, 3, 9)) {
        if let Extraction::Model(a) = extract_model(&f) {
            prop_assert!(evaluate(&f, &a).unwrap());
        }
    }

    #[test]
    fn oracle_models_check(f in formula(6, 3, 9)) {
        let r = count_models(&f, LIMIT).unwrap();
        match r.verdict {
            Outcome::Sat => {
                prop_assert!(evaluate(&f, r.model.as_ref().unwrap()).unwrap());
                prop_assert!(r.model_count.unwrap() >= 1);
            }
            Outcome::Unsat => prop_assert_eq!(r.model_count, Some(0)),
        }
        let mut brute = 0u64;
        for mask in 0..1u64 << f.num_vars() {
            if simplify(&f, &Assignment::from_mask(f.num_vars(), mask)) == Simplified::True {
                brute += 1;
            }
        }
        prop_assert_eq!(r.model_count, Some(brute));
    }
}

/// Clause order matters to the engine; record how often reordering the
/// shortest clauses last changes the verdict on a 2-clause corpus.
#[test]
fn permutation_sensitivity_on_small_corpus() {
    let mut changed = 0;
    let mut shrink_claims = 0;
    let mut shrink_seen = 0;
    for f in generate(&GenParams::exhaustive(3, 3, 3)).unwrap() {
        let p = run_with_permutation(&f);
        if p.run.outcome() != run_formula(&f).outcome() {
            changed += 1;
        }
        if let Some(seen) = p.shrink_observed {
            shrink_claims += 1;
            shrink_seen += usize::from(seen);
        }
    }
    // Both verdicts agree with the oracle on this corpus, so order never matters here.
    assert_eq!(changed, 0);
    assert!(shrink_claims > 0);
    assert!(shrink_seen <= shrink_claims);
}
