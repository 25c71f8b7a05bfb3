//! The worked examples for the strategy engine, with expected values frozen
//! from hand computation.

mod common;

use common::{e, example_one, example_one_broken, example_two, strategy, sys, vect};
use linrew_core::linspace::LinComb;
use linrew_core::rewrite::{
    apply_r_s, certify_strategy, check_decreasing, check_local_confluence, check_s_confluence,
    joinable, quotient_basis, serialize_parallel, snf, span_membership, step_r, CertStatus,
    Decreasing, Joinability, LocalConfluence, RewriteError, RuleId, SConfluence, SpanResult,
    StrategySource,
};
use linrew_core::scalar::rat;
use std::collections::BTreeSet;

const FUEL: usize = 1000;
const BUDGET: usize = 100_000;

fn roots(n: usize) -> BTreeSet<String> {
    (1..=n).map(e).collect()
}

#[test]
fn parallel_step_on_the_running_example() {
    let (system, strat) = example_one();
    let resolved = strat.resolve(&system).unwrap();
    // u = 2e1 + 3e2 + 5e3 + 7e4 steps to 2e2 + 8e3 + 10e4.
    let u = vect(&[(1, 2), (2, 3), (3, 5), (4, 7)]);
    assert_eq!(apply_r_s(&u, &resolved), vect(&[(2, 2), (3, 8), (4, 10)]));
    // No selected left-hand side in the support: fixed.
    let fixed = vect(&[(3, 1), (4, 1)]);
    assert_eq!(apply_r_s(&fixed, &resolved), fixed);
    // Linearity on e1 - e2.
    assert_eq!(
        apply_r_s(&vect(&[(1, 1), (2, -1)]), &resolved),
        vect(&[(2, 1), (3, -1), (4, -1)])
    );
}

#[test]
fn certification_of_the_running_example() {
    let (system, strat) = example_one();
    let cert = certify_strategy(&system, &strat, &roots(4), BUDGET).unwrap();
    assert!(cert.is_certified());
    let ranks = cert.ranks.unwrap();
    // e1 above e2 above e3 and e4.
    assert!(ranks[&e(1)] > ranks[&e(2)]);
    assert!(ranks[&e(2)] > ranks[&e(3)]);
    assert!(ranks[&e(2)] > ranks[&e(4)]);
}

#[test]
fn certification_finds_the_cycle() {
    let (system, strat) = example_two();
    let cert = certify_strategy(&system, &strat, &roots(3), BUDGET).unwrap();
    let CertStatus::CycleFound(cycle) = &cert.status else {
        panic!("the full selection of the cyclic example is not a strategy");
    };
    // The path is closed and every edge is a genuine one-step support edge.
    assert!(cycle.len() >= 2);
    assert_eq!(cycle.first(), cycle.last());
    let resolved = strat.resolve(&system).unwrap();
    for pair in cycle.windows(2) {
        let rhs = resolved.selected_rhs(&pair[0]).expect("edge source is selected");
        assert!(rhs.support_contains(&pair[1]));
    }
}

#[test]
fn empty_strategy_is_certified() {
    let (system, _) = example_one();
    let empty = strategy(&system, &[]);
    let cert = certify_strategy(&system, &empty, &roots(4), BUDGET).unwrap();
    assert!(cert.is_certified());
}

#[test]
fn snf_of_the_running_example() {
    let (system, strat) = example_one();
    let resolved = strat.resolve(&system).unwrap();
    // SNF(e1+e2+e3+e4) = 3e3 + 3e4.
    assert_eq!(
        snf(&vect(&[(1, 1), (2, 1), (3, 1), (4, 1)]), &resolved, FUEL).unwrap(),
        vect(&[(3, 3), (4, 3)])
    );
    assert_eq!(snf(&vect(&[(3, 1)]), &resolved, FUEL).unwrap(), vect(&[(3, 1)]));
    assert_eq!(snf(&LinComb::zero(), &resolved, FUEL).unwrap(), LinComb::zero());
    // SNF(e1) = e3 + e4.
    assert_eq!(snf(&vect(&[(1, 1)]), &resolved, FUEL).unwrap(), vect(&[(3, 1), (4, 1)]));
}

#[test]
fn snf_of_the_cyclic_example_reaches_zero_under_fuel() {
    let (system, strat) = example_two();
    let resolved = strat.resolve(&system).unwrap();
    let u = vect(&[(1, 3), (2, -2), (3, 5)]);
    assert_eq!(snf(&u, &resolved, FUEL).unwrap(), LinComb::zero());
}

#[test]
fn snf_fuel_exhaustion_is_reported() {
    // e1 -> e2, e2 -> e1 flips forever.
    let system = sys(&[("r1", 1, &[(2, 1)]), ("r2", 2, &[(1, 1)])], true);
    let strat = system.full_prestrategy().unwrap();
    let resolved = strat.resolve(&system).unwrap();
    assert_eq!(
        snf(&vect(&[(1, 1)]), &resolved, 10),
        Err(RewriteError::FuelExhausted { fuel: 10 })
    );
}

#[test]
fn s_confluence_verdicts() {
    let (system, strat) = example_one();
    assert_eq!(
        check_s_confluence(&system, &strat, FUEL).unwrap(),
        SConfluence::Confluent
    );
    let (broken, strat) = example_one_broken();
    match check_s_confluence(&broken, &strat, FUEL).unwrap() {
        SConfluence::Witness { rule, residual } => {
            assert_eq!(rule, RuleId::new("r3"));
            // SNF(e3 - e2) = e3 - e3 - e4 = -e4.
            assert_eq!(residual, vect(&[(4, -1)]));
        }
        SConfluence::Confluent => panic!("broken variant must fail"),
    }
}

#[test]
fn full_selection_is_always_s_confluent() {
    let system = sys(
        &[("r1", 1, &[(2, 1), (3, 2)]), ("r2", 2, &[(3, -1)]), ("r3", 3, &[])],
        true,
    );
    let strat = system.full_prestrategy().unwrap();
    assert_eq!(
        check_s_confluence(&system, &strat, FUEL).unwrap(),
        SConfluence::Confluent
    );
}

#[test]
fn quotient_basis_of_the_running_example() {
    let (system, strat) = example_one();
    let basis = quotient_basis(&system, &strat, &roots(4), FUEL).unwrap();
    assert_eq!(basis, BTreeSet::from([e(3), e(4)]));
}

#[test]
fn quotient_basis_of_the_empty_system_is_the_roots() {
    let system = sys(&[], true);
    let strat = system.full_prestrategy().unwrap();
    assert_eq!(quotient_basis(&system, &strat, &roots(4), FUEL).unwrap(), roots(4));
}

#[test]
fn quotient_basis_requires_s_confluence() {
    let (broken, strat) = example_one_broken();
    assert_eq!(
        quotient_basis(&broken, &strat, &roots(4), FUEL),
        Err(RewriteError::NotSConfluent { rule: RuleId::new("r3") })
    );
}

#[test]
fn single_steps_on_the_running_example() {
    let (system, _) = example_one();
    // step(e1) = { e2 } via r1.
    let steps = step_r(&vect(&[(1, 1)]), &system).unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0].rule, RuleId::new("r1"));
    assert_eq!(steps[0].result, vect(&[(2, 1)]));
    // step(e3 + e4) = { e2 } via r3: e2 - e4 + e4.
    let steps = step_r(&vect(&[(3, 1), (4, 1)]), &system).unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0].rule, RuleId::new("r3"));
    assert_eq!(steps[0].coeff, rat(1, 1));
    assert_eq!(steps[0].result, vect(&[(2, 1)]));
    // step(0) is empty.
    assert!(step_r(&LinComb::zero(), &system).unwrap().is_empty());
}

#[test]
fn step_requires_the_strict_flag() {
    let system = sys(&[("r1", 1, &[(2, 1)])], false);
    assert_eq!(
        step_r(&vect(&[(1, 1)]), &system),
        Err(RewriteError::StrictFlagRequired)
    );
}

#[test]
fn joinability_on_the_running_example() {
    let (system, _) = example_one();
    // Reflexive joins have empty traces.
    let u = vect(&[(1, 1), (4, 2)]);
    match joinable(&u, &u, &system, FUEL).unwrap() {
        Joinability::Joinable { meet, left, right } => {
            assert_eq!(meet, u);
            assert!(left.is_empty() && right.is_empty());
        }
        Joinability::NotWithinFuel => panic!("u joins itself"),
    }
    // e2 and e3 + e4 join at e3 + e4 in one step.
    match joinable(&vect(&[(2, 1)]), &vect(&[(3, 1), (4, 1)]), &system, FUEL).unwrap() {
        Joinability::Joinable { meet, left, right } => {
            assert_eq!(meet, vect(&[(3, 1), (4, 1)]));
            assert!(left.validate(&system));
            assert!(right.validate(&system));
            assert_eq!(left.endpoint(), &meet);
            assert_eq!(right.endpoint(), &meet);
        }
        Joinability::NotWithinFuel => panic!("paper rule joins them"),
    }
}

#[test]
fn local_confluence_verdicts() {
    let (system, _) = example_one();
    assert_eq!(
        check_local_confluence(&system, FUEL).unwrap(),
        LocalConfluence::LocallyConfluent
    );
    // A single-rule system has no critical basis element.
    let single = sys(&[("r1", 1, &[(2, 1)])], true);
    assert_eq!(
        check_local_confluence(&single, FUEL).unwrap(),
        LocalConfluence::LocallyConfluent
    );
    // e1 -> e2 and e1 -> e3 with both normal: a genuine witness.
    let forked = sys(&[("a", 1, &[(2, 1)]), ("b", 1, &[(3, 1)])], true);
    match check_local_confluence(&forked, FUEL).unwrap() {
        LocalConfluence::Witness { lhs, left, right } => {
            assert_eq!(lhs, e(1));
            assert_eq!(left, vect(&[(2, 1)]));
            assert_eq!(right, vect(&[(3, 1)]));
        }
        LocalConfluence::LocallyConfluent => panic!("fork is not joinable"),
    }
}

#[test]
fn serialization_of_the_running_example() {
    let (system, strat) = example_one();
    let resolved = strat.resolve(&system).unwrap();
    let u = vect(&[(1, 1), (2, 1)]);
    let trace = serialize_parallel(&system, &strat, &u, BUDGET).unwrap();
    // e1 + e2 -> e1 + e3 + e4 -> e2 + e3 + e4.
    assert_eq!(trace.len(), 2);
    assert_eq!(trace.steps[0].result, vect(&[(1, 1), (3, 1), (4, 1)]));
    assert_eq!(trace.steps[1].result, vect(&[(2, 1), (3, 1), (4, 1)]));
    assert!(trace.validate(&system));
    assert_eq!(trace.endpoint(), &apply_r_s(&u, &resolved));
    // Singleton support: one step.
    let trace = serialize_parallel(&system, &strat, &vect(&[(1, 1)]), BUDGET).unwrap();
    assert_eq!(trace.len(), 1);
}

#[test]
fn serialization_requires_certification() {
    let (system, strat) = example_two();
    assert_eq!(
        serialize_parallel(&system, &strat, &vect(&[(1, 1)]), BUDGET),
        Err(RewriteError::NotCertified)
    );
}

#[test]
fn span_membership_examples() {
    let (system, _) = example_one();
    // A generator is a member.
    match span_membership(&system, &vect(&[(1, 1), (2, -1)]), BUDGET).unwrap() {
        SpanResult::Member { coordinates } => {
            assert_eq!(coordinates, vec![(RuleId::new("r1"), rat(1, 1))]);
        }
        SpanResult::NotMember => panic!("e1 - e2 generates the span"),
    }
    assert_eq!(
        span_membership(&system, &vect(&[(1, 1)]), BUDGET).unwrap(),
        SpanResult::NotMember
    );
}

#[test]
fn decreasingness_with_the_two_level_order() {
    let (system, strat) = example_one();
    // Rules in the strategy sit below the rule outside it.
    let order = vec![
        (RuleId::new("r1"), RuleId::new("r3")),
        (RuleId::new("r2"), RuleId::new("r3")),
    ];
    assert_eq!(
        check_decreasing(&system, &strat, &order, BUDGET).unwrap(),
        Decreasing::Decreasing
    );
    let (broken, strat) = example_one_broken();
    assert_eq!(
        check_decreasing(&broken, &strat, &order, BUDGET).unwrap(),
        Decreasing::Witness { rule: RuleId::new("r3") }
    );
}

#[test]
fn cyclic_rule_order_is_rejected() {
    let (system, strat) = example_one();
    let order = vec![
        (RuleId::new("r1"), RuleId::new("r2")),
        (RuleId::new("r2"), RuleId::new("r1")),
    ];
    assert!(matches!(
        check_decreasing(&system, &strat, &order, BUDGET),
        Err(RewriteError::CyclicOrder { .. })
    ));
}
