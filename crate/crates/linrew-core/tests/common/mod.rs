//! Shared builders and random generators for the integration suites.
#![allow(dead_code)]

use linrew_core::linspace::LinComb;
use linrew_core::rewrite::{Prestrategy, RewritingSystem, Rule, RuleId};
use linrew_core::scalar::{rat, MultiPoly, RatFunc, Rational, XExponent};
use linrew_core::weyl::{DMonomial, MonomialOrder, ThetaSystem, WeylOp};
use rand::rngs::StdRng;
use rand::Rng;

pub type Vect = LinComb<String, Rational>;

pub fn e(i: usize) -> String {
    format!("e{i}")
}

pub fn vect(terms: &[(usize, i64)]) -> Vect {
    Vect::from_terms(terms.iter().map(|&(i, c)| (e(i), rat(c, 1))))
}

pub fn sys(
    rules: &[(&str, usize, &[(usize, i64)])],
    strict: bool,
) -> RewritingSystem<String, Rational> {
    RewritingSystem::new(
        rules
            .iter()
            .map(|&(id, lhs, rhs)| Rule {
                id: RuleId::new(id),
                lhs: e(lhs),
                rhs: vect(rhs),
            })
            .collect(),
        strict,
    )
    .expect("valid test system")
}

pub fn strategy(system: &RewritingSystem<String, Rational>, ids: &[&str]) -> Prestrategy {
    system
        .prestrategy(ids.iter().map(|s| RuleId::new(*s)).collect())
        .expect("valid test strategy")
}

/// The running four-dimensional example: rules e1 -> e2, e2 -> e3 + e4,
/// e3 -> e2 - e4, with the strategy selecting the first two.
pub fn example_one() -> (RewritingSystem<String, Rational>, Prestrategy) {
    let system = sys(
        &[
            ("r1", 1, &[(2, 1)]),
            ("r2", 2, &[(3, 1), (4, 1)]),
            ("r3", 3, &[(2, 1), (4, -1)]),
        ],
        true,
    );
    let strat = strategy(&system, &["r1", "r2"]);
    (system, strat)
}

/// The broken variant replacing e3 -> e2 - e4 by e3 -> e2.
pub fn example_one_broken() -> (RewritingSystem<String, Rational>, Prestrategy) {
    let system = sys(
        &[
            ("r1", 1, &[(2, 1)]),
            ("r2", 2, &[(3, 1), (4, 1)]),
            ("r3", 3, &[(2, 1)]),
        ],
        true,
    );
    let strat = strategy(&system, &["r1", "r2"]);
    (system, strat)
}

/// The cyclic example: e1 -> e2 + e3, e2 -> e1, e3 -> -e1, all selected.
pub fn example_two() -> (RewritingSystem<String, Rational>, Prestrategy) {
    let system = sys(
        &[
            ("r1", 1, &[(2, 1), (3, 1)]),
            ("r2", 2, &[(1, 1)]),
            ("r3", 3, &[(1, -1)]),
        ],
        true,
    );
    let strat = system.full_prestrategy().expect("distinct left-hand sides");
    (system, strat)
}

pub fn small_rat(rng: &mut StdRng) -> Rational {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    rat(num, den)
}

pub fn nonzero_rat(rng: &mut StdRng) -> Rational {
    loop {
        let r = small_rat(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn random_vect(rng: &mut StdRng, basis_size: usize) -> Vect {
    let terms = rng.gen_range(0..=basis_size.min(4));
    Vect::from_terms((0..terms).map(|_| (e(rng.gen_range(1..=basis_size)), small_rat(rng))))
}

/// A random layered system: every rule rewrites a basis element to a
/// combination of strictly higher-indexed elements, so the single-step
/// support graph is acyclic and every prestrategy is a strategy.
pub struct RandomSystem {
    pub system: RewritingSystem<String, Rational>,
    pub strategy: Prestrategy,
    pub basis_size: usize,
}

pub fn random_layered_system(rng: &mut StdRng) -> RandomSystem {
    random_layered_system_sized(rng, 8, 10)
}

pub fn random_layered_system_sized(
    rng: &mut StdRng,
    max_basis: usize,
    max_rules: usize,
) -> RandomSystem {
    let basis_size = rng.gen_range(3..=max_basis);
    let mut rules = Vec::new();
    let mut selected = Vec::new();
    let mut rule_no = 0;
    for lhs in 1..basis_size {
        if rules.len() >= max_rules || rng.gen_bool(0.35) {
            continue;
        }
        // Right-hand side over strictly higher indices.
        let terms = rng.gen_range(0..=3.min(basis_size - lhs));
        let rhs = Vect::from_terms((0..terms).map(|_| {
            (e(rng.gen_range(lhs + 1..=basis_size)), nonzero_rat(rng))
        }));
        rule_no += 1;
        let id = format!("r{rule_no}");
        selected.push(RuleId::new(id.clone()));
        rules.push(Rule { id: RuleId::new(id), lhs: e(lhs), rhs });
    }
    let system = RewritingSystem::new(rules, true).expect("layered rules are strict");
    let strategy = system
        .prestrategy(selected)
        .expect("one rule per left-hand side");
    RandomSystem { system, strategy, basis_size }
}

/// Extend a layered system with extra rules `lhs -> v'` where `v'` is reached
/// from the selected rule's right-hand side by replaying selected rules only;
/// this preserves S-confluence and keeps every critical pair joinable.
pub fn with_derived_duplicates(rng: &mut StdRng, base: RandomSystem) -> RandomSystem {
    let RandomSystem { system, strategy, basis_size } = base;
    let resolved = strategy.resolve(&system).unwrap();
    let mut rules: Vec<Rule<String, Rational>> = system.rules().to_vec();
    let mut extra = Vec::new();
    for rule in system.rules() {
        if !strategy.contains(&rule.id) || rng.gen_bool(0.6) {
            continue;
        }
        // Replay a few parallel steps of the selected part.
        let mut v = rule.rhs.clone();
        for _ in 0..rng.gen_range(1..=2) {
            v = linrew_core::rewrite::apply_r_s(&v, &resolved);
        }
        if v == rule.rhs {
            continue;
        }
        let id = format!("{}d", rule.id);
        extra.push(Rule { id: RuleId::new(id), lhs: rule.lhs.clone(), rhs: v });
    }
    rules.extend(extra);
    let ids: Vec<RuleId> = strategy.ids().to_vec();
    let system = RewritingSystem::new(rules, true).expect("derived rules stay strict");
    let strategy = system.prestrategy(ids).unwrap();
    RandomSystem { system, strategy, basis_size }
}

/// Random sparse polynomial of bounded total degree.
pub fn random_poly(rng: &mut StdRng, nvars: usize, max_degree: u32, max_terms: usize) -> MultiPoly {
    let terms = rng.gen_range(0..=max_terms);
    MultiPoly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let mut budget = max_degree;
            let mut exps = vec![0u32; nvars];
            for slot in exps.iter_mut() {
                let e = rng.gen_range(0..=budget);
                *slot = e;
                budget -= e;
            }
            (XExponent::new(exps), small_rat(rng))
        }),
    )
}

pub fn random_nonzero_poly(rng: &mut StdRng, nvars: usize, max_degree: u32) -> MultiPoly {
    loop {
        let p = random_poly(rng, nvars, max_degree, 3);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfunc(rng: &mut StdRng, nvars: usize, max_degree: u32) -> RatFunc {
    RatFunc::new(
        random_poly(rng, nvars, max_degree, 3),
        random_nonzero_poly(rng, nvars, max_degree),
    )
    .expect("denominator is nonzero")
}

pub fn random_weyl_op(
    rng: &mut StdRng,
    nvars: usize,
    max_dmono_degree: u32,
    max_coeff_degree: u32,
    max_terms: usize,
) -> WeylOp {
    let terms = rng.gen_range(0..=max_terms);
    WeylOp::from_terms((0..terms).map(|_| {
        let mut budget = max_dmono_degree;
        let mut alpha = vec![0u32; nvars];
        for slot in alpha.iter_mut() {
            let e = rng.gen_range(0..=budget);
            *slot = e;
            budget -= e;
        }
        let coeff = if rng.gen_bool(0.7) {
            RatFunc::from_poly(random_poly(rng, nvars, max_coeff_degree, 2))
        } else {
            random_ratfunc(rng, nvars, max_coeff_degree)
        };
        (DMonomial::new(alpha), coeff)
    }))
}

pub fn random_monic_theta(
    rng: &mut StdRng,
    nvars: usize,
    max_ops: usize,
) -> Option<ThetaSystem> {
    let order = MonomialOrder::deglex(nvars);
    let count = rng.gen_range(1..=max_ops);
    let mut named = Vec::new();
    for k in 0..count {
        let op = random_weyl_op(rng, nvars, 3, 2, 3);
        if op.is_zero() {
            continue;
        }
        let monic = linrew_core::weyl::make_monic(&op, &order).unwrap();
        named.push((format!("T{}", k + 1), monic));
    }
    if named.is_empty() {
        return None;
    }
    ThetaSystem::new(nvars, order, named).ok()
}

pub fn random_dmonomial(rng: &mut StdRng, nvars: usize, max_degree: u32) -> DMonomial {
    DMonomial::new((0..nvars).map(|_| rng.gen_range(0..=max_degree)).collect())
}
