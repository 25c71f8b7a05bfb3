//! S-confluence, quotient bases, local confluence, and decreasingness.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::engine::{meet_search, snf, MeetSearch};
use super::span::{span_membership_vectors, SpanResult};
use super::system::{Prestrategy, RewritingSystem, RuleId};
use super::RewriteError;
use crate::linspace::{Basis, Field, LinComb};

/// Verdict of the S-confluence check: `SNF(lhs - rhs) = 0` for every rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SConfluence<B: Basis, K: Field> {
    Confluent,
    Witness { rule: RuleId, residual: LinComb<B, K> },
}

pub fn check_s_confluence<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    strategy: &Prestrategy,
    fuel: usize,
) -> Result<SConfluence<B, K>, RewriteError> {
    let resolved = strategy.resolve(system)?;
    for rule in system.rules() {
        let diff = LinComb::basis(rule.lhs.clone()).sub(&rule.rhs);
        let residual = snf(&diff, &resolved, fuel)?;
        if !residual.is_zero() {
            return Ok(SConfluence::Witness { rule: rule.id.clone(), residual });
        }
    }
    Ok(SConfluence::Confluent)
}

/// The normal-form basis elements reachable from `roots`: those classes form
/// a basis of the spanned subspace modulo the rules. Requires S-confluence.
pub fn quotient_basis<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    strategy: &Prestrategy,
    roots: &BTreeSet<B>,
    fuel: usize,
) -> Result<BTreeSet<B>, RewriteError> {
    if let SConfluence::Witness { rule, .. } = check_s_confluence(system, strategy, fuel)? {
        return Err(RewriteError::NotSConfluent { rule });
    }
    let resolved = strategy.resolve(system)?;

    // Closure of the roots under the supports of all rules, selected or not.
    let mut reachable: BTreeSet<B> = BTreeSet::new();
    let mut stack: Vec<B> = roots.iter().cloned().collect();
    while let Some(e) = stack.pop() {
        if !reachable.insert(e.clone()) {
            continue;
        }
        for rule in system.rules_with_lhs(&e) {
            for succ in rule.rhs.support() {
                if !reachable.contains(succ) {
                    stack.push(succ.clone());
                }
            }
        }
    }

    let mut basis = BTreeSet::new();
    for e in reachable {
        let v = LinComb::basis(e.clone());
        if snf(&v, &resolved, fuel)? == v {
            basis.insert(e);
        }
    }
    Ok(basis)
}

/// Verdict of the local-confluence check over single steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalConfluence<B: Basis, K: Field> {
    LocallyConfluent,
    /// Two one-step reducts of `lhs` with no common reduct; definitive, not a
    /// fuel artifact.
    Witness {
        lhs: B,
        left: LinComb<B, K>,
        right: LinComb<B, K>,
    },
}

/// For every basis element with at least two rules, test joinability of each
/// pair of right-hand sides. A `Witness` is only reported when the search
/// space was fully explored; running out of fuel errs instead.
pub fn check_local_confluence<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    fuel: usize,
) -> Result<LocalConfluence<B, K>, RewriteError> {
    if !system.strict() {
        return Err(RewriteError::StrictFlagRequired);
    }
    let mut by_lhs: BTreeMap<&B, Vec<&LinComb<B, K>>> = BTreeMap::new();
    for rule in system.rules() {
        by_lhs.entry(&rule.lhs).or_default().push(&rule.rhs);
    }
    for (lhs, rhss) in by_lhs {
        for i in 0..rhss.len() {
            for j in i + 1..rhss.len() {
                match meet_search(rhss[i], rhss[j], system, fuel) {
                    MeetSearch::Met { .. } => {}
                    MeetSearch::Exhausted => {
                        return Ok(LocalConfluence::Witness {
                            lhs: lhs.clone(),
                            left: rhss[i].clone(),
                            right: rhss[j].clone(),
                        });
                    }
                    MeetSearch::OutOfFuel => {
                        return Err(RewriteError::FuelExhausted { fuel });
                    }
                }
            }
        }
    }
    Ok(LocalConfluence::LocallyConfluent)
}

/// Verdict of the decreasingness check against an explicit rule precedence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decreasing {
    Decreasing,
    Witness { rule: RuleId },
}

/// Check that each rule's residual `rhs - r_S(lhs)` lies in the span of the
/// rules strictly below it. The precedence is given as DAG edges
/// `(smaller, larger)` over rule ids and is taken up to transitivity.
pub fn check_decreasing<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    strategy: &Prestrategy,
    precedence: &[(RuleId, RuleId)],
    node_budget: usize,
) -> Result<Decreasing, RewriteError> {
    let resolved = strategy.resolve(system)?;
    let n = system.rules().len();
    let index_of = |id: &RuleId| -> Result<usize, RewriteError> {
        system
            .rule_by_id(id)
            .map(|(i, _)| i)
            .ok_or_else(|| RewriteError::UnknownRuleId { id: id.clone() })
    };

    // smaller_than[i] = direct predecessors (strictly smaller rules).
    let mut smaller_than: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); n];
    for (small, large) in precedence {
        let s = index_of(small)?;
        let l = index_of(large)?;
        smaller_than[l].insert(s);
    }

    // Cycle check via iterative DFS over the "smaller" edges.
    {
        let mut state = alloc::vec![0u8; n]; // 0 white, 1 gray, 2 black
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut stack = alloc::vec![(start, false)];
            while let Some((node, processed)) = stack.pop() {
                if processed {
                    state[node] = 2;
                    continue;
                }
                if state[node] == 1 {
                    continue;
                }
                state[node] = 1;
                stack.push((node, true));
                for &pred in &smaller_than[node] {
                    match state[pred] {
                        0 => stack.push((pred, false)),
                        1 => {
                            return Err(RewriteError::CyclicOrder {
                                rule: system.rules()[pred].id.clone(),
                            })
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    // Transitive closure of the predecessor sets, smallest first.
    let below = {
        let mut below: Vec<Option<BTreeSet<usize>>> = alloc::vec![None; n];
        fn collect(
            i: usize,
            direct: &[BTreeSet<usize>],
            below: &mut Vec<Option<BTreeSet<usize>>>,
        ) -> BTreeSet<usize> {
            if let Some(b) = &below[i] {
                return b.clone();
            }
            let mut acc = BTreeSet::new();
            for &p in &direct[i] {
                acc.insert(p);
                acc.extend(collect(p, direct, below));
            }
            below[i] = Some(acc.clone());
            acc
        }
        (0..n)
            .map(|i| collect(i, &smaller_than, &mut below))
            .collect::<Vec<_>>()
    };

    let generators = system.generators();
    for (i, rule) in system.rules().iter().enumerate() {
        let r_s_lhs = apply_to_basis(&resolved, &rule.lhs);
        let residual = rule.rhs.sub(&r_s_lhs);
        if residual.is_zero() {
            continue;
        }
        let gens: Vec<_> = below[i].iter().map(|&j| generators[j].clone()).collect();
        match span_membership_vectors(&gens, &residual, node_budget)? {
            SpanResult::Member { .. } => {}
            SpanResult::NotMember => {
                return Ok(Decreasing::Witness { rule: rule.id.clone() });
            }
        }
    }
    Ok(Decreasing::Decreasing)
}

fn apply_to_basis<B: Basis, K: Field>(
    resolved: &super::system::ResolvedStrategy<'_, B, K>,
    e: &B,
) -> LinComb<B, K> {
    use super::engine::StrategySource;
    resolved
        .selected_rhs(e)
        .unwrap_or_else(|| LinComb::basis(e.clone()))
}
