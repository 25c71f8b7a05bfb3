//! Parallel and single-step reduction over abstract rule sources.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::system::{RewritingSystem, RuleId};
use super::trace::{ReductionTrace, TraceStep};
use super::RewriteError;
use crate::linspace::{Basis, Field, LinComb};

/// Provider of the selected rule per basis element; `None` means the element
/// is fixed by the parallel operator.
pub trait StrategySource<B: Basis, K: Field> {
    fn selected_rhs(&self, e: &B) -> Option<LinComb<B, K>>;
}

/// Provider of all rules with a given left-hand side, in deterministic order.
///
/// Implementations used with the single-step operations must guarantee that
/// no returned right-hand side contains its left-hand side.
pub trait RuleSource<B: Basis, K: Field> {
    fn rules_for(&self, e: &B) -> Vec<(RuleId, LinComb<B, K>)>;

    /// Whether the `lhs not in supp(rhs)` discipline is guaranteed.
    fn is_strict(&self) -> bool {
        true
    }
}

/// One application of the parallel operator `r_S`: every support element with
/// a selected rule is replaced by that rule's right-hand side, all at once and
/// with its coefficient; everything else is fixed. Linear by construction.
pub fn apply_r_s<B: Basis, K: Field, S: StrategySource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    strategy: &S,
) -> LinComb<B, K> {
    let mut out = LinComb::zero();
    for (e, coeff) in u.iter() {
        match strategy.selected_rhs(e) {
            Some(rhs) => out = out.add_scaled(coeff, &rhs),
            None => out = out.add(&LinComb::term(e.clone(), coeff.clone())),
        }
    }
    out
}

/// Iterate `r_S` to its fixpoint, the S-normal form.
pub fn snf<B: Basis, K: Field, S: StrategySource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    strategy: &S,
    fuel: usize,
) -> Result<LinComb<B, K>, RewriteError> {
    let mut current = u.clone();
    for _ in 0..fuel {
        let next = apply_r_s(&current, strategy);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    Err(RewriteError::FuelExhausted { fuel })
}

/// Like [`snf`] but returns the whole chain of iterates, starting at `u` and
/// ending at the fixpoint.
pub fn snf_iterates<B: Basis, K: Field, S: StrategySource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    strategy: &S,
    fuel: usize,
) -> Result<Vec<LinComb<B, K>>, RewriteError> {
    let mut chain = alloc::vec![u.clone()];
    for _ in 0..fuel {
        let next = apply_r_s(chain.last().unwrap(), strategy);
        if next == *chain.last().unwrap() {
            return Ok(chain);
        }
        chain.push(next);
    }
    Err(RewriteError::FuelExhausted { fuel })
}

/// One single-step reduct: `... + coeff*reduced + rest` rewrites to
/// `... + coeff*rhs + rest`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step<B: Basis, K: Field> {
    pub rule: RuleId,
    pub reduced: B,
    pub coeff: K,
    pub result: LinComb<B, K>,
}

impl<B: Basis, K: Field> Step<B, K> {
    pub fn trace_step(&self) -> TraceStep<B, K> {
        TraceStep {
            rule: self.rule.clone(),
            reduced: self.reduced.clone(),
            coeff: self.coeff.clone(),
            result: self.result.clone(),
        }
    }
}

/// All single-step reducts of `u`, support elements in basis order and rules
/// per element in source order.
pub fn single_steps<B: Basis, K: Field, R: RuleSource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    source: &R,
) -> Vec<Step<B, K>> {
    let mut steps = Vec::new();
    for (e, coeff) in u.iter() {
        let (_, rest) = u.without(e);
        for (rule, rhs) in source.rules_for(e) {
            debug_assert!(!rhs.support_contains(e));
            steps.push(Step {
                rule,
                reduced: e.clone(),
                coeff: coeff.clone(),
                result: rest.add_scaled(coeff, &rhs),
            });
        }
    }
    steps
}

/// The spec'd single-step relation on a finite system: one reduct per pair of
/// a rule and a support occurrence of its left-hand side, rules enumerated in
/// declaration order. Requires the strict flag.
pub fn step_r<B: Basis, K: Field>(
    u: &LinComb<B, K>,
    system: &RewritingSystem<B, K>,
) -> Result<Vec<Step<B, K>>, RewriteError> {
    if !system.strict() {
        return Err(RewriteError::StrictFlagRequired);
    }
    let mut steps = Vec::new();
    for rule in system.rules() {
        if u.support_contains(&rule.lhs) {
            let (coeff, rest) = u.without(&rule.lhs);
            steps.push(Step {
                rule: rule.id.clone(),
                reduced: rule.lhs.clone(),
                coeff: coeff.clone(),
                result: rest.add_scaled(&coeff, &rule.rhs),
            });
        }
    }
    Ok(steps)
}

/// Every normal form reachable from `u` by single steps, exploring all
/// choices. `fuel` bounds the number of distinct vectors expanded; the error
/// means the exploration was still incomplete when fuel ran out.
pub fn normal_forms<B: Basis, K: Field, R: RuleSource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    source: &R,
    fuel: usize,
) -> Result<BTreeSet<LinComb<B, K>>, RewriteError> {
    let mut visited = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut normal = BTreeSet::new();
    visited.insert(u.clone());
    queue.push_back(u.clone());
    let mut budget = fuel;
    while let Some(current) = queue.pop_front() {
        if budget == 0 {
            return Err(RewriteError::FuelExhausted { fuel });
        }
        budget -= 1;
        let steps = single_steps(&current, source);
        if steps.is_empty() {
            normal.insert(current);
            continue;
        }
        for step in steps {
            if visited.insert(step.result.clone()) {
                queue.push_back(step.result);
            }
        }
    }
    Ok(normal)
}

/// Result of a joinability search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Joinability<B: Basis, K: Field> {
    Joinable {
        meet: LinComb<B, K>,
        left: ReductionTrace<B, K>,
        right: ReductionTrace<B, K>,
    },
    NotWithinFuel,
}

/// Internal search verdict distinguishing a fully explored (hence definitive)
/// failure from running out of fuel.
pub(super) enum MeetSearch<B: Basis, K: Field> {
    Met {
        meet: LinComb<B, K>,
        left: ReductionTrace<B, K>,
        right: ReductionTrace<B, K>,
    },
    Exhausted,
    OutOfFuel,
}

/// Bounded breadth-first search over single steps from both sides, with
/// canonical-form dedup; finds a common reduct when one exists within fuel.
pub(super) fn meet_search<B: Basis, K: Field, R: RuleSource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    v: &LinComb<B, K>,
    source: &R,
    fuel: usize,
) -> MeetSearch<B, K> {
    // Parents store (parent vector, step applied to it).
    type Parents<B, K> = BTreeMap<LinComb<B, K>, Option<(LinComb<B, K>, Step<B, K>)>>;
    let mut sides: [Parents<B, K>; 2] = [BTreeMap::new(), BTreeMap::new()];
    let mut queues: [VecDeque<LinComb<B, K>>; 2] = [VecDeque::new(), VecDeque::new()];
    sides[0].insert(u.clone(), None);
    sides[1].insert(v.clone(), None);
    queues[0].push_back(u.clone());
    queues[1].push_back(v.clone());

    let trace_to = |parents: &Parents<B, K>, root: &LinComb<B, K>, target: &LinComb<B, K>| {
        let mut steps = VecDeque::new();
        let mut cursor = target.clone();
        while let Some(Some((parent, step))) = parents.get(&cursor) {
            steps.push_front(step.trace_step());
            cursor = parent.clone();
        }
        debug_assert_eq!(&cursor, root);
        ReductionTrace { start: root.clone(), steps: steps.into_iter().collect() }
    };

    if sides[1].contains_key(u) {
        // u == v: joinable with empty traces.
        return MeetSearch::Met {
            meet: u.clone(),
            left: ReductionTrace { start: u.clone(), steps: Vec::new() },
            right: ReductionTrace { start: v.clone(), steps: Vec::new() },
        };
    }

    let mut budget = fuel;
    let mut side = 0;
    loop {
        if queues[0].is_empty() && queues[1].is_empty() {
            return MeetSearch::Exhausted;
        }
        if queues[side].is_empty() {
            side = 1 - side;
        }
        if budget == 0 {
            return MeetSearch::OutOfFuel;
        }
        budget -= 1;
        let current = queues[side].pop_front().unwrap();
        for step in single_steps(&current, source) {
            let child = step.result.clone();
            if !sides[side].contains_key(&child) {
                sides[side].insert(child.clone(), Some((current.clone(), step)));
                if sides[1 - side].contains_key(&child) {
                    let left = trace_to(&sides[0], u, &child);
                    let right = trace_to(&sides[1], v, &child);
                    return MeetSearch::Met { meet: child, left, right };
                }
                queues[side].push_back(child);
            }
        }
        side = 1 - side;
    }
}

/// Whether `u` and `v` reduce to a common vector, searching both sides
/// breadth-first within fuel. A definitive "no" is reported as
/// `NotWithinFuel` as well: the caller cannot distinguish exhaustion from
/// fuel here, only [`check_local_confluence`](super::check_local_confluence)
/// does.
pub fn joinable<B: Basis, K: Field, R: RuleSource<B, K> + ?Sized>(
    u: &LinComb<B, K>,
    v: &LinComb<B, K>,
    source: &R,
    fuel: usize,
) -> Result<Joinability<B, K>, RewriteError> {
    if !source.is_strict() {
        return Err(RewriteError::StrictFlagRequired);
    }
    Ok(match meet_search(u, v, source, fuel) {
        MeetSearch::Met { meet, left, right } => Joinability::Joinable { meet, left, right },
        MeetSearch::Exhausted | MeetSearch::OutOfFuel => Joinability::NotWithinFuel,
    })
}
