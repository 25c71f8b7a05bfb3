//! Single-step reduction traces and serialization of parallel steps.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::certify::certify_strategy;
use super::engine::{apply_r_s, RuleSource, StrategySource};
use super::system::{Prestrategy, RewritingSystem, RuleId};
use super::RewriteError;
use crate::linspace::{Basis, Field, LinComb};

/// One recorded single step: the rule applied, the basis element reduced with
/// its full coefficient, and the resulting vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep<B: Basis, K: Field> {
    pub rule: RuleId,
    pub reduced: B,
    pub coeff: K,
    pub result: LinComb<B, K>,
}

/// A sequence of single steps; consecutive intermediates differ by exactly
/// one rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace<B: Basis, K: Field> {
    pub start: LinComb<B, K>,
    pub steps: Vec<TraceStep<B, K>>,
}

impl<B: Basis, K: Field> ReductionTrace<B, K> {
    pub fn endpoint(&self) -> &LinComb<B, K> {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Check the trace against a rule source: every step must apply one rule
    /// of the source to the full coefficient of one support element.
    pub fn validate<R: RuleSource<B, K> + ?Sized>(&self, source: &R) -> bool {
        let mut current = self.start.clone();
        for step in &self.steps {
            let coeff = current.coeff(&step.reduced);
            if coeff.is_zero() || coeff != step.coeff {
                return false;
            }
            let Some((_, rhs)) = source
                .rules_for(&step.reduced)
                .into_iter()
                .find(|(id, _)| id == &step.rule)
            else {
                return false;
            };
            let (_, rest) = current.without(&step.reduced);
            if rest.add_scaled(&coeff, &rhs) != step.result {
                return false;
            }
            current = step.result.clone();
        }
        true
    }
}

/// Serialize one parallel step into single steps: a sequence of ordinary
/// reductions from `u` to `r_S(u)`, reducing minimal layers first and the
/// preorder-maximal support elements last.
///
/// Requires the strict flag and a certified strategy.
pub fn serialize_parallel<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    strategy: &Prestrategy,
    u: &LinComb<B, K>,
    node_budget: usize,
) -> Result<ReductionTrace<B, K>, RewriteError> {
    if !system.strict() {
        return Err(RewriteError::StrictFlagRequired);
    }
    let roots: BTreeSet<B> = u.support().cloned().collect();
    let certificate = certify_strategy(system, strategy, &roots, node_budget)?;
    if !certificate.is_certified() {
        return Err(RewriteError::NotCertified);
    }
    let resolved = strategy.resolve(system)?;

    // Strict descendants in the one-step support graph: e' in desc(e) iff
    // e' is strictly below e for the strategy preorder.
    let mut desc_memo: BTreeMap<B, BTreeSet<B>> = BTreeMap::new();
    fn descendants<B: Basis, K: Field, S: StrategySource<B, K>>(
        e: &B,
        strategy: &S,
        memo: &mut BTreeMap<B, BTreeSet<B>>,
    ) -> BTreeSet<B> {
        if let Some(d) = memo.get(e) {
            return d.clone();
        }
        let mut acc = BTreeSet::new();
        if let Some(rhs) = strategy.selected_rhs(e) {
            if rhs != LinComb::basis(e.clone()) {
                for succ in rhs.support() {
                    acc.insert(succ.clone());
                    acc.extend(descendants(succ, strategy, memo));
                }
            }
        }
        memo.insert(e.clone(), acc.clone());
        acc
    }

    // Schedule: which basis element to reduce at each step, deepest layer
    // first, preorder-maximal elements of each layer last.
    let mut schedule: Vec<B> = Vec::new();
    let mut layer = u.clone();
    loop {
        if apply_r_s(&layer, &resolved) == layer {
            break;
        }
        let support: Vec<B> = layer.support().cloned().collect();
        let maximal: Vec<B> = support
            .iter()
            .filter(|e| {
                !support.iter().any(|f| {
                    f != *e && descendants(f, &resolved, &mut desc_memo).contains(*e)
                })
            })
            .cloned()
            .collect();
        let mut rest = layer.clone();
        for e in &maximal {
            let (_, without) = rest.without(e);
            rest = without;
        }
        // Reduce the non-maximal part first, then each selected maximal
        // element; recursion is unrolled by stacking maximal layers.
        let mut selected_maximal: Vec<B> = maximal
            .into_iter()
            .filter(|e| resolved.selected_rhs(e).is_some())
            .collect();
        selected_maximal.reverse();
        schedule.extend(selected_maximal);
        layer = rest;
    }
    schedule.reverse();

    // Replay the schedule as single steps from u.
    let mut steps = Vec::new();
    let mut current = u.clone();
    for e in schedule {
        let rule = resolved
            .selected_rule(&e)
            .expect("scheduled element has a selected rule");
        let (coeff, rest) = current.without(&e);
        debug_assert!(!coeff.is_zero(), "scheduled element lost its coefficient");
        let result = rest.add_scaled(&coeff, &rule.rhs);
        steps.push(TraceStep {
            rule: rule.id.clone(),
            reduced: e,
            coeff,
            result: result.clone(),
        });
        current = result;
    }
    debug_assert_eq!(&current, &apply_r_s(u, &resolved));
    Ok(ReductionTrace { start: u.clone(), steps })
}
