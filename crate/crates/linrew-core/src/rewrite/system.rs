//! Rule sets and prestrategies.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::engine::{RuleSource, StrategySource};
use super::RewriteError;
use crate::linspace::{Basis, Field, LinComb};

/// Identifier of a rewriting rule.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RuleId(pub String);

impl RuleId {
    pub fn new(id: impl Into<String>) -> Self {
        RuleId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A rewriting rule `lhs -> rhs` replacing one basis element by a vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule<B: Basis, K: Field> {
    pub id: RuleId,
    pub lhs: B,
    pub rhs: LinComb<B, K>,
}

/// A finite set of rewriting rules with unique ids.
///
/// With `strict` on (the default), every rule must satisfy
/// `lhs not in supp(rhs)`; the single-step operations require this. The
/// parallel operations accept either setting.
#[derive(Clone, Debug)]
pub struct RewritingSystem<B: Basis, K: Field> {
    rules: Vec<Rule<B, K>>,
    strict: bool,
}

impl<B: Basis, K: Field> RewritingSystem<B, K> {
    pub fn new(rules: Vec<Rule<B, K>>, strict: bool) -> Result<Self, RewriteError> {
        let mut seen = BTreeSet::new();
        for rule in &rules {
            if !seen.insert(rule.id.clone()) {
                return Err(RewriteError::DuplicateRuleId { id: rule.id.clone() });
            }
            if strict && rule.rhs.support_contains(&rule.lhs) {
                return Err(RewriteError::StrictLhsInRhs { id: rule.id.clone() });
            }
        }
        Ok(RewritingSystem { rules, strict })
    }

    pub fn rules(&self) -> &[Rule<B, K>] {
        &self.rules
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn rule_by_id(&self, id: &RuleId) -> Option<(usize, &Rule<B, K>)> {
        self.rules.iter().enumerate().find(|(_, r)| &r.id == id)
    }

    /// Rules with the given left-hand side, in declaration order.
    pub fn rules_with_lhs<'a>(&'a self, e: &'a B) -> impl Iterator<Item = &'a Rule<B, K>> {
        self.rules.iter().filter(move |r| &r.lhs == e)
    }

    /// The generators `lhs - rhs` spanning the subspace the rules identify
    /// with zero, paired with their rule ids.
    pub fn generators(&self) -> Vec<(RuleId, LinComb<B, K>)> {
        self.rules
            .iter()
            .map(|r| {
                (
                    r.id.clone(),
                    LinComb::basis(r.lhs.clone()).sub(&r.rhs),
                )
            })
            .collect()
    }

    /// Every basis element mentioned by the rules.
    pub fn all_support(&self) -> BTreeSet<B> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            out.insert(rule.lhs.clone());
            out.extend(rule.rhs.support().cloned());
        }
        out
    }

    /// Validate a selection of rule ids as a prestrategy: ids must exist and
    /// the selected rules must have pairwise distinct left-hand sides.
    pub fn prestrategy(&self, ids: Vec<RuleId>) -> Result<Prestrategy, RewriteError> {
        let mut lhs_seen: BTreeMap<B, RuleId> = BTreeMap::new();
        for id in &ids {
            let (_, rule) = self
                .rule_by_id(id)
                .ok_or_else(|| RewriteError::UnknownRuleId { id: id.clone() })?;
            if let Some(first) = lhs_seen.insert(rule.lhs.clone(), id.clone()) {
                return Err(RewriteError::DuplicateStrategyLhs { first, second: id.clone() });
            }
        }
        Ok(Prestrategy { ids })
    }

    /// The prestrategy selecting every rule; valid when all left-hand sides
    /// are distinct.
    pub fn full_prestrategy(&self) -> Result<Prestrategy, RewriteError> {
        self.prestrategy(self.rules.iter().map(|r| r.id.clone()).collect())
    }
}

impl<B: Basis, K: Field> RuleSource<B, K> for RewritingSystem<B, K> {
    fn rules_for(&self, e: &B) -> Vec<(RuleId, LinComb<B, K>)> {
        self.rules_with_lhs(e)
            .map(|r| (r.id.clone(), r.rhs.clone()))
            .collect()
    }

    fn is_strict(&self) -> bool {
        self.strict
    }
}

/// A selection of rules with pairwise distinct left-hand sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prestrategy {
    ids: Vec<RuleId>,
}

impl Prestrategy {
    pub fn ids(&self) -> &[RuleId] {
        &self.ids
    }

    pub fn contains(&self, id: &RuleId) -> bool {
        self.ids.contains(id)
    }

    /// Resolve against a system into a lookup table usable as a
    /// [`StrategySource`]. Revalidates, so a stale selection errors.
    pub fn resolve<'a, B: Basis, K: Field>(
        &self,
        system: &'a RewritingSystem<B, K>,
    ) -> Result<ResolvedStrategy<'a, B, K>, RewriteError> {
        let mut table: BTreeMap<B, &'a Rule<B, K>> = BTreeMap::new();
        for id in &self.ids {
            let (_, rule) = system
                .rule_by_id(id)
                .ok_or_else(|| RewriteError::UnknownRuleId { id: id.clone() })?;
            if let Some(first) = table.insert(rule.lhs.clone(), rule) {
                return Err(RewriteError::DuplicateStrategyLhs {
                    first: first.id.clone(),
                    second: id.clone(),
                });
            }
        }
        Ok(ResolvedStrategy { table })
    }
}

/// A prestrategy resolved to a left-hand-side lookup table.
pub struct ResolvedStrategy<'a, B: Basis, K: Field> {
    table: BTreeMap<B, &'a Rule<B, K>>,
}

impl<B: Basis, K: Field> ResolvedStrategy<'_, B, K> {
    pub fn selected_rule(&self, e: &B) -> Option<&Rule<B, K>> {
        self.table.get(e).copied()
    }

    pub fn selected_lhs(&self) -> impl Iterator<Item = &B> {
        self.table.keys()
    }
}

impl<B: Basis, K: Field> StrategySource<B, K> for ResolvedStrategy<'_, B, K> {
    fn selected_rhs(&self, e: &B) -> Option<LinComb<B, K>> {
        self.table.get(e).map(|r| r.rhs.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type V = LinComb<&'static str, Rational>;

    fn rule(id: &str, lhs: &'static str, rhs: V) -> Rule<&'static str, Rational> {
        Rule { id: RuleId::new(id), lhs, rhs }
    }

    #[test]
    fn duplicate_ids_rejected() {
        let r = RewritingSystem::new(
            alloc::vec![rule("r1", "e1", V::basis("e2")), rule("r1", "e2", V::zero())],
            true,
        );
        assert!(matches!(r, Err(RewriteError::DuplicateRuleId { .. })));
    }

    #[test]
    fn strict_flag_rejects_lhs_in_rhs() {
        let r = RewritingSystem::new(
            alloc::vec![rule("r1", "e1", V::basis("e1").scale(&rat(2, 1)))],
            true,
        );
        assert!(matches!(r, Err(RewriteError::StrictLhsInRhs { .. })));
        // The parallel regime accepts it with the flag off.
        let r = RewritingSystem::new(
            alloc::vec![rule("r1", "e1", V::basis("e1").scale(&rat(2, 1)))],
            false,
        );
        assert!(r.is_ok());
    }

    #[test]
    fn prestrategy_requires_distinct_lhs() {
        let sys = RewritingSystem::new(
            alloc::vec![
                rule("r1", "e1", V::basis("e2")),
                rule("r2", "e1", V::basis("e3")),
            ],
            true,
        )
        .unwrap();
        assert!(matches!(
            sys.prestrategy(alloc::vec![RuleId::new("r1"), RuleId::new("r2")]),
            Err(RewriteError::DuplicateStrategyLhs { .. })
        ));
        assert!(sys.prestrategy(alloc::vec![RuleId::new("r1")]).is_ok());
        assert!(matches!(
            sys.prestrategy(alloc::vec![RuleId::new("zz")]),
            Err(RewriteError::UnknownRuleId { .. })
        ));
    }
}
