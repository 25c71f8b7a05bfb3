//! The rewriting relation induced by a set of monic operators: every rule
//! rewrites `d^alpha * lm(D)` to the operator product `d^alpha * r(D)`, for
//! every cofactor monomial `d^alpha`. Replacement monomials are strictly
//! smaller, so reduction terminates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;

use super::monomial::{DMonomial, MonomialOrder};
use super::op::{is_monic, lm, r_op, weyl_mul, WeylOp};
use super::WeylError;
use crate::rewrite::{RewriteError, RuleSource, RewritingSystem, Rule, RuleId};
use crate::scalar::RatFunc;

/// A finite family of named monic operators over a fixed monomial order.
#[derive(Clone, Debug)]
pub struct ThetaSystem {
    nvars: usize,
    order: MonomialOrder,
    names: Vec<String>,
    ops: Vec<WeylOp>,
}

impl ThetaSystem {
    pub fn new(
        nvars: usize,
        order: MonomialOrder,
        named_ops: Vec<(String, WeylOp)>,
    ) -> Result<Self, WeylError> {
        assert_eq!(order.nvars(), nvars);
        let mut names = Vec::new();
        let mut ops = Vec::new();
        for (name, op) in named_ops {
            if names.contains(&name) {
                return Err(WeylError::DuplicateOpName { name });
            }
            if op.is_zero() {
                return Err(WeylError::ZeroOperator);
            }
            if let Some((m, _)) = op.iter().next() {
                if m.nvars() != nvars {
                    return Err(WeylError::DimensionMismatch { left: nvars, right: m.nvars() });
                }
            }
            if !is_monic(&op, &order) {
                return Err(WeylError::NotMonic);
            }
            names.push(name);
            ops.push(op);
        }
        Ok(ThetaSystem { nvars, order, names, ops })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ops(&self) -> &[WeylOp] {
        &self.ops
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Leading monomials, in declaration order.
    pub fn leading_monomials(&self) -> Vec<DMonomial> {
        self.ops
            .iter()
            .map(|op| lm(op, &self.order).expect("operators are nonzero").clone())
            .collect()
    }

    /// Append a named operator; same validations as construction.
    pub fn with_op(&self, name: String, op: WeylOp) -> Result<Self, WeylError> {
        let mut named: Vec<(String, WeylOp)> = self
            .names
            .iter()
            .cloned()
            .zip(self.ops.iter().cloned())
            .collect();
        named.push((name, op));
        ThetaSystem::new(self.nvars, self.order.clone(), named)
    }

    /// The reduction tail `r(D_index)`.
    pub fn tail(&self, index: usize) -> WeylOp {
        r_op(&self.ops[index], &self.order).expect("operators are monic")
    }
}

/// The induced rules as a [`RuleSource`]: for a monomial `m`, one rule per
/// operator whose leading monomial divides `m` in the ordinary sense, in
/// declaration order. Right-hand sides are cached per (operator, cofactor).
pub struct ThetaRules<'a> {
    system: &'a ThetaSystem,
    lms: Vec<DMonomial>,
    tails: Vec<WeylOp>,
    cache: RefCell<BTreeMap<(usize, DMonomial), WeylOp>>,
}

impl<'a> ThetaRules<'a> {
    pub fn new(system: &'a ThetaSystem) -> Self {
        ThetaRules {
            system,
            lms: system.leading_monomials(),
            tails: (0..system.len()).map(|i| system.tail(i)).collect(),
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn system(&self) -> &ThetaSystem {
        self.system
    }

    pub fn leading_monomials(&self) -> &[DMonomial] {
        &self.lms
    }

    /// The rule right-hand side for operator `index` and cofactor `alpha`:
    /// the operator product `d^alpha * r(D_index)`.
    pub fn rhs(&self, index: usize, alpha: &DMonomial) -> WeylOp {
        if let Some(hit) = self.cache.borrow().get(&(index, alpha.clone())) {
            return hit.clone();
        }
        let cofactor = WeylOp::basis(alpha.clone());
        let value = weyl_mul(&cofactor, &self.tails[index]).expect("dimensions agree");
        self.cache
            .borrow_mut()
            .insert((index, alpha.clone()), value.clone());
        value
    }

    pub fn rule_id(&self, index: usize, alpha: &DMonomial) -> RuleId {
        RuleId::new(format!("{}:{}", self.system.names[index], alpha))
    }

    /// `(operator index, cofactor)` pairs applicable to `m`.
    pub fn matches(&self, m: &DMonomial) -> Vec<(usize, DMonomial)> {
        self.lms
            .iter()
            .enumerate()
            .filter_map(|(i, u)| m.checked_div(u).map(|alpha| (i, alpha)))
            .collect()
    }
}

impl RuleSource<DMonomial, RatFunc> for ThetaRules<'_> {
    fn rules_for(&self, m: &DMonomial) -> Vec<(RuleId, WeylOp)> {
        self.matches(m)
            .into_iter()
            .map(|(i, alpha)| (self.rule_id(i, &alpha), self.rhs(i, &alpha)))
            .collect()
    }
}

/// Normal form under the deterministic strategy: reduce the order-greatest
/// reducible support monomial with the first matching operator, repeatedly.
/// Total because every replacement monomial is strictly smaller.
pub fn theta_nf(op: &WeylOp, system: &ThetaSystem) -> WeylOp {
    let rules = ThetaRules::new(system);
    let ord = system.order();
    let mut current = op.clone();
    loop {
        let target = current
            .support()
            .filter(|m| !rules.matches(m).is_empty())
            .max_by(|a, b| ord.compare(a, b))
            .cloned();
        let Some(mono) = target else {
            return current;
        };
        let (index, alpha) = rules.matches(&mono).into_iter().next().unwrap();
        let (coeff, rest) = current.without(&mono);
        current = rest.add_scaled(&coeff, &rules.rhs(index, &alpha));
    }
}

/// The set of all normal forms reachable by single steps, exploring every
/// (monomial, operator) choice; errors if fuel runs out before the
/// exploration is complete.
pub fn theta_nf_all_paths(
    op: &WeylOp,
    system: &ThetaSystem,
    fuel: usize,
) -> Result<BTreeSet<WeylOp>, RewriteError> {
    let rules = ThetaRules::new(system);
    crate::rewrite::normal_forms(op, &rules, fuel)
}

/// All derivative monomials of total degree at most `max_degree`, ascending
/// by (degree, lex).
pub fn enumerate_monomials(nvars: usize, max_degree: u32) -> Vec<DMonomial> {
    let mut all = Vec::new();
    let mut current = alloc::vec![0u32; nvars];
    loop {
        if current.iter().sum::<u32>() <= max_degree {
            all.push(DMonomial::new(current.clone()));
        }
        // Odometer over 0..=max_degree per position.
        let mut i = 0;
        loop {
            if i == nvars {
                all.sort_by(|a, b| {
                    a.total_degree()
                        .cmp(&b.total_degree())
                        .then_with(|| a.cmp(b))
                });
                return all;
            }
            if current[i] < max_degree {
                current[i] += 1;
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// The induced rules restricted to left-hand sides of bounded degree, as a
/// finite strict rewriting system. Rule ids are `name:cofactor`.
pub fn window_system(
    system: &ThetaSystem,
    max_degree: u32,
) -> RewritingSystem<DMonomial, RatFunc> {
    let rules_src = ThetaRules::new(system);
    let mut rules = Vec::new();
    for (index, u) in rules_src.leading_monomials().iter().enumerate() {
        let headroom = max_degree.saturating_sub(u.total_degree());
        if u.total_degree() > max_degree {
            continue;
        }
        for alpha in enumerate_monomials(system.nvars(), headroom) {
            rules.push(Rule {
                id: rules_src.rule_id(index, &alpha),
                lhs: alpha.mul(u),
                rhs: rules_src.rhs(index, &alpha),
            });
        }
    }
    RewritingSystem::new(rules, true).expect("window rules are strict and uniquely labelled")
}

/// Compare two operators' full support under the order, for tests that check
/// the per-step descent of reductions.
pub fn strictly_smaller_support(replacement: &WeylOp, replaced: &DMonomial, ord: &MonomialOrder) -> bool {
    replacement
        .support()
        .all(|m| ord.compare(m, replaced) == Ordering::Less)
}
