//! The parallel normal form induced by an involutive division, and the
//! involutivity check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::division::VarSet;
use super::system::{left_autoreduced, InvolutiveSystem};
use super::{AutoreduceCheck, InvolutiveError};
use crate::linspace::LinComb;
use crate::rewrite::{snf, StrategySource};
use crate::scalar::RatFunc;
use crate::weyl::{enumerate_monomials, weyl_mul, DMonomial, ThetaRules, WeylOp};

/// The strategy selecting, for each monomial with an involutive divisor
/// `lm(D)` and multiplicative cofactor `d^alpha`, the rule rewriting it to
/// the operator product `d^alpha * r(D)`. Left-autoreduction makes the
/// divisor, hence the selection, unique.
pub struct InvolutiveStrategy<'a> {
    rules: ThetaRules<'a>,
    lms: Vec<DMonomial>,
    tables: Vec<VarSet>,
    cache: RefCell<BTreeMap<DMonomial, Option<(usize, DMonomial)>>>,
}

impl<'a> InvolutiveStrategy<'a> {
    pub fn new(system: &'a InvolutiveSystem) -> Result<Self, InvolutiveError> {
        if let AutoreduceCheck::Witness { divisor, dividend } = left_autoreduced(system) {
            return Err(InvolutiveError::NotAutoreduced { divisor, dividend });
        }
        Ok(InvolutiveStrategy {
            rules: ThetaRules::new(system.theta()),
            lms: system.leading_monomials(),
            tables: system.multiplicative_tables(),
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    /// The unique involutive divisor of `m`, as (operator index, cofactor).
    pub fn divisor(&self, m: &DMonomial) -> Option<(usize, DMonomial)> {
        if let Some(hit) = self.cache.borrow().get(m) {
            return hit.clone();
        }
        let mut found = None;
        for (index, u) in self.lms.iter().enumerate() {
            if let Some(cofactor) = m.checked_div(u) {
                if cofactor.support_vars().all(|i| self.tables[index].contains(&i)) {
                    debug_assert!(found.is_none(), "autoreduced sets have unique divisors");
                    found = Some((index, cofactor));
                }
            }
        }
        self.cache.borrow_mut().insert(m.clone(), found.clone());
        found
    }

    pub fn rules(&self) -> &ThetaRules<'a> {
        &self.rules
    }
}

impl StrategySource<DMonomial, RatFunc> for InvolutiveStrategy<'_> {
    fn selected_rhs(&self, m: &DMonomial) -> Option<LinComb<DMonomial, RatFunc>> {
        self.divisor(m)
            .map(|(index, cofactor)| self.rules.rhs(index, &cofactor))
    }
}

/// The involutive normal form: iterate the parallel operator to its fixpoint.
/// Terminates unconditionally because every replacement monomial is strictly
/// smaller for the system's order.
pub fn strategy_snf(op: &WeylOp, system: &InvolutiveSystem) -> Result<WeylOp, InvolutiveError> {
    let strategy = InvolutiveStrategy::new(system)?;
    Ok(snf(op, &strategy, usize::MAX).expect("order descent terminates"))
}

/// How to quantify prolongations in [`check_involutive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutiveCheckMode {
    /// Single-variable prolongations `d_i * D`, the classical test for the
    /// continuous divisions.
    Prolongations,
    /// All prolongations `d^alpha * D` with `|alpha|` up to the depth.
    Bounded(u32),
}

/// Verdict of the involutivity check. A witness certifies non-involutivity
/// outright; `Involutive` from the bounded modes is relative to the
/// quantifier range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Involutivity {
    Involutive,
    Witness {
        op_index: usize,
        prolongation: DMonomial,
        residual: WeylOp,
    },
}

/// Check that every quantified prolongation of every operator normalizes to
/// zero under the involutive strategy.
pub fn check_involutive(
    system: &InvolutiveSystem,
    mode: InvolutiveCheckMode,
) -> Result<Involutivity, InvolutiveError> {
    let strategy = InvolutiveStrategy::new(system)?;
    let nvars = system.theta().nvars();
    let cofactors: Vec<DMonomial> = match mode {
        InvolutiveCheckMode::Prolongations => {
            (0..nvars).map(|i| DMonomial::unit(nvars, i)).collect()
        }
        InvolutiveCheckMode::Bounded(depth) => enumerate_monomials(nvars, depth),
    };
    for (op_index, op) in system.theta().ops().iter().enumerate() {
        for alpha in &cofactors {
            let prolonged = weyl_mul(&WeylOp::basis(alpha.clone()), op).expect("dimensions agree");
            let residual = snf(&prolonged, &strategy, usize::MAX).expect("order descent terminates");
            if !residual.is_zero() {
                return Ok(Involutivity::Witness {
                    op_index,
                    prolongation: alpha.clone(),
                    residual,
                });
            }
        }
    }
    Ok(Involutivity::Involutive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutive::division::{Division, PommaretConvention};
    use crate::scalar::{rat, MultiPoly, RatFunc};
    use crate::weyl::{constant_op, d_op, MonomialOrder, ThetaSystem};

    fn ode_theta() -> ThetaSystem {
        let d = d_op(1, 0).sub(&constant_op(RatFunc::from_poly(MultiPoly::variable(1, 0))));
        ThetaSystem::new(1, MonomialOrder::deglex(1), alloc::vec![("D".into(), d)]).unwrap()
    }

    #[test]
    fn pommaret_snf_of_the_prolongation() {
        // SNF_P(d * (d - x)) = d^2 - x^2 - 1 under the paper convention.
        let sys = InvolutiveSystem::new(
            ode_theta(),
            Division::Pommaret(PommaretConvention::Paper),
        )
        .unwrap();
        let prolonged = weyl_mul(&d_op(1, 0), &sys.theta().ops()[0]).unwrap();
        let x = MultiPoly::variable(1, 0);
        let expected = WeylOp::basis(DMonomial::new(alloc::vec![2])).sub(&constant_op(
            RatFunc::from_poly(x.mul(&x).add(&MultiPoly::one(1))),
        ));
        assert_eq!(strategy_snf(&prolonged, &sys).unwrap(), expected);
    }

    #[test]
    fn janet_snf_of_the_prolongation_vanishes() {
        let sys = InvolutiveSystem::new(ode_theta(), Division::Janet).unwrap();
        let prolonged = weyl_mul(&d_op(1, 0), &sys.theta().ops()[0]).unwrap();
        assert!(strategy_snf(&prolonged, &sys).unwrap().is_zero());
    }

    #[test]
    fn ode_involutivity_verdicts() {
        for division in [Division::Janet, Division::Thomas] {
            let sys = InvolutiveSystem::new(ode_theta(), division).unwrap();
            assert_eq!(
                check_involutive(&sys, InvolutiveCheckMode::Prolongations).unwrap(),
                Involutivity::Involutive
            );
        }
        let sys = InvolutiveSystem::new(
            ode_theta(),
            Division::Pommaret(PommaretConvention::Paper),
        )
        .unwrap();
        match check_involutive(&sys, InvolutiveCheckMode::Prolongations).unwrap() {
            Involutivity::Witness { residual, .. } => {
                let x = MultiPoly::variable(1, 0);
                let expected = WeylOp::basis(DMonomial::new(alloc::vec![2])).sub(&constant_op(
                    RatFunc::from_poly(x.mul(&x).add(&MultiPoly::one(1))),
                ));
                assert_eq!(residual, expected);
            }
            Involutivity::Involutive => panic!("{{d - x}} is not Pommaret-involutive"),
        }
    }

    #[test]
    fn janet_example_snf_of_degree_two_prolongation() {
        // SNF_J(d3^2 * D2) = 2 d1^2 d2.
        let sys = InvolutiveSystem::new(
            crate::involutive::system::tests::janet_example(),
            Division::Janet,
        )
        .unwrap();
        let prolonged = weyl_mul(
            &WeylOp::basis(DMonomial::new(alloc::vec![0, 0, 2])),
            &sys.theta().ops()[1],
        )
        .unwrap();
        let expected = WeylOp::term(
            DMonomial::new(alloc::vec![2, 1, 0]),
            RatFunc::constant(3, rat(2, 1)),
        );
        assert_eq!(strategy_snf(&prolonged, &sys).unwrap(), expected);
    }

    #[test]
    fn janet_example_is_not_involutive() {
        let sys = InvolutiveSystem::new(
            crate::involutive::system::tests::janet_example(),
            Division::Janet,
        )
        .unwrap();
        assert!(matches!(
            check_involutive(&sys, InvolutiveCheckMode::Prolongations).unwrap(),
            Involutivity::Witness { op_index: 1, .. }
        ));
    }
}
