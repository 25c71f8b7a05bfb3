//! Involutive strategies over a finite monomial window, and the division
//! axioms of the divisibility relation a strategy defines.
//!
//! A strategy over the induced rules assigns to each selected left-hand side
//! `d^alpha * lm(D)` the rule rewriting it with cofactor `d^alpha`; the
//! strategy is involutive when every selected cofactor uses only variables
//! `d_i` whose own prolongation rule `d_i * lm(D)` is selected.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::division::{multiplicative_variables, VarSet};
use super::system::InvolutiveSystem;
use super::InvolutiveError;
use crate::weyl::{enumerate_monomials, DMonomial, ThetaSystem};

/// A finite selection of rules of the induced system, each identified by
/// `(operator index, cofactor)`, restricted to left-hand sides of total
/// degree at most `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowStrategy {
    pub degree: u32,
    pub selection: BTreeSet<(usize, DMonomial)>,
}

impl WindowStrategy {
    /// Validate the prestrategy conditions: distinct left-hand sides, all
    /// inside the window.
    pub fn validate(&self, theta: &ThetaSystem) -> Result<(), InvolutiveError> {
        let lms = theta.leading_monomials();
        let mut seen = BTreeSet::new();
        for (index, alpha) in &self.selection {
            let lhs = alpha.mul(&lms[*index]);
            if lhs.total_degree() > self.degree {
                return Err(InvolutiveError::WindowTooSmall {
                    needed: lhs.total_degree(),
                    window: self.degree,
                });
            }
            if !seen.insert(lhs.clone()) {
                return Err(InvolutiveError::DuplicateSelectedLhs { lhs });
            }
        }
        Ok(())
    }

    /// Whether `lm(D_index)` S-divides `m`: the rule with that left-hand
    /// side and the matching cofactor is selected.
    pub fn s_divides(&self, index: usize, lms: &[DMonomial], m: &DMonomial) -> bool {
        m.checked_div(&lms[index])
            .map_or(false, |alpha| self.selection.contains(&(index, alpha)))
    }

    /// The S-multiplicative variables of operator `index`.
    pub fn s_multiplicative(&self, index: usize, nvars: usize) -> VarSet {
        (0..nvars)
            .filter(|&i| self.selection.contains(&(index, DMonomial::unit(nvars, i))))
            .collect()
    }
}

/// The strategy a division induces, restricted to the window: select every
/// rule whose cofactor is multiplicative for its operator.
pub fn window_strategy_of_division(
    system: &InvolutiveSystem,
    degree: u32,
) -> WindowStrategy {
    let lms = system.leading_monomials();
    let tables = system.multiplicative_tables();
    let nvars = system.theta().nvars();
    let mut selection = BTreeSet::new();
    for (index, u) in lms.iter().enumerate() {
        if u.total_degree() > degree {
            continue;
        }
        for alpha in enumerate_monomials(nvars, degree - u.total_degree()) {
            if alpha.support_vars().all(|i| tables[index].contains(&i)) {
                selection.insert((index, alpha));
            }
        }
    }
    WindowStrategy { degree, selection }
}

/// Verdict of the involutive-strategy check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutiveStrategyCheck {
    Involutive,
    /// A selected rule whose cofactor uses a non-S-multiplicative variable.
    Witness { op_index: usize, cofactor: DMonomial },
}

/// Check that every selected cofactor is supported on S-multiplicative
/// variables.
pub fn check_involutive_strategy(
    theta: &ThetaSystem,
    strategy: &WindowStrategy,
) -> Result<InvolutiveStrategyCheck, InvolutiveError> {
    strategy.validate(theta)?;
    let nvars = theta.nvars();
    for (index, alpha) in &strategy.selection {
        let mult = strategy.s_multiplicative(*index, nvars);
        if !alpha.support_vars().all(|i| mult.contains(&i)) {
            return Ok(InvolutiveStrategyCheck::Witness {
                op_index: *index,
                cofactor: alpha.clone(),
            });
        }
    }
    Ok(InvolutiveStrategyCheck::Involutive)
}

/// Verdict of the S-division axiom check (axioms a through e; the filter
/// axiom needs a division defined on arbitrary subsets, which a strategy
/// does not provide).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SDivisionAxioms {
    Pass,
    Violation { axiom: char, details: Vec<DMonomial> },
}

/// Check axioms a) through e) for the S-division over the window monomials.
pub fn s_division_axioms(
    theta: &ThetaSystem,
    strategy: &WindowStrategy,
) -> Result<SDivisionAxioms, InvolutiveError> {
    strategy.validate(theta)?;
    let lms = theta.leading_monomials();
    let window = enumerate_monomials(theta.nvars(), strategy.degree);
    let divides = |i: usize, m: &DMonomial| strategy.s_divides(i, &lms, m);

    // a) S-divisibility refines ordinary divisibility: structural, since a
    // selected rule's left-hand side is a multiple of its leading monomial.
    for (i, u) in lms.iter().enumerate() {
        for m in &window {
            if divides(i, m) && !u.divides(m) {
                return Ok(SDivisionAxioms::Violation {
                    axiom: 'a',
                    details: alloc::vec![u.clone(), m.clone()],
                });
            }
        }
        // b) reflexivity: the trivial-cofactor rule must be selected.
        if u.total_degree() <= strategy.degree && !divides(i, u) {
            return Ok(SDivisionAxioms::Violation { axiom: 'b', details: alloc::vec![u.clone()] });
        }
    }

    // c) u | u*m and u | u*m' iff u | u*m*m', all products in the window.
    for (i, u) in lms.iter().enumerate() {
        for m in &window {
            if u.total_degree() + m.total_degree() > strategy.degree {
                continue;
            }
            for m_prime in &window {
                if u.total_degree() + m.total_degree() + m_prime.total_degree() > strategy.degree {
                    continue;
                }
                let both = divides(i, &u.mul(m)) && divides(i, &u.mul(m_prime));
                let joint = divides(i, &u.mul(m).mul(m_prime));
                if both != joint {
                    return Ok(SDivisionAxioms::Violation {
                        axiom: 'c',
                        details: alloc::vec![u.clone(), m.clone(), m_prime.clone()],
                    });
                }
            }
        }
    }

    // d) common multiples force comparability.
    for (i, u) in lms.iter().enumerate() {
        for (j, u_prime) in lms.iter().enumerate() {
            if i == j {
                continue;
            }
            for m in &window {
                if divides(i, m) && divides(j, m) && !divides(i, u_prime) && !divides(j, u) {
                    return Ok(SDivisionAxioms::Violation {
                        axiom: 'd',
                        details: alloc::vec![u.clone(), u_prime.clone(), m.clone()],
                    });
                }
            }
        }
    }

    // e) transitivity.
    for (i, u) in lms.iter().enumerate() {
        for (j, u_prime) in lms.iter().enumerate() {
            if !divides(i, u_prime) {
                continue;
            }
            for m in &window {
                if divides(j, m) && !divides(i, m) {
                    return Ok(SDivisionAxioms::Violation {
                        axiom: 'e',
                        details: alloc::vec![u.clone(), u_prime.clone(), m.clone()],
                    });
                }
            }
        }
    }

    Ok(SDivisionAxioms::Pass)
}

/// For the induced strategy of the system's division, compare the
/// S-multiplicative variables of each operator with the division's own
/// multiplicative variables on the leading monomials. Only operators whose
/// unit prolongations fit inside the window are meaningful here.
pub fn s_division_agreement(system: &InvolutiveSystem, degree: u32) -> bool {
    let strategy = window_strategy_of_division(system, degree);
    let lms = system.leading_monomials();
    let nvars = system.theta().nvars();
    lms.iter().enumerate().all(|(index, u)| {
        if u.total_degree() + 1 > degree {
            return true;
        }
        let division_vars =
            multiplicative_variables(u, &lms, system.division()).expect("member of own set");
        strategy.s_multiplicative(index, nvars) == division_vars
    })
}
