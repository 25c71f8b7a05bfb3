//! Involutive divisions on derivative monomials and the rewriting strategies
//! they induce on the rational Weyl algebra: multiplicative variables,
//! involutive divisors, autoreduction, division axioms, the parallel normal
//! form, involutivity checking, and completion by nonmultiplicative
//! prolongations.

mod axioms;
mod complete;
mod division;
mod snf;
mod strategy;
mod system;

pub use axioms::{check_division_axioms, AxiomViolation, DivisionAxioms};
pub use complete::complete;
pub use division::{
    check_autoreduced, involutive_divides, involutive_divisor, multiplicative_variables,
    AutoreduceCheck, CustomDivision, Division, DivisorSearch, PommaretConvention, VarSet,
};
pub use snf::{check_involutive, strategy_snf, InvolutiveCheckMode, InvolutiveStrategy, Involutivity};
pub use strategy::{
    check_involutive_strategy, s_division_agreement, s_division_axioms, window_strategy_of_division,
    InvolutiveStrategyCheck, SDivisionAxioms, WindowStrategy,
};
pub use system::{left_autoreduced, InvolutiveSystem};

use crate::weyl::DMonomial;
use core::fmt;

/// Errors raised by involutive-division operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutiveError {
    /// The monomial is not a member of the reference set.
    NotInU { monomial: DMonomial },
    /// The leading monomials are not autoreduced for the division; the
    /// witness pair is a proper involutive divisibility.
    NotAutoreduced { divisor: DMonomial, dividend: DMonomial },
    /// Completion did not stabilize within the round budget.
    RoundBudgetExhausted { rounds: usize },
    /// A selected rule's left-hand side exceeds the monomial window.
    WindowTooSmall { needed: u32, window: u32 },
    /// Two selected rules share a left-hand side.
    DuplicateSelectedLhs { lhs: DMonomial },
}

impl fmt::Display for InvolutiveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutiveError::NotInU { monomial } => {
                write!(f, "monomial {monomial} is not in the reference set")
            }
            InvolutiveError::NotAutoreduced { divisor, dividend } => {
                write!(f, "set is not autoreduced: {divisor} involutively divides {dividend}")
            }
            InvolutiveError::RoundBudgetExhausted { rounds } => {
                write!(f, "completion exceeded the round budget of {rounds}")
            }
            InvolutiveError::WindowTooSmall { needed, window } => {
                write!(f, "window degree {window} too small: a rule needs degree {needed}")
            }
            InvolutiveError::DuplicateSelectedLhs { lhs } => {
                write!(f, "two selected rules share the left-hand side {lhs}")
            }
        }
    }
}
