//! The rational Weyl algebra: differential operators with rational-function
//! coefficients, the commutation law `d_i f = f d_i + df/dx_i`, monomial
//! orders, monic operators, and the rewriting relation a set of monic
//! operators induces on derivative monomials.

mod monomial;
mod op;
mod theta;

pub use monomial::{compare, DMonomial, MonomialOrder, OrderKind};
pub use op::{
    act, binomial, constant_op, d_op, display_op, is_monic, lc, lm, make_monic, r_op, weyl_mul,
    WeylOp,
};
pub use theta::{
    enumerate_monomials, strictly_smaller_support, theta_nf, theta_nf_all_paths, window_system,
    ThetaRules, ThetaSystem,
};

use core::fmt;

/// Errors raised by Weyl-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylError {
    /// Operands live in algebras with different numbers of variables.
    DimensionMismatch { left: usize, right: usize },
    /// Leading data of the zero operator was requested.
    ZeroOperator,
    /// The operation requires a monic operator.
    NotMonic,
    /// An operator name appears twice in a system.
    DuplicateOpName { name: alloc::string::String },
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::DimensionMismatch { left, right } => {
                write!(f, "operator dimension mismatch: {left} vs {right} variables")
            }
            WeylError::ZeroOperator => write!(f, "zero operator has no leading monomial"),
            WeylError::NotMonic => write!(f, "operator is not monic"),
            WeylError::DuplicateOpName { name } => write!(f, "duplicate operator name {name}"),
        }
    }
}
