//! The generic strategy engine: rule sets over a basis, the parallel operator
//! `r_S`, strategy certification, S-normal forms, S-confluence, quotient
//! bases, the single-step relation, joinability, and decreasingness.
//!
//! Two regimes coexist, as the underlying theory separates them:
//!
//! - the parallel engine ([`apply_r_s`], [`snf`], [`check_s_confluence`])
//!   works for any rule set;
//! - the single-step relation ([`step_r`], [`joinable`],
//!   [`check_local_confluence`], [`serialize_parallel`]) additionally requires
//!   every rule's left-hand side to be absent from its right-hand side, which
//!   the system-level `strict` flag enforces.

mod certify;
mod confluence;
mod engine;
mod span;
mod system;
mod trace;

pub use certify::{certify_strategy, CertStatus, StrategyCertificate};
pub use confluence::{
    check_decreasing, check_local_confluence, check_s_confluence, quotient_basis, Decreasing,
    LocalConfluence, SConfluence,
};
pub use engine::{
    apply_r_s, joinable, normal_forms, single_steps, snf, snf_iterates, step_r, Joinability,
    RuleSource, Step, StrategySource,
};
pub use span::{gaussian_rank, span_membership, SpanResult};
pub use system::{Prestrategy, ResolvedStrategy, Rule, RewritingSystem, RuleId};
pub use trace::{serialize_parallel, ReductionTrace, TraceStep};

use core::fmt;

/// Errors shared by the rewrite operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    /// A fixpoint or search loop did not finish within its fuel budget.
    FuelExhausted { fuel: usize },
    /// Reachable-closure enumeration exceeded the node budget.
    NonTerminatingClosure { budget: usize },
    /// The operation requires a certified well-founded strategy.
    NotCertified,
    /// The operation requires the strict `lhs not in supp(rhs)` flag.
    StrictFlagRequired,
    /// The system failed the S-confluence precondition; the named rule has a
    /// nonzero residual.
    NotSConfluent { rule: RuleId },
    /// The supplied rule precedence is not a DAG.
    CyclicOrder { rule: RuleId },
    DuplicateRuleId { id: RuleId },
    /// Two selected rules share a left-hand side.
    DuplicateStrategyLhs { first: RuleId, second: RuleId },
    UnknownRuleId { id: RuleId },
    /// A rule's left-hand side occurs in its right-hand side while the
    /// strict flag is on.
    StrictLhsInRhs { id: RuleId },
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::FuelExhausted { fuel } => {
                write!(f, "no fixpoint within fuel budget {fuel}")
            }
            RewriteError::NonTerminatingClosure { budget } => {
                write!(f, "reachable closure exceeded node budget {budget}")
            }
            RewriteError::NotCertified => {
                write!(f, "strategy is not certified well-founded")
            }
            RewriteError::StrictFlagRequired => {
                write!(f, "operation requires the strict lhs-not-in-rhs flag")
            }
            RewriteError::NotSConfluent { rule } => {
                write!(f, "system is not S-confluent (rule {rule} has nonzero residual)")
            }
            RewriteError::CyclicOrder { rule } => {
                write!(f, "rule precedence is cyclic at {rule}")
            }
            RewriteError::DuplicateRuleId { id } => write!(f, "duplicate rule id {id}"),
            RewriteError::DuplicateStrategyLhs { first, second } => {
                write!(f, "strategy rules {first} and {second} share a left-hand side")
            }
            RewriteError::UnknownRuleId { id } => write!(f, "unknown rule id {id}"),
            RewriteError::StrictLhsInRhs { id } => {
                write!(f, "rule {id} has its left-hand side in its right-hand side")
            }
        }
    }
}
