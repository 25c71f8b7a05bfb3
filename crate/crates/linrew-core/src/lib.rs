//! Exact-arithmetic engine for linear rewriting over vector spaces.
//!
//! The crate is organized around the generic picture first, then one concrete
//! instantiation:
//!
//! - [`scalar`]: the rationals, multivariate polynomials over them, and the
//!   rational-function field `Q(X)` with exact canonical forms.
//! - [`linspace`]: sparse linear combinations over an abstract basis with
//!   coefficients in any [`linspace::Field`].
//! - [`rewrite`]: rule sets over a basis, parallel reduction `r_S`, strategy
//!   certification, S-normal forms, S-confluence, quotient bases, the
//!   single-step relation, joinability, decreasingness.
//! - [`weyl`]: the rational Weyl algebra `A_n(Q(X))` with its commutation
//!   laws, monomial orders, monic operators and the rewriting relation they
//!   induce.
//! - [`involutive`]: involutive divisions (Janet, Thomas, Pommaret, custom)
//!   on derivative monomials, the strategies they induce, involutivity
//!   checking and completion.
//!
//! Everything is exact: no floating point anywhere, equality is canonical-form
//! equality. The crate is `no_std` (with `alloc`); IO, parsing and the CLI
//! live in the companion `linrew` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod involutive;
pub mod linspace;
pub mod rewrite;
pub mod scalar;
pub mod weyl;

/// Default node budget for reachable-closure enumerations.
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

/// Default fuel for fixpoint and search loops.
pub const DEFAULT_FUEL: usize = 10_000;
