//! Exact arithmetic: the rationals `Q`, multivariate polynomials `Q[X]`, and
//! the rational-function field `Q(X)` with partial derivatives.
//!
//! All values are canonical: two equal rational functions have bit-identical
//! representations, so structural equality is semantic equality.

mod gcd;
mod poly;
mod ratfunc;

pub use gcd::gcd as poly_gcd;
pub use poly::{MultiPoly, XExponent};
pub use ratfunc::{field_ops, FieldOp, RatFunc};

use alloc::string::String;
use core::fmt;

pub use num_bigint::BigInt;
/// The ground field `Q`, kept reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Errors raised by scalar-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Division or inversion by the zero function.
    DivisionByZero,
    /// A variable index outside `0..nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range (nvars = {nvars})")
            }
        }
    }
}

/// Naming scheme for the state variables `x_i` and derivation symbols `d_i`
/// used by the printers. Indices are zero-based.
pub trait VarNames {
    fn fmt_x(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result;
    fn fmt_d(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result;
}

/// Canonical names `x1..xn` and `d1..dn`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultNames;

impl VarNames for DefaultNames {
    fn fmt_x(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result {
        write!(f, "x{}", index + 1)
    }

    fn fmt_d(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result {
        write!(f, "d{}", index + 1)
    }
}

/// Names supplied by the caller, one per state variable. The derivation
/// symbol for `x<suffix>` is `d<suffix>`; for other names `d_` is prefixed.
#[derive(Clone, Debug)]
pub struct CustomNames {
    xs: alloc::vec::Vec<String>,
    ds: alloc::vec::Vec<String>,
}

impl CustomNames {
    pub fn new(xs: alloc::vec::Vec<String>) -> Self {
        let ds = xs
            .iter()
            .map(|x| match x.strip_prefix('x') {
                Some(rest) => alloc::format!("d{rest}"),
                None => alloc::format!("d_{x}"),
            })
            .collect();
        CustomNames { xs, ds }
    }

    pub fn x(&self, index: usize) -> &str {
        &self.xs[index]
    }

    pub fn d(&self, index: usize) -> &str {
        &self.ds[index]
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

impl VarNames for CustomNames {
    fn fmt_x(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result {
        f.write_str(&self.xs[index])
    }

    fn fmt_d(&self, f: &mut fmt::Formatter<'_>, index: usize) -> fmt::Result {
        f.write_str(&self.ds[index])
    }
}
