//! Differential operator arithmetic.
//!
//! An operator is a sparse combination of derivative monomials with
//! rational-function coefficients, coefficients written on the left. The
//! product expands `d_i^k * f` by the closed Leibniz form
//! `sum_j C(k,j) * d^j f/dx_i^j * d_i^(k-j)`, which iterates the single
//! commutation law `d_i f = f d_i + df/dx_i`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::{DMonomial, MonomialOrder};
use super::WeylError;
use crate::linspace::LinComb;
use crate::scalar::{RatFunc, Rational, VarNames, XExponent};

/// A differential operator: a finite map from derivative monomials to
/// nonzero rational-function coefficients.
pub type WeylOp = LinComb<DMonomial, RatFunc>;

/// The coefficient `f` as an operator (the multiplication operator by `f`).
pub fn constant_op(f: RatFunc) -> WeylOp {
    WeylOp::term(DMonomial::one(f.nvars()), f)
}

/// The operator `d_index`.
pub fn d_op(nvars: usize, index: usize) -> WeylOp {
    WeylOp::term(DMonomial::unit(nvars, index), RatFunc::one(nvars))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn dims_of(op: &WeylOp) -> Option<usize> {
    op.iter().next().map(|(m, _)| m.nvars())
}

/// The product in the Weyl algebra. Errors when the operands have
/// incompatible dimensions; the product with a zero operand is zero.
pub fn weyl_mul(a: &WeylOp, b: &WeylOp) -> Result<WeylOp, WeylError> {
    if let (Some(left), Some(right)) = (dims_of(a), dims_of(b)) {
        if left != right {
            return Err(WeylError::DimensionMismatch { left, right });
        }
    }
    let mut contributions = Vec::new();
    for (alpha, f) in a.iter() {
        let nvars = alpha.nvars();
        for (beta, g) in b.iter() {
            // d^alpha * g = sum_{gamma <= alpha} C(alpha, gamma) g^(gamma) d^(alpha-gamma)
            for (gamma, coeff, dg) in leibniz_terms(alpha, g) {
                let mono = alpha
                    .checked_div(&gamma)
                    .expect("gamma <= alpha by construction")
                    .mul(beta);
                let scalar = RatFunc::constant(nvars, Rational::from(coeff));
                contributions.push((mono, f.mul(&scalar).mul(&dg)));
            }
        }
    }
    Ok(WeylOp::from_terms(contributions))
}

/// All `(gamma, C(alpha, gamma), d^gamma g)` with nonzero derivative,
/// built incrementally one variable at a time.
fn leibniz_terms(alpha: &DMonomial, g: &RatFunc) -> Vec<(DMonomial, BigInt, RatFunc)> {
    let nvars = alpha.nvars();
    let mut acc: Vec<(Vec<u32>, BigInt, RatFunc)> = alloc::vec![(Vec::new(), BigInt::one(), g.clone())];
    for i in 0..nvars {
        let mut next = Vec::new();
        for (prefix, coeff, dg) in acc {
            let mut current = dg;
            for k in 0..=alpha.degree(i) {
                if k > 0 {
                    current = current
                        .partial_derivative(i)
                        .expect("variable index within arity");
                    if current.is_zero() {
                        break;
                    }
                }
                let mut gamma = prefix.clone();
                gamma.push(k);
                next.push((
                    gamma,
                    coeff.clone() * binomial(alpha.degree(i), k),
                    current.clone(),
                ));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(gamma, coeff, dg)| (DMonomial::new(gamma), coeff, dg))
        .collect()
}

/// Apply the operator to a rational function: `sum f_alpha * d^alpha(p)`.
pub fn act(op: &WeylOp, p: &RatFunc) -> RatFunc {
    let mut out = RatFunc::zero(p.nvars());
    for (alpha, f) in op.iter() {
        let derived = p
            .derivative_multi(&XExponent::new(alpha.exponents().to_vec()))
            .expect("operator and function share arity");
        out = out.add(&f.mul(&derived));
    }
    out
}

/// The leading monomial: the order-greatest support monomial.
pub fn lm<'a>(op: &'a WeylOp, ord: &MonomialOrder) -> Result<&'a DMonomial, WeylError> {
    op.support()
        .reduce(|a, b| ord.max(a, b))
        .ok_or(WeylError::ZeroOperator)
}

/// The coefficient of the leading monomial.
pub fn lc(op: &WeylOp, ord: &MonomialOrder) -> Result<RatFunc, WeylError> {
    Ok(op.coeff(lm(op, ord)?))
}

pub fn is_monic(op: &WeylOp, ord: &MonomialOrder) -> bool {
    lc(op, ord).map_or(false, |c| c.is_one())
}

/// Divide by the leading coefficient, which is invertible in `Q(X)`.
pub fn make_monic(op: &WeylOp, ord: &MonomialOrder) -> Result<WeylOp, WeylError> {
    let leading = lc(op, ord)?;
    if leading.is_one() {
        return Ok(op.clone());
    }
    let inv = leading.inv().expect("leading coefficient is nonzero");
    Ok(op.scale(&inv))
}

/// The reduction tail `r(D) = lm(D) - D` of a monic operator: every support
/// monomial of the result is strictly below `lm(D)`.
pub fn r_op(op: &WeylOp, ord: &MonomialOrder) -> Result<WeylOp, WeylError> {
    let leading = lm(op, ord)?.clone();
    if !op.coeff(&leading).is_one() {
        return Err(WeylError::NotMonic);
    }
    Ok(WeylOp::basis(leading).sub(op))
}

/// Operator rendering: terms from greatest to least under the given order,
/// coefficients on the left.
pub fn display_op<'a>(
    op: &'a WeylOp,
    ord: &'a MonomialOrder,
    names: &'a dyn VarNames,
) -> OpDisplay<'a> {
    OpDisplay { op, ord, names }
}

pub struct OpDisplay<'a> {
    op: &'a WeylOp,
    ord: &'a MonomialOrder,
    names: &'a dyn VarNames,
}

impl fmt::Display for OpDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.op.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&DMonomial, &RatFunc)> = self.op.iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.ord.compare(b, a));
        for (i, (mono, coeff)) in terms.into_iter().enumerate() {
            // Pull a leading minus out of polynomial-with-negative-lead
            // coefficients so terms join with " - ".
            let negative = coeff.num().leading_sign() < 0;
            let shown = if negative { coeff.neg() } else { coeff.clone() };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            fmt_op_term(f, &shown, mono, self.names)?;
        }
        Ok(())
    }
}

fn fmt_op_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &RatFunc,
    mono: &DMonomial,
    names: &dyn VarNames,
) -> fmt::Result {
    if mono.is_one() {
        return coeff.fmt_with(f, names);
    }
    if !coeff.is_one() {
        // A multi-term polynomial needs parentheses before '*'; fractions
        // and single terms bind tightly enough on their own.
        if coeff.is_polynomial() && coeff.num().num_terms() > 1 {
            f.write_str("(")?;
            coeff.fmt_with(f, names)?;
            f.write_str(")")?;
        } else {
            coeff.fmt_with(f, names)?;
        }
        f.write_str("*")?;
    }
    mono.fmt_with(f, names)
}
