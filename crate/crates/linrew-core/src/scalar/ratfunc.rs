//! The rational-function field `Q(X)` in canonical form.

use core::fmt;
use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{MultiPoly, XExponent};
use super::{DefaultNames, Rational, ScalarError, VarNames};

/// An element of `Q(X)`. Canonical form: `gcd(num, den)` is a unit and the
/// denominator is monic for the lex order (leading coefficient 1, hence
/// positive), so equal values are structurally identical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Build `num/den` in canonical form. Errors when `den = 0`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: MultiPoly::one(den.nvars()),
            });
        }
        let g = gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.lex_leading().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MultiPoly::one(n) }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, value))
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        Self::from_poly(MultiPoly::variable(nvars, index))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        // Split off the common denominator factor first to keep the final
        // gcd small.
        let d = gcd(&self.den, &other.den);
        let left = other.den.exact_div(&d).expect("gcd divides");
        let right = self.den.exact_div(&d).expect("gcd divides");
        let num = self.num.mul(&left).add(&other.num.mul(&right));
        let den = self.den.mul(&left);
        Self::new(num, den).expect("denominator product is nonzero")
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars().max(other.nvars()));
        }
        // Cross-cancel first: both inputs are reduced, so the remaining
        // parts are pairwise coprime and only monic normalization is left.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let num = self
            .num
            .exact_div(&g1)
            .expect("gcd divides")
            .mul(&other.num.exact_div(&g2).expect("gcd divides"));
        let mut den = self
            .den
            .exact_div(&g2)
            .expect("gcd divides")
            .mul(&other.den.exact_div(&g1).expect("gcd divides"));
        let mut num = num;
        let lc = den.lex_leading().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        debug_assert!(gcd(&num, &den).is_one());
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RatFunc {
            num: self.num.scale(factor),
            den: if factor.is_zero() { MultiPoly::one(self.nvars()) } else { self.den.clone() },
        }
    }

    /// `d/dx_index` by the quotient rule, in canonical form. The common
    /// factor of the denominator and its derivative is split off first, which
    /// keeps the final reduction small.
    pub fn partial_derivative(&self, index: usize) -> Result<Self, ScalarError> {
        let dn = self.num.partial_derivative(index)?;
        let dd = self.den.partial_derivative(index)?;
        if dd.is_zero() {
            return Self::new(dn, self.den.clone());
        }
        let w = gcd(&self.den, &dd);
        let den_red = self.den.exact_div(&w).expect("gcd divides");
        let dd_red = dd.exact_div(&w).expect("gcd divides");
        let num = dn.mul(&den_red).sub(&self.num.mul(&dd_red));
        let den = self.den.mul(&den_red);
        Self::new(num, den)
    }

    /// Iterated partial derivative `d^alpha/dx^alpha`.
    pub fn derivative_multi(&self, alpha: &XExponent) -> Result<Self, ScalarError> {
        let mut out = self.clone();
        for (i, &e) in alpha.exponents().iter().enumerate() {
            for _ in 0..e {
                if out.is_zero() {
                    return Ok(out);
                }
                out = out.partial_derivative(i)?;
            }
        }
        Ok(out)
    }

    /// Evaluate at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &dyn VarNames) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_with(f, names);
        }
        if self.num.num_terms() > 1 {
            f.write_str("(")?;
            self.num.fmt_with(f, names)?;
            f.write_str(")")?;
        } else {
            self.num.fmt_with(f, names)?;
        }
        f.write_str("/")?;
        if den_needs_parens(&self.den) {
            f.write_str("(")?;
            self.den.fmt_with(f, names)?;
            f.write_str(")")
        } else {
            self.den.fmt_with(f, names)
        }
    }

    pub fn display<'a>(&'a self, names: &'a dyn VarNames) -> RatFuncDisplay<'a> {
        RatFuncDisplay { value: self, names }
    }
}

/// A lone `x_i^k` binds tighter than `/`; anything else needs parentheses.
fn den_needs_parens(den: &MultiPoly) -> bool {
    if den.num_terms() != 1 {
        return true;
    }
    let (exp, coeff) = den.terms().next().unwrap();
    !coeff.is_one() || exp.exponents().iter().filter(|&&e| e > 0).count() != 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &DefaultNames)
    }
}

pub struct RatFuncDisplay<'a> {
    value: &'a RatFunc,
    names: &'a dyn VarNames,
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt_with(f, self.names)
    }
}

/// The field operations of `Q(X)` behind a single dispatcher; `neg` and `inv`
/// ignore the second operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

pub fn field_ops(a: &RatFunc, b: &RatFunc, op: FieldOp) -> Result<RatFunc, ScalarError> {
    match op {
        FieldOp::Add => Ok(a.add(b)),
        FieldOp::Sub => Ok(a.sub(b)),
        FieldOp::Mul => Ok(a.mul(b)),
        FieldOp::Div => a.div(b),
        FieldOp::Neg => Ok(a.neg()),
        FieldOp::Inv => a.inv(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn inv_x(n: usize, i: usize) -> RatFunc {
        RatFunc::new(MultiPoly::one(n), MultiPoly::variable(n, i)).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let f = inv_x(2, 0);
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn multiplicative_inverse_cancels() {
        // (x1/x2) * (x2/x1) = 1
        let f = RatFunc::new(MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)).unwrap();
        let g = RatFunc::new(MultiPoly::variable(2, 1), MultiPoly::variable(2, 0)).unwrap();
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn cross_multiplication_sum() {
        // 1/x1 + 1/x2 = (x1+x2)/(x1*x2)
        let sum = inv_x(2, 0).add(&inv_x(2, 1));
        let expected = RatFunc::new(
            MultiPoly::variable(2, 0).add(&MultiPoly::variable(2, 1)),
            MultiPoly::variable(2, 0).mul(&MultiPoly::variable(2, 1)),
        )
        .unwrap();
        assert_eq!(sum, expected);
        // Evaluate both sides at a few points as an independent check.
        for (a, b) in [(rat(1, 2), rat(3, 1)), (rat(-2, 5), rat(7, 3)), (rat(4, 1), rat(-1, 6))] {
            let point = [a.clone(), b.clone()];
            assert_eq!(
                sum.eval(&point).unwrap(),
                a.recip() + b.recip(),
            );
        }
    }

    #[test]
    fn quotient_rule_derivative() {
        // d/dx1(1/x1) = -1/x1^2
        let f = inv_x(1, 0);
        let d = f.partial_derivative(0).unwrap();
        let expected = RatFunc::new(
            MultiPoly::constant(1, rat(-1, 1)),
            MultiPoly::variable(1, 0).mul(&MultiPoly::variable(1, 0)),
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn division_by_zero_is_reported() {
        let f = RatFunc::one(1);
        assert_eq!(f.div(&RatFunc::zero(1)), Err(ScalarError::DivisionByZero));
        assert_eq!(RatFunc::zero(1).inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(
            field_ops(&f, &RatFunc::zero(1), FieldOp::Div),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let f = RatFunc::new(
            MultiPoly::variable(2, 0).scale(&rat(6, 4)),
            MultiPoly::variable(2, 1).scale(&rat(-3, 2)),
        )
        .unwrap();
        let renormalized = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, renormalized);
        // den monic
        assert!(f.den().lex_leading().unwrap().1.is_one());
    }
}
