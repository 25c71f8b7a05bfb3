//! Infix expression parsing for operators, rational functions, and abstract
//! linear combinations.
//!
//! One grammar serves all three: sums of products of powers of atoms, with
//! juxtaposition meaning multiplication (`2 e1`, `x2*d1^2`, `(1/3) e2`).
//! Evaluation happens directly in the target algebra, so `d1*x1` normalizes
//! to `x1*d1 + 1` during parsing of operator expressions.

use linrew_core::linspace::LinComb;
use linrew_core::scalar::{CustomNames, RatFunc, Rational};
use linrew_core::weyl::{constant_op, d_op, weyl_mul, WeylOp};
use num_bigint::BigInt;

use crate::error::CliError;
use crate::lexer::{tokenize, Spanned, Token};

trait Algebra {
    type Value: Clone;
    fn int(&self, n: BigInt) -> Self::Value;
    fn ident(&self, name: &str, line: usize, col: usize) -> Result<Self::Value, CliError>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, CliError>;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, CliError>;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, CliError>;
    fn pow(&self, a: Self::Value, n: u32) -> Result<Self::Value, CliError>;
}

struct Parser<'a, A: Algebra> {
    tokens: &'a [Spanned],
    pos: usize,
    algebra: &'a A,
    line: usize,
}

impl<'a, A: Algebra> Parser<'a, A> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn next_span(&mut self) -> Option<&'a Spanned> {
        let s = self.tokens.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.line, 0))
    }

    fn expr(&mut self) -> Result<A::Value, CliError> {
        let negate = matches!(self.peek(), Some(Token::Minus));
        if negate {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.algebra.neg(acc);
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.algebra.add(acc, t)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.algebra.add(acc, self.algebra.neg(t))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::Value, CliError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.algebra.mul(acc, f)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.algebra.div(acc, f)?;
                }
                // Juxtaposition multiplies.
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = self.algebra.mul(acc, f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A::Value, CliError> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            let (line, col) = self.here();
            match self.next_span().map(|s| &s.token) {
                Some(Token::Int(n)) => {
                    let exp: u32 = n
                        .try_into()
                        .map_err(|_| CliError::parse(line, col, "exponent out of range"))?;
                    base = self.algebra.pow(base, exp)?;
                }
                _ => return Err(CliError::parse(line, col, "expected integer exponent after '^'")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<A::Value, CliError> {
        let (line, col) = self.here();
        match self.next_span().map(|s| &s.token) {
            Some(Token::Int(n)) => Ok(self.algebra.int(n.clone())),
            Some(Token::Ident(name)) => self.algebra.ident(name, line, col),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let (line, col) = self.here();
                match self.next_span().map(|s| &s.token) {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(CliError::parse(line, col, "expected ')'")),
                }
            }
            _ => Err(CliError::parse(line, col, "expected a number, name, or '('")),
        }
    }
}

fn parse_with<A: Algebra>(
    tokens: &[Spanned],
    algebra: &A,
    line: usize,
) -> Result<A::Value, CliError> {
    let mut parser = Parser { tokens, pos: 0, algebra, line };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        let (line, col) = parser.here();
        return Err(CliError::parse(line, col, "unexpected trailing input"));
    }
    Ok(value)
}

/// Operator expressions over declared state variables.
struct WeylAlgebra<'a> {
    names: &'a CustomNames,
}

impl WeylAlgebra<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }
}

impl Algebra for WeylAlgebra<'_> {
    type Value = WeylOp;

    fn int(&self, n: BigInt) -> WeylOp {
        constant_op(RatFunc::constant(self.nvars(), Rational::from(n)))
    }

    fn ident(&self, name: &str, line: usize, col: usize) -> Result<WeylOp, CliError> {
        for i in 0..self.nvars() {
            if self.names.x(i) == name {
                return Ok(constant_op(RatFunc::variable(self.nvars(), i)));
            }
            if self.names.d(i) == name {
                return Ok(d_op(self.nvars(), i));
            }
        }
        Err(CliError::parse(line, col, format!("unknown variable {name}")))
    }

    fn add(&self, a: WeylOp, b: WeylOp) -> Result<WeylOp, CliError> {
        Ok(a.add(&b))
    }

    fn neg(&self, a: WeylOp) -> WeylOp {
        a.neg()
    }

    fn mul(&self, a: WeylOp, b: WeylOp) -> Result<WeylOp, CliError> {
        weyl_mul(&a, &b).map_err(CliError::validation)
    }

    fn div(&self, a: WeylOp, b: WeylOp) -> Result<WeylOp, CliError> {
        // Division is right-multiplication by the inverse of a pure
        // function; anything with derivation symbols is not invertible.
        let coeff = as_function(&b)
            .ok_or_else(|| CliError::validation("division by an operator with derivations"))?;
        let inv = coeff
            .inv()
            .map_err(|_| CliError::validation("division by zero"))?;
        weyl_mul(&a, &constant_op(inv)).map_err(CliError::validation)
    }

    fn pow(&self, a: WeylOp, n: u32) -> Result<WeylOp, CliError> {
        let mut acc = constant_op(RatFunc::one(self.nvars()));
        for _ in 0..n {
            acc = weyl_mul(&acc, &a).map_err(CliError::validation)?;
        }
        Ok(acc)
    }
}

/// The coefficient of the trivial monomial when the operator is a pure
/// multiplication operator.
fn as_function(op: &WeylOp) -> Option<RatFunc> {
    if op.is_zero() {
        return Some(RatFunc::zero(0));
    }
    let mut iter = op.iter();
    let (mono, coeff) = iter.next().unwrap();
    if iter.next().is_none() && mono.is_one() {
        Some(coeff.clone())
    } else {
        None
    }
}

/// Parse an operator expression like `d3^2 - x2*d1^2`.
pub fn parse_weyl_op(input: &str, names: &CustomNames, line: usize) -> Result<WeylOp, CliError> {
    let tokens = tokenize(input, line)?;
    parse_with(&tokens, &WeylAlgebra { names }, line)
}

/// Parse a rational-function expression (no derivation symbols).
pub fn parse_ratfunc(input: &str, names: &CustomNames, line: usize) -> Result<RatFunc, CliError> {
    let op = parse_weyl_op(input, names, line)?;
    as_function(&op)
        .ok_or_else(|| CliError::validation("expected a coefficient expression without derivations"))
}

/// Values for abstract linear combinations over `Q`: either a scalar or a
/// vector; mixing them nonlinearly is rejected.
#[derive(Clone)]
enum QVal {
    Scalar(Rational),
    Vector(LinComb<String, Rational>),
}

struct QCombAlgebra;

impl Algebra for QCombAlgebra {
    type Value = QVal;

    fn int(&self, n: BigInt) -> QVal {
        QVal::Scalar(Rational::from(n))
    }

    fn ident(&self, name: &str, _line: usize, _col: usize) -> Result<QVal, CliError> {
        Ok(QVal::Vector(LinComb::basis(name.to_string())))
    }

    fn add(&self, a: QVal, b: QVal) -> Result<QVal, CliError> {
        match (a, b) {
            (QVal::Scalar(x), QVal::Scalar(y)) => Ok(QVal::Scalar(x + y)),
            (QVal::Vector(x), QVal::Vector(y)) => Ok(QVal::Vector(x.add(&y))),
            (QVal::Scalar(x), QVal::Vector(v)) | (QVal::Vector(v), QVal::Scalar(x)) => {
                if num_traits_is_zero(&x) {
                    Ok(QVal::Vector(v))
                } else {
                    Err(CliError::validation("cannot add a scalar to a combination"))
                }
            }
        }
    }

    fn neg(&self, a: QVal) -> QVal {
        match a {
            QVal::Scalar(x) => QVal::Scalar(-x),
            QVal::Vector(v) => QVal::Vector(v.neg()),
        }
    }

    fn mul(&self, a: QVal, b: QVal) -> Result<QVal, CliError> {
        match (a, b) {
            (QVal::Scalar(x), QVal::Scalar(y)) => Ok(QVal::Scalar(x * y)),
            (QVal::Scalar(x), QVal::Vector(v)) | (QVal::Vector(v), QVal::Scalar(x)) => {
                Ok(QVal::Vector(v.scale(&x)))
            }
            (QVal::Vector(_), QVal::Vector(_)) => {
                Err(CliError::validation("combinations cannot be multiplied"))
            }
        }
    }

    fn div(&self, a: QVal, b: QVal) -> Result<QVal, CliError> {
        let QVal::Scalar(y) = b else {
            return Err(CliError::validation("cannot divide by a combination"));
        };
        if num_traits_is_zero(&y) {
            return Err(CliError::validation("division by zero"));
        }
        self.mul(a, QVal::Scalar(y.recip()))
    }

    fn pow(&self, a: QVal, n: u32) -> Result<QVal, CliError> {
        match a {
            QVal::Scalar(x) => {
                let mut acc = Rational::from(BigInt::from(1));
                for _ in 0..n {
                    acc *= &x;
                }
                Ok(QVal::Scalar(acc))
            }
            QVal::Vector(v) if n == 1 => Ok(QVal::Vector(v)),
            QVal::Vector(_) => Err(CliError::validation("combinations cannot be raised to powers")),
        }
    }
}

fn num_traits_is_zero(x: &Rational) -> bool {
    use num_traits::Zero;
    x.is_zero()
}

/// Parse an abstract combination like `2 e1 + (1/3) e2 - e4`.
pub fn parse_qcomb(input: &str, line: usize) -> Result<LinComb<String, Rational>, CliError> {
    let tokens = tokenize(input, line)?;
    match parse_with(&tokens, &QCombAlgebra, line)? {
        QVal::Vector(v) => Ok(v),
        QVal::Scalar(x) if num_traits_is_zero(&x) => Ok(LinComb::zero()),
        QVal::Scalar(_) => Err(CliError::validation(
            "a bare scalar is not a combination (only 0 is allowed)",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use linrew_core::scalar::rat;

    fn names(n: usize) -> CustomNames {
        CustomNames::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    #[test]
    fn qcomb_syntax() {
        let v = parse_qcomb("2 e1 + (1/3) e2 - e4", 1).unwrap();
        assert_eq!(v.coeff(&"e1".to_string()), rat(2, 1));
        assert_eq!(v.coeff(&"e2".to_string()), rat(1, 3));
        assert_eq!(v.coeff(&"e4".to_string()), rat(-1, 1));
        assert!(parse_qcomb("0", 1).unwrap().is_zero());
        assert!(parse_qcomb("e1 - e1", 1).unwrap().is_zero());
        assert!(parse_qcomb("3/2 e7", 1).is_ok());
        assert!(parse_qcomb("5", 1).is_err());
    }

    #[test]
    fn operator_syntax_normalizes() {
        let ns = names(1);
        // d1*x1 = x1 d1 + 1 by the commutation law.
        let parsed = parse_weyl_op("d1*x1", &ns, 1).unwrap();
        let direct = parse_weyl_op("x1*d1 + 1", &ns, 1).unwrap();
        assert_eq!(parsed, direct);
    }

    #[test]
    fn rational_function_coefficients() {
        let ns = names(2);
        let f = parse_ratfunc("(x1+1)/(x2)", &ns, 1).unwrap();
        assert_eq!(format!("{f}"), "(x1 + 1)/x2");
        let p = parse_ratfunc("x1^2*x2 - 3/2", &ns, 1).unwrap();
        assert_eq!(format!("{p}"), "x1^2*x2 - 3/2");
        assert!(parse_ratfunc("d1", &ns, 1).is_err());
        assert!(parse_weyl_op("1/(x1 - x1)", &ns, 1).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_qcomb("2 e1 + $", 7) {
            Err(CliError::Parse { line: 7, col: 8, .. }) => {}
            other => panic!("expected a positioned parse error, got {other:?}"),
        }
    }
}
