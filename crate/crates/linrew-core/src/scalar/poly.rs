//! Sparse multivariate polynomials over `Q` with dense exponent keys.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed, Zero};

use super::{DefaultNames, Rational, ScalarError, VarNames};

/// A monomial exponent over the state variables: one natural number per `x_i`.
///
/// Exponents are finitely supported: indices beyond the stored length read as
/// zero, and comparison, equality and hashing ignore trailing zeros, so a
/// constant created without an ambient arity coincides with the same constant
/// in any arity. `Ord` compares the trimmed vectors lexicographically, which
/// is the lex monomial order with the last variable least significant; it is
/// also the storage order of polynomial terms.
#[derive(Clone, Debug)]
pub struct XExponent(Vec<u32>);

impl XExponent {
    fn trimmed(&self) -> &[u32] {
        let end = self.0.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }
}

impl PartialEq for XExponent {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for XExponent {}

impl PartialOrd for XExponent {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XExponent {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl core::hash::Hash for XExponent {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state)
    }
}

impl XExponent {
    pub fn new(exponents: Vec<u32>) -> Self {
        XExponent(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        XExponent(vec![0; nvars])
    }

    /// The exponent of `x_index` alone.
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        XExponent(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// The exponent of `x_index`; indices beyond the stored length are zero.
    pub fn get(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        XExponent((0..len).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| self.get(i).checked_sub(other.get(i)))
            .collect::<Option<Vec<_>>>()
            .map(XExponent)
    }

    pub fn with_var(&self, index: usize, value: u32) -> Self {
        let mut e = self.0.clone();
        if e.len() <= index {
            e.resize(index + 1, 0);
        }
        e[index] = value;
        XExponent(e)
    }
}

/// A multivariate polynomial over `Q`: a finite map from exponents to nonzero
/// coefficients. The zero polynomial is the empty map.
///
/// `nvars` is the declared ambient arity; binary operations broadcast to the
/// larger arity, so constants built without an ambient context (arity 0)
/// combine with polynomials of any arity. Equality, ordering and hashing
/// compare the terms only.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<XExponent, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl core::hash::Hash for MultiPoly {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(XExponent::zero(nvars), value);
        }
        MultiPoly { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_index` as a polynomial.
    pub fn variable(nvars: usize, index: usize) -> Self {
        Self::monomial(XExponent::unit(nvars, index), Rational::one())
    }

    pub fn monomial(exponent: XExponent, coeff: Rational) -> Self {
        let nvars = exponent.nvars();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (XExponent, Rational)>>(nvars: usize, iter: I) -> Self {
        let mut poly = Self::zero(nvars);
        for (exp, coeff) in iter {
            poly.add_term(exp, coeff);
        }
        poly
    }

    fn add_term(&mut self, exp: XExponent, coeff: Rational) {
        self.nvars = self.nvars.max(exp.nvars());
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(e, c)| e.is_zero() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XExponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &XExponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term for the storage (lex) order.
    pub fn lex_leading(&self) -> Option<(&XExponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|e| e.get(index)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.total_degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (exp, coeff) in &other.terms {
            out.add_term(exp.clone(), coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &XExponent, coeff: &Rational) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(exp), c * coeff))
                .collect(),
        }
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, `None` when the
    /// division is not exact. Eliminates lex leading terms.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dlead, dcoeff) = divisor.lex_leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars.max(divisor.nvars));
        while let Some((rlead, rcoeff)) = rem.lex_leading() {
            let exp = rlead.checked_sub(dlead)?;
            let coeff = rcoeff / dcoeff;
            quot.add_term(exp.clone(), coeff.clone());
            rem = rem.sub(&divisor.mul_monomial(&exp, &coeff));
        }
        Some(quot)
    }

    /// Differentiate with respect to `x_index`. Out-of-range indices error,
    /// except on constants, whose derivative is zero in any ambient arity.
    pub fn partial_derivative(&self, index: usize) -> Result<Self, ScalarError> {
        if index >= self.nvars {
            if self.is_constant() {
                return Ok(Self::zero(self.nvars));
            }
            return Err(ScalarError::IndexOutOfRange { index, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (exp, coeff) in &self.terms {
            let e = exp.get(index);
            if e > 0 {
                out.add_term(exp.with_var(index, e - 1), coeff * Rational::from(super::BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Evaluate at a rational point; panics if the point has too few
    /// coordinates.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert!(point.len() >= self.nvars, "evaluation point arity mismatch");
        let mut acc = Rational::zero();
        for (exp, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, value) in point.iter().enumerate() {
                for _ in 0..exp.get(i) {
                    term *= value;
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute a polynomial for each variable. Used by the test oracles
    /// for symbolic difference quotients.
    pub fn substitute(&self, values: &[MultiPoly]) -> MultiPoly {
        assert!(values.len() >= self.nvars);
        let target_nvars = values.first().map_or(self.nvars, MultiPoly::nvars);
        let mut acc = MultiPoly::zero(target_nvars);
        for (exp, coeff) in &self.terms {
            let mut term = MultiPoly::constant(target_nvars, coeff.clone());
            for (i, value) in values.iter().enumerate() {
                for _ in 0..exp.get(i) {
                    term = term.mul(value);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Sign of the lex-leading coefficient: -1, 0 or 1.
    pub fn leading_sign(&self) -> i8 {
        match self.lex_leading() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &dyn VarNames) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Descending lex so the leading term comes first.
        for (i, (exp, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let abs = if negative { -coeff } else { coeff.clone() };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            fmt_term(f, &abs, exp, names)?;
        }
        Ok(())
    }
}

fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    exp: &XExponent,
    names: &dyn VarNames,
) -> fmt::Result {
    if exp.is_zero() {
        return write!(f, "{coeff}");
    }
    let mut lead = true;
    if !coeff.is_one() {
        write!(f, "{coeff}")?;
        lead = false;
    }
    for (i, &e) in exp.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !lead {
            f.write_str("*")?;
        }
        names.fmt_x(f, i)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        lead = false;
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &DefaultNames)
    }
}

/// Adapter displaying a polynomial with caller-supplied variable names.
pub struct PolyDisplay<'a> {
    pub(super) poly: &'a MultiPoly,
    pub(super) names: &'a dyn VarNames,
}

impl MultiPoly {
    pub fn display<'a>(&'a self, names: &'a dyn VarNames) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_with(f, self.names)
    }
}

impl MultiPoly {
    /// Parse helper used in tests: `x1^2*x2` style single monomial.
    #[doc(hidden)]
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self::monomial(XExponent::new(exps.to_owned()), Rational::one())
    }
}
