//! Sparse linear combinations over an abstract basis.
//!
//! A [`LinComb`] is the canonical sparse decomposition `v = Σ λ_i e_i` with
//! nonzero field coefficients; its support is exactly its key set. The
//! coefficient field is abstract so the same engine serves `Q` (abstract
//! systems) and `Q(X)` (Weyl operators).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::scalar::{RatFunc, Rational};

/// Minimal field interface for coefficients.
pub trait Field: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `None` exactly on zero.
    fn inv(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `Q(X)` requires a fixed arity, so field constants are only available
/// through [`crate::scalar::RatFunc`] constructors; the nullary `zero`/`one`
/// here use arity 0 and are normalized away by arithmetic on mixed inputs.
impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero(0)
    }

    fn one() -> Self {
        RatFunc::one(0)
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }

    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }

    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }

    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
}

/// Requirements on basis identifiers: stable total order and printable.
pub trait Basis: Clone + Eq + Ord + fmt::Debug + fmt::Display {}

impl<T: Clone + Eq + Ord + fmt::Debug + fmt::Display> Basis for T {}

/// A finite linear combination of basis elements with nonzero coefficients.
///
/// Terms are stored sorted by basis identifier, so iteration, printing and
/// traces are deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LinComb<B: Basis, K: Field> {
    terms: BTreeMap<B, K>,
}

impl<B: Basis, K: Field> LinComb<B, K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// The basis element `e` as a vector.
    pub fn basis(e: B) -> Self {
        Self::term(e, K::one())
    }

    pub fn term(e: B, coeff: K) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        LinComb { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (B, K)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (e, k) in iter {
            v.insert(e, k);
        }
        v
    }

    fn insert(&mut self, e: B, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set of basis elements with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn support_contains(&self, e: &B) -> bool {
        self.terms.contains_key(e)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &K)> {
        self.terms.iter()
    }

    /// The coefficient of `e`, zero if absent.
    pub fn coeff(&self, e: &B) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    /// `self + lambda * other` in canonical form.
    pub fn add_scaled(&self, lambda: &K, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, k) in &other.terms {
            out.insert(e.clone(), lambda.mul(k));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&K::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&K::one().neg(), other)
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.neg())).collect(),
        }
    }

    pub fn scale(&self, lambda: &K) -> Self {
        if lambda.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), lambda.mul(k))).collect(),
        }
    }

    /// Remove the term at `e`, returning its coefficient.
    pub fn without(&self, e: &B) -> (K, Self) {
        let mut terms = self.terms.clone();
        let coeff = terms.remove(e).unwrap_or_else(K::zero);
        (coeff, LinComb { terms })
    }

    pub fn map_coeffs<F: FnMut(&K) -> K>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            out.insert(e.clone(), f(k));
        }
        out
    }

    pub fn into_terms(self) -> Vec<(B, K)> {
        self.terms.into_iter().collect()
    }
}

impl<B: Basis, K: Field> fmt::Display for LinComb<B, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "({k}) {e}")?;
            }
        }
        Ok(())
    }
}
