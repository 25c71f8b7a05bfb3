//! Derivative monomials and admissible monomial orders.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::scalar::{DefaultNames, VarNames};

/// A monomial over the derivation symbols: the multi-exponent of
/// `d_1^{a_1} ... d_n^{a_n}`. `degree(k)` is the exponent of `d_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DMonomial(Vec<u32>);

impl DMonomial {
    pub fn new(alpha: Vec<u32>) -> Self {
        DMonomial(alpha)
    }

    /// The monomial `1`.
    pub fn one(nvars: usize) -> Self {
        DMonomial(vec![0; nvars])
    }

    /// The single symbol `d_index`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut alpha = vec![0; nvars];
        alpha[index] = 1;
        DMonomial(alpha)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// The degree in `d_index`.
    pub fn degree(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        DMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The cofactor `self / other` under ordinary divisibility, if any.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DMonomial)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.checked_div(self).is_some()
    }

    /// Variables with nonzero exponent.
    pub fn support_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| if a > 0 { Some(i) } else { None })
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &dyn VarNames) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            names.fmt_d(f, i)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for DMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &DefaultNames)
    }
}

/// The shipped order kinds; all are admissible and well-founded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

/// A monomial order: a kind plus a variable precedence, listed from least to
/// greatest significance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Permutation of `0..n`, ascending significance.
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Self {
        let mut check: Vec<usize> = precedence.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(i, &v)| i == v),
            "precedence must be a permutation of 0..n"
        );
        MonomialOrder { kind, precedence }
    }

    /// The default order: deglex with `d_1 < d_2 < ... < d_n`.
    pub fn deglex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegLex, precedence: (0..nvars).collect() }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn compare(&self, a: &DMonomial, b: &DMonomial) -> Ordering {
        compare(a, b, self)
    }

    pub fn max<'a>(&self, a: &'a DMonomial, b: &'a DMonomial) -> &'a DMonomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Total comparison of two monomials under the order.
pub fn compare(a: &DMonomial, b: &DMonomial, ord: &MonomialOrder) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    debug_assert_eq!(a.nvars(), ord.nvars());
    let lex = |a: &DMonomial, b: &DMonomial| -> Ordering {
        // Most significant variable first.
        for &v in ord.precedence.iter().rev() {
            match a.degree(v).cmp(&b.degree(v)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    };
    match ord.kind {
        OrderKind::Lex => lex(a, b),
        OrderKind::DegLex => a
            .total_degree()
            .cmp(&b.total_degree())
            .then_with(|| lex(a, b)),
        OrderKind::DegRevLex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
            // Ties: smaller exponent in the least significant differing
            // variable wins (is greater).
            for &v in ord.precedence.iter() {
                match a.degree(v).cmp(&b.degree(v)) {
                    Ordering::Equal => {}
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(alpha: &[u32]) -> DMonomial {
        DMonomial::new(alpha.to_vec())
    }

    #[test]
    fn one_is_minimal() {
        for kind in [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex] {
            let ord = MonomialOrder::new(kind, alloc::vec![0, 1, 2]);
            assert_eq!(compare(&m(&[0, 0, 0]), &m(&[1, 0, 0]), &ord), Ordering::Less);
        }
    }

    #[test]
    fn deglex_examples() {
        let ord = MonomialOrder::deglex(3);
        // d1^2 < d3^2 (equal degree, d3 more significant)
        assert_eq!(compare(&m(&[2, 0, 0]), &m(&[0, 0, 2]), &ord), Ordering::Less);
        // d1*d2 > d3 (total degree 2 > 1)
        assert_eq!(compare(&m(&[1, 1, 0]), &m(&[0, 0, 1]), &ord), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tie_break() {
        let ord = MonomialOrder::new(OrderKind::DegRevLex, alloc::vec![0, 1, 2]);
        // Classical: d1*d3 < d2^2 under degrevlex with d1 < d2 < d3.
        assert_eq!(compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &ord), Ordering::Less);
    }

    #[test]
    fn display_monomials() {
        assert_eq!(alloc::format!("{}", m(&[2, 0, 1])), "d1^2*d3");
        assert_eq!(alloc::format!("{}", m(&[0, 0, 0])), "1");
    }
}
