//! Involutive divisions presented by their multiplicative-variable function.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::InvolutiveError;
use crate::weyl::DMonomial;

/// Zero-based indices of multiplicative variables.
pub type VarSet = BTreeSet<usize>;

/// Which reading of the Pommaret condition to use.
///
/// `Paper` makes `d_i` multiplicative for `u` iff `d_j(u) = 0` for every
/// `j <= i`, so the class variable itself is nonmultiplicative. `Classical`
/// additionally keeps the class variable: `d_i` is multiplicative iff
/// `i <= cls(u)` with `cls` the least index of nonzero degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PommaretConvention {
    #[default]
    Paper,
    Classical,
}

/// A division given by a multiplicative-variable function over finite
/// monomial sets.
#[derive(Clone)]
pub enum Division {
    Janet,
    Thomas,
    Pommaret(PommaretConvention),
    Custom(CustomDivision),
}

/// A user-supplied multiplicative-variable function. Axioms are not assumed;
/// validate with [`check_division_axioms`](super::check_division_axioms).
#[derive(Clone)]
pub struct CustomDivision {
    pub name: String,
    pub multiplicative: Arc<dyn Fn(&DMonomial, &[DMonomial]) -> VarSet + Send + Sync>,
}

impl Division {
    pub fn name(&self) -> &str {
        match self {
            Division::Janet => "janet",
            Division::Thomas => "thomas",
            Division::Pommaret(_) => "pommaret",
            Division::Custom(c) => &c.name,
        }
    }
}

impl fmt::Debug for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Division::Pommaret(conv) => write!(f, "Pommaret({conv:?})"),
            other => f.write_str(other.name()),
        }
    }
}

/// The multiplicative variables of `u` with respect to the finite set `uset`.
/// `u` must be a member of `uset`.
pub fn multiplicative_variables(
    u: &DMonomial,
    uset: &[DMonomial],
    division: &Division,
) -> Result<VarSet, InvolutiveError> {
    if !uset.contains(u) {
        return Err(InvolutiveError::NotInU { monomial: u.clone() });
    }
    let nvars = u.nvars();
    let vars = match division {
        Division::Janet => (0..nvars)
            .filter(|&i| {
                // d_i(u) maximal among members matching u on all higher vars.
                let max = uset
                    .iter()
                    .filter(|v| (i + 1..nvars).all(|j| v.degree(j) == u.degree(j)))
                    .map(|v| v.degree(i))
                    .max()
                    .unwrap_or(0);
                u.degree(i) == max
            })
            .collect(),
        Division::Thomas => (0..nvars)
            .filter(|&i| {
                let max = uset.iter().map(|v| v.degree(i)).max().unwrap_or(0);
                u.degree(i) == max
            })
            .collect(),
        Division::Pommaret(convention) => {
            let cls = (0..nvars).find(|&j| u.degree(j) > 0);
            match (convention, cls) {
                (_, None) => (0..nvars).collect(),
                (PommaretConvention::Paper, Some(cls)) => (0..cls).collect(),
                (PommaretConvention::Classical, Some(cls)) => (0..=cls).collect(),
            }
        }
        Division::Custom(custom) => (custom.multiplicative)(u, uset),
    };
    Ok(vars)
}

/// Whether `u` involutively divides `m` with respect to `uset`: `m = c * u`
/// with the cofactor supported on multiplicative variables of `u`.
pub fn involutive_divides(
    u: &DMonomial,
    m: &DMonomial,
    uset: &[DMonomial],
    division: &Division,
) -> Result<bool, InvolutiveError> {
    let Some(cofactor) = m.checked_div(u) else {
        return Ok(false);
    };
    let mult = multiplicative_variables(u, uset, division)?;
    let supported = cofactor.support_vars().all(|i| mult.contains(&i));
    Ok(supported)
}

/// Result of an involutive-divisor search. `Multiple` can only occur when the
/// set is not autoreduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorSearch {
    Divisor { index: usize, cofactor: DMonomial },
    None,
    Multiple(Vec<(usize, DMonomial)>),
}

/// Find the involutive divisors of `m` inside `uset`.
pub fn involutive_divisor(
    m: &DMonomial,
    uset: &[DMonomial],
    division: &Division,
) -> Result<DivisorSearch, InvolutiveError> {
    let mut hits = Vec::new();
    for (index, u) in uset.iter().enumerate() {
        if involutive_divides(u, m, uset, division)? {
            hits.push((index, m.checked_div(u).unwrap()));
        }
    }
    Ok(match hits.len() {
        0 => DivisorSearch::None,
        1 => {
            let (index, cofactor) = hits.pop().unwrap();
            DivisorSearch::Divisor { index, cofactor }
        }
        _ => DivisorSearch::Multiple(hits),
    })
}

/// Outcome of the autoreduction check: no member may involutively divide
/// another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutoreduceCheck {
    Autoreduced,
    Witness { divisor: DMonomial, dividend: DMonomial },
}

pub fn check_autoreduced(
    uset: &[DMonomial],
    division: &Division,
) -> Result<AutoreduceCheck, InvolutiveError> {
    for u in uset {
        for v in uset {
            if u != v && involutive_divides(u, v, uset, division)? {
                return Ok(AutoreduceCheck::Witness { divisor: u.clone(), dividend: v.clone() });
            }
        }
    }
    Ok(AutoreduceCheck::Autoreduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(alpha: &[u32]) -> DMonomial {
        DMonomial::new(alpha.to_vec())
    }

    fn janet_table_set() -> Vec<DMonomial> {
        // lm(D1) = d3^2, lm(D2) = d2^2
        alloc::vec![m(&[0, 0, 2]), m(&[0, 2, 0])]
    }

    #[test]
    fn janet_multiplicative_table() {
        let uset = janet_table_set();
        assert_eq!(
            multiplicative_variables(&uset[0], &uset, &Division::Janet).unwrap(),
            VarSet::from([0, 1, 2])
        );
        assert_eq!(
            multiplicative_variables(&uset[1], &uset, &Division::Janet).unwrap(),
            VarSet::from([0, 1])
        );
    }

    #[test]
    fn thomas_multiplicative_table() {
        let uset = janet_table_set();
        assert_eq!(
            multiplicative_variables(&uset[0], &uset, &Division::Thomas).unwrap(),
            VarSet::from([0, 2])
        );
        // Direct evaluation of the Thomas condition gives {d1, d2} for d2^2:
        // d1-degree 0 is maximal (both members have none).
        assert_eq!(
            multiplicative_variables(&uset[1], &uset, &Division::Thomas).unwrap(),
            VarSet::from([0, 1])
        );
    }

    #[test]
    fn pommaret_multiplicative_table() {
        let uset = janet_table_set();
        let paper = Division::Pommaret(PommaretConvention::Paper);
        // d3^2: degrees vanish up to index 1, so {d1, d2}.
        assert_eq!(
            multiplicative_variables(&uset[0], &uset, &paper).unwrap(),
            VarSet::from([0, 1])
        );
        // d2^2: only d1 precedes the class variable.
        assert_eq!(
            multiplicative_variables(&uset[1], &uset, &paper).unwrap(),
            VarSet::from([0])
        );
        let classical = Division::Pommaret(PommaretConvention::Classical);
        assert_eq!(
            multiplicative_variables(&uset[1], &uset, &classical).unwrap(),
            VarSet::from([0, 1])
        );
    }

    #[test]
    fn not_in_set_is_an_error() {
        let uset = janet_table_set();
        assert!(matches!(
            multiplicative_variables(&m(&[1, 0, 0]), &uset, &Division::Janet),
            Err(InvolutiveError::NotInU { .. })
        ));
    }

    #[test]
    fn unique_divisor_in_autoreduced_set() {
        let uset = janet_table_set();
        // d2^2 d3^2 has the unique Janet divisor d3^2 with cofactor d2^2.
        assert_eq!(
            involutive_divisor(&m(&[0, 2, 2]), &uset, &Division::Janet).unwrap(),
            DivisorSearch::Divisor { index: 0, cofactor: m(&[0, 2, 0]) }
        );
        // Every member divides itself with trivial cofactor.
        assert_eq!(
            involutive_divisor(&uset[1], &uset, &Division::Janet).unwrap(),
            DivisorSearch::Divisor { index: 1, cofactor: m(&[0, 0, 0]) }
        );
    }

    #[test]
    fn pommaret_rejects_higher_powers_of_the_class_variable() {
        // With Theta = {d - x} in one variable: d divides d^n involutively
        // only for n = 1 under the paper convention.
        let uset = alloc::vec![m(&[1])];
        let paper = Division::Pommaret(PommaretConvention::Paper);
        assert_eq!(
            involutive_divisor(&m(&[2]), &uset, &paper).unwrap(),
            DivisorSearch::None
        );
        assert_eq!(
            involutive_divisor(&m(&[1]), &uset, &paper).unwrap(),
            DivisorSearch::Divisor { index: 0, cofactor: m(&[0]) }
        );
    }

    #[test]
    fn autoreduced_checks() {
        let uset = janet_table_set();
        assert_eq!(
            check_autoreduced(&uset, &Division::Janet).unwrap(),
            AutoreduceCheck::Autoreduced
        );
        // Singleton sets are trivially autoreduced.
        assert_eq!(
            check_autoreduced(&[m(&[1])], &Division::Pommaret(PommaretConvention::Paper)).unwrap(),
            AutoreduceCheck::Autoreduced
        );
        // An all-multiplicative custom division sees d1 divide d1^2.
        let all = Division::Custom(CustomDivision {
            name: "all".into(),
            multiplicative: Arc::new(|u: &DMonomial, _: &[DMonomial]| (0..u.nvars()).collect()),
        });
        assert_eq!(
            check_autoreduced(&[m(&[1]), m(&[2])], &all).unwrap(),
            AutoreduceCheck::Witness { divisor: m(&[1]), dividend: m(&[2]) }
        );
    }
}
