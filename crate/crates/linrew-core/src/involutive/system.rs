//! A set of monic operators paired with an involutive division.

use alloc::vec::Vec;

use super::division::{check_autoreduced, multiplicative_variables, AutoreduceCheck, Division, VarSet};
use super::InvolutiveError;
use crate::weyl::{DMonomial, ThetaSystem};

/// A [`ThetaSystem`] together with the division inducing its strategy. The
/// leading monomials are required to be pairwise distinct.
#[derive(Clone, Debug)]
pub struct InvolutiveSystem {
    theta: ThetaSystem,
    division: Division,
}

impl InvolutiveSystem {
    pub fn new(theta: ThetaSystem, division: Division) -> Result<Self, InvolutiveError> {
        let lms = theta.leading_monomials();
        for (i, u) in lms.iter().enumerate() {
            if lms[..i].contains(u) {
                return Err(InvolutiveError::DuplicateSelectedLhs { lhs: u.clone() });
            }
        }
        Ok(InvolutiveSystem { theta, division })
    }

    pub fn theta(&self) -> &ThetaSystem {
        &self.theta
    }

    pub fn division(&self) -> &Division {
        &self.division
    }

    pub fn leading_monomials(&self) -> Vec<DMonomial> {
        self.theta.leading_monomials()
    }

    /// Multiplicative-variable table, one entry per operator in declaration
    /// order.
    pub fn multiplicative_tables(&self) -> Vec<VarSet> {
        let lms = self.leading_monomials();
        lms.iter()
            .map(|u| {
                multiplicative_variables(u, &lms, &self.division)
                    .expect("leading monomials are members of their own set")
            })
            .collect()
    }

    pub fn with_division(&self, division: Division) -> Self {
        InvolutiveSystem { theta: self.theta.clone(), division }
    }
}

/// Whether the leading monomials are autoreduced for the system's division.
pub fn left_autoreduced(system: &InvolutiveSystem) -> AutoreduceCheck {
    check_autoreduced(&system.leading_monomials(), system.division())
        .expect("members are queried against their own set")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::scalar::{MultiPoly, RatFunc};
    use crate::weyl::{constant_op, d_op, MonomialOrder, WeylOp};

    pub(crate) fn janet_example() -> ThetaSystem {
        // D1 = d3^2 - x2 d1^2, D2 = d2^2 over three variables, deglex.
        let d1 = WeylOp::basis(DMonomial::new(alloc::vec![0, 0, 2])).sub(&WeylOp::term(
            DMonomial::new(alloc::vec![2, 0, 0]),
            RatFunc::from_poly(MultiPoly::variable(3, 1)),
        ));
        let d2 = WeylOp::basis(DMonomial::new(alloc::vec![0, 2, 0]));
        ThetaSystem::new(
            3,
            MonomialOrder::deglex(3),
            alloc::vec![("D1".into(), d1), ("D2".into(), d2)],
        )
        .unwrap()
    }

    #[test]
    fn janet_example_is_left_autoreduced() {
        let sys = InvolutiveSystem::new(janet_example(), Division::Janet).unwrap();
        assert_eq!(left_autoreduced(&sys), AutoreduceCheck::Autoreduced);
        let tables = sys.multiplicative_tables();
        assert_eq!(tables[0], VarSet::from([0, 1, 2]));
        assert_eq!(tables[1], VarSet::from([0, 1]));
    }

    #[test]
    fn duplicate_leading_monomials_rejected() {
        let a = d_op(1, 0).add(&constant_op(RatFunc::one(1)));
        let b = d_op(1, 0);
        let theta = ThetaSystem::new(
            1,
            MonomialOrder::deglex(1),
            alloc::vec![("A".into(), a), ("B".into(), b)],
        )
        .unwrap();
        assert!(matches!(
            InvolutiveSystem::new(theta, Division::Janet),
            Err(InvolutiveError::DuplicateSelectedLhs { .. })
        ));
    }
}
