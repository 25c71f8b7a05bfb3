//! Exhaustive bounded checking of the involutive-division axioms.

use alloc::vec::Vec;

use super::division::{involutive_divides, Division};
use super::InvolutiveError;
use crate::weyl::{enumerate_monomials, DMonomial};

/// A concrete violation of one axiom, tagged `a` through `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// a) involutive divisibility without ordinary divisibility.
    NotDividing { u: DMonomial, m: DMonomial },
    /// b) a member not dividing itself.
    NotReflexive { u: DMonomial },
    /// c) `u | u*m` and `u | u*m'` fails to match `u | u*m*m'`.
    Composition { u: DMonomial, m: DMonomial, m_prime: DMonomial },
    /// d) two incomparable involutive divisors of the same monomial.
    Vertex { u: DMonomial, u_prime: DMonomial, m: DMonomial },
    /// e) failed transitivity through `u'`.
    Transitivity { u: DMonomial, u_prime: DMonomial, m: DMonomial },
    /// f) divisibility lost when restricting to a subset.
    Filter { subset: Vec<DMonomial>, v: DMonomial, m: DMonomial },
}

impl AxiomViolation {
    pub fn axiom(&self) -> char {
        match self {
            AxiomViolation::NotDividing { .. } => 'a',
            AxiomViolation::NotReflexive { .. } => 'b',
            AxiomViolation::Composition { .. } => 'c',
            AxiomViolation::Vertex { .. } => 'd',
            AxiomViolation::Transitivity { .. } => 'e',
            AxiomViolation::Filter { .. } => 'f',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionAxioms {
    Pass,
    Violation(AxiomViolation),
}

/// Test axioms a) through f) for `division` on the finite set `uset`,
/// quantifying monomials over total degree at most `degree_bound`. Axiom f)
/// enumerates all subsets, so keep `uset` small.
pub fn check_division_axioms(
    division: &Division,
    uset: &[DMonomial],
    degree_bound: u32,
) -> Result<DivisionAxioms, InvolutiveError> {
    if uset.is_empty() {
        return Ok(DivisionAxioms::Pass);
    }
    let nvars = uset[0].nvars();
    let window = enumerate_monomials(nvars, degree_bound);
    let divides = |u: &DMonomial, m: &DMonomial| involutive_divides(u, m, uset, division);

    // a) and b)
    for u in uset {
        for m in &window {
            if divides(u, m)? && !u.divides(m) {
                return Ok(DivisionAxioms::Violation(AxiomViolation::NotDividing {
                    u: u.clone(),
                    m: m.clone(),
                }));
            }
        }
        if !divides(u, u)? {
            return Ok(DivisionAxioms::Violation(AxiomViolation::NotReflexive { u: u.clone() }));
        }
    }

    // c) both directions, with all three products inside the window bound.
    for u in uset {
        for m in &window {
            if u.total_degree() + m.total_degree() > degree_bound {
                continue;
            }
            for m_prime in &window {
                if u.total_degree() + m.total_degree() + m_prime.total_degree() > degree_bound {
                    continue;
                }
                let both = divides(u, &u.mul(m))? && divides(u, &u.mul(m_prime))?;
                let joint = divides(u, &u.mul(m).mul(m_prime))?;
                if both != joint {
                    return Ok(DivisionAxioms::Violation(AxiomViolation::Composition {
                        u: u.clone(),
                        m: m.clone(),
                        m_prime: m_prime.clone(),
                    }));
                }
            }
        }
    }

    // d)
    for u in uset {
        for u_prime in uset {
            if u == u_prime {
                continue;
            }
            for m in &window {
                if divides(u, m)? && divides(u_prime, m)? && !divides(u, u_prime)? && !divides(u_prime, u)? {
                    return Ok(DivisionAxioms::Violation(AxiomViolation::Vertex {
                        u: u.clone(),
                        u_prime: u_prime.clone(),
                        m: m.clone(),
                    }));
                }
            }
        }
    }

    // e)
    for u in uset {
        for u_prime in uset {
            if !divides(u, u_prime)? {
                continue;
            }
            for m in &window {
                if divides(u_prime, m)? && !divides(u, m)? {
                    return Ok(DivisionAxioms::Violation(AxiomViolation::Transitivity {
                        u: u.clone(),
                        u_prime: u_prime.clone(),
                        m: m.clone(),
                    }));
                }
            }
        }
    }

    // f) over all subsets containing each candidate divisor.
    debug_assert!(uset.len() <= 16, "axiom f enumerates subsets");
    for mask in 1u32..(1 << uset.len()) {
        let subset: Vec<DMonomial> = uset
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, u)| u.clone())
            .collect();
        for v in &subset {
            for m in &window {
                if divides(v, m)? && !involutive_divides(v, m, &subset, division)? {
                    return Ok(DivisionAxioms::Violation(AxiomViolation::Filter {
                        subset: subset.clone(),
                        v: v.clone(),
                        m: m.clone(),
                    }));
                }
            }
        }
    }

    Ok(DivisionAxioms::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutive::division::CustomDivision;
    use alloc::sync::Arc;

    fn m(alpha: &[u32]) -> DMonomial {
        DMonomial::new(alpha.to_vec())
    }

    #[test]
    fn classical_divisions_pass_on_the_running_example() {
        let uset = alloc::vec![m(&[0, 0, 2]), m(&[0, 2, 0])];
        for division in [
            Division::Janet,
            Division::Thomas,
            Division::Pommaret(Default::default()),
        ] {
            assert_eq!(
                check_division_axioms(&division, &uset, 5).unwrap(),
                DivisionAxioms::Pass,
                "{division:?}"
            );
        }
    }

    #[test]
    fn all_multiplicative_custom_division_violates_vertex_axiom() {
        let all = Division::Custom(CustomDivision {
            name: "all".into(),
            multiplicative: Arc::new(|u: &DMonomial, _: &[DMonomial]| (0..u.nvars()).collect()),
        });
        let uset = alloc::vec![m(&[1, 0]), m(&[0, 1])];
        match check_division_axioms(&all, &uset, 4).unwrap() {
            DivisionAxioms::Violation(v) => assert_eq!(v.axiom(), 'd'),
            DivisionAxioms::Pass => panic!("axiom d must fail: d1 and d2 both divide d1*d2"),
        }
    }
}
