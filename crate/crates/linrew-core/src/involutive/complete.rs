//! Involutive completion by nonmultiplicative prolongations.

use alloc::format;
use alloc::string::String;

use super::snf::InvolutiveStrategy;
use super::system::InvolutiveSystem;
use super::InvolutiveError;
use crate::rewrite::snf;
use crate::weyl::{make_monic, weyl_mul, WeylOp};

/// Repeatedly reduce the nonmultiplicative prolongations `d_i * D`; whenever
/// one has a nonzero normal form, adjoin it monic and re-derive the
/// multiplicative tables. Stops when a full pass finds nothing to adjoin, so
/// the result checks as involutive for single prolongations. Each adjunction
/// consumes one round of the budget.
pub fn complete(
    system: &InvolutiveSystem,
    max_rounds: usize,
) -> Result<InvolutiveSystem, InvolutiveError> {
    let mut current = system.clone();
    for _ in 0..max_rounds {
        match completion_pass(&current)? {
            None => return Ok(current),
            Some(op) => {
                let name = fresh_name(&current);
                let theta = current
                    .theta()
                    .with_op(name, op)
                    .expect("reduced prolongations are nonzero, monic and dimensioned");
                current = InvolutiveSystem::new(theta, current.division().clone())?;
            }
        }
    }
    Err(InvolutiveError::RoundBudgetExhausted { rounds: max_rounds })
}

/// One scan over `(operator, nonmultiplicative variable)` pairs in
/// declaration-then-index order; returns the first nonzero reduced
/// prolongation, made monic.
fn completion_pass(system: &InvolutiveSystem) -> Result<Option<WeylOp>, InvolutiveError> {
    let strategy = InvolutiveStrategy::new(system)?;
    let tables = system.multiplicative_tables();
    let nvars = system.theta().nvars();
    for (index, op) in system.theta().ops().iter().enumerate() {
        for var in 0..nvars {
            if tables[index].contains(&var) {
                continue;
            }
            let prolonged = weyl_mul(&crate::weyl::d_op(nvars, var), op).expect("dimensions agree");
            let residual = snf(&prolonged, &strategy, usize::MAX).expect("order descent terminates");
            if !residual.is_zero() {
                let monic = make_monic(&residual, system.theta().order())
                    .expect("nonzero operator has leading data");
                return Ok(Some(monic));
            }
        }
    }
    Ok(None)
}

fn fresh_name(system: &InvolutiveSystem) -> String {
    let names = system.theta().names();
    let mut k = names.len() + 1;
    loop {
        let candidate = format!("D{k}");
        if !names.contains(&candidate) {
            return candidate;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutive::division::Division;
    use crate::involutive::snf::{check_involutive, InvolutiveCheckMode, Involutivity};
    use crate::involutive::system::tests::janet_example;
    use crate::scalar::{MultiPoly, RatFunc};
    use crate::weyl::{constant_op, d_op, DMonomial, MonomialOrder, ThetaSystem};
    use alloc::collections::BTreeSet;

    #[test]
    fn janet_example_completes_to_the_published_basis() {
        let sys = InvolutiveSystem::new(janet_example(), Division::Janet).unwrap();
        let completed = complete(&sys, 64).unwrap();
        let lms: BTreeSet<DMonomial> = completed.leading_monomials().into_iter().collect();
        let expected: BTreeSet<DMonomial> = [
            alloc::vec![0, 0, 2], // d3^2
            alloc::vec![0, 2, 0], // d2^2
            alloc::vec![2, 1, 0], // d1^2 d2
            alloc::vec![0, 2, 1], // d2^2 d3
            alloc::vec![4, 0, 0], // d1^4
            alloc::vec![2, 1, 1], // d1^2 d2 d3
            alloc::vec![4, 0, 1], // d1^4 d3
        ]
        .into_iter()
        .map(DMonomial::new)
        .collect();
        assert_eq!(lms, expected);
        assert_eq!(
            check_involutive(&completed, InvolutiveCheckMode::Prolongations).unwrap(),
            Involutivity::Involutive
        );
    }

    #[test]
    fn involutive_input_is_returned_unchanged() {
        let d = d_op(1, 0).sub(&constant_op(RatFunc::from_poly(MultiPoly::variable(1, 0))));
        let theta =
            ThetaSystem::new(1, MonomialOrder::deglex(1), alloc::vec![("D".into(), d)]).unwrap();
        let sys = InvolutiveSystem::new(theta, Division::Janet).unwrap();
        let completed = complete(&sys, 8).unwrap();
        assert_eq!(completed.theta().len(), 1);
        assert_eq!(completed.leading_monomials(), sys.leading_monomials());
    }
}
