//! Brute-force span oracle: exact Gaussian elimination over the coefficient
//! field on the generators `lhs - rhs`.
//!
//! This is the independent route for everything the strategy engine claims
//! about the subspace the rules span; it never goes through `r_S`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::system::{RewritingSystem, RuleId};
use super::RewriteError;
use crate::linspace::{Basis, Field, LinComb};

/// Outcome of a span-membership query; coordinates express the query vector
/// as a combination of the named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult<K> {
    Member { coordinates: Vec<(RuleId, K)> },
    NotMember,
}

struct Eliminator<B: Basis, K: Field> {
    columns: Vec<B>,
    // Echelon rows: (pivot column index, dense row, coordinates over gens).
    pivots: Vec<(usize, Vec<K>, Vec<K>)>,
    ngens: usize,
}

impl<B: Basis, K: Field> Eliminator<B, K> {
    fn new(columns: Vec<B>, ngens: usize) -> Self {
        Eliminator { columns, pivots: Vec::new(), ngens }
    }

    fn densify(&self, v: &LinComb<B, K>) -> Vec<K> {
        self.columns.iter().map(|b| v.coeff(b)).collect()
    }

    /// Reduce `row` against the echelon, accumulating the combination of
    /// generators used into `coords`.
    fn reduce(&self, row: &mut [K], coords: &mut [K]) {
        for (col, prow, pcoords) in &self.pivots {
            let factor = row[*col].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, p) in row.iter_mut().zip(prow) {
                *r = r.sub(&factor.mul(p));
            }
            for (c, p) in coords.iter_mut().zip(pcoords) {
                *c = c.sub(&factor.mul(p));
            }
        }
    }

    /// Insert a generator row (generator index `idx`); returns true if it
    /// added a pivot (was independent). Pivot rows satisfy
    /// `prow = sum pcoords[j] * gen_j` exactly.
    fn insert(&mut self, idx: usize, v: &LinComb<B, K>) -> bool {
        let mut row = self.densify(v);
        let mut coords = alloc::vec![K::zero(); self.ngens];
        coords[idx] = K::one();
        self.reduce(&mut row, &mut coords);
        match row.iter().position(|k| !k.is_zero()) {
            None => false,
            Some(col) => {
                let inv = row[col].inv().expect("pivot is nonzero");
                for r in row.iter_mut() {
                    *r = r.mul(&inv);
                }
                for c in coords.iter_mut() {
                    *c = c.mul(&inv);
                }
                self.pivots.push((col, row, coords));
                self.pivots.sort_by_key(|(c, _, _)| *c);
                true
            }
        }
    }
}

/// Decide `w in span{ lhs - rhs : rules }` by exact elimination over the
/// finite combined support. On membership the coordinates satisfy
/// `w = sum coordinates[i] * (lhs_i - rhs_i)` exactly.
pub fn span_membership<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    w: &LinComb<B, K>,
    node_budget: usize,
) -> Result<SpanResult<K>, RewriteError> {
    span_membership_vectors(&system.generators(), w, node_budget)
}

pub(super) fn span_membership_vectors<B: Basis, K: Field>(
    generators: &[(RuleId, LinComb<B, K>)],
    w: &LinComb<B, K>,
    node_budget: usize,
) -> Result<SpanResult<K>, RewriteError> {
    let mut support: BTreeSet<B> = w.support().cloned().collect();
    for (_, g) in generators {
        support.extend(g.support().cloned());
    }
    if support.len() > node_budget {
        return Err(RewriteError::NonTerminatingClosure { budget: node_budget });
    }
    let mut elim = Eliminator::new(support.into_iter().collect(), generators.len());
    for (idx, (_, g)) in generators.iter().enumerate() {
        elim.insert(idx, g);
    }
    let mut row = elim.densify(w);
    let mut coords = alloc::vec![K::zero(); generators.len()];
    elim.reduce(&mut row, &mut coords);
    if row.iter().any(|k| !k.is_zero()) {
        return Ok(SpanResult::NotMember);
    }
    // reduce() accumulated the negated combination; flip and keep nonzeros.
    let coordinates = generators
        .iter()
        .zip(coords)
        .filter_map(|((id, _), c)| {
            if c.is_zero() {
                None
            } else {
                Some((id.clone(), c.neg()))
            }
        })
        .collect();
    Ok(SpanResult::Member { coordinates })
}

/// Rank of a family of vectors by the same elimination.
pub fn gaussian_rank<B: Basis, K: Field>(vectors: &[LinComb<B, K>]) -> usize {
    let mut support: BTreeSet<B> = BTreeSet::new();
    for v in vectors {
        support.extend(v.support().cloned());
    }
    let mut elim = Eliminator::<B, K>::new(support.into_iter().collect(), vectors.len());
    let mut rank = 0;
    for (idx, v) in vectors.iter().enumerate() {
        if elim.insert(idx, v) {
            rank += 1;
        }
    }
    rank
}
