//! Well-foundedness certification for prestrategies.
//!
//! A prestrategy is a strategy when its preorder has no infinite strict
//! descent. On the finite reachable set this is decided exactly by the
//! one-step support graph `e -> e'` for `e' in supp(r_S(e))`, `r_S(e) != e`:
//! every such edge is a genuine preorder descent, and every descent realized
//! by an iterate of `r_S` factors through a path of such edges, so the graph
//! and the preorder have the same transitive closure. Acyclic graph means
//! strategy; a graph cycle is a genuine preorder cycle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::system::{Prestrategy, RewritingSystem};
use super::{engine::StrategySource, RewriteError};
use crate::linspace::{Basis, Field, LinComb};

/// Certification verdict. `Unknown` is reserved for rule sources whose
/// reachable set cannot be enumerated; the finite certifier never emits it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertStatus<B: Basis> {
    CertifiedWellFounded,
    /// A closed walk in the one-step support graph, listed as
    /// `[n0, n1, .., nk]` with `nk = n0` and each consecutive pair an edge.
    CycleFound(Vec<B>),
    Unknown,
}

/// Outcome of [`certify_strategy`], with a topological layering witnessing
/// termination when certified: ranks strictly decrease along every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyCertificate<B: Basis> {
    pub status: CertStatus<B>,
    pub ranks: Option<BTreeMap<B, usize>>,
}

impl<B: Basis> StrategyCertificate<B> {
    pub fn is_certified(&self) -> bool {
        matches!(self.status, CertStatus::CertifiedWellFounded)
    }
}

/// Build the one-step support graph restricted to the elements reachable from
/// `roots` and the rule supports, and decide its acyclicity.
pub fn certify_strategy<B: Basis, K: Field>(
    system: &RewritingSystem<B, K>,
    strategy: &Prestrategy,
    roots: &BTreeSet<B>,
    node_budget: usize,
) -> Result<StrategyCertificate<B>, RewriteError> {
    let resolved = strategy.resolve(system)?;

    let mut seeds: BTreeSet<B> = roots.clone();
    seeds.extend(system.all_support());

    // successors(e) = supp(r_S(e)) when e has a selected rule that moves it.
    let successors = |e: &B| -> Vec<B> {
        match resolved.selected_rhs(e) {
            Some(rhs) if rhs != LinComb::basis(e.clone()) => rhs.support().cloned().collect(),
            _ => Vec::new(),
        }
    };

    // Reachable closure with node budget.
    let mut nodes: BTreeSet<B> = BTreeSet::new();
    let mut stack: Vec<B> = seeds.into_iter().collect();
    while let Some(e) = stack.pop() {
        if nodes.contains(&e) {
            continue;
        }
        if nodes.len() >= node_budget {
            return Err(RewriteError::NonTerminatingClosure { budget: node_budget });
        }
        for succ in successors(&e) {
            if !nodes.contains(&succ) {
                stack.push(succ);
            }
        }
        nodes.insert(e);
    }

    let edges: BTreeMap<B, Vec<B>> = nodes.iter().map(|e| (e.clone(), successors(e))).collect();

    // Iterative three-color DFS with cycle extraction.
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color: BTreeMap<B, Color> = nodes.iter().map(|e| (e.clone(), Color::White)).collect();
    for start in &nodes {
        if color[start] != Color::White {
            continue;
        }
        // Stack of (node, next-child-index); `path` mirrors the gray chain.
        let mut path: Vec<B> = Vec::new();
        let mut stack: Vec<(B, usize)> = alloc::vec![(start.clone(), 0)];
        while let Some((node, child_idx)) = stack.pop() {
            if child_idx == 0 {
                color.insert(node.clone(), Color::Gray);
                path.push(node.clone());
            }
            let succ = &edges[&node];
            if child_idx < succ.len() {
                stack.push((node.clone(), child_idx + 1));
                let child = succ[child_idx].clone();
                match color[&child] {
                    Color::White => stack.push((child, 0)),
                    Color::Gray => {
                        // Cycle: suffix of `path` from `child` onward, closed.
                        let pos = path.iter().position(|n| n == &child).unwrap();
                        let mut cycle: Vec<B> = path[pos..].to_vec();
                        cycle.push(child);
                        return Ok(StrategyCertificate {
                            status: CertStatus::CycleFound(cycle),
                            ranks: None,
                        });
                    }
                    Color::Black => {}
                }
            } else {
                color.insert(node.clone(), Color::Black);
                path.pop();
            }
        }
    }

    // Acyclic: rank by longest path to a sink, so ranks strictly decrease
    // along edges. Memoized DFS in reverse topological fashion.
    let mut ranks: BTreeMap<B, usize> = BTreeMap::new();
    fn rank_of<B: Basis>(
        e: &B,
        edges: &BTreeMap<B, Vec<B>>,
        ranks: &mut BTreeMap<B, usize>,
    ) -> usize {
        if let Some(&r) = ranks.get(e) {
            return r;
        }
        let r = edges[e]
            .iter()
            .map(|succ| rank_of(succ, edges, ranks) + 1)
            .max()
            .unwrap_or(0);
        ranks.insert(e.clone(), r);
        r
    }
    for e in &nodes {
        rank_of(e, &edges, &mut ranks);
    }

    Ok(StrategyCertificate {
        status: CertStatus::CertifiedWellFounded,
        ranks: Some(ranks),
    })
}
