//! Decision procedures over the solver: criticality via one-step
//! minors, 1-uniqueness via the star-clique criterion or the
//! brute-force oracle, the edge-join construction, and the conjecture
//! predicates for critical graphs.

use crate::graph::{Graph, GraphError, MinorStep};
use crate::solver::{self, SolverError};

/// Criticality verdict; `witness` is a one-step minor whose tree-depth
/// did not drop, present iff the graph is not critical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    pub td: u32,
    pub witness: Option<MinorStep>,
}

/// All one-step minors: vertex deletions, then edge deletions, then
/// contractions, each in ascending order.
pub fn one_step_minors(g: &Graph) -> Vec<(MinorStep, Graph)> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let step = MinorStep::DeleteVertex(v);
        out.push((step, step.apply(g).expect("vertex exists")));
    }
    for (u, v) in g.edges() {
        let step = MinorStep::DeleteEdge(u, v);
        out.push((step, step.apply(g).expect("edge exists")));
    }
    for (u, v) in g.edges() {
        let step = MinorStep::ContractEdge(u, v);
        out.push((step, step.apply(g).expect("edge exists")));
    }
    out
}

/// A graph is critical iff every one-step minor has strictly smaller
/// tree-depth. One step suffices: tree-depth is minor-monotone, so a
/// multi-step minor of equal td factors through a one-step minor of
/// no smaller td.
pub fn is_critical(g: &Graph) -> CriticalityVerdict {
    let td = solver::tree_depth_value(g);
    for (step, minor) in one_step_minors(g) {
        if solver::tree_depth_value(&minor) >= td {
            return CriticalityVerdict {
                is_critical: false,
                td,
                witness: Some(step),
            };
        }
    }
    CriticalityVerdict {
        is_critical: true,
        td,
        witness: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneUniqueMethod {
    /// td(star-clique transform at v) < td(G).
    StarClique,
    /// Brute-force search for an optimal ranking with v uniquely 1.
    Oracle,
}

/// Is `v` 1-unique in `g`?
pub fn is_one_unique_vertex(
    g: &Graph,
    v: usize,
    method: OneUniqueMethod,
) -> Result<bool, SolverError> {
    match method {
        OneUniqueMethod::StarClique => {
            let h = g.star_clique_transform(v)?;
            Ok(solver::tree_depth_value(&h) < solver::tree_depth_value(g))
        }
        OneUniqueMethod::Oracle => solver::unique_one_ranking_exists(g, v),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneUniqueVerdict {
    pub one_unique: bool,
    pub failing_vertex: Option<usize>,
}

/// Is every vertex of `g` 1-unique? Uses the star-clique criterion.
pub fn is_one_unique(g: &Graph) -> OneUniqueVerdict {
    for v in g.vertices() {
        let ok = is_one_unique_vertex(g, v, OneUniqueMethod::StarClique)
            .expect("vertex is in range");
        if !ok {
            return OneUniqueVerdict {
                one_unique: false,
                failing_vertex: Some(v),
            };
        }
    }
    OneUniqueVerdict {
        one_unique: true,
        failing_vertex: None,
    }
}

/// Disjoint union of `g` and `h` plus the single edge (u, v + n_g).
pub fn edge_join(g: &Graph, h: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange(u, g.n()));
    }
    if v >= h.n() {
        return Err(GraphError::VertexOutOfRange(v, h.n()));
    }
    let joined = g.disjoint_union(h)?;
    let mut edges = joined.edges();
    edges.push((u, v + g.n()));
    Graph::build(joined.n(), &edges)
}

/// Per-conjecture verdicts for a critical graph with tree-depth k:
/// order at most 2^(k-1), maximum degree at most k-1, 1-unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureVerdicts {
    pub order_bound: bool,
    pub degree_bound: bool,
    pub one_unique: bool,
}

impl ConjectureVerdicts {
    pub fn all_pass(&self) -> bool {
        self.order_bound && self.degree_bound && self.one_unique
    }
}

pub fn check_conjectures(g: &Graph) -> ConjectureVerdicts {
    let k = solver::tree_depth_value(g);
    ConjectureVerdicts {
        order_bound: (g.n() as u64) <= 1u64 << (k.saturating_sub(1)),
        degree_bound: g.max_degree() as u32 <= k.saturating_sub(1),
        one_unique: is_one_unique(g).one_unique,
    }
}
