//! Exact tree-depth with ranking certificates.
//!
//! The solver recurses over connected induced subgraphs of a fixed base
//! graph, keyed by vertex bit set and memoized: tree-depth of a
//! disconnected graph is the max over components, and for a connected
//! graph it is 1 + min over v of the tree-depth of G - v. Branches are
//! ordered by decreasing degree and cut against a longest-path/clique
//! lower bound.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{bit, set_members, Graph, GraphError, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("ranking labels must be at least 1")]
    ZeroLabel,
    #[error("ranking covers {got} vertices, graph has {expected}")]
    CoverageMismatch { got: usize, expected: usize },
    #[error("brute-force 1-ranking oracle is limited to 12 vertices, got {0}")]
    OracleTooLarge(usize),
    #[error("separator-formula cross-check is limited to 12 vertices, got {0}")]
    SeparatorTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A total vertex labeling claimed to be a valid ranking. Labels are in
/// `1..=k` with `k` the maximum label present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    labels: Vec<u32>,
}

impl Ranking {
    pub fn new(labels: Vec<u32>) -> Result<Self, SolverError> {
        if labels.iter().any(|&l| l == 0) {
            return Err(SolverError::ZeroLabel);
        }
        Ok(Ranking { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Maximum label present (0 for the empty graph).
    pub fn k(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// Exact tree-depth plus a certifying optimal ranking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdResult {
    pub td: u32,
    pub certificate: Ranking,
}

/// Outcome of a ranking validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankingVerdict {
    Valid,
    /// A violating path: equal-label endpoints, no interior vertex with
    /// a larger label.
    Invalid { path: Vec<usize> },
}

impl RankingVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, RankingVerdict::Valid)
    }
}

/// Check the ranking condition: for each color c, every component of the
/// subgraph induced by labels <= c holds at most one vertex of label c.
pub fn is_valid_ranking(g: &Graph, r: &Ranking) -> Result<RankingVerdict, SolverError> {
    if r.labels.len() != g.n() {
        return Err(SolverError::CoverageMismatch {
            got: r.labels.len(),
            expected: g.n(),
        });
    }
    for c in 1..=r.k() {
        let low: VertexSet = g
            .vertices()
            .filter(|&v| r.labels[v] <= c)
            .fold(0, |acc, v| acc | bit(v));
        for comp in g.components_within(low) {
            let tops: Vec<usize> = set_members(comp).filter(|&v| r.labels[v] == c).collect();
            if tops.len() >= 2 {
                let path = bfs_path(g, comp, tops[0], tops[1]);
                return Ok(RankingVerdict::Invalid { path });
            }
        }
    }
    Ok(RankingVerdict::Valid)
}

fn bfs_path(g: &Graph, within: VertexSet, from: usize, to: usize) -> Vec<usize> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut seen = bit(from);
    let mut queue = vec![from];
    while let Some(v) = queue.pop() {
        if v == to {
            break;
        }
        for w in set_members(g.neighbors(v) & within & !seen) {
            seen |= bit(w);
            parent.insert(w, v);
            queue.insert(0, w);
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Memoizing exact solver over connected vertex subsets of one base graph.
pub struct Solver {
    g: Graph,
    memo: HashMap<VertexSet, u32>,
}

impl Solver {
    pub fn new(g: &Graph) -> Self {
        Solver {
            g: g.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// Tree-depth of the full graph.
    pub fn td(&mut self) -> u32 {
        self.td_set(self.g.full_set())
    }

    /// Tree-depth of the subgraph induced by `s`.
    pub fn td_set(&mut self, s: VertexSet) -> u32 {
        self.g
            .components_within(s)
            .into_iter()
            .map(|c| self.td_connected(c))
            .max()
            .unwrap_or(0)
    }

    fn td_connected(&mut self, s: VertexSet) -> u32 {
        let size = s.count_ones();
        if size <= 1 {
            return size;
        }
        if let Some(&v) = self.memo.get(&s) {
            return v;
        }
        if self.is_clique(s) {
            self.memo.insert(s, size);
            return size;
        }
        let lb = self.lower_bound(s);
        // Branch on vertices by decreasing degree within s; the first
        // branch doubles as the greedy-elimination upper bound.
        let mut order: Vec<usize> = set_members(s).collect();
        order.sort_by_key(|&v| {
            (
                std::cmp::Reverse((self.g.neighbors(v) & s).count_ones()),
                v,
            )
        });
        let mut best = u32::MAX;
        for v in order {
            if best == lb {
                break;
            }
            let t = 1 + self.td_set(s & !bit(v));
            best = best.min(t);
        }
        self.memo.insert(s, best);
        best
    }

    fn is_clique(&self, s: VertexSet) -> bool {
        set_members(s).all(|v| self.g.neighbors(v) & s == s & !bit(v))
    }

    fn lower_bound(&self, s: VertexSet) -> u32 {
        let clique = self.greedy_clique(s);
        let path = self.longest_path_estimate(s);
        clique.max(path.ilog2() + 1)
    }

    fn greedy_clique(&self, s: VertexSet) -> u32 {
        let mut order: Vec<usize> = set_members(s).collect();
        order.sort_by_key(|&v| std::cmp::Reverse((self.g.neighbors(v) & s).count_ones()));
        let mut clique: VertexSet = 0;
        for v in order {
            if clique & !self.g.neighbors(v) == 0 {
                clique |= bit(v);
            }
        }
        clique.count_ones()
    }

    /// Order of the longest path found by budgeted DFS. A lower estimate
    /// only; soundness of the bound does not need exactness.
    fn longest_path_estimate(&self, s: VertexSet) -> u32 {
        let mut best = 1;
        let mut budget: u32 = 4000;
        for v in set_members(s) {
            if budget == 0 {
                break;
            }
            self.path_dfs(v, bit(v), 1, s, &mut best, &mut budget);
        }
        best
    }

    fn path_dfs(
        &self,
        v: usize,
        visited: VertexSet,
        depth: u32,
        s: VertexSet,
        best: &mut u32,
        budget: &mut u32,
    ) {
        *best = (*best).max(depth);
        if *budget == 0 {
            return;
        }
        *budget -= 1;
        for w in set_members(self.g.neighbors(v) & s & !visited) {
            self.path_dfs(w, visited | bit(w), depth + 1, s, best, budget);
            if *budget == 0 {
                return;
            }
        }
    }

    /// Re-descend the solved recursion and build an optimal ranking,
    /// choosing the lexicographically smallest minimizing vertex at each
    /// step for deterministic output.
    pub fn certificate(&mut self) -> Ranking {
        let mut labels = vec![0u32; self.g.n()];
        self.assign(self.g.full_set(), &mut labels);
        Ranking::new(labels).expect("assigned labels start at 1")
    }

    fn assign(&mut self, s: VertexSet, labels: &mut Vec<u32>) {
        for comp in self.g.components_within(s) {
            let t = self.td_connected(comp);
            if comp.count_ones() == 1 {
                labels[comp.trailing_zeros() as usize] = 1;
                continue;
            }
            let v = set_members(comp)
                .find(|&v| 1 + self.td_set(comp & !bit(v)) == t)
                .expect("some branch achieves the minimum");
            labels[v] = t;
            self.assign(comp & !bit(v), labels);
        }
    }

    pub fn solve(&mut self) -> TdResult {
        let td = self.td();
        let certificate = self.certificate();
        TdResult { td, certificate }
    }
}

/// Exact tree-depth with a certifying ranking.
pub fn tree_depth(g: &Graph) -> TdResult {
    Solver::new(g).solve()
}

/// Exact tree-depth value only (skips certificate reconstruction).
pub fn tree_depth_value(g: &Graph) -> u32 {
    Solver::new(g).td()
}

/// Cross-check route: td(G) = min over S of td(G<S>) + td(G - S).
/// Exponential in subsets; intended for small n only.
pub fn tree_depth_via_separators(g: &Graph) -> Result<u32, SolverError> {
    if g.n() > 12 {
        return Err(SolverError::SeparatorTooLarge(g.n()));
    }
    let full = g.full_set();
    let mut best = u32::MAX;
    let mut s: VertexSet = 0;
    loop {
        let inner = tree_depth_value(&g.quotient_closure(s));
        let outer = tree_depth_value(&g.induced_subgraph(full & !s).0);
        best = best.min(inner + outer);
        if s == full {
            break;
        }
        s += 1;
    }
    Ok(best)
}

/// Brute-force oracle: does some valid ranking with exactly td(G) colors
/// label `v` with 1 and every other vertex with a color >= 2?
pub fn unique_one_ranking_exists(g: &Graph, v: usize) -> Result<bool, SolverError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange(v, g.n()).into());
    }
    if g.n() > 12 {
        return Err(SolverError::OracleTooLarge(g.n()));
    }
    let k = tree_depth_value(g);
    if g.n() == 1 {
        return Ok(true);
    }
    if k < 2 {
        // Every other vertex would need a color above k.
        return Ok(false);
    }
    let mut labels = vec![0u32; g.n()];
    labels[v] = 1;
    Ok(search_ranking(g, v, 0, k, &mut labels))
}

fn search_ranking(g: &Graph, fixed: usize, next: usize, k: u32, labels: &mut Vec<u32>) -> bool {
    let next = if next == fixed { next + 1 } else { next };
    if next >= g.n() {
        return true;
    }
    for c in 2..=k {
        labels[next] = c;
        if partial_ok(g, labels, next) && search_ranking(g, fixed, next + 1, k, labels) {
            return true;
        }
    }
    labels[next] = 0;
    false
}

/// Check that assigning `u`'s label created no violation among labeled
/// vertices. A violation fixed later would still involve a labeled path,
/// so pruning on the labeled induced subgraph is sound and, at the leaf,
/// complete.
fn partial_ok(g: &Graph, labels: &[u32], u: usize) -> bool {
    let cu = labels[u];
    let max = labels.iter().copied().max().unwrap_or(0);
    for c in cu..=max {
        let low: VertexSet = g
            .vertices()
            .filter(|&v| labels[v] != 0 && labels[v] <= c)
            .fold(0, |acc, v| acc | bit(v));
        // Component of u in the <= c subgraph; count label-c vertices.
        let mut comp = bit(u);
        let mut frontier = comp;
        while frontier != 0 {
            let mut nextf = 0;
            for v in set_members(frontier) {
                nextf |= g.neighbors(v) & low & !comp;
            }
            comp |= nextf;
            frontier = nextf;
        }
        if set_members(comp).filter(|&v| labels[v] == c).count() >= 2 {
            return false;
        }
    }
    true
}
