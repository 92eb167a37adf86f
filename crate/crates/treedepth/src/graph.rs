//! Immutable simple undirected graphs on up to 62 vertices.
//!
//! Adjacency is stored as one `u64` bit set per vertex. Vertex ids are
//! dense `0..n`; operations that remove vertices renumber the survivors
//! and report the renumbering map.

use thiserror::Error;

/// Hard cap on graph order. Matches single-word bit sets and the
/// one-byte graph6 size field.
pub const MAX_N: usize = 62;

/// Bit set over the vertex range `0..n` of a specific [`Graph`].
pub type VertexSet = u64;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Iterate the vertices of a bit set in ascending order.
pub fn set_members(mut s: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no edge between {0} and {1}")]
    NotAnEdge(usize, usize),
    #[error("graph order {0} exceeds the {MAX_N}-vertex limit")]
    TooLarge(usize),
}

/// One-step minor operation on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorStep {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    ContractEdge(usize, usize),
}

impl MinorStep {
    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        match *self {
            MinorStep::DeleteVertex(v) => Ok(g.delete_vertex(v)?.0),
            MinorStep::DeleteEdge(u, v) => g.delete_edge(u, v),
            MinorStep::ContractEdge(u, v) => Ok(g.contract_edge(u, v)?.0),
        }
    }
}

impl std::fmt::Display for MinorStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            MinorStep::DeleteVertex(v) => write!(f, "delete-vertex({v})"),
            MinorStep::DeleteEdge(u, v) => write!(f, "delete-edge({u},{v})"),
            MinorStep::ContractEdge(u, v) => write!(f, "contract-edge({u},{v})"),
        }
    }
}

/// Simple undirected graph on vertices `0..n`, `n <= 62`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_N {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Build a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> VertexSet {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in set_members(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    /// Delete `v`, renumbering the survivors densely. The map sends old
    /// ids to new ids (`None` for the deleted vertex).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_vertex(v)?;
        let mut map = vec![None; self.n];
        let mut next = 0;
        for u in 0..self.n {
            if u != v {
                map[u] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(self.n - 1)?;
        for (u, w) in self.edges() {
            if u != v && w != v {
                g.add_edge_mut(map[u].unwrap(), map[w].unwrap());
            }
        }
        Ok((g, map))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Contract edge `uv`. The merged vertex sits at `min(u,v)`'s slot
    /// before renumbering; both endpoints map to it.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        let mut merged = self.clone();
        merged.adj[a] = (self.adj[a] | self.adj[b]) & !(bit(a) | bit(b));
        for w in set_members(self.adj[b] & !bit(a)) {
            merged.adj[w] |= bit(a);
            merged.adj[w] &= !bit(b);
        }
        let (g, mut map) = merged.delete_vertex(b)?;
        map[b] = map[a];
        Ok((g, map))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.full_set())
    }

    /// Connected components of the subgraph induced by `s`.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = s;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in set_members(frontier) {
                    next |= self.adj[v] & s & !comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; `other`'s vertex ids are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_N {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`, renumbered ascending. Returns the graph
    /// and the new-id -> old-id map.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set_members(s).collect();
        let mut g = Graph::empty(old.len()).expect("subset of a valid graph");
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_mut(i, j);
                }
            }
        }
        (g, old)
    }

    /// The quotient closure G<S>: graph on `s` (renumbered ascending)
    /// where u ~ v iff uv is an edge of G or some component of G - S has
    /// a vertex adjacent to u and a vertex adjacent to v.
    pub fn quotient_closure(&self, s: VertexSet) -> Graph {
        let s = s & self.full_set();
        let (mut g, old) = self.induced_subgraph(s);
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &u) in old.iter().enumerate() {
            new_of[u] = i;
        }
        for comp in self.components_within(self.full_set() & !s) {
            let mut touched = 0u64;
            for v in set_members(comp) {
                touched |= self.adj[v] & s;
            }
            let touched: Vec<usize> = set_members(touched).collect();
            for (i, &u) in touched.iter().enumerate() {
                for &v in &touched[i + 1..] {
                    g.add_edge_mut(new_of[u], new_of[v]);
                }
            }
        }
        g
    }

    /// Star-clique transform at `v`: delete `v` and complete its
    /// neighborhood into a clique.
    pub fn star_clique_transform(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let nb: Vec<usize> = set_members(self.adj[v]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                g.add_edge_mut(a, b);
            }
        }
        Ok(g.delete_vertex(v)?.0)
    }

    /// Relabel by `perm` (old id -> new id).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]);
        }
        g
    }

    /// Canonical representative of the isomorphism class: refine by an
    /// iterated degree/neighborhood partition, then branch over the
    /// remaining permutations taking the lexicographically least
    /// adjacency matrix.
    pub fn canonical_form(&self) -> Graph {
        if self.n <= 1 {
            return self.clone();
        }
        let cells = self.refine_partition();
        let mut search = CanonSearch {
            g: self,
            cell_of_pos: Vec::new(),
            rows: vec![0; self.n],
            perm: vec![0; self.n],
            used: 0,
            best_rows: None,
            best_perm: vec![0; self.n],
        };
        for cell in &cells {
            for _ in cell {
                search.cell_of_pos.push(cell.clone());
            }
        }
        search.dfs(0);
        // best_perm maps position -> old vertex; invert for permuted().
        let mut perm = vec![0; self.n];
        for (pos, &old) in search.best_perm.iter().enumerate() {
            perm[old] = pos;
        }
        self.permuted(&perm)
    }

    /// Byte code equal for two graphs iff they are isomorphic:
    /// order byte followed by the canonical adjacency bits.
    pub fn canonical_code(&self) -> Vec<u8> {
        let c = self.canonical_form();
        let mut code = vec![c.n as u8];
        let mut acc = 0u8;
        let mut nbits = 0;
        for d in 1..c.n {
            for j in 0..d {
                acc = (acc << 1) | u8::from(c.has_edge(d, j));
                nbits += 1;
                if nbits == 8 {
                    code.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            code.push(acc << (8 - nbits));
        }
        code
    }

    /// Equitable ordered partition, invariant under isomorphism: start
    /// from degree classes (ascending), split cells by the multiset of
    /// neighbor counts toward each cell until stable. Subcell order
    /// within a split follows the signature order, which keeps the
    /// overall cell order invariant.
    fn refine_partition(&self) -> Vec<Vec<usize>> {
        let mut by_degree: Vec<Vec<usize>> = Vec::new();
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut uniq: Vec<usize> = degrees.clone();
        uniq.sort_unstable();
        uniq.dedup();
        for d in uniq {
            by_degree.push((0..self.n).filter(|&v| degrees[v] == d).collect());
        }
        let mut cells = by_degree;
        loop {
            let sig: Vec<Vec<u32>> = (0..self.n)
                .map(|v| {
                    cells
                        .iter()
                        .map(|c| {
                            c.iter().filter(|&&u| self.has_edge(v, u)).count() as u32
                        })
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            let mut changed = false;
            for cell in &cells {
                let mut groups: Vec<(&Vec<u32>, Vec<usize>)> = Vec::new();
                let mut members = cell.clone();
                members.sort_by(|&a, &b| sig[a].cmp(&sig[b]).then(a.cmp(&b)));
                for v in members {
                    match groups.last_mut() {
                        Some((s, g)) if **s == sig[v] => g.push(v),
                        _ => groups.push((&sig[v], vec![v])),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                }
                next.extend(groups.into_iter().map(|(_, g)| g));
            }
            cells = next;
            if !changed {
                break;
            }
        }
        cells
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// For each position, the refinement cell its vertex must come from.
    cell_of_pos: Vec<Vec<usize>>,
    rows: Vec<u64>,
    perm: Vec<usize>,
    used: VertexSet,
    best_rows: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl CanonSearch<'_> {
    fn dfs(&mut self, depth: usize) {
        let n = self.g.n();
        if depth == n {
            if self
                .best_rows
                .as_ref()
                .map_or(true, |b| self.rows[..] < b[..])
            {
                self.best_rows = Some(self.rows.clone());
                self.best_perm.copy_from_slice(&self.perm);
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        let candidates: Vec<usize> = self.cell_of_pos[depth]
            .iter()
            .copied()
            .filter(|&v| self.used & bit(v) == 0)
            .collect();
        'cand: for v in candidates {
            // Skip v when a transposition with an already-tried candidate
            // is an automorphism: identical subtrees.
            for &u in &tried {
                if (self.g.neighbors(u) ^ self.g.neighbors(v)) & !(bit(u) | bit(v)) == 0 {
                    continue 'cand;
                }
            }
            tried.push(v);
            let mut row = 0u64;
            for j in 0..depth {
                if self.g.has_edge(v, self.perm[j]) {
                    row |= 1 << j;
                }
            }
            self.rows[depth] = row;
            if let Some(best) = &self.best_rows {
                if self.rows[..=depth] > best[..=depth] {
                    continue;
                }
            }
            self.perm[depth] = v;
            self.used |= bit(v);
            self.dfs(depth + 1);
            self.used &= !bit(v);
        }
    }
}
