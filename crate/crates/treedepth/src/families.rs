//! Generators for the graph families under study, with parameter
//! validation and the declared tree-depth of each instance.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("complete graph needs k >= 1")]
    CompleteTooSmall,
    #[error("path needs n >= 1")]
    PathTooSmall,
    #[error("cycle needs n >= 3")]
    CycleTooSmall,
    #[error("R family needs k >= 3, got k = {0}")]
    RBadK(u32),
    #[error("R family needs 0 <= t <= 2^(k-2) - 2 = {max}, got t = {t}")]
    RBadT { t: u32, max: u32 },
    #[error("Q family needs 1 <= s <= k, got s = {s}, k = {k}")]
    QBadS { s: u32, k: u32 },
    #[error("Q partition must have 1..=s positive parts summing to s, got {0:?}")]
    QBadPartition(Vec<u32>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parameters selecting one family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { k: u32 },
    Path { n: u32 },
    Cycle { n: u32 },
    R { k: u32, t: u32 },
    Q { k: u32, s: u32, partition: Vec<u32> },
}

pub fn gen_complete(k: u32) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::CompleteTooSmall);
    }
    let n = k as usize;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges)?)
}

pub fn gen_path(n: u32) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::PathTooSmall);
    }
    let n = n as usize;
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::build(n, &edges)?)
}

pub fn gen_cycle(n: u32) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooSmall);
    }
    let n = n as usize;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::build(n, &edges)?)
}

/// R_{k,t}: path on 2^(k-2)+1+t vertices plus an edge between the two
/// vertices at distance t from the endpoints (vertices t and 2^(k-2)).
/// For t = 0 the extra edge closes the cycle C_{2^(k-2)+1}.
pub fn gen_r(k: u32, t: u32) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(FamilyError::RBadK(k));
    }
    let half = 1u32 << (k - 2);
    let max = half - 2;
    if t > max {
        return Err(FamilyError::RBadT { t, max });
    }
    let n = (half + 1 + t) as usize;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((t as usize, half as usize));
    Ok(Graph::build(n, &edges)?)
}

/// Q_{k,s} member for one partition of s: core clique K_s on vertices
/// 0..s-1 split into consecutive blocks B_i of the partition's sizes,
/// outer cliques H_i = K_{k-s} appended in order, each completely
/// joined to its B_i. Partition input is sorted descending; partitions,
/// not compositions, index the family.
pub fn gen_q(k: u32, s: u32, partition: &[u32]) -> Result<Graph, FamilyError> {
    if s < 1 || s > k {
        return Err(FamilyError::QBadS { s, k });
    }
    let q = partition.len() as u32;
    if q < 1
        || q > s
        || partition.iter().any(|&p| p == 0)
        || partition.iter().sum::<u32>() != s
    {
        return Err(FamilyError::QBadPartition(partition.to_vec()));
    }
    let mut parts = partition.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));

    let s = s as usize;
    let outer = (k - s as u32) as usize;
    let n = s + parts.len() * outer;
    let mut edges = Vec::new();
    for u in 0..s {
        for v in u + 1..s {
            edges.push((u, v));
        }
    }
    let mut core_start = 0usize;
    for (i, &p) in parts.iter().enumerate() {
        let block_start = s + i * outer;
        for a in block_start..block_start + outer {
            for b in a + 1..block_start + outer {
                edges.push((a, b));
            }
            for c in core_start..core_start + p as usize {
                edges.push((c, a));
            }
        }
        core_start += p as usize;
    }
    Ok(Graph::build(n, &edges)?)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Complete { k } => gen_complete(*k),
        FamilySpec::Path { n } => gen_path(*n),
        FamilySpec::Cycle { n } => gen_cycle(*n),
        FamilySpec::R { k, t } => gen_r(*k, *t),
        FamilySpec::Q { k, s, partition } => gen_q(*k, *s, partition),
    }
}

/// The declared tree-depth of a valid instance: closed formulas for
/// paths and cycles, the target k for the other families.
pub fn expected_treedepth(spec: &FamilySpec) -> Result<u32, FamilyError> {
    generate(spec)?; // validate parameters
    Ok(match spec {
        FamilySpec::Complete { k } => *k,
        FamilySpec::Path { n } => n.ilog2() + 1,
        FamilySpec::Cycle { n } => (n - 1).ilog2() + 2,
        FamilySpec::R { k, .. } => *k,
        FamilySpec::Q { k, .. } => *k,
    })
}

/// All integer partitions of s, parts descending, lexicographically
/// descending order.
pub fn partitions(s: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut p = rest.min(max);
        while p >= 1 {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(s, s, &mut Vec::new(), &mut out);
    out
}
