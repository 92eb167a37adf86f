//! Exhaustive small-graph scanning: enumerate or ingest connected
//! graphs, identify the critical ones, verify the conjectures and the
//! path/cycle/critical-tree formulas, and emit a stable JSON report.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{self, CodecError};
use crate::criticality::{self, check_conjectures};
use crate::families;
use crate::graph::{bit, Graph};
use crate::solver;

/// Internal enumeration is capped here: 2^21 labeled graphs at n = 7.
/// Larger scans ingest externally generated graph6 files.
pub const MAX_ENUM_N: usize = 7;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("internal enumeration supports 1 <= n <= {MAX_ENUM_N}, got {0}")]
    EnumerationRange(usize),
    #[error("report entry {graph6:?} fails re-validation: {reason}")]
    InvalidEntry { graph6: String, reason: String },
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One critical graph found by a scan.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CriticalEntry {
    /// graph6 of the canonical representative.
    pub graph6: String,
    pub order: usize,
    pub max_degree: usize,
    pub td: u32,
    pub one_unique: bool,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConjectureAggregates {
    /// Critical graphs with more than 2^(k-1) vertices.
    pub order_bound_counterexamples: Vec<String>,
    /// Critical graphs with maximum degree above k-1.
    pub degree_bound_counterexamples: Vec<String>,
    /// Critical graphs that are not 1-unique.
    pub one_unique_counterexamples: Vec<String>,
}

impl ConjectureAggregates {
    pub fn is_empty(&self) -> bool {
        self.order_bound_counterexamples.is_empty()
            && self.degree_bound_counterexamples.is_empty()
            && self.one_unique_counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Provenance {
    /// "internal" or "file".
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_range: Option<(usize, usize)>,
    pub graph_count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScanReport {
    pub provenance: Provenance,
    /// Critical graphs grouped by tree-depth, sorted by graph6 within
    /// each group.
    pub critical: BTreeMap<u32, Vec<CriticalEntry>>,
    pub conjectures: ConjectureAggregates,
}

impl ScanReport {
    pub fn has_counterexamples(&self) -> bool {
        !self.conjectures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = (i.min(j), i.max(j));
    b * (b - 1) / 2 + a
}

fn graph_from_mask(mask: u32, n: usize, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(e, _)| mask & (1 << e) != 0)
        .map(|(_, &p)| p)
        .collect();
    Graph::build(n, &edges).expect("pairs are in range")
}

fn mask_connected(mask: u32, n: usize, pairs: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![0u64; n];
    for (e, &(i, j)) in pairs.iter().enumerate() {
        if mask & (1 << e) != 0 {
            adj[i] |= bit(j);
            adj[j] |= bit(i);
        }
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize == n
}

/// Exactly one representative per isomorphism class of connected graphs
/// on `n` vertices, in ascending order of minimal edge mask. Works by
/// orbit marking: scan labeled graphs in ascending mask order, and for
/// each unseen connected mask mark its whole permutation orbit.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, ScanError> {
    if n < 1 || n > MAX_ENUM_N {
        return Err(ScanError::EnumerationRange(n));
    }
    let nbits = n * (n - 1) / 2;
    let mut pairs = Vec::with_capacity(nbits);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    // Per permutation, where each edge slot lands.
    let perm_maps: Vec<Vec<usize>> = all_perms(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index(p[i], p[j])).collect())
        .collect();
    let mut marked = vec![false; 1usize << nbits];
    let mut reps = Vec::new();
    for mask in 0..(1u32 << nbits) {
        if marked[mask as usize] || !mask_connected(mask, n, &pairs) {
            continue;
        }
        for map in &perm_maps {
            let mut image = 0u32;
            let mut m = mask;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                image |= 1 << map[e];
            }
            marked[image as usize] = true;
        }
        reps.push(graph_from_mask(mask, n, &pairs));
    }
    Ok(reps)
}

/// All trees on 1..=max_n vertices, one per isomorphism class, built by
/// leaf addition with canonical dedup.
pub fn enumerate_trees(max_n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(1).expect("single vertex")];
    let mut level = out.clone();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            let mut edges = t.edges();
            for v in 0..t.n() {
                edges.push((v, n - 1));
                let g = Graph::build(n, &edges).expect("leaf addition stays simple");
                edges.pop();
                if seen.insert(g.canonical_code()) {
                    next.push(g);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestDiagnostic {
    pub line: usize,
    pub message: String,
}

/// Parse a file of newline-separated graph6 records. Malformed lines
/// are collected as diagnostics, not fatal.
pub fn ingest_graph6(path: &Path) -> Result<(Vec<Graph>, Vec<IngestDiagnostic>), ScanError> {
    let text = std::fs::read_to_string(path)?;
    let mut graphs = Vec::new();
    let mut diagnostics = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match codec::parse_graph6(line) {
            Ok(g) => graphs.push(g),
            Err(e) => diagnostics.push(IngestDiagnostic {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok((graphs, diagnostics))
}

/// Scan a stream of graphs for critical ones. Embarrassingly parallel
/// per graph; output is sorted by (td, graph6) and independent of the
/// worker count.
pub fn find_critical(graphs: &[Graph], jobs: usize, provenance: Provenance) -> ScanReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let entries: Vec<Option<CriticalEntry>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let verdict = criticality::is_critical(g);
                if !verdict.is_critical {
                    return None;
                }
                Some(CriticalEntry {
                    graph6: codec::emit_graph6(&g.canonical_form()),
                    order: g.n(),
                    max_degree: g.max_degree(),
                    td: verdict.td,
                    one_unique: criticality::is_one_unique(g).one_unique,
                })
            })
            .collect()
    });
    let mut critical: BTreeMap<u32, Vec<CriticalEntry>> = BTreeMap::new();
    for e in entries.into_iter().flatten() {
        critical.entry(e.td).or_default().push(e);
    }
    for group in critical.values_mut() {
        group.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        group.dedup_by(|a, b| a.graph6 == b.graph6);
    }
    ScanReport {
        provenance,
        critical,
        conjectures: ConjectureAggregates::default(),
    }
}

/// Re-validate every entry from scratch (fresh solver, no memo reuse)
/// and fill the conjecture aggregates. A non-critical graph mislabeled
/// as critical is rejected before aggregation.
pub fn verify_conjectures(report: &mut ScanReport) -> Result<(), ScanError> {
    let mut aggregates = ConjectureAggregates::default();
    for (&k, group) in &report.critical {
        for entry in group {
            let g = codec::parse_graph6(&entry.graph6)?;
            let verdict = criticality::is_critical(&g);
            if !verdict.is_critical || verdict.td != k {
                return Err(ScanError::InvalidEntry {
                    graph6: entry.graph6.clone(),
                    reason: if verdict.is_critical {
                        format!("tree-depth is {}, listed under {}", verdict.td, k)
                    } else {
                        "graph is not critical".to_string()
                    },
                });
            }
            let c = check_conjectures(&g);
            if !c.order_bound {
                aggregates.order_bound_counterexamples.push(entry.graph6.clone());
            }
            if !c.degree_bound {
                aggregates.degree_bound_counterexamples.push(entry.graph6.clone());
            }
            if !c.one_unique {
                aggregates.one_unique_counterexamples.push(entry.graph6.clone());
            }
        }
    }
    report.conjectures = aggregates;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormulaCheck {
    pub instance: String,
    pub expected: u32,
    pub computed: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeCheck {
    pub graph6: String,
    pub order: usize,
    pub td: u32,
    /// Critical trees must have order exactly 2^(k-1).
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormulaReport {
    pub checks: Vec<FormulaCheck>,
    pub critical_trees: Vec<TreeCheck>,
}

impl FormulaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.critical_trees.iter().all(|c| c.pass)
    }
}

/// Check td(P_n) = floor(log2 n) + 1 and td(C_n) = floor(log2(n-1)) + 2
/// against the solver, and that every critical tree up to
/// `tree_n_max` vertices has order 2^(k-1).
pub fn verify_formulas(n_max_path: u32, n_max_cycle: u32, tree_n_max: usize) -> FormulaReport {
    let mut checks = Vec::new();
    for n in 1..=n_max_path {
        let expected = n.ilog2() + 1;
        let computed = solver::tree_depth_value(&families::gen_path(n).expect("n >= 1"));
        checks.push(FormulaCheck {
            instance: format!("P_{n}"),
            expected,
            computed,
            pass: expected == computed,
        });
    }
    for n in 3..=n_max_cycle {
        let expected = (n - 1).ilog2() + 2;
        let computed = solver::tree_depth_value(&families::gen_cycle(n).expect("n >= 3"));
        checks.push(FormulaCheck {
            instance: format!("C_{n}"),
            expected,
            computed,
            pass: expected == computed,
        });
    }
    let mut critical_trees = Vec::new();
    for tree in enumerate_trees(tree_n_max) {
        let verdict = criticality::is_critical(&tree);
        if verdict.is_critical {
            critical_trees.push(TreeCheck {
                graph6: codec::emit_graph6(&tree.canonical_form()),
                order: tree.n(),
                td: verdict.td,
                pass: tree.n() as u64 == 1u64 << (verdict.td - 1),
            });
        }
    }
    FormulaReport {
        checks,
        critical_trees,
    }
}

pub fn internal_provenance(n_max: usize, count: usize) -> Provenance {
    Provenance {
        source: "internal".to_string(),
        n_range: Some((1, n_max)),
        graph_count: count,
    }
}

pub fn file_provenance(count: usize) -> Provenance {
    Provenance {
        source: "file".to_string(),
        n_range: None,
        graph_count: count,
    }
}
