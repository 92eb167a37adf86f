//! Shared helpers for the integration suites: standard graph builders,
//! labeled-graph enumeration with orbit grouping (independent of
//! `canonical_code`), a naive all-paths ranking validity oracle, and
//! seeded random graph generation.

#![allow(dead_code)]

use rand::Rng;
use treedepth::graph::{bit, set_members, Graph, VertexSet};
use treedepth::solver::Ranking;

pub fn path(n: usize) -> Graph {
    Graph::build(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    e.push((n - 1, 0));
    Graph::build(n, &e).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::build(n, &e).unwrap()
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
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
    rec(0, &mut (0..n).collect::<Vec<_>>(), &mut out);
    out
}

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = (i.min(j), i.max(j));
    b * (b - 1) / 2 + a
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_mask(mask: u32, n: usize) -> Graph {
    let pairs = pairs(n);
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(e, _)| mask & (1 << e) != 0)
        .map(|(_, &p)| p)
        .collect();
    Graph::build(n, &edges).unwrap()
}

/// Group all labeled graphs on n vertices into isomorphism orbits by
/// direct permutation action on edge masks.
pub fn labeled_orbits(n: usize) -> Vec<Vec<u32>> {
    let nbits = n * (n - 1) / 2;
    let pairs = pairs(n);
    let perm_maps: Vec<Vec<usize>> = all_perms(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index(p[i], p[j])).collect())
        .collect();
    let mut seen = vec![false; 1 << nbits];
    let mut orbits = Vec::new();
    for mask in 0..(1u32 << nbits) {
        if seen[mask as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        for map in &perm_maps {
            let mut image = 0u32;
            let mut m = mask;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                image |= 1 << map[e];
            }
            if !seen[image as usize] {
                seen[image as usize] = true;
                orbit.push(image);
            }
        }
        orbits.push(orbit);
    }
    orbits
}

/// One representative per isomorphism class of all (not necessarily
/// connected) graphs on n vertices.
pub fn all_graph_classes(n: usize) -> Vec<Graph> {
    labeled_orbits(n)
        .into_iter()
        .map(|orbit| graph_from_mask(orbit[0], n))
        .collect()
}

/// Naive validity oracle: enumerate every simple path and demand that a
/// path joining two equal-label vertices contains a strictly larger
/// label somewhere.
pub fn naive_valid_ranking(g: &Graph, r: &Ranking) -> bool {
    fn dfs(
        g: &Graph,
        labels: &[u32],
        start: usize,
        v: usize,
        visited: VertexSet,
        max_on_path: u32,
    ) -> bool {
        // `max_on_path` is the largest label among the path's vertices.
        if v != start && labels[v] == labels[start] && max_on_path <= labels[start] {
            return false;
        }
        for w in set_members(g.neighbors(v) & !visited) {
            if !dfs(
                g,
                labels,
                start,
                w,
                visited | bit(w),
                max_on_path.max(labels[w]),
            ) {
                return false;
            }
        }
        true
    }
    let labels = r.labels();
    g.vertices()
        .all(|s| dfs(g, labels, s, s, bit(s), labels[s]))
}

/// Seeded Erdos-Renyi-style random graph.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// All labelings of n vertices with colors from 1..=n.
pub fn all_labelings(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for l in &out {
            for c in 1..=n as u32 {
                let mut l2 = l.clone();
                l2.push(c);
                next.push(l2);
            }
        }
        out = next;
    }
    out
}
