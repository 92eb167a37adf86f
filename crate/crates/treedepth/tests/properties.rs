//! Standalone property suites: validity-check equivalence against a
//! naive all-paths oracle, codec round-trips, canonical-code
//! invariance, solver laws, and scan determinism.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use treedepth::criticality::{
    self, edge_join, is_critical, is_one_unique_vertex, one_step_minors, OneUniqueMethod,
};
use treedepth::graph::Graph;
use treedepth::scanner;
use treedepth::solver::{
    is_valid_ranking, tree_depth, tree_depth_value, tree_depth_via_separators, Ranking,
};
use treedepth::{codec, families};

#[test]
fn ranking_check_matches_naive_all_paths_exhaustive() {
    // Every labeling of every graph on up to 5 vertices.
    for n in 1..=5 {
        let labelings = all_labelings(n);
        for g in all_graph_classes(n) {
            for labels in &labelings {
                let r = Ranking::new(labels.clone()).unwrap();
                let fast = is_valid_ranking(&g, &r).unwrap().is_valid();
                assert_eq!(fast, naive_valid_ranking(&g, &r), "{g:?} {labels:?}");
            }
        }
    }
}

#[test]
fn ranking_check_matches_naive_all_paths_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.4);
        let labels: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=n as u32)).collect();
        let r = Ranking::new(labels).unwrap();
        let fast = is_valid_ranking(&g, &r).unwrap().is_valid();
        assert_eq!(fast, naive_valid_ranking(&g, &r));
    }
}

#[test]
fn graph6_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let s = codec::emit_graph6(&g);
        assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        assert_eq!(codec::parse_graph6(&s).unwrap(), g);
        assert_eq!(codec::emit_graph6(&codec::parse_graph6(&s).unwrap()), s);
    }
}

#[test]
fn json_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let (back, _) = codec::parse_json(&codec::emit_json(&g, None, None)).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn canonical_code_invariant_exhaustive() {
    // Orbits computed by direct permutation action are the ground truth:
    // equal codes within an orbit, distinct codes across orbits.
    for n in 1..=6 {
        let mut codes_seen = std::collections::HashSet::new();
        for orbit in labeled_orbits(n) {
            let code = graph_from_mask(orbit[0], n).canonical_code();
            for &mask in &orbit[1..] {
                assert_eq!(graph_from_mask(mask, n).canonical_code(), code);
            }
            assert!(codes_seen.insert(code), "code collision across orbits");
        }
    }
}

#[test]
fn canonical_code_invariant_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        assert_eq!(g.permuted(&perm).canonical_code(), g.canonical_code());
    }
}

#[test]
fn certificates_sound_on_all_solved_instances() {
    let mut instances = Vec::new();
    for n in 1..=6 {
        instances.extend(scanner::enumerate_connected(n).unwrap());
    }
    for k in 1..=5u32 {
        instances.push(families::gen_complete(k).unwrap());
        instances.push(families::gen_path(1 << (k - 1)).unwrap());
        if k >= 3 {
            instances.push(families::gen_cycle((1 << (k - 2)) + 1).unwrap());
            instances.push(families::gen_r(k, 1.min((1 << (k - 2)) - 2)).unwrap());
        }
    }
    for g in &instances {
        let res = tree_depth(g);
        assert!(is_valid_ranking(g, &res.certificate).unwrap().is_valid());
        assert_eq!(res.certificate.k(), res.td);
    }
}

#[test]
fn component_law_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..100 {
        let g = { let n = rng.gen_range(1..=7); random_graph(&mut rng, n, 0.4) };
        let h = { let n = rng.gen_range(1..=7); random_graph(&mut rng, n, 0.4) };
        let u = g.disjoint_union(&h).unwrap();
        assert_eq!(
            tree_depth_value(&u),
            tree_depth_value(&g).max(tree_depth_value(&h))
        );
    }
}

#[test]
fn vertex_deletion_bound() {
    let check = |g: &Graph| {
        let td = tree_depth_value(g);
        for v in g.vertices() {
            let d = tree_depth_value(&g.delete_vertex(v).unwrap().0);
            assert!(d + 1 >= td && d <= td);
        }
    };
    for n in 1..=6 {
        for g in scanner::enumerate_connected(n).unwrap() {
            check(&g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let g = { let n = rng.gen_range(7..=8); random_graph(&mut rng, n, 0.4) };
        check(&g);
    }
}

#[test]
fn minor_monotonicity_exhaustive() {
    for n in 1..=7 {
        for g in scanner::enumerate_connected(n).unwrap() {
            let td = tree_depth_value(&g);
            for (_, minor) in one_step_minors(&g) {
                assert!(tree_depth_value(&minor) <= td);
            }
        }
    }
}

#[test]
fn separator_identity_agreement() {
    // Exhaustive on connected graphs up to 7 vertices.
    for n in 1..=7 {
        for g in scanner::enumerate_connected(n).unwrap() {
            assert_eq!(
                tree_depth_via_separators(&g).unwrap(),
                tree_depth_value(&g)
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..200 {
        let g = { let n = rng.gen_range(2..=9); random_graph(&mut rng, n, 0.4) };
        assert_eq!(
            tree_depth_via_separators(&g).unwrap(),
            tree_depth_value(&g)
        );
    }
}

#[test]
fn one_unique_deletion_law() {
    let check = |g: &Graph| {
        let td = tree_depth_value(g);
        for v in g.vertices() {
            if is_one_unique_vertex(g, v, OneUniqueMethod::StarClique).unwrap() {
                assert_eq!(tree_depth_value(&g.delete_vertex(v).unwrap().0), td - 1);
            }
        }
    };
    for n in 1..=6 {
        for g in scanner::enumerate_connected(n).unwrap() {
            check(&g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let g = { let n = rng.gen_range(7..=8); random_graph(&mut rng, n, 0.4) };
        check(&g);
    }
}

#[test]
fn edge_deletion_criterion() {
    // 1-unique + every edge deletion lowers td implies critical.
    for n in 2..=7 {
        for g in scanner::enumerate_connected(n).unwrap() {
            let td = tree_depth_value(&g);
            let one_unique = criticality::is_one_unique(&g).one_unique;
            let edges_drop = g
                .edges()
                .iter()
                .all(|&(u, v)| tree_depth_value(&g.delete_edge(u, v).unwrap()) < td);
            if one_unique && edges_drop {
                assert!(is_critical(&g).is_critical, "{g:?}");
            }
        }
    }
}

#[test]
fn edge_join_lemma_small() {
    // t-critical seeds: K_t, P_{2^(t-1)}, C_{2^(t-2)+1} (cycle only at t >= 3).
    for t in 1..=3u32 {
        let mut seeds = vec![
            families::gen_complete(t).unwrap(),
            families::gen_path(1 << (t - 1)).unwrap(),
        ];
        if t >= 3 {
            seeds.push(families::gen_cycle((1 << (t - 2)) + 1).unwrap());
        }
        for g in &seeds {
            for h in &seeds {
                for u in g.vertices() {
                    for v in h.vertices() {
                        let joined = edge_join(g, h, u, v).unwrap();
                        let verdict = is_critical(&joined);
                        assert!(verdict.is_critical, "join of {g:?} {h:?} at {u},{v}");
                        assert_eq!(verdict.td, t + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn scan_determinism_across_worker_counts() {
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(scanner::enumerate_connected(n).unwrap());
    }
    let count = graphs.len();
    let mut reports: Vec<String> = [1usize, 2, 4, 8]
        .iter()
        .map(|&jobs| {
            let mut r =
                scanner::find_critical(&graphs, jobs, scanner::internal_provenance(6, count));
            scanner::verify_conjectures(&mut r).unwrap();
            r.to_json()
        })
        .collect();
    reports.dedup();
    assert_eq!(reports.len(), 1);
}

#[test]
fn q_family_partition_counts() {
    // For s < k the members are pairwise non-isomorphic: one class per
    // integer partition of s.
    for k in 2..=6u32 {
        for s in 1..k {
            let parts = families::partitions(s);
            let codes: std::collections::HashSet<_> = parts
                .iter()
                .map(|p| families::gen_q(k, s, p).unwrap().canonical_code())
                .collect();
            assert_eq!(codes.len(), parts.len(), "k={k} s={s}");
        }
    }
}

#[test]
fn r_family_t_zero_is_cycle() {
    for k in 3..=5u32 {
        assert_eq!(
            families::gen_r(k, 0).unwrap().canonical_code(),
            families::gen_cycle((1 << (k - 2)) + 1).unwrap().canonical_code()
        );
    }
}

#[test]
fn family_instances_match_declared_treedepth() {
    use families::FamilySpec;
    let mut specs = Vec::new();
    for k in 1..=5u32 {
        specs.push(FamilySpec::Complete { k });
        specs.push(FamilySpec::Path { n: 1 << (k - 1) });
        if k >= 3 {
            specs.push(FamilySpec::Cycle { n: (1 << (k - 2)) + 1 });
            for t in 0..=(1u32 << (k - 2)) - 2 {
                specs.push(FamilySpec::R { k, t });
            }
        }
        for s in 1..k {
            for partition in families::partitions(s) {
                specs.push(FamilySpec::Q { k, s, partition });
            }
        }
    }
    for spec in specs {
        let g = families::generate(&spec).unwrap();
        if g.n() > 14 {
            continue;
        }
        assert_eq!(
            tree_depth_value(&g),
            families::expected_treedepth(&spec).unwrap(),
            "{spec:?}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_graph6_roundtrip(n in 1usize..=10, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        prop_assert_eq!(codec::parse_graph6(&codec::emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn prop_components_partition(n in 1usize..=10, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.3);
        let comps = g.components();
        let mut union = 0u64;
        for c in &comps {
            prop_assert_eq!(union & c, 0);
            union |= c;
        }
        prop_assert_eq!(union, g.full_set());
        // no edges between parts
        for (u, v) in g.edges() {
            let cu = comps.iter().position(|c| c & (1 << u) != 0);
            let cv = comps.iter().position(|c| c & (1 << v) != 0);
            prop_assert_eq!(cu, cv);
        }
    }
}
