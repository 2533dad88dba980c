//! Property tests for the structural invariants.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secdom::bitset::VertexSet;
use secdom::domination::{is_secure_dominating, s_isolates};
use secdom::enumerate::canonical_form;
use secdom::graph::Graph;
use secdom::graph6::{from_graph6, to_graph6};
use secdom::mycielskian::mycielskian;
use secdom::solver::min_secure_dominating;

/// Seeded random graph on `n` vertices with edge probability `p` percent.
fn random_graph(n: usize, p: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..100) < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

proptest! {
    #[test]
    fn graph6_round_trips(n in 1usize..=64, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labeling(n in 1usize..=6, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        let relabeled = g.permuted(&random_permutation(n, seed.wrapping_add(1)));
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabeled));
    }

    #[test]
    fn mycielskian_structure(n in 1usize..=20, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        let (mu, lab) = mycielskian(&g).unwrap();
        prop_assert_eq!(mu.order(), 2 * n + 1);
        prop_assert_eq!(mu.size(), 3 * g.size() + n);
        // Images form an independent set and w sees exactly them.
        for i in 0..n {
            prop_assert!(mu.neighbors(lab.image(i)).intersection(lab.image_block()).is_empty());
        }
        prop_assert_eq!(mu.neighbors(lab.cone()), lab.image_block());
        // The original block induces the base graph.
        for u in 0..n {
            prop_assert_eq!(mu.neighbors(u).intersection(lab.original_block()), g.neighbors(u));
        }
        // Triangle-freeness carries over.
        if g.is_triangle_free() {
            prop_assert!(mu.is_triangle_free());
        }
        // Connected exactly when the base has an edge at every vertex.
        let isolated = (0..n).any(|v| g.degree(v) == 0);
        prop_assert_eq!(mu.is_connected(), n >= 2 && !isolated);
    }

    #[test]
    fn mycielskian_preserves_spanning_subgraphs(n in 1usize..=15, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        // Drop a pseudo-random subset of edges to get a spanning subgraph.
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        let kept = g.edges().filter(|_| rng.random_bool(0.5));
        let h = Graph::from_edges(n, kept).unwrap();
        prop_assert!(h.is_spanning_subgraph_of(&g).unwrap());
        let (mu_g, _) = mycielskian(&g).unwrap();
        let (mu_h, _) = mycielskian(&h).unwrap();
        prop_assert!(mu_h.is_spanning_subgraph_of(&mu_g).unwrap());
    }

    #[test]
    fn supersets_of_secure_sets_stay_secure(n in 1usize..=8, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        let witness = min_secure_dominating(&g).witness;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
        let mut grown = witness;
        for v in 0..n {
            if rng.random_bool(0.4) {
                grown.insert(v);
            }
        }
        let cert = is_secure_dominating(&g, grown);
        prop_assert!(cert.is_some());
        prop_assert!(cert.unwrap().replay(&g));
    }

    #[test]
    fn certificates_always_replay(n in 1usize..=8, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        let witness = min_secure_dominating(&g).witness;
        let cert = is_secure_dominating(&g, witness).unwrap();
        prop_assert!(cert.replay(&g));
        prop_assert_eq!(cert.set(), witness);
    }

    #[test]
    fn epn_matches_isolates_on_random_dominating_sets(n in 1usize..=10, p in 0u32..=100, seed: u64) {
        let g = random_graph(n, p, seed);
        let (mu, lab) = mycielskian(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(4));
        // Random supersets of a dominating witness are still dominating.
        let mut s = secdom::solver::min_dominating(&g).witness;
        for v in 0..n {
            if rng.random_bool(0.3) {
                s.insert(v);
            }
        }
        let private = secdom::domination::epn(&mu, lab.cone(), s.with(lab.cone())).unwrap();
        prop_assert_eq!(private, lab.image_set(s_isolates(&g, s)));
    }
}

/// Advances `indices` to the next k-combination of `0..n` in lexicographic
/// order; false once exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[test]
fn witness_is_first_in_lexicographic_subset_order() {
    // Validate the solver's ordering contract against a naive scan that
    // enumerates k-subsets in lexicographic sequence order.
    for seed in 0..30u64 {
        let n = 5 + (seed % 3) as usize;
        let g = random_graph(n, 50, seed);
        let result = min_secure_dominating(&g);
        let mut expected = None;
        'levels: for k in 0..=n {
            let mut indices: Vec<usize> = (0..k).collect();
            loop {
                let s: VertexSet = indices.iter().copied().collect();
                if is_secure_dominating(&g, s).is_some() {
                    expected = Some((k, s));
                    break 'levels;
                }
                if !next_combination(&mut indices, n) {
                    continue 'levels;
                }
            }
        }
        let (value, witness) = expected.unwrap();
        assert_eq!(
            (result.value, result.witness),
            (value, witness),
            "seed {seed}"
        );
    }
}

#[test]
fn witness_identical_across_thread_counts() {
    let g = {
        let (mu, _) = mycielskian(&secdom::families::make_path(10).unwrap()).unwrap();
        mu
    };
    let parallel = min_secure_dominating(&g);
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| min_secure_dominating(&g));
    assert_eq!(parallel, single);
}
