//! Canonical forms and exhaustive enumeration of small graphs.
//!
//! Canonicalization minimizes the upper-triangle adjacency bit string over
//! all vertex permutations, so two graphs get the same form exactly when
//! they are isomorphic. The brute-force minimization caps the order at
//! [`ENUMERATION_CAP`] (7! = 5040 permutations); enumeration builds each
//! order from the previous one by attaching a new vertex in every possible
//! way and deduplicating by canonical form.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

/// Largest order accepted by [`canonical_form`] and [`enumerate_graphs`].
pub const ENUMERATION_CAP: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {order} exceeds the enumeration cap {cap}; use an external graph6 stream")]
    OrderAboveCap { order: usize, cap: usize },
}

/// Triangle bits of `g` relabeled by `perm`, packed so that the
/// lexicographically smallest bit string is the numerically smallest key.
fn triangle_key(g: &Graph, perm: &[usize]) -> u32 {
    let n = g.order();
    let mut key = 0u32;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | u32::from(g.has_edge(perm[i], perm[j]));
        }
    }
    key
}

/// Canonical byte string of `g`: the graph6 encoding of the relabeling
/// that minimizes the adjacency triangle. Equal strings iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String, EnumerateError> {
    let n = g.order();
    if n > ENUMERATION_CAP {
        return Err(EnumerateError::OrderAboveCap {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_key = triangle_key(g, &perm);
    let mut best_perm = perm.clone();

    // Heap's algorithm over all n! orderings.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let key = triangle_key(g, &perm);
            if key < best_key {
                best_key = key;
                best_perm = perm.clone();
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    // `best_perm` lists old labels in new-label order; invert for permuted().
    let mut inverse = vec![0usize; n];
    for (new, &old) in best_perm.iter().enumerate() {
        inverse[old] = new;
    }
    Ok(to_graph6(&g.permuted(&inverse)))
}

/// Streams one canonically labeled representative per isomorphism class
/// of graphs on `n` vertices, ordered by canonical form.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(EnumerateError::OrderAboveCap {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }

    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    classes.insert(
        canonical_form(&Graph::new(1).unwrap())?,
        Graph::new(1).unwrap(),
    );
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in classes.values() {
            // Attach vertex k-1 with every possible neighborhood. Every
            // class on k vertices arises this way from some class on k-1.
            for mask in 0u64..(1 << (k - 1)) {
                let mut h = Graph::new(k).unwrap();
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        h.add_edge(v, k - 1).unwrap();
                    }
                }
                let canon = canonical_form(&h)?;
                next.entry(canon).or_insert(h);
            }
        }
        classes = next;
    }

    Ok(classes
        .into_keys()
        .map(|canon| from_graph6(&canon).expect("canonical forms are valid graph6"))
        .filter(move |g| !connected_only || g.is_connected()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_path, make_star};

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let p3 = make_path(3).unwrap();
        let relabeled = p3.permuted(&[2, 0, 1]);
        assert_eq!(canonical_form(&p3), canonical_form(&relabeled));
        assert_ne!(
            canonical_form(&make_path(4).unwrap()),
            canonical_form(&make_star(3).unwrap())
        );
    }

    #[test]
    fn labeled_brute_force_agrees_on_four_vertices() {
        // Independent count of isomorphism classes on 4 vertices: all 2^6
        // labeled graphs, deduplicated by canonical form.
        let mut forms = std::collections::BTreeSet::new();
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for bits in 0u32..64 {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(4, edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, false).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, true).unwrap().count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn enumeration_rejects_large_orders() {
        assert!(matches!(
            enumerate_graphs(8, false),
            Err(EnumerateError::OrderAboveCap { order: 8, cap: 7 })
        ));
        assert!(matches!(
            canonical_form(&Graph::new(8).unwrap()),
            Err(EnumerateError::OrderAboveCap { .. })
        ));
    }

    #[test]
    fn representatives_are_canonically_labeled() {
        for g in enumerate_graphs(4, false).unwrap() {
            assert_eq!(canonical_form(&g).unwrap(), crate::graph6::to_graph6(&g));
        }
    }
}
