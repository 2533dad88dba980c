//! Builders for graphs realizing prescribed secure-domination behavior:
//! a prescribed gap between γ_s(G) and γ_s(μ(G)) in either direction, or
//! prescribed values (a, b) = (γ_s(G), γ_s(μ(G))) with 3 ≤ b ≤ 2a−1.

use thiserror::Error;

use crate::families::{make_path, make_star};
use crate::formulas::{gamma_s_mu_path, gamma_s_path};
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("gap must be at least 1")]
    GapTooSmall,
    #[error("prescribed values require a >= 2 and 3 <= b <= 2a-1, got a={a}, b={b}")]
    InvalidPrescribed { a: usize, b: usize },
    #[error("construction needs order {order}, above the supported maximum {max}")]
    WidthExceeded { order: usize, max: usize },
}

/// What a construction promises about its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    /// γ_s(μ(G)) − γ_s(G) = k, realized by a path.
    GapPositive { k: usize },
    /// γ_s(G) − γ_s(μ(G)) = k, realized by a star.
    GapNonnegative { k: usize },
    /// γ_s(G) = a and γ_s(μ(G)) = b.
    PrescribedValues { a: usize, b: usize },
}

/// A constructed graph's parameter claim, checkable by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    /// Expected γ_s(G).
    pub gamma_s: usize,
    /// Expected γ_s(μ(G)).
    pub gamma_s_mu: usize,
}

/// Smallest path whose Mycielskian raises γ_s by exactly `k`: P_3 for
/// k = 1, P_{14k−26} for even k, P_{14k−28} for odd k ≥ 3.
pub fn construct_gap_positive(k: usize) -> Result<(Graph, ConstructionSpec), ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::GapTooSmall);
    }
    let n = gap_positive_order(k);
    let g = make_path(n).map_err(|e| match e {
        GraphError::OrderTooLarge { order, max } => ConstructionError::WidthExceeded { order, max },
        _ => unreachable!("path orders here are at least 2"),
    })?;
    let spec = ConstructionSpec {
        kind: ConstructionKind::GapPositive { k },
        gamma_s: gamma_s_path(n),
        gamma_s_mu: gamma_s_mu_path(n),
    };
    debug_assert_eq!(spec.gamma_s_mu - spec.gamma_s, k);
    Ok((g, spec))
}

/// Path order realizing positive gap `k` (usable beyond [`MAX_ORDER`] for
/// formula-only reasoning).
pub fn gap_positive_order(k: usize) -> usize {
    match k {
        0 => panic!("gap must be at least 1"),
        1 => 3,
        k if k % 2 == 0 => 14 * k - 26,
        k => 14 * k - 28,
    }
}

/// Star K_{1,k+3}, whose γ_s exceeds its Mycielskian's by exactly `k`.
pub fn construct_gap_nonnegative(k: usize) -> Result<(Graph, ConstructionSpec), ConstructionError> {
    let leaves = k + 3;
    if leaves + 1 > MAX_ORDER {
        return Err(ConstructionError::WidthExceeded {
            order: leaves + 1,
            max: MAX_ORDER,
        });
    }
    let g = make_star(leaves).expect("leaf count is positive and within the cap");
    Ok((
        g,
        ConstructionSpec {
            kind: ConstructionKind::GapNonnegative { k },
            gamma_s: leaves,
            gamma_s_mu: 3,
        },
    ))
}

/// A graph with γ_s(G) = a and γ_s(μ(G)) = b, for a ≥ 2 and
/// 3 ≤ b ≤ 2a−1. The open cases b = 2a and b = 2a+1 are rejected.
///
/// For b > a: a clique on b−a vertices, a subdivided leaf hanging off each
/// clique vertex, and 2a−b−1 extra subdivided leaves at the first one.
/// For b ≤ a: a path on b−2 vertices, a leaf on each, and a−b+2 extra
/// leaves at the first. Both have order a+b−2. Vertices are laid out
/// clique/path block first, then leaf vertices in attachment order.
pub fn construct_prescribed(
    a: usize,
    b: usize,
) -> Result<(Graph, ConstructionSpec), ConstructionError> {
    if a < 2 || b < 3 || b > 2 * a - 1 {
        return Err(ConstructionError::InvalidPrescribed { a, b });
    }
    let order = a + b - 2;
    if order > MAX_ORDER {
        return Err(ConstructionError::WidthExceeded {
            order,
            max: MAX_ORDER,
        });
    }

    let mut g = Graph::new(order).expect("order checked above");
    if b > a {
        let clique = b - a;
        for u in 0..clique {
            for v in u + 1..clique {
                g.add_edge(u, v).unwrap();
            }
        }
        let mut next = clique;
        // One subdivided leaf per clique vertex, then the extras at vertex 0.
        for v in 0..clique {
            g.add_edge(v, next).unwrap();
            g.add_edge(next, next + 1).unwrap();
            next += 2;
        }
        for _ in 0..2 * a - b - 1 {
            g.add_edge(0, next).unwrap();
            g.add_edge(next, next + 1).unwrap();
            next += 2;
        }
        debug_assert_eq!(next, order);
    } else {
        let path = b - 2;
        for v in 1..path {
            g.add_edge(v - 1, v).unwrap();
        }
        let mut next = path;
        for v in 0..path {
            g.add_edge(v, next).unwrap();
            next += 1;
        }
        for _ in 0..a - b + 2 {
            g.add_edge(0, next).unwrap();
            next += 1;
        }
        debug_assert_eq!(next, order);
    }

    Ok((
        g,
        ConstructionSpec {
            kind: ConstructionKind::PrescribedValues { a, b },
            gamma_s: a,
            gamma_s_mu: b,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_form;
    use crate::families::make_complete_bipartite;

    #[test]
    fn gap_positive_small_cases() {
        let (g, spec) = construct_gap_positive(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!((spec.gamma_s, spec.gamma_s_mu), (2, 3));

        let (g, spec) = construct_gap_positive(2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!((spec.gamma_s, spec.gamma_s_mu), (1, 3));

        let (g, spec) = construct_gap_positive(3).unwrap();
        assert_eq!(g.order(), 14);
        assert_eq!((spec.gamma_s, spec.gamma_s_mu), (6, 9));

        assert_eq!(
            construct_gap_positive(0),
            Err(ConstructionError::GapTooSmall)
        );
        // 14*7-28 = 70 vertices does not fit the bitset width.
        assert_eq!(
            construct_gap_positive(7),
            Err(ConstructionError::WidthExceeded { order: 70, max: 64 })
        );
    }

    #[test]
    fn gap_positive_formula_gap_is_k() {
        for k in 1..=12 {
            let n = gap_positive_order(k);
            assert_eq!(gamma_s_mu_path(n) - gamma_s_path(n), k, "k={k}, n={n}");
        }
    }

    #[test]
    fn gap_nonnegative_cases() {
        for (k, leaves) in [(0, 3), (2, 5), (5, 8)] {
            let (g, spec) = construct_gap_nonnegative(k).unwrap();
            assert_eq!(g.order(), leaves + 1);
            assert_eq!(g.degree(0), leaves);
            assert_eq!((spec.gamma_s, spec.gamma_s_mu), (leaves, 3));
        }
    }

    #[test]
    fn prescribed_shapes() {
        // (2,3) is a path on 3 vertices.
        let (g, spec) = construct_prescribed(2, 3).unwrap();
        assert_eq!((spec.gamma_s, spec.gamma_s_mu), (2, 3));
        assert_eq!(canonical_form(&g), canonical_form(&make_path(3).unwrap()));

        // (3,5) is a path on 6 vertices.
        let (g, _) = construct_prescribed(3, 5).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(canonical_form(&g), canonical_form(&make_path(6).unwrap()));

        // (4,3) is the star K_{1,4}.
        let (g, _) = construct_prescribed(4, 3).unwrap();
        assert_eq!(
            canonical_form(&g),
            canonical_form(&make_complete_bipartite(1, 4).unwrap())
        );
    }

    #[test]
    fn prescribed_outputs_are_connected_with_clique_block() {
        for a in 2..=5 {
            for b in 3..=2 * a - 1 {
                let (g, spec) = construct_prescribed(a, b).unwrap();
                assert_eq!(g.order(), a + b - 2);
                assert!(g.is_connected(), "a={a} b={b}");
                assert_eq!((spec.gamma_s, spec.gamma_s_mu), (a, b));
                if b > a {
                    // The first b-a vertices induce a complete subgraph.
                    let clique = b - a;
                    for u in 0..clique {
                        for v in u + 1..clique {
                            assert!(g.has_edge(u, v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prescribed_rejects_open_and_invalid_cases() {
        assert!(construct_prescribed(1, 3).is_err());
        assert!(construct_prescribed(4, 2).is_err());
        // b = 2a and b = 2a+1 are the open cases.
        assert_eq!(
            construct_prescribed(3, 6),
            Err(ConstructionError::InvalidPrescribed { a: 3, b: 6 })
        );
        assert_eq!(
            construct_prescribed(3, 7),
            Err(ConstructionError::InvalidPrescribed { a: 3, b: 7 })
        );
    }
}
