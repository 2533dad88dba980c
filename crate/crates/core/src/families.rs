//! Generators for the standard graph families.

use crate::graph::{Graph, GraphError};

/// Path P_n with vertices `0..n` in path order.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle C_n, n ≥ 3, with vertices `0..n` in cycle order.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort { order: n });
    }
    let mut g = make_path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Complete graph K_n.
pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete bipartite graph K_{m,n}, parts labeled `0..m` and `m..m+n`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::OrderZero);
    }
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Star K_{1,n} with `n ≥ 1` leaves; the center is vertex 0.
pub fn make_star(leaves: usize) -> Result<Graph, GraphError> {
    make_complete_bipartite(1, leaves)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p4 = make_path(4).unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));

        let k25 = make_complete_bipartite(2, 5).unwrap();
        assert_eq!((k25.order(), k25.size()), (7, 10));

        let star = make_star(6).unwrap();
        assert_eq!(star.degree(0), 6);
        assert_eq!((star.order(), star.size()), (7, 6));

        let c5 = make_cycle(5).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let k4 = make_complete(4).unwrap();
        assert_eq!(k4.size(), 6);
    }

    #[test]
    fn family_errors() {
        assert_eq!(make_path(0), Err(GraphError::OrderZero));
        assert_eq!(make_cycle(2), Err(GraphError::CycleTooShort { order: 2 }));
        assert_eq!(make_star(0), Err(GraphError::OrderZero));
        assert_eq!(make_complete_bipartite(0, 3), Err(GraphError::OrderZero));
        assert_eq!(make_complete(0), Err(GraphError::OrderZero));
    }
}
