//! Simple undirected graphs over vertices `0..n`, adjacency as one
//! [`VertexSet`] per vertex.

use thiserror::Error;

use crate::bitset::VertexSet;

/// Largest supported graph order. Keeping every vertex set in a single
/// machine word bounds this at the word width; raise it only together with
/// a wider [`VertexSet`] representation.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    OrderZero,
    #[error("graph order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex} not allowed")]
    SelfLoop { vertex: usize },
    #[error("cycle requires at least 3 vertices, got {order}")]
    CycleTooShort { order: usize },
    #[error("graph orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

/// A simple undirected graph.
///
/// Invariants maintained by construction: adjacency is symmetric and
/// irreflexive, and every neighbor index is below the order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(); n],
        })
    }

    /// A graph on `n` vertices with the given edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        if u >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: n,
            });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.cardinality()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].cardinality()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// The full vertex set `{0, .., n-1}`.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.cardinality()).max().unwrap_or(0)
    }

    /// True if some vertex is adjacent to all others (degree n−1).
    pub fn has_dominating_vertex(&self) -> bool {
        let n = self.order();
        self.adj.iter().any(|s| s.cardinality() == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        let mut reached = VertexSet::singleton(0);
        loop {
            let mut next = reached;
            for v in reached.iter() {
                next = next.union(self.adj[v]);
            }
            if next == reached {
                break;
            }
            reached = next;
        }
        reached == self.vertex_set()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.adj[u].intersection(self.adj[v]).is_empty())
    }

    /// True if every edge of `self` is an edge of `g`. Requires equal orders.
    pub fn is_spanning_subgraph_of(&self, g: &Graph) -> Result<bool, GraphError> {
        if self.order() != g.order() {
            return Err(GraphError::OrderMismatch {
                left: self.order(),
                right: g.order(),
            });
        }
        Ok(self.vertices().all(|v| self.adj[v].is_subset_of(g.adj[v])))
    }

    /// The graph with vertex `i` relabeled to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut g = Graph {
            adj: vec![VertexSet::empty(); self.order()],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }
}
