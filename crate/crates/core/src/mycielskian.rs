//! The Mycielskian construction μ(G).
//!
//! For a graph G on vertices v_0, .., v_{n-1}, μ(G) adds an image u_i per
//! vertex (u_i adjacent to N(v_i)) and a cone vertex w adjacent to every
//! image. The vertex indices are fixed: v_i ↦ i, u_i ↦ n+i, w ↦ 2n. All
//! code in this crate relies on that convention.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError, MAX_ORDER};

/// Index bookkeeping for a Mycielskian built from a base of order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MycielskianLabeling {
    base_order: usize,
}

impl MycielskianLabeling {
    pub fn new(base_order: usize) -> Self {
        MycielskianLabeling { base_order }
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Order of the Mycielskian, 2n+1.
    pub fn order(&self) -> usize {
        2 * self.base_order + 1
    }

    /// Index of the original vertex v_i.
    #[inline]
    pub fn original(&self, i: usize) -> usize {
        debug_assert!(i < self.base_order);
        i
    }

    /// Index of the image u_i of v_i.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        debug_assert!(i < self.base_order);
        self.base_order + i
    }

    /// Index of the cone vertex w.
    #[inline]
    pub fn cone(&self) -> usize {
        2 * self.base_order
    }

    /// The block of original vertices, `{0, .., n-1}`.
    pub fn original_block(&self) -> VertexSet {
        VertexSet::full(self.base_order)
    }

    /// The block of image vertices, `{n, .., 2n-1}`.
    pub fn image_block(&self) -> VertexSet {
        VertexSet::full(2 * self.base_order).difference(VertexSet::full(self.base_order))
    }

    /// Maps a set of base vertices to the set of their images.
    pub fn image_set(&self, s: VertexSet) -> VertexSet {
        debug_assert!(s.is_subset_of(self.original_block()));
        VertexSet::from_bits(s.bits() << self.base_order)
    }

    /// The base vertex whose image is `x`, if `x` lies in the image block.
    pub fn preimage(&self, x: usize) -> Option<usize> {
        if (self.base_order..2 * self.base_order).contains(&x) {
            Some(x - self.base_order)
        } else {
            None
        }
    }
}

/// Builds μ(g) together with its labeling.
///
/// The result has order 2n+1 and size 3m+n. Fails only when 2n+1 exceeds
/// the supported graph width.
pub fn mycielskian(g: &Graph) -> Result<(Graph, MycielskianLabeling), GraphError> {
    let n = g.order();
    let order = 2 * n + 1;
    if order > MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let labeling = MycielskianLabeling::new(n);
    let mut mu = Graph::new(order)?;
    for (i, j) in g.edges() {
        mu.add_edge(i, j)?;
        mu.add_edge(labeling.image(i), j)?;
        mu.add_edge(i, labeling.image(j))?;
    }
    let w = labeling.cone();
    for i in 0..n {
        mu.add_edge(w, labeling.image(i))?;
    }
    Ok((mu, labeling))
}
