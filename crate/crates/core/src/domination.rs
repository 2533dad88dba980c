//! Domination and secure-domination predicates.
//!
//! A set S dominates when every vertex lies in a closed neighborhood of S.
//! S is secure dominating when it dominates and every outside vertex u has
//! an adjacent defender v ∈ S such that (S ∖ {v}) ∪ {u} still dominates.
//! A guard can only move along an edge, so defenders must be adjacent to
//! the attacker they cover.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::mycielskian::MycielskianLabeling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("vertex {vertex} is not a member of the given set")]
    VertexNotInSet { vertex: usize },
    #[error("the given set is not secure dominating")]
    NotSecureDominating,
    #[error("lift target has order {order}, above the supported maximum {max}")]
    WidthExceeded { order: usize, max: usize },
}

/// True iff the closed neighborhoods of `s` cover every vertex of `g`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    closed_neighborhood_union(g, s) == g.vertex_set()
}

#[inline]
fn closed_neighborhood_union(g: &Graph, s: VertexSet) -> VertexSet {
    let mut covered = s;
    for v in s.iter() {
        covered = covered.union(g.neighbors(v));
    }
    covered
}

/// External private neighbors of `v` with respect to `s`: the vertices
/// outside `s` whose only neighbor in `s` is `v`. Requires `v ∈ s`.
pub fn epn(g: &Graph, v: usize, s: VertexSet) -> Result<VertexSet, DominationError> {
    if !s.contains(v) {
        return Err(DominationError::VertexNotInSet { vertex: v });
    }
    let mut out = VertexSet::empty();
    for u in g.vertex_set().difference(s).iter() {
        if g.neighbors(u).intersection(s) == VertexSet::singleton(v) {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Members of `s` with no neighbor inside `s`.
pub fn s_isolates(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .filter(|&v| g.neighbors(v).intersection(s).is_empty())
        .collect()
}

/// Witness that a set is secure dominating: the set together with one
/// valid defender per attacker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecureCertificate {
    set: VertexSet,
    defenders: BTreeMap<usize, usize>,
}

impl SecureCertificate {
    pub fn set(&self) -> VertexSet {
        self.set
    }

    /// Attacker → defender assignment for every vertex outside the set.
    pub fn defenders(&self) -> &BTreeMap<usize, usize> {
        &self.defenders
    }

    /// Re-checks every part of the certificate against `g` from scratch.
    pub fn replay(&self, g: &Graph) -> bool {
        if !is_dominating(g, self.set) {
            return false;
        }
        let attackers = g.vertex_set().difference(self.set);
        if self.defenders.len() != attackers.cardinality() {
            return false;
        }
        attackers.iter().all(|u| match self.defenders.get(&u) {
            Some(&d) => {
                self.set.contains(d)
                    && g.has_edge(u, d)
                    && is_dominating(g, self.set.without(d).with(u))
            }
            None => false,
        })
    }
}

#[inline]
fn defends(g: &Graph, s: VertexSet, defender: usize, attacker: usize) -> bool {
    is_dominating(g, s.without(defender).with(attacker))
}

/// Boolean-only secure domination test; shares its swap logic with the
/// certificate builder but allocates nothing.
pub(crate) fn is_secure(g: &Graph, s: VertexSet) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    g.vertex_set().difference(s).iter().all(|u| {
        g.neighbors(u)
            .intersection(s)
            .iter()
            .any(|v| defends(g, s, v, u))
    })
}

/// Checks whether `s` is secure dominating in `g`; on success returns a
/// certificate assigning each attacker its least-index valid defender.
pub fn is_secure_dominating(g: &Graph, s: VertexSet) -> Option<SecureCertificate> {
    if !is_dominating(g, s) {
        return None;
    }
    let mut defenders = BTreeMap::new();
    for u in g.vertex_set().difference(s).iter() {
        let defender = g
            .neighbors(u)
            .intersection(s)
            .iter()
            .find(|&v| defends(g, s, v, u))?;
        defenders.insert(u, defender);
    }
    Some(SecureCertificate { set: s, defenders })
}

/// Lifts a secure dominating set of `g` into μ(g): the set itself, the
/// images of its isolates, and the cone vertex. The result is secure
/// dominating in the Mycielskian.
pub fn lift_secure_set(g: &Graph, s: VertexSet) -> Result<VertexSet, DominationError> {
    let n = g.order();
    if 2 * n + 1 > crate::graph::MAX_ORDER {
        return Err(DominationError::WidthExceeded {
            order: 2 * n + 1,
            max: crate::graph::MAX_ORDER,
        });
    }
    if !is_secure(g, s) {
        return Err(DominationError::NotSecureDominating);
    }
    let labeling = MycielskianLabeling::new(n);
    Ok(s.union(labeling.image_set(s_isolates(g, s)))
        .with(labeling.cone()))
}
