//! Exact computation of γ and γ_s by exhaustive subset search.
//!
//! Candidate sets are enumerated by increasing cardinality and, within a
//! cardinality, in lexicographic order of their ascending member
//! sequences. The first success is therefore the lexicographically least
//! optimum, and reaching cardinality k certifies that no smaller set
//! qualifies. Branches whose completions provably cannot dominate are cut;
//! sets that fail domination are never handed to the more expensive
//! security check.
//!
//! Levels may be searched in parallel across disjoint first-vertex blocks.
//! A block only ever reports its own lexicographically least success, and
//! blocks are merged by block index, so the witness is identical no matter
//! how the work is scheduled.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::domination::is_secure;
use crate::graph::Graph;

/// Which parameter a [`SolveResult`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    Domination,
    SecureDomination,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Domination => write!(f, "gamma"),
            Parameter::SecureDomination => write!(f, "gamma_s"),
        }
    }
}

/// An exact optimum with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub value: usize,
    /// Lexicographically least optimal set.
    pub witness: VertexSet,
    /// True when every smaller cardinality was exhausted without success,
    /// certifying the value as a lower bound and not just an upper bound.
    pub exhausted_below: bool,
}

struct LevelSearch<'a> {
    g: &'a Graph,
    n: usize,
    full: u64,
    /// Closed neighborhood of each vertex, as raw bits.
    closed: Vec<u64>,
    /// `low_reach[last]` holds the vertices whose entire closed
    /// neighborhood lies in `0..=last`; once the search has passed `last`,
    /// nothing can cover them anymore.
    low_reach: Vec<u64>,
    /// Δ+1, the most one added vertex can newly cover.
    max_cover: usize,
    secure: bool,
}

impl<'a> LevelSearch<'a> {
    fn new(g: &'a Graph, secure: bool) -> Self {
        let n = g.order();
        let closed: Vec<u64> = (0..n).map(|v| g.closed_neighborhood(v).bits()).collect();
        let max_idx: Vec<usize> = closed
            .iter()
            .map(|&c| 63 - c.leading_zeros() as usize)
            .collect();
        let mut low_reach = vec![0u64; n];
        let mut acc = 0u64;
        for (last, slot) in low_reach.iter_mut().enumerate() {
            for (v, &m) in max_idx.iter().enumerate() {
                if m == last {
                    acc |= 1 << v;
                }
            }
            *slot = acc;
        }
        LevelSearch {
            g,
            n,
            full: g.vertex_set().bits(),
            closed,
            low_reach,
            max_cover: g.max_degree() + 1,
            secure,
        }
    }

    #[inline]
    fn accepts(&self, set: VertexSet) -> bool {
        !self.secure || is_secure(self.g, set)
    }

    /// Branch can still reach a dominating set?
    #[inline]
    fn viable(&self, covered: u64, last: usize, remaining: usize) -> bool {
        let uncovered = self.full & !covered;
        if uncovered.count_ones() as usize > remaining * self.max_cover {
            return false;
        }
        uncovered & self.low_reach[last] == 0
    }

    /// Lexicographically least success extending `picked` (whose last
    /// member is `last`) by `remaining` vertices above `last`. `cancel`
    /// carries the smallest block known to have succeeded; blocks above it
    /// abandon their search since they can no longer win.
    fn first_from(
        &self,
        picked: u64,
        covered: u64,
        last: usize,
        remaining: usize,
        block: usize,
        cancel: &AtomicUsize,
    ) -> Option<VertexSet> {
        if remaining == 0 {
            let set = VertexSet::from_bits(picked);
            return (covered == self.full && self.accepts(set)).then_some(set);
        }
        if block > cancel.load(AtomicOrdering::Relaxed) {
            return None;
        }
        if !self.viable(covered, last, remaining) {
            return None;
        }
        if covered == self.full && !self.secure {
            // Any completion dominates; the least is the next `remaining`
            // indices.
            let mut set = VertexSet::from_bits(picked);
            for v in last + 1..=last + remaining {
                set.insert(v);
            }
            return Some(set);
        }
        for v in last + 1..=self.n - remaining {
            if let Some(found) = self.first_from(
                picked | 1 << v,
                covered | self.closed[v],
                v,
                remaining - 1,
                block,
                cancel,
            ) {
                return Some(found);
            }
        }
        None
    }

    /// All successes extending `picked`, appended in lexicographic order.
    fn collect_from(
        &self,
        picked: u64,
        covered: u64,
        last: usize,
        remaining: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if remaining == 0 {
            let set = VertexSet::from_bits(picked);
            if covered == self.full && self.accepts(set) {
                out.push(set);
            }
            return;
        }
        if !self.viable(covered, last, remaining) {
            return;
        }
        for v in last + 1..=self.n - remaining {
            self.collect_from(
                picked | 1 << v,
                covered | self.closed[v],
                v,
                remaining - 1,
                out,
            );
        }
    }

    /// Lexicographically least qualifying k-set, or None if the level is
    /// exhausted.
    fn first_at_level(&self, k: usize) -> Option<VertexSet> {
        if k == 0 {
            return (self.full == 0).then_some(VertexSet::empty());
        }
        let cancel = AtomicUsize::new(usize::MAX);
        let hits: Vec<(usize, VertexSet)> = (0..=self.n - k)
            .into_par_iter()
            .filter_map(|v0| {
                if v0 > cancel.load(AtomicOrdering::Relaxed) {
                    return None;
                }
                let found = self.first_from(1 << v0, self.closed[v0], v0, k - 1, v0, &cancel)?;
                cancel.fetch_min(v0, AtomicOrdering::Relaxed);
                Some((v0, found))
            })
            .collect();
        hits.into_iter().min_by_key(|&(v0, _)| v0).map(|(_, s)| s)
    }

    /// Every qualifying k-set, in lexicographic order.
    fn collect_at_level(&self, k: usize) -> Vec<VertexSet> {
        if k == 0 {
            return if self.full == 0 {
                vec![VertexSet::empty()]
            } else {
                vec![]
            };
        }
        let mut blocks: Vec<Vec<VertexSet>> = (0..=self.n - k)
            .into_par_iter()
            .map(|v0| {
                let mut out = Vec::new();
                self.collect_from(1 << v0, self.closed[v0], v0, k - 1, &mut out);
                out
            })
            .collect();
        blocks.drain(..).flatten().collect()
    }
}

fn solve(g: &Graph, parameter: Parameter) -> SolveResult {
    let search = LevelSearch::new(g, parameter == Parameter::SecureDomination);
    for k in 1..=g.order() {
        if let Some(witness) = search.first_at_level(k) {
            return SolveResult {
                parameter,
                value: k,
                witness,
                exhausted_below: true,
            };
        }
    }
    unreachable!("the full vertex set dominates and has no attackers");
}

/// Exact domination number γ(g) with the lexicographically least witness.
pub fn min_dominating(g: &Graph) -> SolveResult {
    solve(g, Parameter::Domination)
}

/// Exact secure domination number γ_s(g) with the lexicographically least
/// witness.
pub fn min_secure_dominating(g: &Graph) -> SolveResult {
    solve(g, Parameter::SecureDomination)
}

/// All secure dominating sets of minimum cardinality, lexicographically
/// ordered.
pub fn all_min_secure_sets(g: &Graph) -> Vec<VertexSet> {
    let optimum = min_secure_dominating(g);
    LevelSearch::new(g, true).collect_at_level(optimum.value)
}

/// All secure dominating sets with no secure dominating proper subset,
/// ordered by cardinality and then lexicographically.
///
/// Security is preserved under adding vertices, so a set is
/// inclusion-minimal exactly when removing any single vertex breaks it.
pub fn all_inclusion_minimal_secure_sets(g: &Graph) -> Vec<VertexSet> {
    let search = LevelSearch::new(g, true);
    let mut out = Vec::new();
    for k in 1..=g.order() {
        for s in search.collect_at_level(k) {
            if s.iter().all(|v| !is_secure(g, s.without(v))) {
                out.push(s);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete, make_cycle, make_path, make_star};
    use crate::mycielskian::mycielskian;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn mu(g: &Graph) -> Graph {
        mycielskian(g).unwrap().0
    }

    #[test]
    fn domination_values() {
        let p6 = make_path(6).unwrap();
        let r = min_dominating(&p6);
        assert_eq!((r.value, r.witness), (2, set(&[1, 4])));
        assert!(r.exhausted_below);

        for n in 1..6 {
            let r = min_dominating(&make_complete(n).unwrap());
            assert_eq!((r.value, r.witness), (1, set(&[0])));
        }

        assert_eq!(min_dominating(&mu(&p6)).value, 3);
    }

    #[test]
    fn secure_domination_values() {
        let p7 = make_path(7).unwrap();
        let r = min_secure_dominating(&p7);
        assert_eq!((r.value, r.witness), (3, set(&[1, 3, 5])));

        assert_eq!(min_secure_dominating(&mu(&p7)).value, 5);
        assert_eq!(min_secure_dominating(&make_complete(5).unwrap()).value, 1);
        for leaves in 1..=4 {
            let star = make_star(leaves).unwrap();
            assert_eq!(min_secure_dominating(&mu(&star)).value, 3);
        }
        // The 2γ+1 bound is attained on P_6.
        assert_eq!(min_secure_dominating(&mu(&make_path(6).unwrap())).value, 5);
    }

    #[test]
    fn deterministic_witnesses() {
        let m = mu(&make_path(9).unwrap());
        let first = min_secure_dominating(&m);
        for _ in 0..2 {
            assert_eq!(min_secure_dominating(&m), first);
        }
        assert_eq!(
            min_secure_dominating(&mu(&make_path(6).unwrap())).witness,
            set(&[0, 1, 3, 4, 12])
        );
        assert_eq!(
            min_secure_dominating(&mu(&make_path(7).unwrap())).witness,
            set(&[0, 1, 4, 5, 14])
        );
    }

    #[test]
    fn all_min_sets() {
        let p7 = make_path(7).unwrap();
        assert_eq!(all_min_secure_sets(&p7), vec![set(&[1, 3, 5])]);

        assert_eq!(
            all_min_secure_sets(&make_complete(3).unwrap()),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );

        // Independently derived: every 2-subset of C_4 is secure dominating.
        assert_eq!(
            all_min_secure_sets(&make_cycle(4).unwrap()),
            vec![
                set(&[0, 1]),
                set(&[0, 2]),
                set(&[0, 3]),
                set(&[1, 2]),
                set(&[1, 3]),
                set(&[2, 3]),
            ]
        );
    }

    #[test]
    fn inclusion_minimal_sets() {
        assert_eq!(
            all_inclusion_minimal_secure_sets(&make_complete(2).unwrap()),
            vec![set(&[0]), set(&[1])]
        );

        let minimal = all_inclusion_minimal_secure_sets(&make_path(3).unwrap());
        assert!(minimal.contains(&set(&[0, 1])));
        assert!(minimal.contains(&set(&[1, 2])));
        assert!(!minimal.contains(&set(&[0, 1, 2])));
        assert_eq!(minimal, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);

        assert_eq!(
            all_inclusion_minimal_secure_sets(&make_path(6).unwrap()).len(),
            9
        );
    }

    #[test]
    fn lower_bound_certification() {
        // Re-enumerate every (value-1)-subset naively and confirm none is
        // secure dominating.
        let g = mu(&make_path(4).unwrap());
        let r = min_secure_dominating(&g);
        assert!(r.exhausted_below);
        let n = g.order();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize == r.value - 1 {
                assert!(
                    crate::domination::is_secure_dominating(&g, VertexSet::from_bits(mask))
                        .is_none()
                );
            }
        }
    }

    #[test]
    fn witnesses_satisfy_their_predicates() {
        for n in 1..8 {
            let g = make_path(n).unwrap();
            let d = min_dominating(&g);
            assert!(crate::domination::is_dominating(&g, d.witness));
            assert_eq!(d.witness.cardinality(), d.value);
            let s = min_secure_dominating(&g);
            assert!(crate::domination::is_secure_dominating(&g, s.witness).is_some());
            assert_eq!(s.witness.cardinality(), s.value);
        }
    }
}
