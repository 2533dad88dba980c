//! A deliberately naive secure-domination oracle.
//!
//! Used to cross-validate the pruned solver. It walks every one of the 2^n
//! subsets in increasing cardinality with plain adjacency-list loops and no
//! pruning, and shares nothing with the solver or the predicate module
//! beyond the [`Graph`] type itself.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the oracle will attempt (2^n subsets, each rechecked
/// naively).
pub const ORACLE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {order} exceeds the oracle cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },
}

fn covers(adj: &[Vec<usize>], n: usize, members: &[bool]) -> bool {
    'vertices: for v in 0..n {
        if members[v] {
            continue;
        }
        for &u in &adj[v] {
            if members[u] {
                continue 'vertices;
            }
        }
        return false;
    }
    true
}

fn secure(adj: &[Vec<usize>], n: usize, members: &mut [bool]) -> bool {
    if !covers(adj, n, members) {
        return false;
    }
    for attacker in 0..n {
        if members[attacker] {
            continue;
        }
        let mut defended = false;
        for &defender in &adj[attacker] {
            if !members[defender] {
                continue;
            }
            members[defender] = false;
            members[attacker] = true;
            let ok = covers(adj, n, members);
            members[defender] = true;
            members[attacker] = false;
            if ok {
                defended = true;
                break;
            }
        }
        if !defended {
            return false;
        }
    }
    true
}

/// γ_s(g) by unpruned enumeration of all subsets in increasing cardinality.
pub fn oracle_min_secure(g: &Graph) -> Result<usize, OracleError> {
    let n = g.order();
    if n > ORACLE_CAP {
        return Err(OracleError::OrderAboveCap {
            order: n,
            cap: ORACLE_CAP,
        });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut members = vec![false; n];
    for k in 0..=n {
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            for (v, m) in members.iter_mut().enumerate() {
                *m = mask >> v & 1 == 1;
            }
            if secure(&adj, n, &mut members) {
                return Ok(k);
            }
        }
    }
    unreachable!("the full vertex set is secure dominating");
}
