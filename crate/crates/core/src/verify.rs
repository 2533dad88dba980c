//! The claim-verification harness.
//!
//! Each check pairs a published claim with an executable test over an
//! exhaustively enumerated instance range: closed forms against the exact
//! solvers, structural claims against predicate scans. Checks do not
//! special-case known exceptions; where a claim is false on an instance,
//! the harness reports a fail carrying a replayable counterexample. The
//! survey checks evaluate the open questions instance-by-instance and
//! only ever collect evidence, never resolution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::constructions::{
    construct_gap_nonnegative, construct_gap_positive, construct_prescribed, gap_positive_order,
};
use crate::domination::{epn, is_secure, is_secure_dominating, lift_secure_set, s_isolates};
use crate::enumerate::enumerate_graphs;
use crate::families::{make_complete_bipartite, make_cycle, make_path};
use crate::formulas::{
    bound_isolates, bound_two_gamma_plus_one, gamma_s_complete_bipartite,
    gamma_s_mu_complete_bipartite, gamma_s_mu_path, gamma_s_path,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::mycielskian::{mycielskian, MycielskianLabeling};
use crate::solver::{
    all_inclusion_minimal_secure_sets, all_min_secure_sets, min_dominating, min_secure_dominating,
};

/// Identifiers for the checkable claims. The FW ids belong to the
/// open-question survey and are produced by [`survey_conjectures`], not
/// [`run_theorem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    L5,
    C6,
    T7,
    T8,
    P9,
    P10,
    L12,
    P13,
    P14,
    C15,
    P16,
    T17,
    T19,
    T20,
    GapPositive,
    GapNonnegative,
    T22,
    FW1,
    FW2,
    FW3,
    FW4,
}

impl TheoremId {
    /// The ids accepted by [`run_theorem`], in canonical order.
    pub const RUNNABLE: [TheoremId; 19] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::L5,
        TheoremId::C6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::P9,
        TheoremId::P10,
        TheoremId::L12,
        TheoremId::P13,
        TheoremId::P14,
        TheoremId::C15,
        TheoremId::P16,
        TheoremId::T17,
        TheoremId::T19,
        TheoremId::T20,
        TheoremId::GapPositive,
        TheoremId::GapNonnegative,
        TheoremId::T22,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::L5 => "L5",
            TheoremId::C6 => "C6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::P9 => "P9",
            TheoremId::P10 => "P10",
            TheoremId::L12 => "L12",
            TheoremId::P13 => "P13",
            TheoremId::P14 => "P14",
            TheoremId::C15 => "C15",
            TheoremId::P16 => "P16",
            TheoremId::T17 => "T17",
            TheoremId::T19 => "T19",
            TheoremId::T20 => "T20",
            TheoremId::GapPositive => "GAP+",
            TheoremId::GapNonnegative => "GAP0",
            TheoremId::T22 => "T22",
            TheoremId::FW1 => "FW1",
            TheoremId::FW2 => "FW2",
            TheoremId::FW3 => "FW3",
            TheoremId::FW4 => "FW4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let u = s.to_ascii_uppercase();
        for id in TheoremId::RUNNABLE {
            if u == id.as_str() {
                return Ok(id);
            }
        }
        match u.as_str() {
            "GAP-POSITIVE" => Ok(TheoremId::GapPositive),
            "GAP-NONNEG" | "GAP-NONNEGATIVE" => Ok(TheoremId::GapNonnegative),
            "FW1" => Ok(TheoremId::FW1),
            "FW2" => Ok(TheoremId::FW2),
            "FW3" => Ok(TheoremId::FW3),
            "FW4" => Ok(TheoremId::FW4),
            _ => Err(format!("unknown theorem id '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Skipped { reason } => write!(f, "skipped: {reason}"),
        }
    }
}

/// Outcome of one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    /// Family descriptor like `P_7` or `mu(K_{2,3})`, or a graph6 string.
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    /// Replayable payload, present exactly on fail verdicts.
    pub counterexample: Option<String>,
}

/// Range overrides for [`run_theorem`]. Each check reads the one
/// dimension it ranges over; unset fields fall back to the pinned default.
#[derive(Debug, Clone, Copy, Default)]
pub struct RangeParams {
    /// Instance order bound (most checks).
    pub n_max: Option<usize>,
    /// Bound on m+n for the bipartite tables.
    pub sum_max: Option<usize>,
    /// Gap bound for the gap constructions.
    pub k_max: Option<usize>,
    /// Bound on a for the prescribed-value construction.
    pub a_max: Option<usize>,
    /// Allow ranges beyond the pinned default, up to the feasibility cap.
    pub override_caps: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{theorem} range {requested} exceeds the default {default}; pass the override flag to extend")]
    RangeNeedsOverride {
        theorem: TheoremId,
        requested: usize,
        default: usize,
    },
    #[error("{theorem} range {requested} exceeds the feasibility cap {cap}")]
    RangeExceedsCap {
        theorem: TheoremId,
        requested: usize,
        cap: usize,
    },
    #[error("{theorem} is a survey item; use the conjecture survey instead")]
    NotRunnable { theorem: TheoremId },
}

/// Pinned default range and feasibility cap for each runnable check, in
/// the dimension that check ranges over.
pub fn range_limits(id: TheoremId) -> (usize, usize) {
    match id {
        TheoremId::T1 => (5, 7),
        TheoremId::T2 => (14, 18),
        TheoremId::L5 => (5, 5),
        TheoremId::C6 => (5, 6),
        TheoremId::T7 => (6, 7),
        TheoremId::T8 => (6, 7),
        TheoremId::P9 => (6, 7),
        TheoremId::P10 => (6, 7),
        TheoremId::L12 => (5, 6),
        TheoremId::P13 => (12, 16),
        TheoremId::P14 => (5, 5),
        TheoremId::C15 => (5, 5),
        TheoremId::P16 => (6, 6),
        TheoremId::T17 => (12, 14),
        TheoremId::T19 => (10, 14),
        TheoremId::T20 => (10, 12),
        TheoremId::GapPositive => (2, 8),
        TheoremId::GapNonnegative => (5, 12),
        TheoremId::T22 => (4, 5),
        _ => (0, 0),
    }
}

fn effective_range(
    id: TheoremId,
    requested: Option<usize>,
    override_caps: bool,
) -> Result<usize, VerifyError> {
    let (default, cap) = range_limits(id);
    let requested = requested.unwrap_or(default);
    if requested > cap {
        return Err(VerifyError::RangeExceedsCap {
            theorem: id,
            requested,
            cap,
        });
    }
    if requested > default && !override_caps {
        return Err(VerifyError::RangeNeedsOverride {
            theorem: id,
            requested,
            default,
        });
    }
    Ok(requested)
}

fn pass_fail(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn mu_of(g: &Graph) -> (Graph, MycielskianLabeling) {
    mycielskian(g).expect("harness ranges keep Mycielskians within the width cap")
}

fn gamma_s_value(g: &Graph) -> usize {
    min_secure_dominating(g).value
}

fn is_complete(g: &Graph) -> bool {
    g.size() == g.order() * (g.order() - 1) / 2
}

/// Runs one check over its instance range and returns one report per
/// instance. Rejects survey ids and out-of-range requests.
pub fn run_theorem(id: TheoremId, params: &RangeParams) -> Result<Vec<TheoremReport>, VerifyError> {
    let limit = match id {
        TheoremId::T19 | TheoremId::T20 => {
            effective_range(id, params.sum_max, params.override_caps)?
        }
        TheoremId::GapPositive | TheoremId::GapNonnegative => {
            effective_range(id, params.k_max, params.override_caps)?
        }
        TheoremId::T22 => effective_range(id, params.a_max, params.override_caps)?,
        TheoremId::FW1 | TheoremId::FW2 | TheoremId::FW3 | TheoremId::FW4 => {
            return Err(VerifyError::NotRunnable { theorem: id })
        }
        _ => effective_range(id, params.n_max, params.override_caps)?,
    };

    Ok(match id {
        TheoremId::T1 => check_t1(limit),
        TheoremId::T2 => check_t2(limit),
        TheoremId::L5 => check_l5(limit),
        TheoremId::C6 => check_c6(limit),
        TheoremId::T7 => check_t7(limit),
        TheoremId::T8 => check_t8(limit),
        TheoremId::P9 | TheoremId::P10 => check_p9_p10(id, limit),
        TheoremId::L12 => check_l12(limit),
        TheoremId::P13 => check_p13(limit),
        TheoremId::P14 => check_p14(limit),
        TheoremId::C15 => check_c15(limit),
        TheoremId::P16 => check_p16(limit),
        TheoremId::T17 => check_t17(limit),
        TheoremId::T19 => check_t19(limit),
        TheoremId::T20 => check_t20(limit),
        TheoremId::GapPositive => check_gap_positive(limit),
        TheoremId::GapNonnegative => check_gap_nonnegative(limit),
        TheoremId::T22 => check_t22(limit),
        _ => unreachable!("survey ids rejected above"),
    })
}

/// γ_s(G) = 1 exactly for complete graphs.
fn check_t1(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_graphs(n, false).unwrap() {
            let complete = is_complete(&g);
            let value = gamma_s_value(&g);
            let ok = (value == 1) == complete;
            out.push(TheoremReport {
                theorem: TheoremId::T1,
                instance: to_graph6(&g),
                expected: if complete {
                    "gamma_s = 1".into()
                } else {
                    "gamma_s > 1".into()
                },
                computed: format!("gamma_s = {value}"),
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// γ_s(P_n) = γ_s(C_n) = ⌈3n/7⌉.
fn check_t2(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let expected = gamma_s_path(n);
        let value = gamma_s_value(&make_path(n).unwrap());
        out.push(TheoremReport {
            theorem: TheoremId::T2,
            instance: format!("P_{n}"),
            expected: format!("gamma_s = {expected}"),
            computed: format!("gamma_s = {value}"),
            verdict: pass_fail(value == expected),
            counterexample: (value != expected)
                .then(|| format!("graph6={}", to_graph6(&make_path(n).unwrap()))),
        });
    }
    for n in 3..=n_max {
        let expected = gamma_s_path(n);
        let g = make_cycle(n).unwrap();
        let value = gamma_s_value(&g);
        out.push(TheoremReport {
            theorem: TheoremId::T2,
            instance: format!("C_{n}"),
            expected: format!("gamma_s = {expected}"),
            computed: format!("gamma_s = {value}"),
            verdict: pass_fail(value == expected),
            counterexample: (value != expected).then(|| format!("graph6={}", to_graph6(&g))),
        });
    }
    out
}

/// H spanning subgraph of G implies γ_s(μ(G)) ≤ γ_s(μ(H)).
fn check_l5(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    let mut memo: BTreeMap<String, usize> = BTreeMap::new();
    let mut mu_gamma_s = |g: &Graph| -> usize {
        let key = crate::enumerate::canonical_form(g).unwrap();
        *memo
            .entry(key)
            .or_insert_with(|| gamma_s_value(&mu_of(g).0))
    };
    for n in 1..=n_max {
        for g in enumerate_graphs(n, false).unwrap() {
            let value_g = mu_gamma_s(&g);
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let mut checked = 0usize;
            let mut counterexample = None;
            for mask in 0u64..(1 << edges.len()) {
                let sub = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let h = Graph::from_edges(n, sub).unwrap();
                let value_h = mu_gamma_s(&h);
                checked += 1;
                if value_g > value_h {
                    counterexample = Some(format!(
                        "graph6(G)={} graph6(H)={} gamma_s(mu(G))={} gamma_s(mu(H))={}",
                        to_graph6(&g),
                        to_graph6(&h),
                        value_g,
                        value_h
                    ));
                    break;
                }
            }
            out.push(TheoremReport {
                theorem: TheoremId::L5,
                instance: to_graph6(&g),
                expected: "gamma_s(mu(G)) <= gamma_s(mu(H)) for every spanning subgraph H".into(),
                computed: format!("checked {checked} spanning subgraphs"),
                verdict: pass_fail(counterexample.is_none()),
                counterexample,
            });
        }
    }
    out
}

/// γ_s(μ(G)) = 2 exactly for the one-vertex graph.
fn check_c6(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_graphs(n, false).unwrap() {
            let value = gamma_s_value(&mu_of(&g).0);
            let ok = (value == 2) == (n == 1);
            out.push(TheoremReport {
                theorem: TheoremId::C6,
                instance: to_graph6(&g),
                expected: if n == 1 {
                    "gamma_s(mu) = 2".into()
                } else {
                    "gamma_s(mu) > 2".into()
                },
                computed: format!("gamma_s(mu) = {value}"),
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// A dominating vertex forces γ_s(μ(G)) = 3 for orders ≥ 2.
fn check_t7(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_graphs(n, false).unwrap() {
            if !g.has_dominating_vertex() {
                continue;
            }
            let value = gamma_s_value(&mu_of(&g).0);
            out.push(TheoremReport {
                theorem: TheoremId::T7,
                instance: to_graph6(&g),
                expected: "gamma_s(mu) = 3".into(),
                computed: format!("gamma_s(mu) = {value}"),
                verdict: pass_fail(value == 3),
                counterexample: (value != 3).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// Δ(G) = n−2 on a connected graph bounds γ_s(μ(G)) by 4.
fn check_t8(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_graphs(n, true).unwrap() {
            if g.max_degree() + 2 != n {
                continue;
            }
            let value = gamma_s_value(&mu_of(&g).0);
            out.push(TheoremReport {
                theorem: TheoremId::T8,
                instance: to_graph6(&g),
                expected: "gamma_s(mu) <= 4".into(),
                computed: format!("gamma_s(mu) = {value}"),
                verdict: pass_fail(value <= 4),
                counterexample: (value > 4).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// For connected non-complete G of order ≥ 4 with γ_s(G) = γ_s(μ(G)) = 3:
/// every minimum secure dominating set of μ(G) contains the cone vertex
/// (P9), and G has a dominating vertex (P10).
fn check_p9_p10(id: TheoremId, n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        for g in enumerate_graphs(n, true).unwrap() {
            if is_complete(&g) || gamma_s_value(&g) != 3 {
                continue;
            }
            let (mu, lab) = mu_of(&g);
            if gamma_s_value(&mu) != 3 {
                continue;
            }
            let (expected, computed, ok) = match id {
                TheoremId::P9 => {
                    let sets = all_min_secure_sets(&mu);
                    let ok = sets.iter().all(|s| s.contains(lab.cone()));
                    (
                        "w in every minimum secure dominating set of mu(G)".to_string(),
                        format!("{} minimum sets, all contain w: {ok}", sets.len()),
                        ok,
                    )
                }
                _ => {
                    let ok = g.has_dominating_vertex();
                    (
                        "G has a dominating vertex".to_string(),
                        format!("has dominating vertex: {ok}"),
                        ok,
                    )
                }
            };
            out.push(TheoremReport {
                theorem: id,
                instance: to_graph6(&g),
                expected,
                computed,
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// epn(w, S ∪ {w}) in μ(G) is the image of the S-isolates, for every
/// dominating set S.
fn check_l12(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_graphs(n, false).unwrap() {
            let (mu, lab) = mu_of(&g);
            let mut checked = 0usize;
            let mut counterexample = None;
            for mask in 0u64..(1 << n) {
                let s = VertexSet::from_bits(mask);
                if !crate::domination::is_dominating(&g, s) {
                    continue;
                }
                checked += 1;
                let in_mu = epn(&mu, lab.cone(), s.with(lab.cone())).unwrap();
                let images = lab.image_set(s_isolates(&g, s));
                if in_mu != images {
                    counterexample = Some(format!(
                        "graph6={} S={} epn={} images={}",
                        to_graph6(&g),
                        s,
                        in_mu,
                        images
                    ));
                    break;
                }
            }
            out.push(TheoremReport {
                theorem: TheoremId::L12,
                instance: to_graph6(&g),
                expected: "epn(w, S+w) = images of S-isolates for every dominating S".into(),
                computed: format!("checked {checked} dominating sets"),
                verdict: pass_fail(counterexample.is_none()),
                counterexample,
            });
        }
    }
    out
}

/// An isolate-free inclusion-minimal secure dominating set of P_n (n ≥ 6)
/// contains no three consecutive vertices.
fn check_p13(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 6..=n_max {
        let p = make_path(n).unwrap();
        let minimal = all_inclusion_minimal_secure_sets(&p);
        let mut isolate_free = 0usize;
        let mut violations = Vec::new();
        for s in &minimal {
            if !s_isolates(&p, *s).is_empty() {
                continue;
            }
            isolate_free += 1;
            if (0..n - 2).any(|i| s.contains(i) && s.contains(i + 1) && s.contains(i + 2)) {
                violations.push(*s);
            }
        }
        let ok = violations.is_empty();
        out.push(TheoremReport {
            theorem: TheoremId::P13,
            instance: format!("P_{n}"),
            expected: "no three consecutive vertices in any isolate-free inclusion-minimal set"
                .into(),
            computed: format!(
                "{} inclusion-minimal sets, {} isolate-free, {} with three consecutive",
                minimal.len(),
                isolate_free,
                violations.len()
            ),
            verdict: pass_fail(ok),
            counterexample: (!ok).then(|| {
                format!(
                    "graph6={} sets={}",
                    to_graph6(&p),
                    violations
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            }),
        });
    }
    out
}

/// The lift of any secure dominating set of a connected graph is secure
/// dominating in the Mycielskian.
fn check_p14(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_graphs(n, true).unwrap() {
            let (mu, _) = mu_of(&g);
            let mut checked = 0usize;
            let mut counterexample = None;
            for mask in 0u64..(1 << n) {
                let s = VertexSet::from_bits(mask);
                if !is_secure(&g, s) {
                    continue;
                }
                checked += 1;
                let lifted = lift_secure_set(&g, s).unwrap();
                let sound = is_secure_dominating(&mu, lifted).is_some();
                let sized =
                    lifted.cardinality() == s.cardinality() + s_isolates(&g, s).cardinality() + 1;
                if !sound || !sized {
                    counterexample = Some(format!(
                        "graph6={} S={} lift={} secure={sound} size_ok={sized}",
                        to_graph6(&g),
                        s,
                        lifted
                    ));
                    break;
                }
            }
            out.push(TheoremReport {
                theorem: TheoremId::P14,
                instance: to_graph6(&g),
                expected: "lift of every secure dominating set is secure dominating in mu(G)"
                    .into(),
                computed: format!("checked {checked} secure dominating sets"),
                verdict: pass_fail(counterexample.is_none()),
                counterexample,
            });
        }
    }
    out
}

/// γ_s(μ(G)) ≤ |S| + |I_S| + 1 for every secure dominating set S.
fn check_c15(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in enumerate_graphs(n, true).unwrap() {
            let value = gamma_s_value(&mu_of(&g).0);
            let mut checked = 0usize;
            let mut counterexample = None;
            for mask in 0u64..(1 << n) {
                let s = VertexSet::from_bits(mask);
                if !is_secure(&g, s) {
                    continue;
                }
                checked += 1;
                let bound = bound_isolates(&g, s).unwrap();
                if value > bound {
                    counterexample = Some(format!(
                        "graph6={} S={} gamma_s(mu)={} bound={}",
                        to_graph6(&g),
                        s,
                        value,
                        bound
                    ));
                    break;
                }
            }
            out.push(TheoremReport {
                theorem: TheoremId::C15,
                instance: to_graph6(&g),
                expected: "gamma_s(mu(G)) <= |S| + |I_S| + 1 for every secure dominating S".into(),
                computed: format!("gamma_s(mu) = {value}, checked {checked} sets"),
                verdict: pass_fail(counterexample.is_none()),
                counterexample,
            });
        }
    }
    out
}

/// γ_s(μ(G)) ≤ 2γ(G) + 1.
fn check_p16(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_graphs(n, true).unwrap() {
            let bound = bound_two_gamma_plus_one(&g);
            let value = gamma_s_value(&mu_of(&g).0);
            let ok = value <= bound;
            out.push(TheoremReport {
                theorem: TheoremId::P16,
                instance: to_graph6(&g),
                expected: format!("gamma_s(mu) <= {bound}"),
                computed: format!("gamma_s(mu) = {value}"),
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// The four-case closed form for γ_s(μ(P_n)) and γ_s(μ(C_n)).
fn check_t17(n_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    let mut push = |instance: String, g: Graph, n: usize| {
        let expected = gamma_s_mu_path(n);
        let result = min_secure_dominating(&mu_of(&g).0);
        let ok = result.value == expected && result.exhausted_below;
        out.push(TheoremReport {
            theorem: TheoremId::T17,
            instance,
            expected: format!("gamma_s = {expected} (exhausted below)"),
            computed: format!(
                "gamma_s = {} (exhausted below: {})",
                result.value, result.exhausted_below
            ),
            verdict: pass_fail(ok),
            counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
        });
    };
    for n in 2..=n_max {
        push(format!("mu(P_{n})"), make_path(n).unwrap(), n);
    }
    for n in 3..=n_max {
        push(format!("mu(C_{n})"), make_cycle(n).unwrap(), n);
    }
    out
}

/// The γ_s(K_{m,n}) table.
fn check_t19(sum_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for m in 1.. {
        if 2 * m > sum_max {
            break;
        }
        for n in m..=sum_max - m {
            let expected = gamma_s_complete_bipartite(m, n).unwrap();
            let g = make_complete_bipartite(m, n).unwrap();
            let value = gamma_s_value(&g);
            out.push(TheoremReport {
                theorem: TheoremId::T19,
                instance: format!("K_{{{m},{n}}}"),
                expected: format!("gamma_s = {expected}"),
                computed: format!("gamma_s = {value}"),
                verdict: pass_fail(value == expected),
                counterexample: (value != expected).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// The γ_s(μ(K_{m,n})) table.
fn check_t20(sum_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for m in 1.. {
        if 2 * m > sum_max {
            break;
        }
        for n in m..=sum_max - m {
            let expected = gamma_s_mu_complete_bipartite(m, n).unwrap();
            let g = make_complete_bipartite(m, n).unwrap();
            let value = gamma_s_value(&mu_of(&g).0);
            out.push(TheoremReport {
                theorem: TheoremId::T20,
                instance: format!("mu(K_{{{m},{n}}})"),
                expected: format!("gamma_s = {expected}"),
                computed: format!("gamma_s = {value}"),
                verdict: pass_fail(value == expected),
                counterexample: (value != expected).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// Largest base order the gap checks solve directly; beyond it the
/// validated closed forms stand in for the solver, and the report says so.
const GAP_DIRECT_ORDER_CAP: usize = 14;

fn check_gap_positive(k_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let n = gap_positive_order(k);
        if n <= GAP_DIRECT_ORDER_CAP {
            let (g, spec) = construct_gap_positive(k).unwrap();
            let value = gamma_s_value(&g);
            let value_mu = gamma_s_value(&mu_of(&g).0);
            let ok = value == spec.gamma_s && value_mu == spec.gamma_s_mu;
            out.push(TheoremReport {
                theorem: TheoremId::GapPositive,
                instance: format!("P_{n} (k={k})"),
                expected: format!(
                    "(gamma_s, gamma_s_mu) = ({}, {})",
                    spec.gamma_s, spec.gamma_s_mu
                ),
                computed: format!("solver: ({value}, {value_mu})"),
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        } else {
            // Solver substitution: the closed forms certified by the T2 and
            // T17 checks stand in for direct solving at this order.
            let gap = gamma_s_mu_path(n) - gamma_s_path(n);
            out.push(TheoremReport {
                theorem: TheoremId::GapPositive,
                instance: format!("P_{n} (k={k})"),
                expected: format!("gap = {k}"),
                computed: format!(
                    "formula oracle: gap = {gap} (solver substituted above order {GAP_DIRECT_ORDER_CAP})"
                ),
                verdict: pass_fail(gap == k),
                counterexample: (gap != k).then(|| format!("P_{n}")),
            });
        }
        // The paths for k = 2 and 3 are claimed smallest; scan all shorter
        // paths with the closed forms.
        if (2..=3).contains(&k) {
            let smaller = (1..n).find(|&q| gamma_s_mu_path(q) - gamma_s_path(q) == k);
            out.push(TheoremReport {
                theorem: TheoremId::GapPositive,
                instance: format!("P_{n} minimality (k={k})"),
                expected: format!("no shorter path has gap {k}"),
                computed: match smaller {
                    Some(q) => format!("P_{q} also has gap {k}"),
                    None => "no shorter path has this gap".into(),
                },
                verdict: pass_fail(smaller.is_none()),
                counterexample: smaller.map(|q| format!("P_{q}")),
            });
        }
    }
    out
}

fn check_gap_nonnegative(k_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        let (g, spec) = construct_gap_nonnegative(k).unwrap();
        let value = gamma_s_value(&g);
        let value_mu = gamma_s_value(&mu_of(&g).0);
        let ok = value == spec.gamma_s && value_mu == spec.gamma_s_mu;
        out.push(TheoremReport {
            theorem: TheoremId::GapNonnegative,
            instance: format!("K_{{1,{}}} (k={k})", k + 3),
            expected: format!(
                "(gamma_s, gamma_s_mu) = ({}, {})",
                spec.gamma_s, spec.gamma_s_mu
            ),
            computed: format!("solver: ({value}, {value_mu})"),
            verdict: pass_fail(ok),
            counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
        });
    }
    out
}

fn check_t22(a_max: usize) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for a in 2..=a_max {
        for b in 3..=2 * a - 1 {
            let (g, spec) = construct_prescribed(a, b).unwrap();
            let value = gamma_s_value(&g);
            let value_mu = gamma_s_value(&mu_of(&g).0);
            let ok = value == spec.gamma_s && value_mu == spec.gamma_s_mu;
            out.push(TheoremReport {
                theorem: TheoremId::T22,
                instance: format!("prescribed(a={a}, b={b})"),
                expected: format!("(gamma_s, gamma_s_mu) = ({a}, {b})"),
                computed: format!("solver: ({value}, {value_mu})"),
                verdict: pass_fail(ok),
                counterexample: (!ok).then(|| format!("graph6={}", to_graph6(&g))),
            });
        }
    }
    out
}

/// Largest instance order the survey will solve.
pub const SURVEY_ORDER_CAP: usize = 14;

/// The open-question evidence gathered for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub graph6: String,
    pub order: usize,
    pub max_degree: usize,
    pub gamma: usize,
    pub gamma_s: usize,
    pub gamma_s_mu: usize,
}

impl SurveyRow {
    /// FW1 hypothesis: γ(G) ≥ 2 and γ_s(μ(G)) = γ(G) + 1.
    pub fn fw1_applicable(&self) -> bool {
        self.gamma >= 2 && self.gamma_s_mu == self.gamma + 1
    }

    /// FW1 conclusion γ_s(G) = γ(G) holds (vacuously when inapplicable).
    pub fn fw1_consistent(&self) -> bool {
        !self.fw1_applicable() || self.gamma_s == self.gamma
    }

    /// FW2: γ_s(μ(G)) ≤ (n − Δ) + 2.
    pub fn fw2_consistent(&self) -> bool {
        self.gamma_s_mu <= self.order - self.max_degree + 2
    }

    /// FW3 witness tag when γ_s(μ(G)) doubles γ_s(G) (or doubles plus one).
    pub fn fw3_witness(&self) -> Option<&'static str> {
        if self.gamma_s_mu == 2 * self.gamma_s {
            Some("2*gamma_s")
        } else if self.gamma_s_mu == 2 * self.gamma_s + 1 {
            Some("2*gamma_s+1")
        } else {
            None
        }
    }

    /// FW4: membership in the γ_s(μ(G)) = γ_s(G) equality class.
    pub fn fw4_member(&self) -> bool {
        self.gamma_s_mu == self.gamma_s
    }
}

/// Evaluates one instance for the survey, or explains why it is skipped.
pub fn survey_row(g: &Graph) -> Result<SurveyRow, String> {
    let n = g.order();
    if n > SURVEY_ORDER_CAP {
        return Err(format!("order {n} above survey cap {SURVEY_ORDER_CAP}"));
    }
    Ok(SurveyRow {
        graph6: to_graph6(g),
        order: n,
        max_degree: g.max_degree(),
        gamma: min_dominating(g).value,
        gamma_s: gamma_s_value(g),
        gamma_s_mu: gamma_s_value(&mu_of(g).0),
    })
}

/// Evaluates the open questions on each streamed instance:
///
/// - FW1: with a = γ(G), does a ≥ 2 and γ_s(μ(G)) = a+1 force γ_s(G) = a?
/// - FW2: does Δ(G) = n−k imply γ_s(μ(G)) ≤ k+2?
/// - FW3: instances with γ_s(μ(G)) = 2γ_s(G) or 2γ_s(G)+1 (witness hunt
///   for the open prescribed-value cases).
/// - FW4: membership in the γ_s(μ(G)) = γ_s(G) equality class.
///
/// FW1 and FW2 rows fail on a counterexample; FW3 and FW4 rows only
/// record evidence and always pass. Four reports per instance.
pub fn survey_conjectures<I>(instances: I) -> Vec<TheoremReport>
where
    I: IntoIterator<Item = Graph>,
{
    let mut out = Vec::new();
    for g in instances {
        let instance = to_graph6(&g);
        let row = match survey_row(&g) {
            Ok(row) => row,
            Err(reason) => {
                for id in [
                    TheoremId::FW1,
                    TheoremId::FW2,
                    TheoremId::FW3,
                    TheoremId::FW4,
                ] {
                    out.push(TheoremReport {
                        theorem: id,
                        instance: instance.clone(),
                        expected: String::new(),
                        computed: String::new(),
                        verdict: Verdict::Skipped {
                            reason: reason.clone(),
                        },
                        counterexample: None,
                    });
                }
                continue;
            }
        };
        let (a, b, c) = (row.gamma, row.gamma_s, row.gamma_s_mu);

        out.push(TheoremReport {
            theorem: TheoremId::FW1,
            instance: instance.clone(),
            expected: "gamma(G) >= 2 and gamma_s(mu(G)) = gamma(G)+1 imply gamma_s(G) = gamma(G)"
                .into(),
            computed: if row.fw1_applicable() {
                format!("hypothesis met: gamma={a} gamma_s={b} gamma_s_mu={c}")
            } else {
                format!("hypothesis not met: gamma={a} gamma_s={b} gamma_s_mu={c}")
            },
            verdict: pass_fail(row.fw1_consistent()),
            counterexample: (!row.fw1_consistent())
                .then(|| format!("graph6={instance} gamma={a} gamma_s={b} gamma_s_mu={c}")),
        });

        let k = row.order - row.max_degree;
        out.push(TheoremReport {
            theorem: TheoremId::FW2,
            instance: instance.clone(),
            expected: format!("Delta = n-{k} implies gamma_s(mu(G)) <= {}", k + 2),
            computed: format!("gamma_s(mu(G)) = {c}"),
            verdict: pass_fail(row.fw2_consistent()),
            counterexample: (!row.fw2_consistent())
                .then(|| format!("graph6={instance} Delta={} gamma_s_mu={c}", row.max_degree)),
        });

        out.push(TheoremReport {
            theorem: TheoremId::FW3,
            instance: instance.clone(),
            expected: "evidence only: witnesses for the open doubling cases".into(),
            computed: match row.fw3_witness() {
                Some(tag) => format!("witness: gamma_s(mu(G)) = {tag} = {c}"),
                None => format!("no witness: gamma_s={b} gamma_s_mu={c}"),
            },
            verdict: Verdict::Pass,
            counterexample: None,
        });

        out.push(TheoremReport {
            theorem: TheoremId::FW4,
            instance,
            expected: "evidence only: the gamma_s(mu(G)) = gamma_s(G) equality class".into(),
            computed: if row.fw4_member() {
                format!("member: gamma_s = gamma_s_mu = {b}")
            } else {
                format!("non-member: gamma_s={b} gamma_s_mu={c}")
            },
            verdict: Verdict::Pass,
            counterexample: None,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_complete;

    fn no_fails(reports: &[TheoremReport]) {
        for r in reports {
            assert!(
                !r.verdict.is_fail(),
                "{} failed on {}: expected {}, computed {}",
                r.theorem,
                r.instance,
                r.expected,
                r.computed
            );
        }
    }

    #[test]
    fn t1_small_range_passes() {
        let reports = run_theorem(
            TheoremId::T1,
            &RangeParams {
                n_max: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(reports.len(), 1 + 2 + 4 + 11);
        no_fails(&reports);
    }

    #[test]
    fn t2_detects_the_triangle_exception() {
        let reports = run_theorem(
            TheoremId::T2,
            &RangeParams {
                n_max: Some(7),
                ..Default::default()
            },
        )
        .unwrap();
        let fails: Vec<&TheoremReport> = reports.iter().filter(|r| r.verdict.is_fail()).collect();
        // C_3 is complete, so its secure domination number is 1, below the
        // ceiling formula's 2. Every other instance matches.
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].instance, "C_3");
        assert!(fails[0].counterexample.is_some());
    }

    #[test]
    fn t7_default_passes() {
        let reports = run_theorem(
            TheoremId::T7,
            &RangeParams {
                n_max: Some(5),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!reports.is_empty());
        no_fails(&reports);
    }

    #[test]
    fn t20_detects_the_c4_exception() {
        let reports = run_theorem(
            TheoremId::T20,
            &RangeParams {
                sum_max: Some(8),
                ..Default::default()
            },
        )
        .unwrap();
        let fails: Vec<&TheoremReport> = reports.iter().filter(|r| r.verdict.is_fail()).collect();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].instance, "mu(K_{2,2})");
        assert_eq!(fails[0].computed, "gamma_s = 3");
    }

    #[test]
    fn p13_passes_up_to_seven_and_fails_beyond() {
        let reports = run_theorem(
            TheoremId::P13,
            &RangeParams {
                n_max: Some(8),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(reports.len(), 3);
        assert!(!reports[0].verdict.is_fail());
        assert!(!reports[1].verdict.is_fail());
        // P_8 has inclusion-minimal isolate-free sets with three
        // consecutive vertices, e.g. {0,1,4,5,6}.
        assert!(reports[2].verdict.is_fail());
        assert!(reports[2]
            .counterexample
            .as_deref()
            .unwrap()
            .contains("{0,1,4,5,6}"));
    }

    #[test]
    fn gap_checks_pass_and_log_substitution() {
        let reports = run_theorem(
            TheoremId::GapPositive,
            &RangeParams {
                k_max: Some(5),
                override_caps: true,
                ..Default::default()
            },
        )
        .unwrap();
        no_fails(&reports);
        assert!(reports
            .iter()
            .any(|r| r.computed.contains("solver substituted")));

        let reports = run_theorem(
            TheoremId::GapNonnegative,
            &RangeParams {
                k_max: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        no_fails(&reports);
    }

    #[test]
    fn range_guards() {
        assert_eq!(
            run_theorem(
                TheoremId::T2,
                &RangeParams {
                    n_max: Some(15),
                    ..Default::default()
                }
            ),
            Err(VerifyError::RangeNeedsOverride {
                theorem: TheoremId::T2,
                requested: 15,
                default: 14
            })
        );
        assert_eq!(
            run_theorem(
                TheoremId::T2,
                &RangeParams {
                    n_max: Some(19),
                    override_caps: true,
                    ..Default::default()
                }
            ),
            Err(VerifyError::RangeExceedsCap {
                theorem: TheoremId::T2,
                requested: 19,
                cap: 18
            })
        );
        assert_eq!(
            run_theorem(TheoremId::FW1, &RangeParams::default()),
            Err(VerifyError::NotRunnable {
                theorem: TheoremId::FW1
            })
        );
    }

    #[test]
    fn survey_reports_known_evidence() {
        let k4 = make_complete(4).unwrap();
        let star = crate::families::make_star(3).unwrap();
        let reports = survey_conjectures([k4, star]);
        assert_eq!(reports.len(), 8);
        // K_4: gamma_s = 1, gamma_s_mu = 3 = 2*1+1 is an FW3 witness.
        let fw3 = &reports[2];
        assert_eq!(fw3.theorem, TheoremId::FW3);
        assert!(fw3.computed.contains("2*gamma_s+1"));
        // K_{1,3} is in the FW4 equality class.
        let fw4 = &reports[7];
        assert_eq!(fw4.theorem, TheoremId::FW4);
        assert!(fw4.computed.starts_with("member"));
        // No fails among these instances.
        no_fails(&reports);
    }

    #[test]
    fn survey_skips_oversized_instances() {
        let big = Graph::new(20).unwrap();
        let reports = survey_conjectures([big]);
        assert_eq!(reports.len(), 4);
        assert!(reports
            .iter()
            .all(|r| matches!(r.verdict, Verdict::Skipped { .. })));
    }

    #[test]
    fn theorem_id_round_trips_through_strings() {
        for id in TheoremId::RUNNABLE {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(
            "gap-positive".parse::<TheoremId>().unwrap(),
            TheoremId::GapPositive
        );
        assert_eq!(
            "gap-nonneg".parse::<TheoremId>().unwrap(),
            TheoremId::GapNonnegative
        );
        assert!("T99".parse::<TheoremId>().is_err());
    }
}
