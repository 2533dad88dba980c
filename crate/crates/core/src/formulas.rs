//! Closed-form secure-domination values and bounds.
//!
//! These are the published values for the standard families, implemented
//! as plain arithmetic. They double as fast paths and as expected values
//! for the verification harness; the harness is what certifies them
//! against the solvers over enumerable ranges.
//!
//! Two closed forms have known exceptional points, documented on the
//! functions and reported by the harness: the cycle formula does not hold
//! at n = 3 (C_3 is complete, so its value is 1), and the Mycielskian
//! bipartite table does not hold at (2, 2) (K_{2,2} is the 4-cycle, whose
//! Mycielskian has a 3-guard secure dominating set).

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::domination::{is_secure, s_isolates, DominationError};
use crate::graph::Graph;
use crate::solver::min_dominating;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("bipartite parts must satisfy 1 <= m <= n, got m={m}, n={n}")]
    InvalidBipartiteParts { m: usize, n: usize },
    #[error("cycle formulas require n >= 3, got {n}")]
    CycleTooShort { n: usize },
    #[error("family parameter must be at least 1")]
    OrderZero,
}

/// γ_s(P_n) = ⌈3n/7⌉.
///
/// Also the published cycle value for n ≥ 4; γ_s(C_3) is 1, not ⌈9/7⌉,
/// since C_3 is complete.
pub fn gamma_s_path(n: usize) -> usize {
    debug_assert!(n >= 1);
    (3 * n).div_ceil(7)
}

/// γ_s(μ(P_n)), with n = 4k+r: 2k+1 for r = 0, 2k+2 for r = 1, and 2k+3
/// for r ∈ {2, 3}.
///
/// Also the value for μ(C_n), n ≥ 3. At n = 1 the case formula yields 2,
/// matching the disconnected μ(K_1).
pub fn gamma_s_mu_path(n: usize) -> usize {
    debug_assert!(n >= 1);
    let (k, r) = (n / 4, n % 4);
    match r {
        0 => 2 * k + 1,
        1 => 2 * k + 2,
        _ => 2 * k + 3,
    }
}

/// γ_s(K_{m,n}) for 1 ≤ m ≤ n: n when m = 1, then 2, 3, and 4 for m ≥ 4.
pub fn gamma_s_complete_bipartite(m: usize, n: usize) -> Result<usize, FormulaError> {
    if m < 1 || m > n {
        return Err(FormulaError::InvalidBipartiteParts { m, n });
    }
    Ok(match m {
        1 => n,
        2 => 2,
        3 => 3,
        _ => 4,
    })
}

/// γ_s(μ(K_{m,n})) for 1 ≤ m ≤ n: 3 when m = 1, 4 for m ∈ {2, 3}, and 5
/// for m ≥ 4.
///
/// The exceptional point (2, 2) is K_{2,2} = C_4: there the true value is
/// 3 (the diagonal pair plus the cone vertex suffices), not the table's 4.
/// This function returns the table value; the harness reports the
/// counterexample.
pub fn gamma_s_mu_complete_bipartite(m: usize, n: usize) -> Result<usize, FormulaError> {
    if m < 1 || m > n {
        return Err(FormulaError::InvalidBipartiteParts { m, n });
    }
    Ok(match m {
        1 => 3,
        2 | 3 => 4,
        _ => 5,
    })
}

/// The doubling bound 2γ(g) + 1 on γ_s(μ(g)).
pub fn bound_two_gamma_plus_one(g: &Graph) -> usize {
    2 * min_dominating(g).value + 1
}

/// The isolate bound |s| + |I_s| + 1 on γ_s(μ(g)), valid for any secure
/// dominating set s of g. Rejects sets that are not secure dominating.
pub fn bound_isolates(g: &Graph, s: VertexSet) -> Result<usize, DominationError> {
    if !is_secure(g, s) {
        return Err(DominationError::NotSecureDominating);
    }
    Ok(s.cardinality() + s_isolates(g, s).cardinality() + 1)
}

/// γ(μ(g)) predicted from γ(g): the Mycielskian raises the domination
/// number by exactly one.
pub fn gamma_mu_expected(g: &Graph) -> usize {
    min_dominating(g).value + 1
}

/// Family tag for a closed-form value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    MuPath { n: usize },
    MuCycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    MuCompleteBipartite { m: usize, n: usize },
}

/// A closed-form γ_s value for a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyValue {
    pub family: Family,
    pub value: usize,
}

impl FamilyValue {
    /// Evaluates the published closed form for the given family member.
    pub fn compute(family: Family) -> Result<FamilyValue, FormulaError> {
        let value = match family {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::MuPath { n }
            | Family::MuCycle { n }
                if n == 0 =>
            {
                return Err(FormulaError::OrderZero)
            }
            Family::Complete { n: 0 } => return Err(FormulaError::OrderZero),
            Family::Cycle { n } | Family::MuCycle { n } if n < 3 => {
                return Err(FormulaError::CycleTooShort { n })
            }
            Family::Path { n } | Family::Cycle { n } => gamma_s_path(n),
            Family::MuPath { n } | Family::MuCycle { n } => gamma_s_mu_path(n),
            Family::Complete { .. } => 1,
            Family::CompleteBipartite { m, n } => gamma_s_complete_bipartite(m, n)?,
            Family::MuCompleteBipartite { m, n } => gamma_s_mu_complete_bipartite(m, n)?,
        };
        Ok(FamilyValue { family, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_path;

    #[test]
    fn path_formula() {
        assert_eq!(gamma_s_path(7), 3);
        assert_eq!(gamma_s_path(1), 1);
        // 3*30 = 90 = 12*7 + 6, so the ceiling is 13.
        assert_eq!(gamma_s_path(30), 13);
    }

    #[test]
    fn mu_path_formula() {
        assert_eq!(gamma_s_mu_path(7), 5);
        assert_eq!(gamma_s_mu_path(6), 5);
        assert_eq!(gamma_s_mu_path(2), 3);
        assert_eq!(gamma_s_mu_path(1), 2);
        assert_eq!(gamma_s_mu_path(8), 5);
        assert_eq!(gamma_s_mu_path(12), 7);
    }

    #[test]
    fn bipartite_tables() {
        assert_eq!(gamma_s_complete_bipartite(1, 6), Ok(6));
        assert_eq!(gamma_s_complete_bipartite(2, 9), Ok(2));
        assert_eq!(gamma_s_complete_bipartite(5, 5), Ok(4));
        assert_eq!(gamma_s_mu_complete_bipartite(1, 9), Ok(3));
        assert_eq!(gamma_s_mu_complete_bipartite(3, 4), Ok(4));
        assert_eq!(gamma_s_mu_complete_bipartite(4, 4), Ok(5));
        assert_eq!(
            gamma_s_complete_bipartite(3, 2),
            Err(FormulaError::InvalidBipartiteParts { m: 3, n: 2 })
        );
        assert_eq!(
            gamma_s_mu_complete_bipartite(0, 2),
            Err(FormulaError::InvalidBipartiteParts { m: 0, n: 2 })
        );
    }

    #[test]
    fn bounds() {
        let p6 = make_path(6).unwrap();
        assert_eq!(bound_two_gamma_plus_one(&p6), 5);
        let p7 = make_path(7).unwrap();
        assert_eq!(bound_two_gamma_plus_one(&p7), 7);

        let paired: VertexSet = [1, 2, 4, 5].into_iter().collect();
        let spread: VertexSet = [1, 3, 5].into_iter().collect();
        assert_eq!(bound_isolates(&p7, spread), Ok(7));
        assert_eq!(bound_isolates(&p7, paired), Ok(5));
        let single: VertexSet = [0].into_iter().collect();
        let k2 = crate::families::make_complete(2).unwrap();
        assert_eq!(bound_isolates(&k2, single), Ok(3));
        assert_eq!(
            bound_isolates(&p7, single),
            Err(DominationError::NotSecureDominating)
        );
    }

    #[test]
    fn gamma_shift() {
        assert_eq!(gamma_mu_expected(&make_path(6).unwrap()), 3);
        assert_eq!(gamma_mu_expected(&Graph::new(1).unwrap()), 2);
        assert_eq!(
            gamma_mu_expected(&crate::families::make_cycle(5).unwrap()),
            3
        );
    }

    #[test]
    fn family_values() {
        let fv = FamilyValue::compute(Family::MuPath { n: 7 }).unwrap();
        assert_eq!(fv.value, 5);
        assert_eq!(
            FamilyValue::compute(Family::Cycle { n: 2 }),
            Err(FormulaError::CycleTooShort { n: 2 })
        );
        assert_eq!(
            FamilyValue::compute(Family::Complete { n: 9 })
                .unwrap()
                .value,
            1
        );
    }
}
