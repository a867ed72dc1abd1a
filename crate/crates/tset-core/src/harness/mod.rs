//! Exhaustive enumeration of small t-sets and clause-by-clause machine
//! verification of the claim registry.
//!
//! Every transitive relation on a labeled carrier {e0, …, e(n-1)} is
//! enumerated exactly once, in ascending order of the n²-bit relation matrix
//! read row-major (the (0,0) entry is the most significant bit). A sweep
//! evaluates one registry entry on every structure and reports each
//! violation as a re-loadable witness; reports are deterministic byte for
//! byte given (theorem, n, topologies).

pub mod registry;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relation::{FiniteTSet, RelationDoc};
use crate::topology::{Topology, TopologyKind};
pub use registry::{find_theorem, theorems, ClaimKind, Theorem};

/// Largest supported enumeration size. 2^(5²) raw matrices is still fine;
/// beyond that the space stops being sweepable in reasonable time.
pub const MAX_ENUMERATION: usize = 5;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum HarnessError {
    #[error("carrier size {0} is out of range (1..={MAX_ENUMERATION})")]
    SizeOutOfRange(usize),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("theorem {0} is topology-dependent: pass at least one topology")]
    MissingTopology(String),
    #[error("theorem {0} does not take a topology")]
    UnexpectedTopology(String),
}

/// Relation matrices as integers: bit (i,j) sits at significance
/// 2^(n²-1-(i·n+j)), so ascending integers are ascending row-major matrices.
pub fn code_of(t: &FiniteTSet) -> u32 {
    let n = t.carrier_size();
    let mut code = 0u32;
    for i in 0..n {
        for j in 0..n {
            if t.related(i, j) {
                code |= 1 << (n * n - 1 - (i * n + j));
            }
        }
    }
    code
}

/// Rebuilds the t-set for an enumeration code, carrier labeled e0..e(n-1).
pub fn tset_from_code(n: usize, code: u32) -> FiniteTSet {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut succ = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if code >> (n * n - 1 - (i * n + j)) & 1 == 1 {
                succ[i] |= 1 << j;
            }
        }
    }
    FiniteTSet::from_masks(labels, succ)
}

/// Enumeration codes of every transitive relation on n elements, ascending.
///
/// Small sizes filter the full 2^(n²) space; n = 5 walks matrices row by
/// row and prunes prefixes that already violate transitivity (a violation
/// among placed rows can never be repaired by later rows).
pub fn enumerate_codes(n: usize) -> Result<Vec<u32>, HarnessError> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(HarnessError::SizeOutOfRange(n));
    }
    if n <= 4 {
        Ok(filter_codes(n))
    } else {
        Ok(pruned_codes(n))
    }
}

/// Ordered stream of every t-set of the given carrier size.
pub fn enumerate_tsets(
    n: usize,
) -> Result<impl Iterator<Item = FiniteTSet>, HarnessError> {
    let codes = enumerate_codes(n)?;
    Ok(codes.into_iter().map(move |c| tset_from_code(n, c)))
}

fn transitive(succ: &[u32], n: usize) -> bool {
    for i in 0..n {
        let m = succ[i];
        for j in 0..n {
            if m >> j & 1 == 1 && succ[j] & !m != 0 {
                return false;
            }
        }
    }
    true
}

fn filter_codes(n: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut succ = vec![0u32; n];
    for code in 0..1u64 << (n * n) {
        let code = code as u32;
        for i in 0..n {
            let mut row = 0u32;
            for j in 0..n {
                row |= (code >> (n * n - 1 - (i * n + j)) & 1) << j;
            }
            succ[i] = row;
        }
        if transitive(&succ, n) {
            out.push(code);
        }
    }
    out
}

/// Row-by-row enumeration with prefix pruning, same order as the filter.
fn pruned_codes(n: usize) -> Vec<u32> {
    // Row values are iterated in matrix order: the *numeral* v corresponds
    // to the mask whose column-0 bit is v's most significant bit.
    let row_mask: Vec<u32> = (0..1u32 << n)
        .map(|v| {
            let mut m = 0u32;
            for j in 0..n {
                m |= (v >> (n - 1 - j) & 1) << j;
            }
            m
        })
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<u32> = Vec::with_capacity(n);
    let mut numerals: Vec<u32> = Vec::with_capacity(n);

    fn ok_so_far(rows: &[u32]) -> bool {
        let t = rows.len() - 1;
        let new = rows[t];
        // i = t: every fixed j related from t must have succ(j) ⊆ succ(t).
        for (j, &rj) in rows.iter().enumerate() {
            if new >> j & 1 == 1 && rj & !new != 0 {
                return false;
            }
        }
        // j = t: every fixed i related to t must absorb succ(t).
        for &ri in &rows[..t] {
            if ri >> t & 1 == 1 && new & !ri != 0 {
                return false;
            }
        }
        true
    }

    fn go(
        n: usize,
        row_mask: &[u32],
        rows: &mut Vec<u32>,
        numerals: &mut Vec<u32>,
        out: &mut Vec<u32>,
    ) {
        if rows.len() == n {
            let mut code = 0u32;
            for (i, &v) in numerals.iter().enumerate() {
                code |= v << (n * (n - 1 - i));
            }
            out.push(code);
            return;
        }
        for v in 0..1u32 << n {
            rows.push(row_mask[v as usize]);
            numerals.push(v);
            if ok_so_far(rows) {
                go(n, row_mask, rows, numerals, out);
            }
            rows.pop();
            numerals.pop();
        }
    }

    go(n, &row_mask, &mut rows, &mut numerals, &mut out);
    out
}

/// Clause truth for one structure, or not-applicable if the theorem's
/// precondition excludes it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClauseVector {
    NotApplicable,
    Clauses(Vec<bool>),
}

/// Evaluates one registry entry on one structure.
pub fn clause_vector(
    t: &FiniteTSet,
    theorem_id: &str,
    topo: Option<&Topology>,
) -> Result<ClauseVector, HarnessError> {
    let th = find_theorem(theorem_id)
        .ok_or_else(|| HarnessError::UnknownTheorem(theorem_id.to_string()))?;
    if th.topology_dependent && topo.is_none() {
        return Err(HarnessError::MissingTopology(th.id.to_string()));
    }
    if !th.topology_dependent && topo.is_some() {
        return Err(HarnessError::UnexpectedTopology(th.id.to_string()));
    }
    if let Some(pre) = th.precondition {
        if !(pre.check)(t) {
            return Ok(ClauseVector::NotApplicable);
        }
    }
    Ok(ClauseVector::Clauses(th.evaluate(t, topo).clauses))
}

/// One structure on which a registry entry's clauses came apart.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    /// Re-loadable serialization of the offending structure.
    pub tset: RelationDoc,
    pub clauses: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub topology: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_subsets: Option<Vec<Vec<String>>>,
}

/// Result of sweeping one registry entry over every structure of one size.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub theorem: String,
    pub n: usize,
    pub checked: u64,
    pub precondition_passing: u64,
    pub violations: Vec<Violation>,
    pub decision_flags: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub unverifiable: Vec<String>,
}

impl SweepReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Evaluates a registry entry on every enumerated structure of size `n`.
///
/// `topologies` must be nonempty exactly when the theorem is
/// topology-dependent; each listed construction is checked per structure.
/// Work is partitioned across the rayon pool by enumeration index and
/// violations are reassembled in enumeration order, so identical inputs
/// produce byte-identical reports.
pub fn sweep(
    theorem_id: &str,
    n: usize,
    topologies: &[TopologyKind],
) -> Result<SweepReport, HarnessError> {
    let th = find_theorem(theorem_id)
        .ok_or_else(|| HarnessError::UnknownTheorem(theorem_id.to_string()))?;
    if th.topology_dependent && topologies.is_empty() {
        return Err(HarnessError::MissingTopology(th.id.to_string()));
    }
    if !th.topology_dependent && !topologies.is_empty() {
        return Err(HarnessError::UnexpectedTopology(th.id.to_string()));
    }
    let codes = enumerate_codes(n)?;
    let per_structure: Vec<(bool, Vec<Violation>)> = codes
        .par_iter()
        .map(|&code| {
            let t = tset_from_code(n, code);
            if let Some(pre) = th.precondition {
                if !(pre.check)(&t) {
                    return (false, Vec::new());
                }
            }
            let mut found = Vec::new();
            if th.topology_dependent {
                for kind in topologies {
                    let topo = kind.build(&t);
                    let ev = th.evaluate(&t, Some(&topo));
                    if th.violates(&ev.clauses) {
                        found.push(violation(&t, ev, Some(kind.name())));
                    }
                }
            } else {
                let ev = th.evaluate(&t, None);
                if th.violates(&ev.clauses) {
                    found.push(violation(&t, ev, None));
                }
            }
            (true, found)
        })
        .collect();

    let mut violations = Vec::new();
    let mut passing = 0u64;
    for (passed, mut vs) in per_structure {
        if passed {
            passing += 1;
        }
        violations.append(&mut vs);
    }
    let mut decision_flags: Vec<String> =
        th.decision_flags.iter().map(|s| s.to_string()).collect();
    if topologies.contains(&TopologyKind::ScottStar) {
        decision_flags.push("scott_star_construction".to_string());
    }
    Ok(SweepReport {
        theorem: th.id.to_string(),
        n,
        checked: codes.len() as u64,
        precondition_passing: passing,
        violations,
        decision_flags,
        unverifiable: th.unverifiable.iter().map(|s| s.to_string()).collect(),
    })
}

fn violation(t: &FiniteTSet, ev: registry::Evaluation, topology: Option<&str>) -> Violation {
    let witness_subsets = if ev.witnesses.is_empty() {
        None
    } else {
        Some(
            ev.witnesses
                .iter()
                .map(|&m| t.subset_labels(&t.subset(m)))
                .collect(),
        )
    };
    Violation {
        tset: t.to_doc(),
        clauses: ev.clauses,
        topology: topology.map(str::to_string),
        witness_subsets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_codes(1).unwrap().len(), 2);
        assert_eq!(enumerate_codes(2).unwrap().len(), 13);
        assert_eq!(enumerate_codes(3).unwrap().len(), 171);
    }

    #[test]
    fn size_bounds() {
        assert_eq!(enumerate_codes(0).unwrap_err(), HarnessError::SizeOutOfRange(0));
        assert_eq!(enumerate_codes(6).unwrap_err(), HarnessError::SizeOutOfRange(6));
    }

    #[test]
    fn first_structure_is_the_empty_relation() {
        let first = enumerate_tsets(3).unwrap().next().unwrap();
        assert_eq!(first.pairs(), vec![]);
        assert_eq!(first.labels(), &["e0", "e1", "e2"]);
    }

    #[test]
    fn codes_round_trip() {
        for code in enumerate_codes(3).unwrap() {
            let t = tset_from_code(3, code);
            assert_eq!(code_of(&t), code);
        }
    }

    #[test]
    fn pruned_enumeration_matches_filter() {
        for n in 1..=4 {
            assert_eq!(super::pruned_codes(n), super::filter_codes(n), "n={n}");
        }
    }

    #[test]
    fn clause_vector_examples() {
        let e51 = crate::fixtures::e51();
        assert_eq!(
            clause_vector(&e51, "T3.1", None).unwrap(),
            ClauseVector::Clauses(vec![false, false, false, false])
        );
        let ch = crate::completeness::reflexive_chain(3);
        assert_eq!(
            clause_vector(&ch, "T4.2", None).unwrap(),
            ClauseVector::Clauses(vec![true; 5])
        );
        // e33 is not a domain, so the domain-scoped equivalence passes it by.
        let e33 = crate::fixtures::e33();
        assert_eq!(
            clause_vector(&e33, "T3.2", None).unwrap(),
            ClauseVector::NotApplicable
        );
    }

    #[test]
    fn clause_vector_topology_arity_is_checked() {
        let t = crate::fixtures::e32();
        let topo = crate::topology::alexandroff(&t);
        assert_eq!(
            clause_vector(&t, "T6.1", None).unwrap_err(),
            HarnessError::MissingTopology("T6.1".into())
        );
        assert_eq!(
            clause_vector(&t, "T3.1", Some(&topo)).unwrap_err(),
            HarnessError::UnexpectedTopology("T3.1".into())
        );
        assert_eq!(
            clause_vector(&t, "nope", None).unwrap_err(),
            HarnessError::UnknownTheorem("nope".into())
        );
    }

    #[test]
    fn sweep_t31_n3_is_clean() {
        let r = sweep("T3.1", 3, &[]).unwrap();
        assert_eq!(r.checked, 171);
        assert_eq!(r.precondition_passing, 171);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn sweep_r32_counts_structures() {
        let r = sweep("R3.2", 3, &[]).unwrap();
        assert_eq!(r.checked, 171);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn false_claim_sweep_finds_the_empty_relation_first() {
        let r = sweep("FALSE_CLAIM_ALL_BC", 2, &[]).unwrap();
        assert!(!r.violations.is_empty());
        // First witness in enumeration order is the empty relation on {e0,e1}.
        assert_eq!(r.violations[0].tset.relation, vec![]);
        assert_eq!(r.violations[0].clauses, vec![true, false]);
    }

    #[test]
    fn scott_star_sweeps_carry_the_construction_flag() {
        let r = sweep("T6.3", 2, &[TopologyKind::ScottStar]).unwrap();
        assert!(r.decision_flags.iter().any(|f| f == "scott_star_construction"));
        let r2 = sweep("T6.3", 2, &[TopologyKind::Alexandroff]).unwrap();
        assert!(!r2.decision_flags.iter().any(|f| f == "scott_star_construction"));
    }

    #[test]
    fn t65a_is_absent_but_reported_unverifiable() {
        assert!(find_theorem("T6.5A").is_none());
        let r = sweep("T6.5B", 2, &[TopologyKind::Alexandroff]).unwrap();
        assert!(r.unverifiable.iter().any(|u| u.contains("T6.5A")));
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = sweep("L3.1", 3, &[]).unwrap().to_json_string();
        let b = sweep("L3.1", 3, &[]).unwrap().to_json_string();
        assert_eq!(a, b);
    }
}
