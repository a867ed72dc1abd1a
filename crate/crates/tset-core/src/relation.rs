//! Finite t-sets: a nonempty finite carrier with a transitive binary relation.
//!
//! Nothing beyond transitivity is assumed — no reflexivity, symmetry, or
//! antisymmetry. The relation is stored as per-element successor bit masks,
//! which makes the bound operators in [`crate::bounds`] single AND/OR folds.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{mask, Subset, MAX_CARRIER};

/// A finite carrier of labeled elements with a transitive relation on it.
///
/// Construction goes through [`FiniteTSet::build`] (rejects non-transitive
/// input) or [`FiniteTSet::transitive_closure`] (closes it instead), so a
/// value of this type is always actually transitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteTSet {
    labels: Vec<String>,
    /// succ[i] = bit set of j with i ≼ j.
    succ: Vec<u32>,
    /// pred[j] = bit set of i with i ≼ j (transpose of `succ`).
    pred: Vec<u32>,
}

/// Errors from building a t-set out of labels and pairs.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum BuildError {
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("relation pair mentions unknown label {0:?}")]
    UnknownLabel(String),
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("carrier has {0} elements; at most {MAX_CARRIER} are supported")]
    CarrierTooLarge(usize),
    #[error(
        "relation is not transitive: {x:?} ≼ {y:?} and {y:?} ≼ {z:?} but not {x:?} ≼ {z:?}"
    )]
    NotTransitive { x: String, y: String, z: String },
}

/// Errors from reading the JSON relation document format.
#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed relation document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Wire form of a t-set: element labels plus related pairs.
///
/// Unknown top-level keys are rejected. Canonical order is labels as given,
/// pairs sorted by (source index, target index).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub elements: Vec<String>,
    pub relation: Vec<(String, String)>,
}

/// Truth of each relation axiom plus the derived class memberships.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub reflexive: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub interpolative: bool,
    pub abstract_base: bool,
    pub poset: bool,
    pub preorder: bool,
    pub equivalence: bool,
    pub continuous_information_system: bool,
}

impl ClassificationReport {
    /// Stable (name, value) listing, in display order.
    pub fn entries(&self) -> [(&'static str, bool); 9] {
        [
            ("reflexive", self.reflexive),
            ("symmetric", self.symmetric),
            ("antisymmetric", self.antisymmetric),
            ("interpolative", self.interpolative),
            ("abstract_base", self.abstract_base),
            ("poset", self.poset),
            ("preorder", self.preorder),
            ("equivalence", self.equivalence),
            ("continuous_information_system", self.continuous_information_system),
        ]
    }
}

impl FiniteTSet {
    /// Builds a t-set, rejecting input whose relation is not transitive.
    pub fn build(labels: &[&str], pairs: &[(&str, &str)]) -> Result<Self, BuildError> {
        let (labels, succ) = assemble(labels, pairs)?;
        let n = labels.len();
        if let Some((i, j, k)) = transitivity_gap(&succ, n) {
            return Err(BuildError::NotTransitive {
                x: labels[i].clone(),
                y: labels[j].clone(),
                z: labels[k].clone(),
            });
        }
        Ok(Self::from_parts(labels, succ))
    }

    /// Builds a t-set from arbitrary pairs by taking the transitive closure.
    pub fn transitive_closure(labels: &[&str], pairs: &[(&str, &str)]) -> Result<Self, BuildError> {
        let (labels, mut succ) = assemble(labels, pairs)?;
        close(&mut succ);
        Ok(Self::from_parts(labels, succ))
    }

    /// Rebuilds directly from successor masks (already transitive).
    pub(crate) fn from_masks(labels: Vec<String>, succ: Vec<u32>) -> Self {
        debug_assert!(transitivity_gap(&succ, labels.len()).is_none());
        Self::from_parts(labels, succ)
    }

    fn from_parts(labels: Vec<String>, succ: Vec<u32>) -> Self {
        let n = labels.len();
        let mut pred = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if succ[i] >> j & 1 == 1 {
                    pred[j] |= 1 << i;
                }
            }
        }
        FiniteTSet { labels, succ, pred }
    }

    pub fn carrier_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    /// Index of the element with this label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Whether element `i` is related to element `j` (i ≼ j).
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.succ[i] >> j & 1 == 1
    }

    /// Successors of `i` as a bit mask: { j : i ≼ j }.
    pub(crate) fn succ_mask(&self, i: usize) -> u32 {
        self.succ[i]
    }

    /// Predecessors of `j` as a bit mask: { i : i ≼ j }.
    pub(crate) fn pred_mask(&self, j: usize) -> u32 {
        self.pred[j]
    }

    pub(crate) fn full_mask(&self) -> u32 {
        mask(self.carrier_size())
    }

    /// The whole carrier as a subset.
    pub fn full_subset(&self) -> Subset {
        Subset::full(self.carrier_size())
    }

    /// Wraps a raw bit mask in a subset of this carrier.
    pub(crate) fn subset(&self, bits: u32) -> Subset {
        Subset::from_bits(self.carrier_size(), bits)
    }

    /// Builds a subset of this carrier from element labels.
    pub fn subset_from_labels(&self, labels: &[&str]) -> Result<Subset, BuildError> {
        let mut bits = 0u32;
        for l in labels {
            let i = self
                .index_of(l)
                .ok_or_else(|| BuildError::UnknownLabel((*l).to_string()))?;
            bits |= 1 << i;
        }
        Ok(self.subset(bits))
    }

    /// Labels of a subset's elements, sorted lexicographically.
    pub fn subset_labels(&self, s: &Subset) -> Vec<String> {
        let mut out: Vec<String> = s.iter().map(|i| self.labels[i].clone()).collect();
        out.sort();
        out
    }

    /// The relation as (source, target) index pairs in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.carrier_size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.related(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Canonical wire form of this t-set.
    pub fn to_doc(&self) -> RelationDoc {
        RelationDoc {
            elements: self.labels.clone(),
            relation: self
                .pairs()
                .into_iter()
                .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
                .collect(),
        }
    }

    /// Canonical JSON serialization (deterministic byte-for-byte).
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("relation doc serializes")
    }

    /// Reads the JSON document format, rejecting non-transitive relations.
    pub fn from_json_str(s: &str) -> Result<Self, DocError> {
        let doc: RelationDoc = serde_json::from_str(s)?;
        Ok(Self::from_doc(&doc)?)
    }

    /// Reads the JSON document format, closing the relation transitively.
    pub fn from_json_str_with_closure(s: &str) -> Result<Self, DocError> {
        let doc: RelationDoc = serde_json::from_str(s)?;
        let labels: Vec<&str> = doc.elements.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> =
            doc.relation.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Ok(Self::transitive_closure(&labels, &pairs)?)
    }

    pub fn from_doc(doc: &RelationDoc) -> Result<Self, BuildError> {
        let labels: Vec<&str> = doc.elements.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> =
            doc.relation.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Self::build(&labels, &pairs)
    }

    /// Truth of each axiom plus derived class memberships.
    pub fn classify(&self) -> ClassificationReport {
        let n = self.carrier_size();
        let reflexive = (0..n).all(|i| self.related(i, i));
        let symmetric = (0..n).all(|i| (0..n).all(|j| self.related(i, j) == self.related(j, i)));
        let antisymmetric =
            (0..n).all(|i| (0..n).all(|j| i == j || !(self.related(i, j) && self.related(j, i))));
        // Interpolative: every x ≼ z admits y with x ≼ y ≼ z.
        let interpolative = (0..n).all(|x| {
            (0..n).all(|z| !self.related(x, z) || self.succ[x] & self.pred[z] != 0)
        });
        let abstract_base = self.is_abstract_base();
        ClassificationReport {
            reflexive,
            symmetric,
            antisymmetric,
            interpolative,
            abstract_base,
            poset: reflexive && antisymmetric,
            preorder: reflexive,
            equivalence: reflexive && symmetric,
            continuous_information_system: interpolative,
        }
    }

    /// Abstract-base check: every nonempty set of predecessors of `x`
    /// interpolates through a single element below `x`.
    ///
    /// Testing the full predecessor set pred(x) suffices: a witness for
    /// pred(x) bounds every smaller predecessor set as well. The all-subsets
    /// route is kept in `oracles` and checked equivalent exhaustively.
    fn is_abstract_base(&self) -> bool {
        let n = self.carrier_size();
        (0..n).all(|x| {
            let p = self.pred[x];
            if p == 0 {
                return true;
            }
            // Need z with y ≼ z for every predecessor y, and z ≼ x.
            let mut ub = self.full_mask();
            for y in 0..n {
                if p >> y & 1 == 1 {
                    ub &= self.succ[y];
                }
            }
            ub & p != 0
        })
    }
}

/// Resolves labels and pairs into successor masks, without transitivity checks.
fn assemble(labels: &[&str], pairs: &[(&str, &str)]) -> Result<(Vec<String>, Vec<u32>), BuildError> {
    if labels.is_empty() {
        return Err(BuildError::EmptyCarrier);
    }
    if labels.len() > MAX_CARRIER {
        return Err(BuildError::CarrierTooLarge(labels.len()));
    }
    let mut owned: Vec<String> = Vec::with_capacity(labels.len());
    for l in labels {
        if owned.iter().any(|o| o == l) {
            return Err(BuildError::DuplicateLabel((*l).to_string()));
        }
        owned.push((*l).to_string());
    }
    let index = |l: &str| owned.iter().position(|o| o == l);
    let mut succ = vec![0u32; owned.len()];
    for (a, b) in pairs {
        let i = index(a).ok_or_else(|| BuildError::UnknownLabel((*a).to_string()))?;
        let j = index(b).ok_or_else(|| BuildError::UnknownLabel((*b).to_string()))?;
        succ[i] |= 1 << j;
    }
    Ok((owned, succ))
}

/// First (i, j, k) with i ≼ j ≼ k but not i ≼ k, if any.
fn transitivity_gap(succ: &[u32], n: usize) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            if succ[i] >> j & 1 == 1 {
                let missing = succ[j] & !succ[i];
                if missing != 0 {
                    let k = missing.trailing_zeros() as usize;
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// In-place Warshall closure over successor masks.
fn close(succ: &mut [u32]) {
    let n = succ.len();
    for k in 0..n {
        for i in 0..n {
            if succ[i] >> k & 1 == 1 {
                succ[i] |= succ[k];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e32() -> FiniteTSet {
        FiniteTSet::build(
            &["a", "b", "x"],
            &[("a", "a"), ("b", "b"), ("a", "x"), ("b", "x")],
        )
        .unwrap()
    }

    #[test]
    fn build_accepts_transitive_input() {
        let t = e32();
        assert_eq!(t.carrier_size(), 3);
        assert!(t.related(0, 2) && !t.related(2, 0));
    }

    #[test]
    fn build_rejects_duplicate_labels() {
        assert_eq!(
            FiniteTSet::build(&["a", "a"], &[]).unwrap_err(),
            BuildError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn build_rejects_unknown_labels() {
        assert_eq!(
            FiniteTSet::build(&["a"], &[("a", "q")]).unwrap_err(),
            BuildError::UnknownLabel("q".into())
        );
    }

    #[test]
    fn build_rejects_empty_carrier() {
        assert_eq!(FiniteTSet::build(&[], &[]).unwrap_err(), BuildError::EmptyCarrier);
    }

    #[test]
    fn build_rejects_oversized_carrier() {
        let labels: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        assert_eq!(
            FiniteTSet::build(&refs, &[]).unwrap_err(),
            BuildError::CarrierTooLarge(17)
        );
    }

    #[test]
    fn build_names_transitivity_witness() {
        let err = FiniteTSet::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap_err();
        assert_eq!(
            err,
            BuildError::NotTransitive { x: "a".into(), y: "b".into(), z: "c".into() }
        );
    }

    #[test]
    fn closure_adds_exactly_the_composites() {
        let t = FiniteTSet::transitive_closure(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
            .unwrap();
        assert_eq!(t.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn closure_leaves_transitive_input_unchanged() {
        let t = e32();
        let closed = FiniteTSet::transitive_closure(
            &["a", "b", "x"],
            &[("a", "a"), ("b", "b"), ("a", "x"), ("b", "x")],
        )
        .unwrap();
        assert_eq!(t, closed);
    }

    #[test]
    fn classify_interpolative_but_not_abstract_base() {
        let r = e32().classify();
        assert!(r.interpolative && r.continuous_information_system);
        assert!(!r.abstract_base);
        assert!(!r.reflexive && !r.preorder);
    }

    #[test]
    fn classify_abstract_base_without_preorder() {
        // Five elements, only a ≼ a: nonempty predecessor sets exist only at a.
        let t = FiniteTSet::build(&["a", "b", "c", "d", "e"], &[("a", "a")]).unwrap();
        let r = t.classify();
        assert!(r.abstract_base);
        assert!(!r.reflexive && !r.preorder);
    }

    #[test]
    fn classify_discrete_poset() {
        let t = FiniteTSet::build(
            &["a", "b", "c", "d"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")],
        )
        .unwrap();
        let r = t.classify();
        assert!(r.poset && r.preorder && r.equivalence && r.abstract_base);
        assert!(r.reflexive && r.symmetric && r.antisymmetric);
    }

    #[test]
    fn classify_empty_relation() {
        let t = FiniteTSet::build(&["a", "b"], &[]).unwrap();
        let r = t.classify();
        assert!(!r.reflexive && r.symmetric && r.antisymmetric);
        // No element is related to anything, so there is nothing to
        // interpolate and no predecessor sets to bound: vacuously both.
        assert!(r.interpolative && r.abstract_base);
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let t = e32();
        let s = t.to_json_string();
        assert_eq!(
            s,
            r#"{"elements":["a","b","x"],"relation":[["a","a"],["a","x"],["b","b"],["b","x"]]}"#
        );
        let back = FiniteTSet::from_json_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_rejects_unknown_keys() {
        let s = r#"{"elements":["a"],"relation":[],"extra":1}"#;
        assert!(matches!(FiniteTSet::from_json_str(s), Err(DocError::Json(_))));
    }

    #[test]
    fn json_rejects_duplicate_elements() {
        let s = r#"{"elements":["a","a"],"relation":[]}"#;
        assert!(matches!(
            FiniteTSet::from_json_str(s),
            Err(DocError::Build(BuildError::DuplicateLabel(_)))
        ));
    }

    #[test]
    fn json_rejects_non_transitive_unless_closed() {
        let s = r#"{"elements":["a","b","c"],"relation":[["a","b"],["b","c"]]}"#;
        assert!(matches!(
            FiniteTSet::from_json_str(s),
            Err(DocError::Build(BuildError::NotTransitive { .. }))
        ));
        let t = FiniteTSet::from_json_str_with_closure(s).unwrap();
        assert!(t.related(0, 2));
    }

    #[test]
    fn empty_relation_round_trips() {
        let t = FiniteTSet::build(&["a", "b"], &[]).unwrap();
        let s = t.to_json_string();
        assert_eq!(s, r#"{"elements":["a","b"],"relation":[]}"#);
        assert_eq!(FiniteTSet::from_json_str(&s).unwrap(), t);
    }
}
