//! Explicit topologies on a t-set's carrier, and compactness notions.
//!
//! A topology here is a concrete family of subsets containing ∅ and the full
//! carrier and closed under pairwise union and intersection (finite carrier,
//! so that is all of it). Two induced constructions are provided: the family
//! of all upper sets, and the restriction of it by a directed-sup condition
//! (`scott_star`, a construction choice — results depending on it are flagged
//! in sweep reports).

use std::fmt;

use thiserror::Error;

use crate::relation::FiniteTSet;
use crate::subset::{CarrierMismatch, Subset};

/// An explicit finite topology: validated family of open subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Topology {
    carrier_size: usize,
    /// Open sets as bit masks, ascending and duplicate-free.
    opens: Vec<u32>,
}

/// Validation failures for explicit open-set families.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum TopologyError {
    #[error("family must contain the empty set and the full carrier")]
    MissingEmptyOrFull,
    #[error("family is not closed under union: {0} ∪ {1} is missing")]
    NotClosedUnderUnion(SetDisplay, SetDisplay),
    #[error("family is not closed under intersection: {0} ∩ {1} is missing")]
    NotClosedUnderIntersection(SetDisplay, SetDisplay),
    #[error(transparent)]
    CarrierMismatch(#[from] CarrierMismatch),
}

/// Index-set rendering of a witness subset, e.g. `{0,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SetDisplay(pub u32);

impl fmt::Display for SetDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in 0..32 {
            if self.0 >> i & 1 == 1 {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}

/// The two built-in topology constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TopologyKind {
    Alexandroff,
    ScottStar,
}

impl TopologyKind {
    /// Name as used on the command line and in sweep reports.
    pub fn name(&self) -> &'static str {
        match self {
            TopologyKind::Alexandroff => "alexandroff",
            TopologyKind::ScottStar => "scott-star",
        }
    }

    pub fn parse(s: &str) -> Option<TopologyKind> {
        match s {
            "alexandroff" => Some(TopologyKind::Alexandroff),
            "scott-star" => Some(TopologyKind::ScottStar),
            _ => None,
        }
    }

    pub fn build(&self, t: &FiniteTSet) -> Topology {
        match self {
            TopologyKind::Alexandroff => alexandroff(t),
            TopologyKind::ScottStar => scott_star(t),
        }
    }
}

impl Topology {
    /// Validates an explicit family of subsets as a topology.
    pub fn build(carrier_size: usize, family: &[Subset]) -> Result<Topology, TopologyError> {
        let mut opens: Vec<u32> = Vec::with_capacity(family.len());
        for s in family {
            if s.carrier_size() != carrier_size {
                return Err(CarrierMismatch {
                    expected: carrier_size,
                    found: s.carrier_size(),
                }
                .into());
            }
            opens.push(s.bits());
        }
        opens.sort_unstable();
        opens.dedup();
        let full = crate::subset::mask(carrier_size);
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(TopologyError::MissingEmptyOrFull);
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i..] {
                if opens.binary_search(&(a | b)).is_err() {
                    return Err(TopologyError::NotClosedUnderUnion(SetDisplay(a), SetDisplay(b)));
                }
                if opens.binary_search(&(a & b)).is_err() {
                    return Err(TopologyError::NotClosedUnderIntersection(
                        SetDisplay(a),
                        SetDisplay(b),
                    ));
                }
            }
        }
        Ok(Topology { carrier_size, opens })
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    /// Open sets in ascending bit-vector order.
    pub fn opens(&self) -> impl Iterator<Item = Subset> + '_ {
        self.opens.iter().map(move |&bits| Subset::from_bits(self.carrier_size, bits))
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn contains(&self, s: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(s)?;
        Ok(self.opens.binary_search(&s.bits()).is_ok())
    }

    pub(crate) fn open_masks(&self) -> &[u32] {
        &self.opens
    }

    /// Compactness of a subset. On a finite carrier every open family is
    /// already finite, so every covering subfamily is its own finite
    /// subcover: the answer is constantly `true`. Kept as a real operation so
    /// carriers are still validated; the definitional cover search below
    /// exists to demonstrate the constant.
    pub fn is_compact(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        Ok(true)
    }

    /// Definitional compactness: enumerates every subfamily of the topology
    /// that covers `a` and looks for a finite subcover. Exponential in the
    /// number of opens — meant for small carriers (the CLI uses it up to
    /// carrier size 4) and for the test suites.
    pub fn is_compact_by_cover_search(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        let m = self.opens.len();
        assert!(m < 32, "cover search needs a small open family");
        let union_of = |family: u32| -> u32 {
            let mut u = 0u32;
            for (i, &o) in self.opens.iter().enumerate() {
                if family >> i & 1 == 1 {
                    u |= o;
                }
            }
            u
        };
        for family in 0u32..1 << m {
            if a.bits() & !union_of(family) != 0 {
                continue; // not a cover of a
            }
            // Search the covering subfamily for a finite subcover. Every
            // subfamily of a finite topology is finite, so the search always
            // succeeds at its first candidate: the family itself.
            let mut found = false;
            let mut sub = family;
            loop {
                if a.bits() & !union_of(sub) == 0 {
                    found = true;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & family;
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check(&self, s: &Subset) -> Result<(), CarrierMismatch> {
        if s.carrier_size() == self.carrier_size {
            Ok(())
        } else {
            Err(CarrierMismatch { expected: self.carrier_size, found: s.carrier_size() })
        }
    }
}

/// The topology of all upper sets of `t`.
pub fn alexandroff(t: &FiniteTSet) -> Topology {
    let n = t.carrier_size();
    let opens: Vec<u32> = Subset::all(n)
        .filter(|u| t.is_upper_set(u).expect("own carrier"))
        .map(|u| u.bits())
        .collect();
    Topology { carrier_size: n, opens }
}

/// Upper sets U such that every directed D whose sup meets U already meets U.
///
/// This is a construction choice for t-sets (classical Scott openness is
/// only pinned down on directed-complete posets); sweep results that used it
/// carry the `scott_star_construction` decision flag.
pub fn scott_star(t: &FiniteTSet) -> Topology {
    let n = t.carrier_size();
    // Directed subsets with a nonempty sup are the only constraints.
    let mut constraints: Vec<(u32, u32)> = Vec::new();
    for bits in 1..1u32 << n {
        let d = Subset::from_bits(n, bits);
        if t.is_directed(&d).expect("own carrier") {
            let s = t.sup(&d).expect("own carrier").bits();
            if s != 0 {
                constraints.push((bits, s));
            }
        }
    }
    let opens: Vec<u32> = Subset::all(n)
        .filter(|u| t.is_upper_set(u).expect("own carrier"))
        .map(|u| u.bits())
        .filter(|&u| constraints.iter().all(|&(d, s)| s & u == 0 || d & u != 0))
        .collect();
    Topology { carrier_size: n, opens }
}

impl FiniteTSet {
    /// Greatest subset of `within` whose members all have a predecessor
    /// inside it, found by deleting unsupported members to a fixpoint.
    pub(crate) fn greatest_self_supported(&self, within: u32) -> u32 {
        let mut cur = within;
        loop {
            let mut next = 0u32;
            for x in 0..self.carrier_size() {
                if cur >> x & 1 == 1 && self.pred_mask(x) & cur != 0 {
                    next |= 1 << x;
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Whether every open superset of `a` admits a finitary F with
    /// a ⊆ F ⊆ open.
    ///
    /// Finitary sets closed under union make "greatest self-supported subset
    /// of the open" the canonical witness: the condition reduces to
    /// a ⊆ gss(open). The brute-force search over every F between `a` and the
    /// open is kept in [`crate::oracles`].
    pub fn is_strongly_compact(
        &self,
        a: &Subset,
        topo: &Topology,
    ) -> Result<bool, CarrierMismatch> {
        self.check_topology(topo)?;
        if a.carrier_size() != self.carrier_size() {
            return Err(CarrierMismatch {
                expected: self.carrier_size(),
                found: a.carrier_size(),
            });
        }
        for &open in topo.open_masks() {
            if a.bits() & !open == 0 && a.bits() & !self.greatest_self_supported(open) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The carrier and every pair's upper-bound set are strongly compact.
    pub fn is_strongly_compactly_complete(
        &self,
        topo: &Topology,
    ) -> Result<bool, CarrierMismatch> {
        self.check_topology(topo)?;
        if !self.is_strongly_compact(&self.full_subset(), topo)? {
            return Ok(false);
        }
        let n = self.carrier_size();
        for x in 0..n {
            for y in x..n {
                let ub = self.subset(self.pair_ub_mask(x, y));
                if !self.is_strongly_compact(&ub, topo)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The carrier and every pair's upper-bound set are compact. Constantly
    /// true on finite carriers (see [`Topology::is_compact`]); evaluated
    /// rather than short-circuited so carrier validation still applies.
    pub fn is_compactly_complete(&self, topo: &Topology) -> Result<bool, CarrierMismatch> {
        self.check_topology(topo)?;
        if !topo.is_compact(&self.full_subset())? {
            return Ok(false);
        }
        let n = self.carrier_size();
        for x in 0..n {
            for y in x..n {
                let ub = self.subset(self.pair_ub_mask(x, y));
                if !topo.is_compact(&ub)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_topology(&self, topo: &Topology) -> Result<(), CarrierMismatch> {
        if topo.carrier_size() == self.carrier_size() {
            Ok(())
        } else {
            Err(CarrierMismatch {
                expected: self.carrier_size(),
                found: topo.carrier_size(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sub(t: &FiniteTSet, labels: &[&str]) -> Subset {
        t.subset_from_labels(labels).unwrap()
    }

    #[test]
    fn alexandroff_of_e32() {
        let t = fixtures::e32();
        let topo = alexandroff(&t);
        let opens: Vec<Vec<String>> = topo.opens().map(|o| t.subset_labels(&o)).collect();
        assert_eq!(opens.len(), 5);
        assert!(topo.contains(&sub(&t, &["x"])).unwrap());
        assert!(topo.contains(&sub(&t, &["a", "x"])).unwrap());
        assert!(!topo.contains(&sub(&t, &["a"])).unwrap());
        assert_eq!(opens[0], Vec::<String>::new());
    }

    #[test]
    fn alexandroff_of_empty_relation_is_discrete() {
        let t = fixtures::empty2();
        assert_eq!(alexandroff(&t).open_count(), 4);
    }

    #[test]
    fn scott_star_matches_alexandroff_on_small_fixtures() {
        for t in [fixtures::e32(), crate::completeness::reflexive_chain(3)] {
            assert_eq!(scott_star(&t), alexandroff(&t));
        }
    }

    #[test]
    fn scott_star_is_a_subfamily_of_upper_sets() {
        let t = fixtures::e51();
        let ss = scott_star(&t);
        let alx = alexandroff(&t);
        for o in ss.opens() {
            assert!(alx.contains(&o).unwrap());
        }
    }

    #[test]
    fn build_validates_family() {
        let n = 2;
        let e = Subset::empty(n);
        let f = Subset::full(n);
        let a = Subset::from_bits(n, 0b01);
        let b = Subset::from_bits(n, 0b10);
        assert!(Topology::build(n, &[e, f]).is_ok());
        assert_eq!(
            Topology::build(n, &[e, a]).unwrap_err(),
            TopologyError::MissingEmptyOrFull
        );
        // {∅, {0}, {1}, X} is fine; dropping X's pieces breaks closure.
        assert!(Topology::build(n, &[e, a, b, f]).is_ok());
        assert_eq!(
            Topology::build(3, &[
                Subset::empty(3),
                Subset::from_bits(3, 0b001),
                Subset::from_bits(3, 0b010),
                Subset::full(3),
            ])
            .unwrap_err(),
            TopologyError::NotClosedUnderUnion(SetDisplay(0b001), SetDisplay(0b010))
        );
    }

    #[test]
    fn build_rejects_foreign_subsets() {
        let err = Topology::build(2, &[Subset::empty(3)]).unwrap_err();
        assert!(matches!(err, TopologyError::CarrierMismatch(_)));
    }

    #[test]
    fn duplicates_in_family_are_collapsed() {
        let n = 1;
        let topo = Topology::build(n, &[Subset::empty(1), Subset::empty(1), Subset::full(1)])
            .unwrap();
        assert_eq!(topo.open_count(), 2);
    }

    #[test]
    fn compactness_is_constant_and_the_search_agrees() {
        let t = fixtures::e32();
        let topo = alexandroff(&t);
        for a in Subset::all(3) {
            assert!(topo.is_compact(&a).unwrap());
            assert!(topo.is_compact_by_cover_search(&a).unwrap());
        }
    }

    #[test]
    fn strong_compactness_on_e32() {
        let t = fixtures::e32();
        let topo = alexandroff(&t);
        assert!(!t.is_strongly_compact(&sub(&t, &["x"]), &topo).unwrap());
        assert!(t.is_strongly_compact(&sub(&t, &["a"]), &topo).unwrap());
        assert!(t.is_strongly_compact(&Subset::empty(3), &topo).unwrap());
        assert!(t.is_strongly_compact(&t.full_subset(), &topo).unwrap());
    }

    #[test]
    fn strongly_compactly_complete_examples() {
        let e32 = fixtures::e32();
        assert!(!e32
            .is_strongly_compactly_complete(&alexandroff(&e32))
            .unwrap());
        let ch = crate::completeness::reflexive_chain(3);
        assert!(ch.is_strongly_compactly_complete(&alexandroff(&ch)).unwrap());
    }

    #[test]
    fn compactly_complete_is_constantly_true_once_validated() {
        let t = fixtures::e51();
        assert!(t.is_compactly_complete(&alexandroff(&t)).unwrap());
        let foreign = alexandroff(&fixtures::empty2());
        assert!(t.is_compactly_complete(&foreign).is_err());
    }

    #[test]
    fn gss_peels_unsupported_elements() {
        let t = fixtures::e32();
        // In {x} alone, x has no predecessor: everything is deleted.
        assert_eq!(t.greatest_self_supported(0b100), 0);
        // In {a, x}, a supports itself and x.
        assert_eq!(t.greatest_self_supported(0b101), 0b101);
    }
}
