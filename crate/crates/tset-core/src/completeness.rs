//! Order-completeness predicates on a whole t-set.
//!
//! Pair quantifications deliberately include x = y: dropping the diagonal
//! would let singleton bound sets escape the checks and breaks several of
//! the registry equivalences.

use crate::relation::FiniteTSet;

impl FiniteTSet {
    /// Upper bounds of the pair {x, y} (x = y allowed) as a raw mask.
    pub(crate) fn pair_ub_mask(&self, x: usize, y: usize) -> u32 {
        self.succ_mask(x) & self.succ_mask(y)
    }

    /// The carrier is an upper cone and every pair's upper-bound set is
    /// empty or an upper cone.
    pub fn is_bounded_complete(&self) -> bool {
        let full = self.full_subset();
        if !self.is_upper_cone(&full).expect("own carrier") {
            return false;
        }
        self.all_pairs(|ub| ub == 0 || self.is_upper_cone(&self.subset(ub)).expect("own carrier"))
    }

    /// Every directed subset has a nonempty sup.
    ///
    /// Directed completeness transplanted to t-sets; singletons are directed,
    /// so this already forces sup({x}) ≠ ∅ for every element.
    pub fn is_domain(&self) -> bool {
        for bits in 1..1u32 << self.carrier_size() {
            let d = self.subset(bits);
            if self.is_directed(&d).expect("own carrier")
                && self.sup(&d).expect("own carrier").is_empty()
            {
                return false;
            }
        }
        true
    }

    pub fn is_bounded_complete_domain(&self) -> bool {
        self.is_bounded_complete() && self.is_domain()
    }

    /// The carrier is an upper cone and every pair's upper-bound set is an
    /// upper cone (in particular nonempty).
    pub fn is_finitely_complete(&self) -> bool {
        let full = self.full_subset();
        if !self.is_upper_cone(&full).expect("own carrier") {
            return false;
        }
        self.all_pairs(|ub| self.is_upper_cone(&self.subset(ub)).expect("own carrier"))
    }

    pub fn is_complete_domain(&self) -> bool {
        self.is_finitely_complete() && self.is_domain()
    }

    /// The carrier is finitary and every pair's upper-bound set is finitary.
    pub fn is_finitarily_complete(&self) -> bool {
        if !self.is_finitary(&self.full_subset()).expect("own carrier") {
            return false;
        }
        self.all_pairs(|ub| self.is_finitary(&self.subset(ub)).expect("own carrier"))
    }

    /// Runs a check over ub({x, y}) for every pair, diagonal included.
    fn all_pairs(&self, mut check: impl FnMut(u32) -> bool) -> bool {
        let n = self.carrier_size();
        for x in 0..n {
            for y in x..n {
                if !check(self.pair_ub_mask(x, y)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds a reflexive chain c0 ≼ c1 ≼ … ≼ c(n-1), transitively closed.
/// Handy as the canonical bounded complete domain.
pub fn reflexive_chain(n: usize) -> FiniteTSet {
    assert!(n >= 1, "chain needs at least one element");
    let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((refs[i], refs[j]));
        }
    }
    FiniteTSet::build(&refs, &pairs).expect("chain is transitive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_poset_is_not_bounded_complete() {
        // Four incomparable reflexive points: the carrier is no cone.
        assert!(!fixtures::e51().is_bounded_complete());
    }

    #[test]
    fn chain_is_bounded_complete_domain() {
        let t = reflexive_chain(3);
        assert!(t.is_bounded_complete());
        assert!(t.is_domain());
        assert!(t.is_bounded_complete_domain());
        assert!(t.is_complete_domain());
    }

    #[test]
    fn e32_fails_bounded_completeness() {
        assert!(!fixtures::e32().is_bounded_complete());
    }

    #[test]
    fn singleton_directed_sets_can_break_domainhood() {
        // In e33 only a ≼ a holds, so sup({b}) = ∅ while {b} is directed.
        assert!(!fixtures::e33().is_domain());
        assert!(!fixtures::empty2().is_domain());
    }

    #[test]
    fn finite_completeness_needs_nonempty_pair_bounds() {
        assert!(!fixtures::e51().is_finitely_complete());
        assert!(reflexive_chain(3).is_finitely_complete());
        assert!(reflexive_chain(1).is_finitely_complete());
    }

    #[test]
    fn single_irreflexive_point_is_nothing() {
        let t = FiniteTSet::build(&["a"], &[]).unwrap();
        assert!(!t.is_finitely_complete());
        assert!(!t.is_complete_domain());
        assert!(!t.is_bounded_complete());
    }

    #[test]
    fn finitary_completeness() {
        // Identity: every pair bound set is ∅ or a reflexive singleton.
        assert!(fixtures::e51().is_finitarily_complete());
        // ub({a,b}) = {x} with x ⋠ x is not finitary.
        assert!(!fixtures::e32().is_finitarily_complete());
    }
}
