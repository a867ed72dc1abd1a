//! Bound operators and subset predicates over a t-set.
//!
//! All of these return *sets*, not elements: without antisymmetry a subset
//! can have many least elements, and without reflexivity a set need not be
//! contained in its own up-closure. None of the implementations assume
//! anything beyond transitivity.
//!
//! The operators live in two layers: `pub(crate)` functions on raw bit masks
//! (no carrier validation — used by the sweep evaluators, which run millions
//! of calls) and the public [`Subset`]-typed wrappers that validate carriers.

use crate::relation::FiniteTSet;
use crate::subset::{CarrierMismatch, Subset};

impl FiniteTSet {
    fn check(&self, a: &Subset) -> Result<(), CarrierMismatch> {
        if a.carrier_size() == self.carrier_size() {
            Ok(())
        } else {
            Err(CarrierMismatch {
                expected: self.carrier_size(),
                found: a.carrier_size(),
            })
        }
    }

    pub(crate) fn ub_mask(&self, a: u32) -> u32 {
        let mut out = self.full_mask();
        let mut m = a;
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            out &= self.succ_mask(y);
        }
        out
    }

    pub(crate) fn lb_mask(&self, a: u32) -> u32 {
        let mut out = self.full_mask();
        let mut m = a;
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            out &= self.pred_mask(y);
        }
        out
    }

    pub(crate) fn up_mask(&self, a: u32) -> u32 {
        let mut out = 0u32;
        let mut m = a;
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.succ_mask(y);
        }
        out
    }

    pub(crate) fn down_mask(&self, a: u32) -> u32 {
        let mut out = 0u32;
        let mut m = a;
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.pred_mask(y);
        }
        out
    }

    pub(crate) fn le_mask(&self, a: u32) -> u32 {
        a & self.lb_mask(a)
    }

    pub(crate) fn la_mask(&self, a: u32) -> u32 {
        a & self.ub_mask(a)
    }

    pub(crate) fn sup_mask(&self, a: u32) -> u32 {
        self.le_mask(self.ub_mask(a))
    }

    pub(crate) fn inf_mask(&self, a: u32) -> u32 {
        self.la_mask(self.lb_mask(a))
    }

    pub(crate) fn is_cone_mask(&self, a: u32) -> bool {
        let mut m = a;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.succ_mask(x) == a {
                return true;
            }
        }
        false
    }

    pub(crate) fn is_directed_mask(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        let n = self.carrier_size();
        for x in 0..n {
            if a >> x & 1 == 0 {
                continue;
            }
            for y in x + 1..n {
                if a >> y & 1 == 1 && self.succ_mask(x) & self.succ_mask(y) & a == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn is_finitary_mask(&self, a: u32) -> bool {
        let mut m = a;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.pred_mask(x) & a == 0 {
                return false;
            }
        }
        true
    }

    pub(crate) fn is_upper_mask(&self, a: u32) -> bool {
        self.up_mask(a) & !a == 0
    }

    /// ub(A) = { x : y ≼ x for every y in A }. ub(∅) is the whole carrier.
    pub fn upper_bounds(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.ub_mask(a.bits())))
    }

    /// lb(A) = { x : x ≼ y for every y in A }. lb(∅) is the whole carrier.
    pub fn lower_bounds(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.lb_mask(a.bits())))
    }

    /// le(A) = { x in A : x ≼ y for every y in A }. Membership forces x ≼ x.
    pub fn least(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.le_mask(a.bits())))
    }

    /// la(A) = { x in A : y ≼ x for every y in A }. Membership forces x ≼ x.
    pub fn largest(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.la_mask(a.bits())))
    }

    /// sup(A) = le(ub(A)), the set of least upper bounds.
    pub fn sup(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.sup_mask(a.bits())))
    }

    /// inf(A) = la(lb(A)), the set of largest lower bounds.
    pub fn inf(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.inf_mask(a.bits())))
    }

    /// ↑(A) = { x : y ≼ x for some y in A }. Note A ⊆ ↑(A) can fail.
    pub fn up_closure(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.up_mask(a.bits())))
    }

    /// ↓(A) = { x : x ≼ y for some y in A }.
    pub fn down_closure(&self, a: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check(a)?;
        Ok(self.subset(self.down_mask(a.bits())))
    }

    /// Whether A = ↑(x) for some x in A. The apex is forced to satisfy x ≼ x,
    /// so the empty set is never an upper cone.
    pub fn is_upper_cone(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        Ok(self.is_cone_mask(a.bits()))
    }

    /// Whether A is nonempty and every two distinct members have an upper
    /// bound inside A. Singletons are directed unconditionally.
    pub fn is_directed(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        Ok(self.is_directed_mask(a.bits()))
    }

    /// Whether some finite F ⊆ A has A ⊆ ↑(F).
    ///
    /// On a finite carrier this holds exactly when every member of A has a
    /// predecessor inside A (fast path used here; the definitional search
    /// over candidate F lives in [`crate::oracles`]). ∅ is finitary.
    pub fn is_finitary(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        Ok(self.is_finitary_mask(a.bits()))
    }

    /// Whether ↑(A) ⊆ A.
    pub fn is_upper_set(&self, a: &Subset) -> Result<bool, CarrierMismatch> {
        self.check(a)?;
        Ok(self.is_upper_mask(a.bits()))
    }
}
