//! Subsets of a finite carrier, stored as bit vectors.
//!
//! A `Subset` is only meaningful relative to the carrier it was built for;
//! every operation that combines a subset with a relation or topology checks
//! that the carrier sizes agree and reports [`CarrierMismatch`] otherwise.

use thiserror::Error;

/// Carrier sizes are capped so subsets always fit in a `u32` bit vector.
pub const MAX_CARRIER: usize = 16;

/// A subset of a carrier of known size, as a bit vector (bit `i` = element `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subset {
    carrier_size: usize,
    bits: u32,
}

/// Two objects built over different carriers were combined.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("carrier size mismatch: expected {expected}, found {found}")]
pub struct CarrierMismatch {
    pub expected: usize,
    pub found: usize,
}

impl Subset {
    /// The empty subset of a carrier with `carrier_size` elements.
    pub fn empty(carrier_size: usize) -> Self {
        assert!(carrier_size <= MAX_CARRIER, "carrier too large");
        Subset { carrier_size, bits: 0 }
    }

    /// The full carrier as a subset.
    pub fn full(carrier_size: usize) -> Self {
        assert!(carrier_size <= MAX_CARRIER, "carrier too large");
        Subset { carrier_size, bits: mask(carrier_size) }
    }

    /// Builds a subset from a raw bit vector. Bits at positions >=
    /// `carrier_size` must be clear.
    pub fn from_bits(carrier_size: usize, bits: u32) -> Self {
        assert!(carrier_size <= MAX_CARRIER, "carrier too large");
        assert_eq!(bits & !mask(carrier_size), 0, "bits outside carrier");
        Subset { carrier_size, bits }
    }

    /// Builds a subset from element indices.
    pub fn from_indices(carrier_size: usize, indices: &[usize]) -> Self {
        let mut s = Subset::empty(carrier_size);
        for &i in indices {
            assert!(i < carrier_size, "index outside carrier");
            s.bits |= 1 << i;
        }
        s
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Number of elements in the subset.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.carrier_size && self.bits >> index & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool, CarrierMismatch> {
        self.check_carrier(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn union(&self, other: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check_carrier(other)?;
        Ok(Subset { carrier_size: self.carrier_size, bits: self.bits | other.bits })
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset, CarrierMismatch> {
        self.check_carrier(other)?;
        Ok(Subset { carrier_size: self.carrier_size, bits: self.bits & other.bits })
    }

    pub fn complement(&self) -> Subset {
        Subset {
            carrier_size: self.carrier_size,
            bits: !self.bits & mask(self.carrier_size),
        }
    }

    /// Iterates over the element indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.carrier_size).filter(move |i| bits >> i & 1 == 1)
    }

    /// Enumerates all `2^carrier_size` subsets in ascending bit-vector order.
    pub fn all(carrier_size: usize) -> impl Iterator<Item = Subset> {
        assert!(carrier_size <= MAX_CARRIER, "carrier too large");
        (0..1u32 << carrier_size).map(move |bits| Subset { carrier_size, bits })
    }

    fn check_carrier(&self, other: &Subset) -> Result<(), CarrierMismatch> {
        if self.carrier_size == other.carrier_size {
            Ok(())
        } else {
            Err(CarrierMismatch { expected: self.carrier_size, found: other.carrier_size })
        }
    }
}

pub(crate) fn mask(carrier_size: usize) -> u32 {
    if carrier_size == 32 {
        u32::MAX
    } else {
        (1u32 << carrier_size) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_full() {
        let e = Subset::empty(3);
        let f = Subset::full(3);
        assert!(e.is_empty());
        assert_eq!(f.bits(), 0b111);
        assert_eq!(f.len(), 3);
        assert!(e.is_subset_of(&f).unwrap());
        assert_eq!(e.complement(), f);
    }

    #[test]
    fn carrier_mismatch_is_reported() {
        let a = Subset::empty(2);
        let b = Subset::empty(3);
        assert_eq!(
            a.union(&b).unwrap_err(),
            CarrierMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn indices_round_trip() {
        let s = Subset::from_indices(4, &[0, 2]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(s.contains(2) && !s.contains(1));
    }

    #[test]
    fn all_subsets_ascending() {
        let all: Vec<u32> = Subset::all(2).map(|s| s.bits()).collect();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    #[should_panic(expected = "carrier too large")]
    fn carrier_cap_enforced() {
        Subset::empty(MAX_CARRIER + 1);
    }
}
