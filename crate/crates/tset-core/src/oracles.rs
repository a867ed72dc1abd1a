//! Slow, definition-shaped reference implementations.
//!
//! The library's hot paths use reductions that are only valid on finite
//! carriers (finitary sets via predecessors-inside, strong compactness via
//! greatest self-supported subsets, abstract bases via the full predecessor
//! set, enumeration via prefix pruning). Everything here recomputes the same
//! answers by the most literal reading available — explicit search over
//! candidate finite sets, naive triple loops over `related` — so the test
//! suites can compare the two layers exhaustively. The library itself never
//! calls into this module.

use crate::relation::FiniteTSet;
use crate::subset::{CarrierMismatch, Subset};
use crate::topology::Topology;

fn check(t: &FiniteTSet, a: &Subset) -> Result<(), CarrierMismatch> {
    if a.carrier_size() == t.carrier_size() {
        Ok(())
    } else {
        Err(CarrierMismatch { expected: t.carrier_size(), found: a.carrier_size() })
    }
}

/// ↑(F) recomputed pair by pair from `related`.
fn up_of(t: &FiniteTSet, f: u32) -> u32 {
    let n = t.carrier_size();
    let mut out = 0u32;
    for x in 0..n {
        if f >> x & 1 == 0 {
            continue;
        }
        for y in 0..n {
            if t.related(x, y) {
                out |= 1 << y;
            }
        }
    }
    out
}

/// Finitary by the book: some finite F ⊆ A has A ⊆ ↑(F). On a finite
/// carrier every subset is finite, so F ranges over every subset of A.
pub fn is_finitary_definitional(t: &FiniteTSet, a: &Subset) -> Result<bool, CarrierMismatch> {
    check(t, a)?;
    let bits = a.bits();
    let mut f = bits;
    loop {
        if bits & !up_of(t, f) == 0 {
            return Ok(true);
        }
        if f == 0 {
            return Ok(false);
        }
        f = (f - 1) & bits;
    }
}

/// Strong compactness by the book: every open O ⊇ A admits a subset F with
/// A ⊆ F ⊆ O that is finitary in the definitional sense above.
pub fn is_strongly_compact_definitional(
    t: &FiniteTSet,
    a: &Subset,
    tau: &Topology,
) -> Result<bool, CarrierMismatch> {
    check(t, a)?;
    if tau.carrier_size() != t.carrier_size() {
        return Err(CarrierMismatch {
            expected: t.carrier_size(),
            found: tau.carrier_size(),
        });
    }
    let n = t.carrier_size();
    for open in tau.opens() {
        let o = open.bits();
        if a.bits() & !o != 0 {
            continue;
        }
        let extra = o & !a.bits();
        let mut found = false;
        let mut e = extra;
        loop {
            let f = Subset::from_bits(n, a.bits() | e);
            if is_finitary_definitional(t, &f)? {
                found = true;
                break;
            }
            if e == 0 {
                break;
            }
            e = (e - 1) & extra;
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Abstract base by the book: for every x and every nonempty A ⊆ pred(x)
/// there is a z with y ≼ z for all y in A and z ≼ x. The classifier only
/// tests A = pred(x); this quantifies over all of them.
pub fn is_abstract_base_all_subsets(t: &FiniteTSet) -> bool {
    let n = t.carrier_size();
    for x in 0..n {
        for a in 1u32..1 << n {
            let below_x = (0..n).all(|y| a >> y & 1 == 0 || t.related(y, x));
            if !below_x {
                continue;
            }
            let has_interpolant = (0..n).any(|z| {
                t.related(z, x) && (0..n).all(|y| a >> y & 1 == 0 || t.related(y, z))
            });
            if !has_interpolant {
                return false;
            }
        }
    }
    true
}

/// Every transitive relation code on `n` elements found the slow way:
/// decode each of the 2^(n²) matrices and test transitivity by the naive
/// triple loop. Mirrors the enumeration harness's code numbering — bit
/// (i, j) at significance 2^(n²−1−(i·n+j)) — without sharing any of its
/// machinery.
pub fn transitive_relation_codes_bruteforce(n: usize) -> Vec<u32> {
    assert!((1..=4).contains(&n), "brute-force oracle handles sizes 1..=4");
    let rel = |code: u32, i: usize, j: usize| code >> (n * n - 1 - (i * n + j)) & 1 == 1;
    let mut out = Vec::new();
    for code in 0..1u32 << (n * n) {
        let mut ok = true;
        'scan: for i in 0..n {
            for j in 0..n {
                if !rel(code, i, j) {
                    continue;
                }
                for k in 0..n {
                    if rel(code, j, k) && !rel(code, i, k) {
                        ok = false;
                        break 'scan;
                    }
                }
            }
        }
        if ok {
            out.push(code);
        }
    }
    out
}
