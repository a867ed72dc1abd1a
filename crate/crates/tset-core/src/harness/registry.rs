//! The claim registry: every statement the sweep harness checks.
//!
//! Each entry packages one numbered claim as independently evaluated truth
//! clauses. Equivalence entries are violated by a mixed truth vector,
//! implication entries by (true, false). Preconditions scope an entry to the
//! structures it speaks about; structures outside the scope are skipped, not
//! judged. Three deliberately false claims are registered as self-tests so
//! the suite proves that sweeps are able to fail.

use crate::relation::FiniteTSet;
use crate::topology::Topology;

/// How a clause truth vector is judged.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClaimKind {
    /// All clauses must agree; a mixed vector is a violation.
    Equivalence,
    /// (hypothesis, conclusion); (true, false) is a violation.
    Implication,
}

/// Scope restriction for an entry: structures failing the check are skipped.
#[derive(Clone, Copy)]
pub struct Precondition {
    pub name: &'static str,
    pub check: fn(&FiniteTSet) -> bool,
}

/// Clause truth on one structure, plus the subset masks on which failing
/// quantified clauses first came apart (surfaced in violation reports).
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Evaluation {
    pub clauses: Vec<bool>,
    pub witnesses: Vec<u32>,
}

/// One registered claim.
pub struct Theorem {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub clause_count: usize,
    /// Plain-language reading of the claim.
    pub statement: &'static str,
    pub precondition: Option<Precondition>,
    pub topology_dependent: bool,
    /// Named design decisions the evaluation rests on; copied into reports.
    pub decision_flags: &'static [&'static str],
    /// Companion clauses that cannot be machine-checked; listed in reports.
    pub unverifiable: &'static [&'static str],
    /// Whether sweeps of this entry are expected to stay clean. The three
    /// deliberately false self-test claims set this to false.
    pub expected_to_hold: bool,
    pub(crate) eval: fn(&FiniteTSet, Option<&Topology>) -> Evaluation,
}

impl Theorem {
    pub(crate) fn evaluate(&self, t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
        (self.eval)(t, topo)
    }

    /// Whether a clause truth vector violates this claim.
    pub fn violates(&self, clauses: &[bool]) -> bool {
        match self.kind {
            ClaimKind::Equivalence => {
                clauses.iter().any(|&c| c) && !clauses.iter().all(|&c| c)
            }
            ClaimKind::Implication => clauses == [true, false],
        }
    }
}

/// Every registered claim, in registry order.
pub fn theorems() -> &'static [Theorem] {
    &THEOREMS
}

/// Looks a claim up by its id, e.g. `"T3.1"`.
pub fn find_theorem(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id)
}

static THEOREMS: [Theorem; 20] = [
    Theorem {
        id: "T3.1",
        kind: ClaimKind::Equivalence,
        clause_count: 4,
        statement: "bounded completeness coincides with pairwise sups over a least \
                    element, sups for all bounded-above subsets, and ∅-or-cone \
                    upper-bound sets",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t31,
    },
    Theorem {
        id: "L3.1",
        kind: ClaimKind::Equivalence,
        clause_count: 2,
        statement: "every bounded-above subset has a sup exactly when every nonempty \
                    subset has an inf",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_l31,
    },
    Theorem {
        id: "T3.2",
        kind: ClaimKind::Equivalence,
        clause_count: 6,
        statement: "on domains, bounded completeness further coincides with sups for \
                    every bounded-above subset and infs for every nonempty subset",
        precondition: Some(Precondition { name: "is_domain", check: FiniteTSet::is_domain }),
        topology_dependent: false,
        decision_flags: &["domain_as_directed_completeness"],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t32,
    },
    Theorem {
        id: "T4.1",
        kind: ClaimKind::Equivalence,
        clause_count: 4,
        statement: "finite completeness coincides with pairwise sups over a least \
                    element, sups for all subsets, and cone upper-bound sets",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t41,
    },
    Theorem {
        id: "T4.2",
        kind: ClaimKind::Equivalence,
        clause_count: 5,
        statement: "complete domains coincide with bounded complete domains having a \
                    largest element, with all-subset infs, and with all-subset sups",
        precondition: None,
        topology_dependent: false,
        decision_flags: &["domain_as_directed_completeness"],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t42,
    },
    Theorem {
        id: "P5.1",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "finite unions of finitary subsets are finitary",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_p51,
    },
    Theorem {
        id: "T5.1",
        kind: ClaimKind::Equivalence,
        clause_count: 4,
        statement: "finitary completeness coincides with finitary intersections of \
                    finitary upper pairs, finitary triple intersections, and finitary \
                    upper-bound sets",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t51,
    },
    Theorem {
        id: "T5.2a",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every finite pre-ordered carrier is finitarily complete",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t52a,
    },
    Theorem {
        id: "T5.2b",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every bounded complete pre-ordered carrier is finitarily complete",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t52b,
    },
    Theorem {
        id: "R3.1",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every abstract base is interpolative",
        precondition: None,
        topology_dependent: false,
        decision_flags: &["abstract_base_nonempty_subsets"],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_r31,
    },
    Theorem {
        id: "R3.2",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every pre-ordered carrier is an abstract base",
        precondition: None,
        topology_dependent: false,
        decision_flags: &["abstract_base_nonempty_subsets"],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_r32,
    },
    Theorem {
        id: "R4.x",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every finitely complete t-set is bounded complete",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_r4x,
    },
    Theorem {
        id: "T6.1",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "when every open set is an upper set, strongly compact subsets are \
                    compact",
        precondition: None,
        topology_dependent: true,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t61,
    },
    Theorem {
        id: "T6.3",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "finite unions of strongly compact subsets are strongly compact",
        precondition: None,
        topology_dependent: true,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t63,
    },
    Theorem {
        id: "T6.4A",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "a strongly compactly complete carrier is finitary with strongly \
                    compact intersections of finitary upper pairs",
        precondition: None,
        topology_dependent: true,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t64a,
    },
    Theorem {
        id: "T6.4B",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "over a reflexive relation, a finitary carrier with strongly compact \
                    intersections of finitary upper pairs is strongly compactly complete",
        precondition: None,
        topology_dependent: true,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: true,
        eval: eval_t64b,
    },
    Theorem {
        id: "T6.5B",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "over a reflexive relation with upper opens, a finitary carrier with \
                    compact intersections of finitary upper pairs is compactly complete",
        precondition: None,
        topology_dependent: true,
        decision_flags: &[],
        unverifiable: &[
            "T6.5A (the companion implication) turns on a \"property F\" of the \
             topology that is never given a definition, so it is not machine-checkable",
        ],
        expected_to_hold: true,
        eval: eval_t65b,
    },
    Theorem {
        id: "FALSE_CLAIM_ALL_BC",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every t-set is bounded complete — deliberately false; sweeps must \
                    refute it",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: false,
        eval: eval_false_all_bc,
    },
    Theorem {
        id: "FALSE_CLAIM_ALL_DOMAIN",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every t-set is a domain — deliberately false; sweeps must refute it",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: false,
        eval: eval_false_all_domain,
    },
    Theorem {
        id: "FALSE_CLAIM_FINITARY_CONE",
        kind: ClaimKind::Implication,
        clause_count: 2,
        statement: "every finitary subset is an upper cone — deliberately false; sweeps \
                    must refute it",
        precondition: None,
        topology_dependent: false,
        decision_flags: &[],
        unverifiable: &[],
        expected_to_hold: false,
        eval: eval_false_finitary_cone,
    },
];

// ---------------------------------------------------------------------------
// Shared evaluation machinery.

/// All subset masks of the carrier, ascending. A finite carrier makes every
/// subset finite, so clauses quantifying over "finite subsets" run over this.
fn subsets(t: &FiniteTSet) -> std::ops::RangeInclusive<u32> {
    0..=t.full_mask()
}

fn is_reflexive(t: &FiniteTSet) -> bool {
    (0..t.carrier_size()).all(|x| t.related(x, x))
}

/// Collects the subsets on which failing quantified clauses first came apart.
#[derive(Default)]
struct Witnesses(Vec<u32>);

impl Witnesses {
    /// True iff `holds` is true on every mask; notes the first failure.
    fn all(
        &mut self,
        masks: impl Iterator<Item = u32>,
        mut holds: impl FnMut(u32) -> bool,
    ) -> bool {
        for m in masks {
            if !holds(m) {
                self.note(m);
                return false;
            }
        }
        true
    }

    fn note(&mut self, m: u32) {
        if !self.0.contains(&m) {
            self.0.push(m);
        }
    }
}

/// Runs a check over the pair subsets {x, y}, x = y included.
fn element_pairs_hold(
    t: &FiniteTSet,
    w: &mut Witnesses,
    holds: impl Fn(u32) -> bool,
) -> bool {
    let n = t.carrier_size();
    for x in 0..n {
        for y in x..n {
            let pair = 1 << x | 1 << y;
            if !holds(pair) {
                w.note(pair);
                return false;
            }
        }
    }
    true
}

/// Runs a symmetric check over unordered mask pairs (repeats included).
fn mask_pairs_hold(masks: &[u32], w: &mut Witnesses, holds: impl Fn(u32, u32) -> bool) -> bool {
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i..] {
            if !holds(a, b) {
                w.note(a);
                w.note(b);
                return false;
            }
        }
    }
    true
}

/// Runs a permutation-invariant check over mask triples (repeats included,
/// so this also covers singletons and pairs of the list).
fn mask_triples_hold(
    masks: &[u32],
    w: &mut Witnesses,
    combine: impl Fn(u32, u32, u32) -> u32,
    holds: impl Fn(u32) -> bool,
) -> bool {
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i) {
            for &c in &masks[j..] {
                if !holds(combine(a, b, c)) {
                    w.note(a);
                    w.note(b);
                    w.note(c);
                    return false;
                }
            }
        }
    }
    true
}

/// le(X) ≠ ∅, and every element pair passes `holds` on its subset mask.
fn least_element_and_pairs(
    t: &FiniteTSet,
    w: &mut Witnesses,
    holds: impl Fn(u32) -> bool,
) -> bool {
    if t.le_mask(t.full_mask()) == 0 {
        w.note(t.full_mask());
        return false;
    }
    element_pairs_hold(t, w, holds)
}

fn finitary_masks(t: &FiniteTSet) -> Vec<u32> {
    subsets(t).filter(|&a| t.is_finitary_mask(a)).collect()
}

fn finitary_upper_masks(t: &FiniteTSet) -> Vec<u32> {
    subsets(t)
        .filter(|&a| t.is_finitary_mask(a) && t.is_upper_mask(a))
        .collect()
}

/// X is finitary, and every unordered pair from `masks` passes `holds` on
/// its intersection.
fn finitary_carrier_and_pair_intersections(
    t: &FiniteTSet,
    masks: &[u32],
    w: &mut Witnesses,
    holds: impl Fn(u32) -> bool,
) -> bool {
    if !t.is_finitary_mask(t.full_mask()) {
        w.note(t.full_mask());
        return false;
    }
    mask_pairs_hold(masks, w, |a, b| holds(a & b))
}

/// Strong compactness of every subset mask, with the greatest self-supported
/// subset precomputed once per open set.
fn strongly_compact_table(t: &FiniteTSet, tau: &Topology) -> Vec<bool> {
    let gss: Vec<(u32, u32)> = tau
        .open_masks()
        .iter()
        .map(|&o| (o, t.greatest_self_supported(o)))
        .collect();
    subsets(t)
        .map(|a| gss.iter().all(|&(o, g)| a & !o != 0 || a & !g == 0))
        .collect()
}

// ---------------------------------------------------------------------------
// Clause evaluators. Clause numbering in the comments matches the registered
// claim; every clause is computed independently of the others.

/// (1) bounded complete; (2) le(X) ≠ ∅ and bounded pairs have sups;
/// (3) bounded-above subsets have sups; (4) upper-bound sets are ∅ or cones.
fn eval_t31(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let c1 = t.is_bounded_complete();
    let c2 = least_element_and_pairs(t, &mut w, |pair| {
        t.ub_mask(pair) == 0 || t.sup_mask(pair) != 0
    });
    let c3 = w.all(subsets(t), |a| t.ub_mask(a) == 0 || t.sup_mask(a) != 0);
    let c4 = w.all(subsets(t), |a| {
        let u = t.ub_mask(a);
        u == 0 || t.is_cone_mask(u)
    });
    Evaluation { clauses: vec![c1, c2, c3, c4], witnesses: w.0 }
}

/// (1) bounded-above subsets (∅ included) have sups; (2) nonempty subsets
/// have infs.
fn eval_l31(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let c1 = w.all(subsets(t), |a| t.ub_mask(a) == 0 || t.sup_mask(a) != 0);
    let c2 = w.all(1..=t.full_mask(), |a| t.inf_mask(a) != 0);
    Evaluation { clauses: vec![c1, c2], witnesses: w.0 }
}

/// The four bounded-completeness clauses followed by the two sup/inf
/// clauses; the entry's precondition scopes the claim to domains.
fn eval_t32(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let mut e = eval_t31(t, topo);
    let tail = eval_l31(t, topo);
    e.clauses.extend(tail.clauses);
    for m in tail.witnesses {
        if !e.witnesses.contains(&m) {
            e.witnesses.push(m);
        }
    }
    e
}

/// (1) finitely complete; (2) le(X) ≠ ∅ and pairs have sups; (3) all
/// subsets have sups; (4) all upper-bound sets are cones.
fn eval_t41(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let c1 = t.is_finitely_complete();
    let c2 = least_element_and_pairs(t, &mut w, |pair| t.sup_mask(pair) != 0);
    let c3 = w.all(subsets(t), |a| t.sup_mask(a) != 0);
    let c4 = w.all(subsets(t), |a| t.is_cone_mask(t.ub_mask(a)));
    Evaluation { clauses: vec![c1, c2, c3, c4], witnesses: w.0 }
}

/// (1) complete domain; (2) bounded complete domain with la(X) ≠ ∅;
/// (3) all subsets have infs; (4) all subsets have sups; (5) finite-or-
/// directed subsets have sups.
fn eval_t42(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let c1 = t.is_complete_domain();
    let c2 = t.is_bounded_complete_domain() && t.la_mask(t.full_mask()) != 0;
    let c3 = w.all(subsets(t), |a| t.inf_mask(a) != 0);
    let c4 = w.all(subsets(t), |a| t.sup_mask(a) != 0);
    // Every subset of a finite carrier is finite, so "finite or directed"
    // quantifies over all subsets and clause (5) coincides with clause (4).
    let c5 = c4;
    Evaluation { clauses: vec![c1, c2, c3, c4, c5], witnesses: w.0 }
}

/// Unconditioned: unions of up to three finitary subsets are finitary.
fn eval_p51(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let fin = finitary_masks(t);
    let concl = mask_triples_hold(&fin, &mut w, |a, b, c| a | b | c, |u| {
        t.is_finitary_mask(u)
    });
    Evaluation { clauses: vec![true, concl], witnesses: w.0 }
}

/// (1) finitarily complete; (2) X finitary and finitary upper pairs
/// intersect finitarily; (3) intersections of up to three finitary subsets
/// are finitary (the empty intersection being X); (4) every upper-bound set
/// is finitary.
///
/// Sweeps of this entry report genuine violations from carrier size 3 on
/// (15 of 171 structures, 490 of 3994 at size 4): without reflexivity an
/// upper-bound set like ub({u}) in {c ≼ c, c ≼ u, c ≼ w, u ≼ w} is {w},
/// which is not finitary, while clauses (2) and (3) still hold. The clauses
/// are evaluated exactly as registered; the reports say the rest.
fn eval_t51(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let c1 = t.is_finitarily_complete();
    let finup = finitary_upper_masks(t);
    let c2 = finitary_carrier_and_pair_intersections(t, &finup, &mut w, |u| {
        t.is_finitary_mask(u)
    });
    let fin = finitary_masks(t);
    let c3 = t.is_finitary_mask(t.full_mask())
        && mask_triples_hold(&fin, &mut w, |a, b, c| a & b & c, |u| t.is_finitary_mask(u));
    let c4 = w.all(subsets(t), |b| t.is_finitary_mask(t.ub_mask(b)));
    Evaluation { clauses: vec![c1, c2, c3, c4], witnesses: w.0 }
}

/// Transitivity is inherent to the type and every carrier here is finite,
/// so "finite pre-ordered" reduces to reflexivity.
fn eval_t52a(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    Evaluation {
        clauses: vec![is_reflexive(t), t.is_finitarily_complete()],
        witnesses: Vec::new(),
    }
}

fn eval_t52b(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    Evaluation {
        clauses: vec![
            t.is_bounded_complete() && is_reflexive(t),
            t.is_finitarily_complete(),
        ],
        witnesses: Vec::new(),
    }
}

fn eval_r31(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let c = t.classify();
    Evaluation { clauses: vec![c.abstract_base, c.interpolative], witnesses: Vec::new() }
}

fn eval_r32(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let c = t.classify();
    Evaluation { clauses: vec![c.preorder, c.abstract_base], witnesses: Vec::new() }
}

fn eval_r4x(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    Evaluation {
        clauses: vec![t.is_finitely_complete(), t.is_bounded_complete()],
        witnesses: Vec::new(),
    }
}

/// Hypothesis: every open is an upper set. Conclusion: strongly compact
/// subsets are compact (compactness is evaluated, not assumed, even though
/// it is constant on finite carriers).
fn eval_t61(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let tau = topo.expect("topology-dependent evaluator");
    let mut w = Witnesses::default();
    let hyp = tau.open_masks().iter().all(|&o| t.is_upper_mask(o));
    let sc = strongly_compact_table(t, tau);
    let concl = w.all(subsets(t), |a| {
        !sc[a as usize] || tau.is_compact(&t.subset(a)).expect("carrier matches")
    });
    Evaluation { clauses: vec![hyp, concl], witnesses: w.0 }
}

/// Unconditioned: unions of up to three strongly compact subsets are
/// strongly compact.
fn eval_t63(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let tau = topo.expect("topology-dependent evaluator");
    let mut w = Witnesses::default();
    let sc = strongly_compact_table(t, tau);
    let scs: Vec<u32> = subsets(t).filter(|&a| sc[a as usize]).collect();
    let concl = mask_triples_hold(&scs, &mut w, |a, b, c| a | b | c, |u| sc[u as usize]);
    Evaluation { clauses: vec![true, concl], witnesses: w.0 }
}

fn eval_t64a(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let tau = topo.expect("topology-dependent evaluator");
    let mut w = Witnesses::default();
    let hyp = t.is_strongly_compactly_complete(tau).expect("carrier matches");
    let sc = strongly_compact_table(t, tau);
    let finup = finitary_upper_masks(t);
    let concl =
        finitary_carrier_and_pair_intersections(t, &finup, &mut w, |u| sc[u as usize]);
    Evaluation { clauses: vec![hyp, concl], witnesses: w.0 }
}

fn eval_t64b(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let tau = topo.expect("topology-dependent evaluator");
    let mut w = Witnesses::default();
    let sc = strongly_compact_table(t, tau);
    let finup = finitary_upper_masks(t);
    let hyp = is_reflexive(t)
        && finitary_carrier_and_pair_intersections(t, &finup, &mut w, |u| sc[u as usize]);
    let concl = t.is_strongly_compactly_complete(tau).expect("carrier matches");
    Evaluation { clauses: vec![hyp, concl], witnesses: w.0 }
}

fn eval_t65b(t: &FiniteTSet, topo: Option<&Topology>) -> Evaluation {
    let tau = topo.expect("topology-dependent evaluator");
    let mut w = Witnesses::default();
    let finup = finitary_upper_masks(t);
    let hyp = is_reflexive(t)
        && tau.open_masks().iter().all(|&o| t.is_upper_mask(o))
        && finitary_carrier_and_pair_intersections(t, &finup, &mut w, |u| {
            tau.is_compact(&t.subset(u)).expect("carrier matches")
        });
    let concl = t.is_compactly_complete(tau).expect("carrier matches");
    Evaluation { clauses: vec![hyp, concl], witnesses: w.0 }
}

fn eval_false_all_bc(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    Evaluation { clauses: vec![true, t.is_bounded_complete()], witnesses: Vec::new() }
}

fn eval_false_all_domain(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    Evaluation { clauses: vec![true, t.is_domain()], witnesses: Vec::new() }
}

fn eval_false_finitary_cone(t: &FiniteTSet, _topo: Option<&Topology>) -> Evaluation {
    let mut w = Witnesses::default();
    let concl = w.all(subsets(t), |a| !t.is_finitary_mask(a) || t.is_cone_mask(a));
    Evaluation { clauses: vec![true, concl], witnesses: w.0 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::topology::alexandroff;

    #[test]
    fn every_listed_id_resolves_and_t65a_does_not() {
        let ids = [
            "T3.1", "L3.1", "T3.2", "T4.1", "T4.2", "P5.1", "T5.1", "T5.2a", "T5.2b",
            "R3.1", "R3.2", "R4.x", "T6.1", "T6.3", "T6.4A", "T6.4B", "T6.5B",
            "FALSE_CLAIM_ALL_BC", "FALSE_CLAIM_ALL_DOMAIN", "FALSE_CLAIM_FINITARY_CONE",
        ];
        assert_eq!(theorems().len(), ids.len());
        for id in ids {
            assert!(find_theorem(id).is_some(), "missing {id}");
        }
        assert!(find_theorem("T6.5A").is_none());
        assert!(find_theorem("T6.2").is_none(), "registered once, as P5.1");
    }

    #[test]
    fn clause_counts_match_the_evaluators() {
        let t = crate::completeness::reflexive_chain(3);
        let tau = alexandroff(&t);
        for th in theorems() {
            let topo = th.topology_dependent.then_some(&tau);
            let ev = th.evaluate(&t, topo);
            assert_eq!(ev.clauses.len(), th.clause_count, "{}", th.id);
        }
    }

    #[test]
    fn violation_rules() {
        let eq = find_theorem("T3.1").unwrap();
        assert!(!eq.violates(&[true, true, true, true]));
        assert!(!eq.violates(&[false, false, false, false]));
        assert!(eq.violates(&[true, false, true, true]));
        let imp = find_theorem("R4.x").unwrap();
        assert!(imp.violates(&[true, false]));
        assert!(!imp.violates(&[false, true]));
        assert!(!imp.violates(&[false, false]));
        assert!(!imp.violates(&[true, true]));
    }

    #[test]
    fn implications_have_two_clauses() {
        for th in theorems() {
            if th.kind == ClaimKind::Implication {
                assert_eq!(th.clause_count, 2, "{}", th.id);
            }
        }
    }

    #[test]
    fn only_the_self_test_claims_are_expected_to_fall() {
        let falling: Vec<&str> = theorems()
            .iter()
            .filter(|th| !th.expected_to_hold)
            .map(|th| th.id)
            .collect();
        assert_eq!(
            falling,
            vec!["FALSE_CLAIM_ALL_BC", "FALSE_CLAIM_ALL_DOMAIN", "FALSE_CLAIM_FINITARY_CONE"]
        );
    }

    #[test]
    fn smallest_finitary_completeness_counterexample() {
        // ub({u}) = {w} is not finitary, yet every intersection clause holds:
        // the four clauses genuinely come apart on this irreflexive t-set.
        let t = FiniteTSet::build(
            &["c", "u", "w"],
            &[("c", "c"), ("c", "u"), ("c", "w"), ("u", "w")],
        )
        .unwrap();
        let ev = find_theorem("T5.1").unwrap().evaluate(&t, None);
        assert_eq!(ev.clauses, vec![false, true, true, false]);
        assert!(find_theorem("T5.1").unwrap().violates(&ev.clauses));
    }

    #[test]
    fn remark_entries_on_the_fixtures() {
        // e32 is interpolative but no abstract base; e33 is an abstract base
        // that is not reflexive.
        let r31 = find_theorem("R3.1").unwrap();
        assert_eq!(r31.evaluate(&fixtures::e32(), None).clauses, vec![false, true]);
        assert_eq!(r31.evaluate(&fixtures::e33(), None).clauses, vec![true, true]);
        let r32 = find_theorem("R3.2").unwrap();
        assert_eq!(r32.evaluate(&fixtures::e33(), None).clauses, vec![false, true]);
    }

    #[test]
    fn false_claims_fall_on_the_empty_relation() {
        let t = fixtures::empty2();
        for id in ["FALSE_CLAIM_ALL_BC", "FALSE_CLAIM_ALL_DOMAIN"] {
            let th = find_theorem(id).unwrap();
            let ev = th.evaluate(&t, None);
            assert!(th.violates(&ev.clauses), "{id}");
        }
        // ∅ is finitary but never a cone, so the cone claim falls everywhere.
        let th = find_theorem("FALSE_CLAIM_FINITARY_CONE").unwrap();
        let ev = th.evaluate(&t, None);
        assert!(th.violates(&ev.clauses));
        assert_eq!(ev.witnesses, vec![0]);
    }

    #[test]
    fn strongly_compact_table_agrees_with_the_subset_api() {
        for t in [fixtures::e32(), fixtures::e51(), fixtures::e33()] {
            for tau in [alexandroff(&t), crate::topology::scott_star(&t)] {
                let table = strongly_compact_table(&t, &tau);
                for a in crate::subset::Subset::all(t.carrier_size()) {
                    assert_eq!(
                        table[a.bits() as usize],
                        t.is_strongly_compact(&a, &tau).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn witnesses_point_at_failing_subsets() {
        // e32: ub({a,b}) = {x} has no sup, so the bounded-sup clauses fail
        // on a recorded subset.
        let t = fixtures::e32();
        let ev = find_theorem("T3.1").unwrap().evaluate(&t, None);
        assert_eq!(ev.clauses, vec![false, false, false, false]);
        assert!(!ev.witnesses.is_empty());
    }
}
