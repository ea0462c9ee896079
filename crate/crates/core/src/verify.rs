//! Exhaustive verification sweeps. Each [`Statement`] names a structural
//! claim, its domain up to a Frobenius bound, and the per-instance check from
//! [`crate::checks`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::checks;
use crate::enumerate::{mask_blocks, semigroups_with_frobenius, SweepOptions};
use crate::error::{Error, Result};
use crate::set::NumericalSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    /// Complement scalar identities (Frobenius, genus, base).
    ComplementScalars,
    /// Which sets are complements of semigroups, with witnesses.
    SemigroupComplementCharacterization,
    /// `A(S̃)` has at most one small atom for semigroups `S`.
    ComplementAtomBound,
    /// `A(S)` is tightly constrained when `S̃` is a semigroup.
    AssociatedAtomBound,
    /// `S̃` is a semigroup iff the semigroup `S` has at most one small atom.
    ComplementClosureCriterion,
    /// Each complement removes exactly one corner.
    CornerDecrement,
    /// The complement sequence has `c1(S)` steps.
    SequenceLength,
    /// `A(S) ⊆ A(S⁽²⁾)`.
    DoubleComplementAssociated,
    /// `S⁽²⁾` is a semigroup iff `S ∪ [B, ∞)` has max embedding dimension.
    DoubleComplementClosure,
    /// `S⁽²⁾` is a semigroup when `S` has max embedding dimension.
    MaxEmbeddingDoubleComplement,
    /// Every semigroup is the `2n`-th complement of a semigroup.
    LiftRoundTrip,
    /// Hook lengths are the gaps of `A(S)`.
    HookGaps,
    /// Formula and diagram rotation give the same complement.
    DualPathComplement,
}

impl Statement {
    pub const ALL: [Statement; 13] = [
        Statement::ComplementAtomBound,
        Statement::AssociatedAtomBound,
        Statement::ComplementClosureCriterion,
        Statement::ComplementScalars,
        Statement::SemigroupComplementCharacterization,
        Statement::CornerDecrement,
        Statement::SequenceLength,
        Statement::DoubleComplementAssociated,
        Statement::DoubleComplementClosure,
        Statement::MaxEmbeddingDoubleComplement,
        Statement::LiftRoundTrip,
        Statement::HookGaps,
        Statement::DualPathComplement,
    ];

    /// Short name used on the command line and in reports.
    pub fn key(self) -> &'static str {
        match self {
            Statement::ComplementAtomBound => "thm3",
            Statement::AssociatedAtomBound => "thm4",
            Statement::ComplementClosureCriterion => "cor42",
            Statement::ComplementScalars => "prop23",
            Statement::SemigroupComplementCharacterization => "prop24",
            Statement::CornerDecrement => "prop51",
            Statement::SequenceLength => "cor52",
            Statement::DoubleComplementAssociated => "prop53",
            Statement::DoubleComplementClosure => "prop55",
            Statement::MaxEmbeddingDoubleComplement => "cor56",
            Statement::LiftRoundTrip => "prop57",
            Statement::HookGaps => "hookgap",
            Statement::DualPathComplement => "dualpath",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Statement::ComplementAtomBound => {
                "for a semigroup S, A(S~) has at most one small atom, and none if S has two or more"
            }
            Statement::AssociatedAtomBound => {
                "if S~ is a semigroup, A(S) has at most one small atom; if S is not a semigroup, \
                 A(S) is {0,F+1->} or {0,B,F+1->} as S meets [1,F-B] or not"
            }
            Statement::ComplementClosureCriterion => {
                "for a semigroup S, S~ is a semigroup iff S has at most one small atom"
            }
            Statement::ComplementScalars => {
                "F(S~) <= B-1 <= F-2, g(S~) = g+B-F, B(S~) <= B-m, equalities iff 1 not in S"
            }
            Statement::SemigroupComplementCharacterization => {
                "T is a semigroup complement iff F(T) not in T+T and the wrap-around condition holds"
            }
            Statement::CornerDecrement => "c1(S~) = c1(S) - 1",
            Statement::SequenceLength => "S^(c1(S)) is the naturals",
            Statement::DoubleComplementAssociated => "A(S) is contained in A(S^(2))",
            Statement::DoubleComplementClosure => {
                "for a semigroup S, S^(2) is a semigroup iff S u [B,inf) has max embedding dimension"
            }
            Statement::MaxEmbeddingDoubleComplement => {
                "for a max embedding dimension semigroup S, S^(2) is a semigroup"
            }
            Statement::LiftRoundTrip => "lift(S, n) is a semigroup T with T^(2n) = S, n in {1,2}",
            Statement::HookGaps => "the hook lengths of S are the gaps of A(S)",
            Statement::DualPathComplement => "the complement formula equals the rotated diagram",
        }
    }

    /// Statements whose domain is semigroups rather than all numerical sets.
    fn over_semigroups(self) -> bool {
        matches!(
            self,
            Statement::ComplementAtomBound
                | Statement::ComplementClosureCriterion
                | Statement::DoubleComplementClosure
                | Statement::MaxEmbeddingDoubleComplement
                | Statement::LiftRoundTrip
        )
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.key() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statement `{s}`")))
    }
}

/// Outcome of one sweep. Counterexamples are in element notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub domain_bound: u32,
    pub instances_checked: u64,
    pub counterexamples: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Result of checking one set: `None` when it is outside the domain.
type Outcome = Option<bool>;

fn in_domain(check: Result<bool>) -> Outcome {
    match check {
        Ok(holds) => Some(holds),
        Err(Error::Precondition(_)) | Err(Error::Naturals(_)) | Err(Error::NotSemigroup(_)) => None,
        Err(e) => panic!("unexpected error in sweep: {e}"),
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<String>,
}

impl Tally {
    fn add(&mut self, s: &NumericalSet, outcome: Outcome) {
        if let Some(holds) = outcome {
            self.checked += 1;
            if !holds {
                self.counterexamples.push(s.to_string());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Runs `statement` over its domain with `F(S) ≤ max_frobenius`.
pub fn run(
    statement: Statement,
    max_frobenius: u32,
    options: &SweepOptions,
) -> Result<VerificationReport> {
    options.budget.check(max_frobenius)?;
    let started = Instant::now();
    let tally = if statement.over_semigroups() {
        sweep_semigroups(statement, max_frobenius, options)
    } else {
        sweep_sets(statement, max_frobenius, options)
    };
    Ok(VerificationReport {
        statement: statement.key().to_string(),
        domain_bound: max_frobenius,
        instances_checked: tally.checked,
        counterexamples: tally.counterexamples,
        wall_time: started.elapsed(),
    })
}

fn sweep_sets(statement: Statement, max_f: u32, options: &SweepOptions) -> Tally {
    let oracle = (statement == Statement::SemigroupComplementCharacterization)
        .then(|| semigroup_complements(max_f + 2, options));
    let check = |s: &NumericalSet| -> Outcome {
        match statement {
            Statement::ComplementScalars => {
                in_domain(s.complement_report().map(|r| r.violations().is_empty()))
            }
            Statement::SemigroupComplementCharacterization => {
                in_domain(characterization_holds(s, oracle.as_ref().unwrap()))
            }
            Statement::AssociatedAtomBound => {
                in_domain(checks::set_with_semigroup_complement_has_few_atoms(s))
            }
            Statement::CornerDecrement => in_domain(checks::complement_drops_one_corner(s)),
            Statement::SequenceLength => Some(checks::sequence_length_is_c1(s)),
            Statement::DoubleComplementAssociated => {
                in_domain(checks::associated_grows_under_double_complement(s))
            }
            Statement::HookGaps => Some(checks::hooks_are_associated_gaps(s)),
            Statement::DualPathComplement => in_domain(checks::complement_paths_agree(s)),
            _ => unreachable!("{statement} ranges over semigroups"),
        }
    };

    let mut head = Tally::default();
    let naturals = NumericalSet::naturals();
    head.add(&naturals, check(&naturals));
    let parts = options.map(mask_blocks(1..max_f + 1), |(f, masks)| {
        let mut tally = Tally::default();
        for mask in masks {
            let s = NumericalSet::from_small_mask(f, mask);
            tally.add(&s, check(&s));
        }
        tally
    });
    parts.into_iter().fold(head, Tally::merge)
}

fn sweep_semigroups(statement: Statement, max_f: u32, options: &SweepOptions) -> Tally {
    let domain: Vec<NumericalSet> = (1..=max_f).flat_map(semigroups_with_frobenius).collect();
    let chunks: Vec<Vec<NumericalSet>> = domain.chunks(256).map(<[_]>::to_vec).collect();
    let parts = options.map(chunks, |chunk| {
        let mut tally = Tally::default();
        for s in &chunk {
            match statement {
                Statement::ComplementAtomBound => tally.add(
                    s,
                    in_domain(checks::complement_of_semigroup_has_few_atoms(s)),
                ),
                Statement::ComplementClosureCriterion => tally.add(
                    s,
                    in_domain(checks::complement_is_semigroup_iff_one_small_atom(s)),
                ),
                Statement::DoubleComplementClosure => tally.add(
                    s,
                    in_domain(checks::double_complement_closed_iff_max_embedding(s)),
                ),
                Statement::MaxEmbeddingDoubleComplement => tally.add(
                    s,
                    in_domain(checks::max_embedding_double_complement_closed(s)),
                ),
                Statement::LiftRoundTrip => {
                    for steps in [1, 2] {
                        tally.add(s, in_domain(checks::lift_round_trips(s, steps)));
                    }
                }
                _ => unreachable!("{statement} ranges over all numerical sets"),
            }
        }
        tally
    });
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

/// Complements of every semigroup with `1 ≤ F(S) ≤ max_f`.
fn semigroup_complements(max_f: u32, options: &SweepOptions) -> HashSet<NumericalSet> {
    let per_f = options.map((1..=max_f).collect(), |f| {
        semigroups_with_frobenius(f)
            .into_iter()
            .map(|s| s.complement().expect("semigroups with F >= 1 have a base"))
            .collect::<Vec<_>>()
    });
    per_f.into_iter().flatten().collect()
}

/// The predicate agrees with exhaustive search, and on positive instances the
/// witness is a semigroup whose complement is `t`.
fn characterization_holds(t: &NumericalSet, complements: &HashSet<NumericalSet>) -> Result<bool> {
    let predicted = t.is_semigroup_complement()?;
    if predicted != complements.contains(t) {
        return Ok(false);
    }
    if predicted {
        let witness = t.witness_semigroup()?;
        let f = t.frobenius().unwrap();
        return Ok(witness.is_semigroup()
            && witness.frobenius() == Some(f + 2)
            && witness.base() == Some(f + 1)
            && witness.complement()? == *t);
    }
    Ok(true)
}
