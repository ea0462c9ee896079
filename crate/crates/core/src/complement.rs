//! The complement of a numerical set, its scalar bookkeeping, the
//! characterization of semigroup complements, complement sequences and the
//! lift that inverts two complement steps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{NumericalSet, SetScalars};

impl NumericalSet {
    /// `S̃ = {B(S) - s | s ∈ S, s ≤ B(S)} ∪ [B(S), ∞)`.
    pub fn complement(&self) -> Result<NumericalSet> {
        let base = self.base().ok_or(Error::Naturals("complement"))?;
        Ok(NumericalSet::from_fn(base, |n| self.contains(base - n)))
    }

    /// Same set as [`NumericalSet::complement`], computed by rotating the
    /// rectangle complement of the Young diagram.
    pub fn complement_via_diagram(&self) -> Result<NumericalSet> {
        if self.is_naturals() {
            return Err(Error::Naturals("complement"));
        }
        Ok(self.diagram().complement().to_set())
    }

    pub fn complement_report(&self) -> Result<ComplementReport> {
        let complement = self.complement()?;
        let report = ComplementReport::new(self.clone(), complement);
        debug_assert_eq!(report.violations(), Vec::<String>::new());
        Ok(report)
    }

    /// Is `self` the complement of some numerical semigroup? Holds iff
    /// `F(T) ∉ T + T`, and for `x, y ∈ T ∩ [0, F(T)]` with `x + y > F(T)`,
    /// `x + y - F(T) - 1 ∈ T`.
    pub fn is_semigroup_complement(&self) -> Result<bool> {
        let f = self
            .frobenius()
            .ok_or(Error::Naturals("semigroup complement test"))?;
        let low: Vec<u32> = self.elements_up_to(f).collect();
        for (i, &x) in low.iter().enumerate() {
            for &y in &low[i..] {
                let sum = x + y;
                if sum == f || (sum > f && !self.contains(sum - f - 1)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A numerical semigroup whose complement is `self`:
    /// `{F(T) + 1 - x | x ∈ T ∩ [0, F(T) + 1]} ∪ [F(T) + 3, ∞)`.
    pub fn witness_semigroup(&self) -> Result<NumericalSet> {
        if !self.is_semigroup_complement()? {
            return Err(Error::Precondition(format!(
                "{self} is not the complement of a semigroup"
            )));
        }
        let f = self.frobenius().unwrap();
        let witness = NumericalSet::from_fn(f + 3, |n| n <= f + 1 && self.contains(f + 1 - n));
        debug_assert!(witness.is_semigroup());
        debug_assert_eq!(witness.frobenius(), Some(f + 2));
        debug_assert_eq!(witness.base(), Some(f + 1));
        debug_assert_eq!(witness.complement().as_ref(), Ok(self));
        Ok(witness)
    }

    /// Repeated complements down to the naturals.
    pub fn complement_sequence(&self) -> ComplementSequence {
        let mut terms = vec![self.clone()];
        while let Ok(next) = terms.last().unwrap().complement() {
            terms.push(next);
        }
        ComplementSequence { terms }
    }

    /// The `i`-th term of the complement sequence, if the sequence is that long.
    pub fn iterated_complement(&self, steps: usize) -> Option<NumericalSet> {
        let mut current = self.clone();
        for _ in 0..steps {
            current = current.complement().ok()?;
        }
        Some(current)
    }

    /// A semigroup `T` whose `2 * steps`-th complement is `self`. One step is
    /// `T = {0} ∪ (m(S) + S) ∖ {F(S) + 2m(S)}`.
    pub fn lift(&self, steps: u32) -> Result<NumericalSet> {
        if self.is_naturals() {
            return Err(Error::Naturals("lift"));
        }
        if !self.is_semigroup() {
            return Err(Error::NotSemigroup("lift"));
        }
        let mut current = self.clone();
        for _ in 0..steps {
            current = current.lift_once();
        }
        Ok(current)
    }

    fn lift_once(&self) -> NumericalSet {
        let m = self.multiplicity();
        let f = self.frobenius().unwrap();
        let mut gaps: Vec<u32> = (1..m).collect();
        gaps.extend(self.gaps().iter().map(|&g| g + m));
        gaps.push(f + 2 * m);
        NumericalSet::from_sorted_gaps(gaps)
    }
}

/// A set, its complement and the scalar identities linking them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub original: NumericalSet,
    pub complement: NumericalSet,
    pub original_scalars: SetScalars,
    pub complement_scalars: SetScalars,
    /// `g(S̃) - g(S)`, always `B(S) - F(S)`.
    pub delta_genus: i64,
    /// `F(S̃) = B(S) - 1`, which happens exactly when `1 ∉ S`.
    pub base_bound_tight: bool,
}

impl ComplementReport {
    fn new(original: NumericalSet, complement: NumericalSet) -> Self {
        let original_scalars = original.scalars();
        let complement_scalars = complement.scalars();
        let base = i64::from(original_scalars.base.unwrap());
        ComplementReport {
            delta_genus: i64::from(complement_scalars.genus) - i64::from(original_scalars.genus),
            base_bound_tight: complement_scalars.frobenius == base - 1,
            original,
            complement,
            original_scalars,
            complement_scalars,
        }
    }

    /// Every broken identity, as a human readable line. Empty when the
    /// frobenius, genus and base relations all hold.
    ///
    /// `B(S̃)` does not exist when `S̃` is the naturals, so the base relation
    /// is only checked otherwise.
    pub fn violations(&self) -> Vec<String> {
        let s = &self.original_scalars;
        let t = &self.complement_scalars;
        let base = i64::from(s.base.unwrap());
        let one_missing = !self.original.contains(1);
        let mut out = Vec::new();
        let bound = base - 1;
        if !(t.frobenius <= bound && bound <= s.frobenius - 2) {
            out.push(format!(
                "F(S~)={} <= B-1={} <= F-2={} fails",
                t.frobenius,
                bound,
                s.frobenius - 2
            ));
        }
        if self.base_bound_tight != one_missing {
            out.push(format!(
                "F(S~)=B-1 is {} but 1∉S is {one_missing}",
                self.base_bound_tight
            ));
        }
        if i64::from(t.genus) != i64::from(s.genus) + base - s.frobenius {
            out.push(format!(
                "g(S~)={} != g+B-F={}",
                t.genus,
                i64::from(s.genus) + base - s.frobenius
            ));
        }
        if self.delta_genus != base - s.frobenius {
            out.push(format!("delta_genus={} != B-F", self.delta_genus));
        }
        if let Some(tb) = t.base {
            let bound = base - i64::from(s.multiplicity);
            let tb = i64::from(tb);
            if tb > bound {
                out.push(format!("B(S~)={tb} > B-m={bound}"));
            }
            if (tb == bound) != one_missing {
                out.push(format!(
                    "B(S~)=B-m is {} but 1∉S is {one_missing}",
                    tb == bound
                ));
            }
        }
        out
    }
}

/// `S = S⁽⁰⁾, S⁽¹⁾, …, ℕ`, each term the complement of the one before.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementSequence {
    pub terms: Vec<NumericalSet>,
}

impl ComplementSequence {
    /// Number of complement steps taken.
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Corner counts of every term.
    pub fn c1_values(&self) -> Vec<u32> {
        self.terms.iter().map(|t| t.diagram().c1()).collect()
    }

    /// Checks that the corner count drops by exactly one per step, that the
    /// sequence length equals the starting corner count and that genus
    /// strictly decreases.
    pub fn validate(&self) -> Result<()> {
        let c1 = self.c1_values();
        if self.len() != c1[0] as usize {
            return Err(Error::Precondition(format!(
                "sequence of {} has {} steps but c1 = {}",
                self.terms[0],
                self.len(),
                c1[0]
            )));
        }
        for (i, pair) in self.terms.windows(2).enumerate() {
            if c1[i + 1] + 1 != c1[i] {
                return Err(Error::Precondition(format!(
                    "c1 goes from {} to {} at step {}",
                    c1[i],
                    c1[i + 1],
                    i + 1
                )));
            }
            if pair[1].genus() >= pair[0].genus() {
                return Err(Error::Precondition(format!(
                    "genus does not drop at step {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}
