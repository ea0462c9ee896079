//! Closure under addition, the associated semigroup and atoms.

use crate::error::{Error, Result};
use crate::set::NumericalSet;

impl NumericalSet {
    /// `s + S ⊆ S`, checked only on `[0, F(S)]`; larger sums are members anyway.
    fn absorbs(&self, s: u32) -> bool {
        !self.members().shift_escapes(s as usize)
    }

    /// Closed under addition. Only sums up to `F(S)` can fail.
    pub fn is_semigroup(&self) -> bool {
        self.small_elements().into_iter().all(|s| self.absorbs(s))
    }

    /// `A(S) = {s ∈ S | s + S ⊆ S}`, the largest semigroup inside `S`
    /// sharing its Frobenius number.
    pub fn associated_semigroup(&self) -> NumericalSet {
        let Some(f) = self.frobenius() else {
            return NumericalSet::naturals();
        };
        NumericalSet::from_fn(f + 1, |n| n == 0 || (self.contains(n) && self.absorbs(n)))
    }

    fn require_semigroup(&self, what: &'static str) -> Result<()> {
        if self.is_semigroup() {
            Ok(())
        } else {
            Err(Error::NotSemigroup(what))
        }
    }

    /// Minimal generating set. Every atom lies in `[m(S), F(S) + m(S)]`.
    pub fn atoms(&self) -> Result<Vec<u32>> {
        self.require_semigroup("atoms")?;
        let m = self.multiplicity();
        let limit = (self.frobenius_signed() + i64::from(m)).max(i64::from(m)) as u32;
        let positive: Vec<u32> = self.elements_up_to(limit).skip(1).collect();
        let mut decomposable = vec![false; limit as usize + 1];
        for (i, &a) in positive.iter().enumerate() {
            for &b in &positive[i..] {
                match a.checked_add(b) {
                    Some(sum) if sum <= limit => decomposable[sum as usize] = true,
                    _ => break,
                }
            }
        }
        Ok(positive
            .into_iter()
            .filter(|&a| !decomposable[a as usize])
            .collect())
    }

    pub fn embedding_dimension(&self) -> Result<u32> {
        Ok(self.atoms()?.len() as u32)
    }

    /// Atoms below the Frobenius number.
    pub fn small_atoms(&self) -> Result<Vec<u32>> {
        let f = self.frobenius_signed();
        Ok(self
            .atoms()?
            .into_iter()
            .filter(|&a| i64::from(a) < f)
            .collect())
    }

    /// `e(S) = m(S)`.
    pub fn is_max_embedding_dimension(&self) -> Result<bool> {
        Ok(self.embedding_dimension()? == self.multiplicity())
    }

    /// `{x - m(S) | x ∈ S, x > 0}`.
    pub fn shift_down(&self) -> NumericalSet {
        let m = self.multiplicity();
        NumericalSet::from_sorted_gaps(
            self.gaps()
                .iter()
                .filter(|&&g| g > m)
                .map(|&g| g - m)
                .collect(),
        )
    }
}
