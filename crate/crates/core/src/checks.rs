//! Per-instance predicates for the structural statements about complements.
//!
//! Every check returns `Ok(true)` when the statement holds for the given set,
//! `Ok(false)` on a counterexample and an error when the set lies outside the
//! statement's hypotheses. Hypotheses are always evaluated on computed data,
//! never taken on trust from the caller.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::NumericalSet;

/// Shape of a semigroup's part below its Frobenius number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomShape {
    /// `{0, F+1 ->}`.
    NoSmall,
    /// `{0, F-l, F+1 ->}`: one small element, necessarily an atom.
    OneSmallElement,
    /// `mN ∪ {F+1 ->}` with at least two small elements.
    OneSmallAtom,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AtomProfile {
    pub small_atom_count: u32,
    pub small_element_count: u32,
    pub shape: AtomShape,
}

impl AtomProfile {
    pub fn of(semigroup: &NumericalSet) -> Result<Self> {
        let small_atom_count = semigroup.small_atoms()?.len() as u32;
        let small_element_count = semigroup.small_elements().len() as u32;
        let shape = match (small_element_count, small_atom_count) {
            (0, _) => AtomShape::NoSmall,
            (1, _) => AtomShape::OneSmallElement,
            (_, 1) => AtomShape::OneSmallAtom,
            _ => AtomShape::Other,
        };
        Ok(AtomProfile {
            small_atom_count,
            small_element_count,
            shape,
        })
    }
}

fn require_proper_semigroup(s: &NumericalSet, what: &'static str) -> Result<()> {
    if s.is_naturals() {
        return Err(Error::Naturals(what));
    }
    if !s.is_semigroup() {
        return Err(Error::NotSemigroup(what));
    }
    Ok(())
}

fn require_c1_at_least_two(s: &NumericalSet) -> Result<()> {
    let c1 = s.diagram().c1();
    if c1 < 2 {
        return Err(Error::Precondition(format!(
            "{s} has c1 = {c1}, the second complement does not exist"
        )));
    }
    Ok(())
}

/// For a semigroup `S`: `A(S̃)` has at most one small atom, and none when
/// `S` has two or more small atoms.
pub fn complement_of_semigroup_has_few_atoms(s: &NumericalSet) -> Result<bool> {
    require_proper_semigroup(s, "complement atom bound")?;
    let assoc = s.complement()?.associated_semigroup();
    let complement_atoms = assoc.small_atoms()?.len();
    let own_atoms = s.small_atoms()?.len();
    Ok(complement_atoms <= 1 && (own_atoms <= 1 || complement_atoms == 0))
}

/// For a set `S` whose complement is a semigroup: `A(S)` has at most one
/// small atom; if `S` itself is not a semigroup, `A(S)` has at most one small
/// element and is `{0, F+1 ->}` when `S` meets `[1, F - B]`, otherwise
/// `{0, B, F+1 ->}`.
pub fn set_with_semigroup_complement_has_few_atoms(s: &NumericalSet) -> Result<bool> {
    if s.is_naturals() {
        return Err(Error::Naturals("associated semigroup bound"));
    }
    if !s.complement()?.is_semigroup() {
        return Err(Error::Precondition(format!(
            "the complement of {s} is not a semigroup"
        )));
    }
    let assoc = s.associated_semigroup();
    if assoc.small_atoms()?.len() > 1 {
        return Ok(false);
    }
    if s.is_semigroup() {
        return Ok(true);
    }
    if assoc.small_elements().len() > 1 {
        return Ok(false);
    }
    let f = s.frobenius().unwrap();
    let b = s.base().unwrap();
    let meets_low = (1..=f - b).any(|n| s.contains(n));
    let expected = NumericalSet::from_fn(f + 1, |n| n == 0 || (!meets_low && n == b));
    Ok(assoc == expected)
}

/// For a semigroup `S`: `S̃` is a semigroup iff `S` has at most one small atom.
pub fn complement_is_semigroup_iff_one_small_atom(s: &NumericalSet) -> Result<bool> {
    require_proper_semigroup(s, "complement closure criterion")?;
    let closed = s.complement()?.is_semigroup();
    Ok(closed == (s.small_atoms()?.len() <= 1))
}

/// `c1(S̃) = c1(S) - 1`.
pub fn complement_drops_one_corner(s: &NumericalSet) -> Result<bool> {
    let t = s.complement()?;
    Ok(t.diagram().c1() + 1 == s.diagram().c1())
}

/// The complement sequence has exactly `c1(S)` steps and ends at the naturals.
pub fn sequence_length_is_c1(s: &NumericalSet) -> bool {
    let seq = s.complement_sequence();
    seq.len() == s.diagram().c1() as usize
        && seq.terms.last().is_some_and(NumericalSet::is_naturals)
}

/// `A(S) ⊆ A(S⁽²⁾)`.
pub fn associated_grows_under_double_complement(s: &NumericalSet) -> Result<bool> {
    require_c1_at_least_two(s)?;
    let second = s.iterated_complement(2).unwrap();
    Ok(s.associated_semigroup()
        .is_subset_of(&second.associated_semigroup()))
}

/// For a semigroup `S`: `S⁽²⁾` is a semigroup iff `S ∪ [B(S), ∞)` has max
/// embedding dimension.
pub fn double_complement_closed_iff_max_embedding(s: &NumericalSet) -> Result<bool> {
    require_proper_semigroup(s, "double complement criterion")?;
    require_c1_at_least_two(s)?;
    let second = s.iterated_complement(2).unwrap();
    let filled = s.union_from(s.base().unwrap());
    Ok(second.is_semigroup() == filled.is_max_embedding_dimension()?)
}

/// For a max embedding dimension semigroup `S`: `S⁽²⁾` is a semigroup.
pub fn max_embedding_double_complement_closed(s: &NumericalSet) -> Result<bool> {
    require_proper_semigroup(s, "max embedding double complement")?;
    require_c1_at_least_two(s)?;
    if !s.is_max_embedding_dimension()? {
        return Err(Error::Precondition(format!(
            "{s} is not of max embedding dimension"
        )));
    }
    Ok(s.iterated_complement(2).unwrap().is_semigroup())
}

/// `lift(S, n)` is a semigroup whose `2n`-th complement is `S`.
pub fn lift_round_trips(s: &NumericalSet, steps: u32) -> Result<bool> {
    let t = s.lift(steps)?;
    Ok(t.is_semigroup() && t.iterated_complement(2 * steps as usize).as_ref() == Some(s))
}

/// The distinct hook lengths of `S`'s diagram are the gaps of `A(S)`.
pub fn hooks_are_associated_gaps(s: &NumericalSet) -> bool {
    let hooks = s.diagram().hooks().set();
    hooks
        .into_iter()
        .eq(s.associated_semigroup().gaps().iter().copied())
}

/// Formula complement and diagram-rotation complement agree.
pub fn complement_paths_agree(s: &NumericalSet) -> Result<bool> {
    Ok(s.complement()? == s.complement_via_diagram()?)
}
