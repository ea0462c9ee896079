//! Numerical sets: cofinite subsets of the naturals that contain 0.
//!
//! A set is stored by its gaps, the finitely many naturals it misses. Two
//! text notations are supported:
//!
//! - element notation, `0,2,4,7,8,10,12->`: every element up to `F(S) + 1`,
//!   then an arrow meaning "and everything after";
//! - gap notation, `gaps:1,3,5,6,9,11`.
//!
//! The naturals themselves are `0->` and `gaps:`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct NumericalSet {
    gaps: Vec<u32>,
    /// Membership over `[0, F(S)]`; everything above is in the set.
    members: Bits,
}

impl NumericalSet {
    /// The naturals, the only numerical set with no gaps.
    pub fn naturals() -> Self {
        NumericalSet {
            gaps: Vec::new(),
            members: Bits::zeros(0),
        }
    }

    /// Builds a set from a strictly increasing sequence of positive gaps.
    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self> {
        let gaps: Vec<u32> = gaps.into_iter().collect();
        if let Some(&0) = gaps.first() {
            return Err(Error::InvalidGaps(
                "0 always belongs to a numerical set".into(),
            ));
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGaps(format!(
                "gaps must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self::from_sorted_gaps(gaps))
    }

    pub(crate) fn from_sorted_gaps(gaps: Vec<u32>) -> Self {
        debug_assert!(gaps.first() != Some(&0));
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        let len = gaps.last().map_or(0, |&f| f as usize + 1);
        let mut members = Bits::zeros(len);
        let mut next_gap = gaps.iter().peekable();
        for n in 0..len {
            if next_gap.peek() == Some(&&(n as u32)) {
                next_gap.next();
            } else {
                members.set(n);
            }
        }
        NumericalSet { gaps, members }
    }

    /// The set whose members in `[0, bound)` are given by `member`; every
    /// integer from `bound` on is a member. `member(0)` must hold.
    pub fn from_fn(bound: u32, mut member: impl FnMut(u32) -> bool) -> Self {
        let gaps: Vec<u32> = (0..bound).filter(|&n| !member(n)).collect();
        assert!(gaps.first() != Some(&0), "0 must belong to a numerical set");
        Self::from_sorted_gaps(gaps)
    }

    /// The set with Frobenius number `f` whose small elements `1..f` are
    /// selected by `mask`: bit `i - 1` set means `i` is in the set.
    pub fn from_small_mask(frobenius: u32, mask: u64) -> Self {
        assert!(
            (1..=64).contains(&frobenius),
            "frobenius number out of mask range"
        );
        Self::from_fn(frobenius + 1, |n| {
            n == 0 || (n < frobenius && mask >> (n - 1) & 1 == 1)
        })
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn is_naturals(&self) -> bool {
        self.gaps.is_empty()
    }

    #[inline]
    pub fn contains(&self, n: u32) -> bool {
        n as usize >= self.members_len() || self.members.get(n as usize)
    }

    #[inline]
    pub(crate) fn members_len(&self) -> usize {
        self.gaps.last().map_or(0, |&f| f as usize + 1)
    }

    pub(crate) fn members(&self) -> &Bits {
        &self.members
    }

    /// Largest gap, `None` for the naturals.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// Frobenius number with the `-1` convention for the naturals.
    pub fn frobenius_signed(&self) -> i64 {
        self.frobenius().map_or(-1, i64::from)
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Smallest non-zero element.
    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&n| self.contains(n)).unwrap()
    }

    /// Largest element below the Frobenius number, `None` for the naturals.
    pub fn base(&self) -> Option<u32> {
        let f = self.frobenius()?;
        (0..f).rev().find(|&n| self.contains(n))
    }

    /// Elements in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..=bound).filter(move |&n| self.contains(n))
    }

    /// Positive elements below the Frobenius number.
    pub fn small_elements(&self) -> Vec<u32> {
        match self.frobenius() {
            Some(f) => (1..f).filter(|&n| self.contains(n)).collect(),
            None => Vec::new(),
        }
    }

    pub fn scalars(&self) -> SetScalars {
        SetScalars {
            frobenius: self.frobenius_signed(),
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            base: self.base(),
        }
    }

    /// `S ∪ [from, ∞)`.
    pub fn union_from(&self, from: u32) -> Self {
        Self::from_sorted_gaps(self.gaps.iter().copied().filter(|&g| g < from).collect())
    }

    /// `S ∖ {n}` for a positive element `n`.
    pub fn without(&self, n: u32) -> Result<Self> {
        if n == 0 || !self.contains(n) {
            return Err(Error::Precondition(format!(
                "{n} is not a positive element of {self}"
            )));
        }
        let mut gaps = self.gaps.clone();
        let at = gaps.partition_point(|&g| g < n);
        gaps.insert(at, n);
        Ok(Self::from_sorted_gaps(gaps))
    }

    /// Is every element of `self` an element of `other`?
    pub fn is_subset_of(&self, other: &NumericalSet) -> bool {
        // Containment of sets is reverse containment of gap sets.
        other.gaps.iter().all(|&g| !self.contains(g))
    }

    /// Text in gap notation, e.g. `gaps:1,3`.
    pub fn gap_notation(&self) -> String {
        let mut out = String::from("gaps:");
        out.push_str(&join(self.gaps.iter()));
        out
    }
}

fn join<'a>(items: impl Iterator<Item = &'a u32>) -> String {
    items.map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl PartialEq for NumericalSet {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSet {}

impl Hash for NumericalSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl PartialOrd for NumericalSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

/// Element notation.
impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let conductor = self.frobenius().map_or(0, |f| f + 1);
        let elements: Vec<u32> = self.elements_up_to(conductor).collect();
        write!(f, "{}->", join(elements.iter()))
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSet({self})")
    }
}

impl Serialize for NumericalSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_list(text: &str) -> Result<Vec<u32>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u32>()
                .map_err(|_| Error::Parse(format!("`{item}` is not a natural number")))
        })
        .collect()
}

impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(list) = text.strip_prefix("gaps:") {
            let gaps = parse_list(list)?;
            return Self::from_gaps(gaps).map_err(|e| Error::Parse(e.to_string()));
        }

        let list = text
            .strip_suffix("->")
            .or_else(|| text.strip_suffix('→'))
            .ok_or_else(|| Error::Parse("element notation must end with `->`".into()))?;
        let elements = parse_list(list)?;
        if elements.first() != Some(&0) {
            return Err(Error::Parse("element notation must start with 0".into()));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "elements must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        let last = *elements.last().unwrap();
        let n = elements.len();
        // The last listed element must be F(S) + 1, so the one before it is a gap.
        if n >= 2 && elements[n - 2] + 1 == last {
            return Err(Error::Parse(format!(
                "non-canonical element list: {} directly precedes the arrow element {last}",
                last - 1
            )));
        }
        let mut listed = elements.iter().peekable();
        Ok(Self::from_fn(last, |k| {
            while listed.peek().is_some_and(|&&e| e < k) {
                listed.next();
            }
            listed.peek() == Some(&&k)
        }))
    }
}

/// Scalar invariants of a numerical set. The naturals report a Frobenius
/// number of `-1` and no base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetScalars {
    pub frobenius: i64,
    pub genus: u32,
    pub multiplicity: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<u32>,
}
