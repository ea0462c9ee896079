//! Young diagrams and their correspondence with numerical sets.
//!
//! Walking the naturals from 0 to `F(S)`, each element is a step left and
//! each gap a step up; the path bounds a Young diagram. Read top to bottom,
//! the row belonging to gap `g` has one box per element of `S` below `g`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::set::NumericalSet;

/// Row lengths, top to bottom, weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// Diagram of a numerical set.
    pub fn of_set(set: &NumericalSet) -> Self {
        // The i-th smallest gap g (0-based) has g - i elements below it.
        let rows = set
            .gaps()
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &g)| g - i as u32)
            .collect();
        YoungDiagram { rows }
    }

    /// Inverse of [`YoungDiagram::of_set`].
    pub fn to_set(&self) -> NumericalSet {
        let k = self.rows.len();
        let gaps = (0..k).map(|j| self.rows[k - 1 - j] + j as u32).collect();
        NumericalSet::from_sorted_gaps(gaps)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn area(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> YoungDiagram {
        let rows = (0..self.width())
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count() as u32)
            .collect();
        YoungDiagram { rows }
    }

    pub fn hooks(&self) -> HookField {
        let cols = self.conjugate().rows;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len as usize)
                    .map(|j| len + cols[j] - (i + j) as u32 - 1)
                    .collect()
            })
            .collect();
        HookField { rows }
    }

    /// Boxes with hook length 1. These are the outer corners, one per
    /// distinct row length.
    pub fn c1(&self) -> u32 {
        let mut distinct = self.rows.clone();
        distinct.dedup();
        distinct.len() as u32
    }

    /// Complement inside the `width × height` bounding rectangle, rotated
    /// by 180°.
    pub fn complement(&self) -> YoungDiagram {
        let width = self.width();
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|&r| width - r)
            .filter(|&r| r > 0)
            .collect();
        YoungDiagram { rows }
    }
}

impl NumericalSet {
    pub fn diagram(&self) -> YoungDiagram {
        YoungDiagram::of_set(self)
    }
}

/// Hook length of every box, laid out like the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookField {
    rows: Vec<Vec<u32>>,
}

impl HookField {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row)?.get(col).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Distinct hook lengths; these are the gaps of the associated semigroup.
    pub fn set(&self) -> BTreeSet<u32> {
        self.iter().collect()
    }

    /// Hook length -> number of boxes with that hook length.
    pub fn multiset(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for h in self.iter() {
            *counts.entry(h).or_insert(0) += 1;
        }
        counts
    }

    pub fn max(&self) -> Option<u32> {
        self.iter().max()
    }

    pub fn count(&self, hook: u32) -> usize {
        self.iter().filter(|&h| h == hook).count()
    }
}
