//! Exhaustive enumeration of numerical sets and semigroups, and the census of
//! associated-semigroup shapes behind the density tables.
//!
//! A numerical set with Frobenius number `f` is determined by which of
//! `1..f` it contains. Sweeps encode that choice as a bitmask (bit `i - 1`
//! for element `i`) and split the mask range `0..2^(f-1)` into contiguous
//! blocks. Blocks are independent; their results merge by addition, so the
//! outcome does not depend on the number of worker threads.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Range;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::NumericalSet;

/// Largest Frobenius number the mask encoding supports.
pub const MAX_MASK_FROBENIUS: u32 = 63;

/// Masks per work block.
const BLOCK: u64 = 1 << 14;

/// Sweeps beyond `max_frobenius` must be requested explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_frobenius: u32,
}

impl Budget {
    pub const DEFAULT_MAX_FROBENIUS: u32 = 26;

    pub fn check(&self, frobenius: u32) -> Result<()> {
        if frobenius > self.max_frobenius || frobenius > MAX_MASK_FROBENIUS {
            return Err(Error::Budget {
                requested: frobenius,
                limit: self.max_frobenius.min(MAX_MASK_FROBENIUS),
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_frobenius: Self::DEFAULT_MAX_FROBENIUS,
        }
    }
}

/// How a sweep runs: worker count and the size budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// `1` runs on the calling thread without a pool.
    pub threads: usize,
    pub budget: Budget,
}

impl SweepOptions {
    pub fn sequential() -> Self {
        SweepOptions {
            threads: 1,
            budget: Budget::default(),
        }
    }

    pub fn with_threads(threads: usize) -> Self {
        SweepOptions {
            threads: threads.max(1),
            budget: Budget::default(),
        }
    }

    /// Maps `work` over `items`, in order, on the configured number of threads.
    pub(crate) fn map<T, R, F>(&self, items: Vec<T>, work: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        if self.threads <= 1 {
            return items.into_iter().map(work).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("failed to start sweep thread pool");
        pool.install(|| items.into_par_iter().map(work).collect())
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions::sequential()
    }
}

/// Every numerical set with Frobenius number `f`, in mask order.
pub fn numerical_sets(frobenius: u32) -> impl Iterator<Item = NumericalSet> {
    assert!(
        (1..=MAX_MASK_FROBENIUS).contains(&frobenius),
        "frobenius number must be in 1..={MAX_MASK_FROBENIUS}"
    );
    (0..1u64 << (frobenius - 1)).map(move |mask| NumericalSet::from_small_mask(frobenius, mask))
}

/// The naturals followed by every numerical set with `1 ≤ F(S) ≤ max`.
pub fn numerical_sets_up_to(max_frobenius: u32) -> impl Iterator<Item = NumericalSet> {
    std::iter::once(NumericalSet::naturals()).chain((1..=max_frobenius).flat_map(numerical_sets))
}

/// Contiguous mask blocks covering every set with Frobenius number in `frobenius`.
pub(crate) fn mask_blocks(frobenius: Range<u32>) -> Vec<(u32, Range<u64>)> {
    let mut blocks = Vec::new();
    for f in frobenius {
        let total = 1u64 << (f - 1);
        let mut start = 0;
        while start < total {
            let end = (start + BLOCK).min(total);
            blocks.push((f, start..end));
            start = end;
        }
    }
    blocks
}

/// Every numerical semigroup with Frobenius number `f`, found by a
/// depth-first choice of small elements in increasing order: a sum of two
/// chosen elements must itself be chosen, and may never equal `f`.
pub fn semigroups_with_frobenius(frobenius: u32) -> Vec<NumericalSet> {
    assert!(
        (1..127).contains(&frobenius),
        "frobenius number must be in 1..127"
    );
    let mut out = Vec::new();
    extend_semigroups(frobenius, 1, 1, 0, &mut out);
    out
}

fn extend_semigroups(f: u32, next: u32, chosen: u128, forced: u128, out: &mut Vec<NumericalSet>) {
    if next == f {
        out.push(NumericalSet::from_fn(f + 1, |n| chosen >> n & 1 == 1));
        return;
    }
    let window = (1u128 << (f + 1)) - 1;
    let must_take = forced >> next & 1 == 1;
    if !must_take {
        extend_semigroups(f, next + 1, chosen, forced, out);
    }
    let taken = chosen | 1 << next;
    // next + every positive chosen element, including next itself
    let sums = forced | ((taken & !1) << next) & window;
    if sums >> f & 1 == 0 {
        extend_semigroups(f, next + 1, taken, sums, out);
    }
}

/// Every numerical semigroup of genus `g`, by walking the semigroup tree:
/// the children of `S` remove one atom larger than `F(S)`.
pub fn semigroups_with_genus(genus: u32) -> Vec<NumericalSet> {
    let mut level = vec![NumericalSet::naturals()];
    for _ in 0..genus {
        level = level
            .iter()
            .flat_map(|s| {
                let f = s.frobenius_signed();
                s.atoms()
                    .expect("tree nodes are semigroups")
                    .into_iter()
                    .filter(move |&a| i64::from(a) > f)
                    .map(move |a| s.without(a).expect("atoms are elements"))
            })
            .collect();
    }
    level.sort();
    level
}

/// Small elements of `A(S)` for the set with Frobenius number `f` and small
/// element mask `mask`, in the same mask encoding.
///
/// Membership is a `u64` over `[0, f]`; `s` belongs to `A(S)` when shifting
/// the membership word by `s` lands nowhere outside it.
#[inline]
pub fn associated_small_mask(frobenius: u32, mask: u64) -> u64 {
    let window = if frobenius == 63 {
        u64::MAX
    } else {
        (1u64 << (frobenius + 1)) - 1
    };
    let members = mask << 1 | 1;
    let mut rest = mask;
    let mut assoc = 0;
    while rest != 0 {
        let s = rest.trailing_zeros() + 1;
        rest &= rest - 1;
        if (members << s) & !members & window == 0 {
            assoc |= 1 << (s - 1);
        }
    }
    assoc
}

/// Census of `A(S)` shapes over all sets with one Frobenius number.
///
/// The classes partition the sets: no small elements; exactly one small
/// element `f - l` (keyed by `l`); `mN ∪ {f+1 ->}` with at least two small
/// elements (keyed by `m`); everything else.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub frobenius: u32,
    pub total_sets: u64,
    pub no_small_elements: u64,
    pub one_small_element: BTreeMap<u32, u64>,
    pub one_small_atom: BTreeMap<u32, u64>,
    pub other: u64,
    #[serde(serialize_with = "serialize_millis")]
    pub wall_time: Duration,
}

fn serialize_millis<S: serde::Serializer>(
    d: &Duration,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl SweepResult {
    fn empty(frobenius: u32) -> Self {
        SweepResult {
            frobenius,
            ..Default::default()
        }
    }

    fn record(&mut self, frobenius: u32, assoc: u64) {
        self.total_sets += 1;
        if assoc == 0 {
            self.no_small_elements += 1;
        } else if assoc & (assoc - 1) == 0 {
            let element = assoc.trailing_zeros() + 1;
            *self
                .one_small_element
                .entry(frobenius - element)
                .or_insert(0) += 1;
        } else {
            let m = assoc.trailing_zeros() + 1;
            let multiples = (1..=(frobenius - 1) / m).fold(0u64, |acc, k| acc | 1 << (k * m - 1));
            if assoc == multiples {
                *self.one_small_atom.entry(m).or_insert(0) += 1;
            } else {
                self.other += 1;
            }
        }
    }

    fn merge(mut self, other: SweepResult) -> Self {
        self.total_sets += other.total_sets;
        self.no_small_elements += other.no_small_elements;
        for (k, v) in other.one_small_element {
            *self.one_small_element.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.one_small_atom {
            *self.one_small_atom.entry(k).or_insert(0) += v;
        }
        self.other += other.other;
        self
    }

    /// Same counts, ignoring timing.
    pub fn same_counts(&self, other: &SweepResult) -> bool {
        SweepResult {
            wall_time: Duration::ZERO,
            ..self.clone()
        } == SweepResult {
            wall_time: Duration::ZERO,
            ..other.clone()
        }
    }

    pub fn class_total(&self) -> u64 {
        self.no_small_elements
            + self.one_small_element.values().sum::<u64>()
            + self.one_small_atom.values().sum::<u64>()
            + self.other
    }

    pub fn one_small_element_count(&self, l: u32) -> u64 {
        self.one_small_element.get(&l).copied().unwrap_or(0)
    }

    /// Share of sets whose associated semigroup has no small elements.
    pub fn ratio_gamma(&self) -> f64 {
        self.no_small_elements as f64 / self.total_sets as f64
    }

    /// Share of sets whose associated semigroup is `{0, f - l, f + 1 ->}`;
    /// `l = 0` is [`SweepResult::ratio_gamma`].
    pub fn ratio_gamma_l(&self, l: u32) -> f64 {
        let count = if l == 0 {
            self.no_small_elements
        } else {
            self.one_small_element_count(l)
        };
        count as f64 / self.total_sets as f64
    }
}

/// Classifies every set with Frobenius number `f` by the shape of `A(S)`.
pub fn shape_census(frobenius: u32, options: &SweepOptions) -> Result<SweepResult> {
    if frobenius == 0 {
        return Err(Error::Precondition(
            "frobenius number must be at least 1".into(),
        ));
    }
    options.budget.check(frobenius)?;
    let started = Instant::now();
    let parts = options.map(mask_blocks(frobenius..frobenius + 1), |(f, masks)| {
        let mut part = SweepResult::empty(f);
        for mask in masks {
            part.record(f, associated_small_mask(f, mask));
        }
        part
    });
    let mut result = parts
        .into_iter()
        .fold(SweepResult::empty(frobenius), SweepResult::merge);
    result.wall_time = started.elapsed();
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub f: u32,
    pub total: u64,
    pub count_gamma: u64,
    pub ratio_gamma: f64,
    /// `(count, ratio)` for `l = 1..=l_max`.
    pub gamma_l: Vec<(u64, f64)>,
    /// Change in `ratio_gamma` from the previous row.
    pub delta_gamma: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityTable {
    pub l_max: u32,
    pub rows: Vec<DensityRow>,
}

impl DensityTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("f,total,count_gamma,ratio_gamma");
        for l in 1..=self.l_max {
            write!(out, ",count_l{l},ratio_l{l}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            write!(
                out,
                "{},{},{},{}",
                row.f, row.total, row.count_gamma, row.ratio_gamma
            )
            .unwrap();
            for (count, ratio) in &row.gamma_l {
                write!(out, ",{count},{ratio}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// One census per Frobenius number in `f_min..=f_max`.
pub fn density_table(
    f_min: u32,
    f_max: u32,
    l_max: u32,
    options: &SweepOptions,
) -> Result<DensityTable> {
    if f_min == 0 || f_min > f_max {
        return Err(Error::Precondition(format!(
            "need 1 <= f_min <= f_max, got {f_min}..{f_max}"
        )));
    }
    options.budget.check(f_max)?;
    let mut rows: Vec<DensityRow> = Vec::new();
    for f in f_min..=f_max {
        let census = shape_census(f, options)?;
        let ratio_gamma = census.ratio_gamma();
        rows.push(DensityRow {
            f,
            total: census.total_sets,
            count_gamma: census.no_small_elements,
            ratio_gamma,
            gamma_l: (1..=l_max)
                .map(|l| (census.one_small_element_count(l), census.ratio_gamma_l(l)))
                .collect(),
            delta_gamma: rows.last().map(|prev| ratio_gamma - prev.ratio_gamma),
        });
    }
    Ok(DensityTable { l_max, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    use crate::checks::{AtomProfile, AtomShape};

    fn set(text: &str) -> NumericalSet {
        text.parse().unwrap()
    }

    #[test]
    fn counts_of_small_frobenius_numbers() {
        let one: Vec<_> = numerical_sets(1).collect();
        assert_eq!(one, vec![set("0,2->")]);
        assert_eq!(numerical_sets(5).count(), 16);
        let three: HashSet<_> = numerical_sets(3).collect();
        let expected: HashSet<_> = ["gaps:1,2,3", "gaps:2,3", "gaps:1,3", "gaps:3"]
            .iter()
            .map(|t| set(t))
            .collect();
        assert_eq!(three, expected);
    }

    #[test]
    fn set_enumeration_is_exhaustive_and_distinct() {
        for f in 1..=16 {
            let seen: HashSet<NumericalSet> = numerical_sets(f).collect();
            assert_eq!(seen.len() as u64, 1 << (f - 1));
            assert!(seen.iter().all(|s| s.frobenius() == Some(f)));
        }
    }

    #[test]
    fn semigroups_by_frobenius_examples() {
        let three = semigroups_with_frobenius(3);
        let mut gaps: Vec<&[u32]> = three.iter().map(|s| s.gaps()).collect();
        gaps.sort();
        assert_eq!(gaps, vec![&[1, 2, 3][..], &[1, 3][..]]);
        assert_eq!(semigroups_with_genus(0), vec![NumericalSet::naturals()]);
    }

    #[test]
    fn semigroup_enumerators_agree_with_filtering() {
        for f in 1..=16 {
            let mut fast = semigroups_with_frobenius(f);
            fast.sort();
            let mut filtered: Vec<_> = numerical_sets(f)
                .filter(NumericalSet::is_semigroup)
                .collect();
            filtered.sort();
            assert_eq!(fast, filtered, "frobenius {f}");
        }
        for g in 0..=9u32 {
            let by_genus = semigroups_with_genus(g);
            let mut filtered: Vec<_> = numerical_sets_up_to((2 * g).saturating_sub(1))
                .filter(|s| s.genus() == g && s.is_semigroup())
                .collect();
            // sets of genus g outside F <= 2g - 1 are never semigroups
            filtered.sort();
            assert_eq!(by_genus, filtered, "genus {g}");
        }
    }

    #[test]
    fn genus_counts_match_known_sequence() {
        // number of numerical semigroups of genus g
        let known = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592];
        for (g, &n) in known.iter().enumerate() {
            assert_eq!(semigroups_with_genus(g as u32).len(), n);
        }
    }

    #[test]
    fn fast_associated_mask_matches_definition() {
        for f in 1..=13 {
            for mask in 0..1u64 << (f - 1) {
                let s = NumericalSet::from_small_mask(f, mask);
                let expected = NumericalSet::from_small_mask(f, associated_small_mask(f, mask));
                assert_eq!(s.associated_semigroup(), expected, "{s}");
            }
        }
        // top of the mask range
        let all = (1u64 << 62) - 1;
        assert_eq!(associated_small_mask(63, all), 0);
    }

    #[test]
    fn census_small_cases() {
        let c = shape_census(1, &SweepOptions::sequential()).unwrap();
        assert_eq!((c.total_sets, c.no_small_elements), (1, 1));
        assert_eq!(c.ratio_gamma(), 1.0);
    }

    #[test]
    fn census_matches_per_set_classification() {
        for f in 1..=12 {
            let census = shape_census(f, &SweepOptions::sequential()).unwrap();
            let mut oracle = SweepResult::empty(f);
            for s in numerical_sets(f) {
                let a = s.associated_semigroup();
                let profile = AtomProfile::of(&a).unwrap();
                oracle.total_sets += 1;
                match profile.shape {
                    AtomShape::NoSmall => oracle.no_small_elements += 1,
                    AtomShape::OneSmallElement => {
                        *oracle
                            .one_small_element
                            .entry(f - a.small_elements()[0])
                            .or_insert(0) += 1
                    }
                    AtomShape::OneSmallAtom => {
                        *oracle.one_small_atom.entry(a.multiplicity()).or_insert(0) += 1
                    }
                    AtomShape::Other => oracle.other += 1,
                }
            }
            assert!(
                census.same_counts(&oracle),
                "f = {f}: {census:?} vs {oracle:?}"
            );
            assert_eq!(census.class_total(), 1 << (f - 1));
        }
    }

    #[test]
    fn parallel_census_matches_sequential() {
        let seq = shape_census(17, &SweepOptions::sequential()).unwrap();
        let par = shape_census(17, &SweepOptions::with_threads(4)).unwrap();
        assert!(seq.same_counts(&par));
    }

    #[test]
    fn budget_gate() {
        let options = SweepOptions::sequential();
        assert_eq!(
            shape_census(27, &options),
            Err(Error::Budget {
                requested: 27,
                limit: 26
            })
        );
        assert!(density_table(1, 30, 2, &options).is_err());
        let wide = SweepOptions {
            budget: Budget { max_frobenius: 100 },
            ..options
        };
        assert!(wide.budget.check(64).is_err());
        assert!(wide.budget.check(40).is_ok());
        assert!(density_table(3, 2, 0, &options).is_err());
    }

    #[test]
    fn density_table_shape() {
        let table = density_table(1, 8, 2, &SweepOptions::sequential()).unwrap();
        assert_eq!(table.rows.len(), 8);
        assert_eq!(table.rows[0].delta_gamma, None);
        for row in &table.rows {
            let census = shape_census(row.f, &SweepOptions::sequential()).unwrap();
            assert_eq!(row.ratio_gamma, census.ratio_gamma_l(0));
            assert_eq!(
                row.count_gamma as f64 / (1u64 << (row.f - 1)) as f64,
                row.ratio_gamma
            );
            assert!(row.gamma_l.iter().all(|&(_, r)| (0.0..=1.0).contains(&r)));
        }
        let csv = table.to_csv();
        assert!(csv.starts_with(
            "f,total,count_gamma,ratio_gamma,count_l1,ratio_l1,count_l2,ratio_l2\n1,1,1,1,"
        ));
        assert_eq!(csv.lines().count(), 9);
        let bare = density_table(2, 2, 0, &SweepOptions::sequential())
            .unwrap()
            .to_csv();
        assert_eq!(bare.lines().next(), Some("f,total,count_gamma,ratio_gamma"));
    }
}
