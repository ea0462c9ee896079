//! Randomized checks on sets far beyond the exhaustive sweep range.

use std::collections::BTreeSet;

use numset::NumericalSet;
use proptest::prelude::*;

/// A random numerical set with Frobenius number up to 150.
fn numerical_set() -> impl Strategy<Value = NumericalSet> {
    proptest::collection::btree_set(1u32..=150, 0..60)
        .prop_map(|gaps| NumericalSet::from_gaps(gaps).unwrap())
}

fn associated_by_definition(s: &NumericalSet) -> BTreeSet<u32> {
    let f = s.frobenius().unwrap_or(0);
    (0..=f + 1)
        .filter(|&n| s.contains(n) && (0..=f + 1).all(|t| !s.contains(t) || s.contains(n + t)))
        .collect()
}

proptest! {
    #[test]
    fn text_round_trip(s in numerical_set()) {
        prop_assert_eq!(&s.to_string().parse::<NumericalSet>().unwrap(), &s);
        prop_assert_eq!(&s.gap_notation().parse::<NumericalSet>().unwrap(), &s);
    }

    #[test]
    fn diagram_round_trip(s in numerical_set()) {
        let d = s.diagram();
        prop_assert_eq!(d.height() as u32, s.genus());
        prop_assert_eq!(&d.to_set(), &s);
    }

    #[test]
    fn associated_semigroup_matches_definition(s in numerical_set()) {
        let a = s.associated_semigroup();
        let f = s.frobenius().unwrap_or(0);
        let members: BTreeSet<u32> = (0..=f + 1).filter(|&n| a.contains(n)).collect();
        prop_assert_eq!(members, associated_by_definition(&s));
        prop_assert!(a.is_semigroup());
    }

    #[test]
    fn hook_lengths_are_associated_gaps(s in numerical_set()) {
        let gaps: BTreeSet<u32> = s.associated_semigroup().gaps().iter().copied().collect();
        prop_assert_eq!(s.diagram().hooks().set(), gaps);
    }

    #[test]
    fn complement_paths_agree(s in numerical_set()) {
        prop_assume!(!s.is_naturals());
        let c = s.complement().unwrap();
        prop_assert_eq!(&c, &s.complement_via_diagram().unwrap());
        prop_assert_eq!(c.diagram().c1() + 1, s.diagram().c1());
        let report = s.complement_report().unwrap();
        prop_assert!(report.violations().is_empty(), "{:?}", report.violations());
    }

    #[test]
    fn sequence_reaches_naturals_in_c1_steps(s in numerical_set()) {
        let seq = s.complement_sequence();
        prop_assert_eq!(seq.len() as u32, s.diagram().c1());
        prop_assert!(seq.terms.last().unwrap().is_naturals());
    }
}
