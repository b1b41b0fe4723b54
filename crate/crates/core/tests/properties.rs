use numsg::classify::{almost_canonical_conditions, is_almost_symmetric, is_symmetric};
use numsg::{canonical_ideal, classify, NumericalSemigroup, RelativeIdeal};
use proptest::prelude::*;

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..=19, 1..=4).prop_filter_map("gcd must be 1", |g| {
        NumericalSemigroup::from_generators(&g).ok()
    })
}

fn with_ideal() -> impl Strategy<Value = (NumericalSemigroup, RelativeIdeal)> {
    semigroup().prop_flat_map(|s| {
        let f = s.frobenius();
        prop::collection::vec(-3i64..=f + 3, 1..=3)
            .prop_map(move |g| (s.clone(), RelativeIdeal::from_generators(&s, &g).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counting_identities(s in semigroup()) {
        prop_assert_eq!(s.genus() + s.small_members(), (s.frobenius() + 1) as usize);
        if !s.is_natural() {
            let pf = s.pseudo_frobenius().unwrap();
            let f = s.frobenius();
            prop_assert_eq!(pf.last().copied(), Some(f));
            prop_assert!(2 * s.genus() as i64 >= f + pf.len() as i64);
            prop_assert_eq!(2 * s.genus() as i64 == f + pf.len() as i64, is_almost_symmetric(&s).unwrap());
            prop_assert_eq!(pf.len() == 1, is_symmetric(&s).unwrap());
            for &p in &pf {
                prop_assert!(!s.contains(p));
                prop_assert!(s.generators().iter().all(|&g| s.contains(p + g)));
            }
        }
    }

    #[test]
    fn apery_set_is_least_per_residue(s in semigroup()) {
        let e = s.multiplicity();
        let ap = s.apery(e).unwrap();
        prop_assert_eq!(ap.len() as i64, e);
        for (r, &w) in ap.iter().enumerate() {
            prop_assert_eq!(w.rem_euclid(e), r as i64);
            prop_assert!(s.contains(w));
            prop_assert!(!s.contains(w - e));
        }
        prop_assert_eq!(ap.iter().max().copied().unwrap() - e, s.frobenius());
    }

    #[test]
    fn duality_is_an_involution((s, i) in with_ideal()) {
        prop_assume!(!s.is_natural());
        let k = canonical_ideal(&s).unwrap();
        let dual = k.difference(&i).unwrap();
        let back = k.difference(&dual).unwrap();
        prop_assert_eq!(back.as_set(), i.as_set());
        for x in i.min_element() - 2..=i.frobenius() + 2 {
            let y = s.frobenius() - x;
            prop_assert_eq!(dual.contains(y), !i.contains(x));
        }
    }

    #[test]
    fn almost_canonical_conditions_agree((s, i) in with_ideal()) {
        prop_assume!(!s.is_natural());
        let c = almost_canonical_conditions(&i).unwrap();
        prop_assert!(c.iter().all(|&b| b == c[0]), "{:?} for {}", c, i);
        let inv = i.invariants().unwrap();
        prop_assert!(inv.genus + s.genus() >= (s.frobenius() + inv.ideal_type as i64) as usize);
    }

    #[test]
    fn report_is_internally_consistent(s in semigroup()) {
        prop_assume!(!s.is_natural());
        let r = classify(&s).unwrap();
        prop_assert_eq!(r.symmetric, r.semigroup_type == 1);
        prop_assert!(!r.pseudo_symmetric || r.semigroup_type == 2);
        prop_assert!(!r.symmetric || r.almost_symmetric);
        prop_assert!(!r.almost_symmetric || r.gas);
        prop_assert_eq!(r.agl_level == 0, r.symmetric);
        prop_assert!(r.agl_level > 2 || r.gas);
        prop_assert_eq!(r.two_k_gap.is_empty(), r.symmetric);
    }
}
