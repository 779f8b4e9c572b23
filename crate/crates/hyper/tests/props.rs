use hyperlab_hyper::{
    builtin, census_seq, check_hypergroup, check_hypersemigroup, powerset_add, subset,
    CensusSuite, Hypermagma, Mask,
};
use proptest::prelude::*;

fn any_fixture() -> impl Strategy<Value = Hypermagma> {
    prop_oneof![
        Just(builtin("sign").unwrap()),
        Just(builtin("krasner").unwrap()),
        Just(builtin("tropical_chain(4)").unwrap()),
        Just(builtin("mass_b(4)").unwrap()),
        Just(builtin("pair_sum(4)").unwrap()),
        Just(builtin("empty_sum(3)").unwrap()),
    ]
}

fn permute(h: &Hypermagma, perm: &[usize]) -> Hypermagma {
    let n = h.len();
    let mut hyperop = vec![vec![0 as Mask; n]; n];
    for a in 0..n {
        for b in 0..n {
            hyperop[perm[a]][perm[b]] =
                subset::from_elems(subset::elems(h.hyperop[a][b]).map(|x| perm[x]));
        }
    }
    Hypermagma {
        carrier: (0..n).map(|i| h.carrier[perm.iter().position(|&p| p == i).unwrap()].clone()).collect(),
        hyperop,
        hyperzero: h.hyperzero.map(|z| perm[z]),
        mul: None,
    }
}

proptest! {
    #[test]
    fn powerset_add_is_monotone(h in any_fixture(), seed in any::<u32>()) {
        let full = subset::full(h.len());
        let s1 = seed & full;
        let s2 = (seed >> 8) & full;
        let s1_sup = s1 | ((seed >> 16) & full);
        let s2_sup = s2 | ((seed >> 24) & full);
        let small = powerset_add(&h, s1, s2);
        let large = powerset_add(&h, s1_sup, s2_sup);
        prop_assert_eq!(small & !large, 0, "sum of subsets stays inside sum of supersets");
    }

    #[test]
    fn powerset_add_preserves_singleton_table(h in any_fixture(), seed in any::<u32>()) {
        let n = h.len();
        let a = seed as usize % n;
        let b = (seed >> 8) as usize % n;
        prop_assert_eq!(
            powerset_add(&h, subset::singleton(a), subset::singleton(b)),
            h.hadd(a, b)
        );
    }

    #[test]
    fn census_survivors_are_permutation_closed(
        swap in any::<bool>(),
        index in any::<prop::sample::Index>(),
    ) {
        let tables = census_seq(3, CensusSuite::Hypergroup).unwrap();
        let h = &tables[index.index(tables.len())];
        let perm = if swap { vec![0, 2, 1] } else { vec![0, 1, 2] };
        let permuted = permute(h, &perm);
        let outcome = check_hypergroup(&permuted).unwrap();
        prop_assert!(outcome.report.passed());
    }

    #[test]
    fn hypersemigroup_check_is_label_independent(h in any_fixture(), swap in any::<bool>()) {
        let n = h.len();
        let mut perm: Vec<usize> = (0..n).collect();
        if swap && n >= 3 {
            perm.swap(1, n - 1);
        }
        let before = check_hypersemigroup(&h).unwrap().passed();
        let after = check_hypersemigroup(&permute(&h, &perm)).unwrap().passed();
        prop_assert_eq!(before, after);
    }
}
