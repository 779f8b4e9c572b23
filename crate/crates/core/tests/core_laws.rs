use hyperlab_core::fixtures::{
    boolean_module, boolean_pair, direct_power, direct_sum, scalars_mod3, scalars_mod3_pair,
    trivial_monoid, zmod_module, zmod_pair,
};
use hyperlab_core::{
    check_circ_distributive, check_module, check_monoid, check_pair, check_surpassing,
    find_property_n, free_codec, generated_submagma, CoreError, FiniteMonoid, Pair,
    SurpassingRelation, TModule, Verdict,
};

fn mult_mod3() -> FiniteMonoid {
    FiniteMonoid {
        elements: vec!["0".into(), "1".into(), "2".into()],
        op: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]],
        identity: 1,
        absorbing: Some(0),
    }
}

#[test]
fn multiplicative_monoid_mod3_passes() {
    assert!(check_monoid(&mult_mod3()).unwrap().passed());
}

#[test]
fn scalars_and_boolean_modules_pass() {
    assert!(check_module(&scalars_mod3()).unwrap().passed());
    assert!(check_module(&boolean_module()).unwrap().passed());
}

#[test]
fn swapped_action_breaks_zero_absorption() {
    let mut m = boolean_module();
    m.left_action = vec![vec![1, 0]];
    let report = check_module(&m).unwrap();
    assert!(!report.passed());
    let law = report
        .checks
        .iter()
        .find(|c| c.law == "zero-absorbing")
        .unwrap();
    assert!(matches!(law.verdict, Verdict::Fail { .. }));
}

#[test]
fn classical_pair_mod3_is_proper() {
    let report = check_pair(&scalars_mod3_pair()).unwrap();
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n == "proper: true"));
    assert!(report.notes.iter().any(|n| n == "weakly admissible: true"));
}

#[test]
fn full_zero_set_is_a_pair_but_not_proper() {
    let module = scalars_mod3();
    let pair = Pair {
        zero_set: vec![0, 1, 2],
        tangibles: vec![1, 2],
        embedding: vec![1, 2],
        module,
    };
    let report = check_pair(&pair).unwrap();
    assert!(report.passed());
    assert!(report.notes.iter().any(|n| n == "proper: false"));
}

#[test]
fn one_element_zero_set_fails_closure() {
    let module = scalars_mod3();
    let pair = Pair {
        zero_set: vec![1],
        tangibles: vec![1, 2],
        embedding: vec![1, 2],
        module,
    };
    let report = check_pair(&pair).unwrap();
    let law = report
        .checks
        .iter()
        .find(|c| c.law == "zero-set-add-closed")
        .unwrap();
    assert!(matches!(law.verdict, Verdict::Fail { .. }));
}

#[test]
fn equality_is_a_surpassing_relation() {
    for pair in [scalars_mod3_pair(), boolean_pair(), zmod_pair(4)] {
        let rel = SurpassingRelation::equality(pair.module.len());
        assert!(check_surpassing(&pair, &rel).unwrap().passed());
    }
}

#[test]
fn tangible_rigidity_rejects_related_units() {
    let pair = scalars_mod3_pair();
    let mut rel = SurpassingRelation::equality(3);
    rel.rel[1][2] = true;
    let report = check_surpassing(&pair, &rel).unwrap();
    let law = report
        .checks
        .iter()
        .find(|c| c.law == "tangible-rigidity")
        .unwrap();
    assert!(matches!(law.verdict, Verdict::Fail { .. }));
}

#[test]
fn property_n_on_scalars_mod3() {
    let witnesses = find_property_n(&scalars_mod3_pair()).unwrap();
    assert_eq!(witnesses.len(), 1);
    let w = &witnesses[0];
    assert_eq!(w.pseudo_neg_one, 2);
    assert_eq!(w.e, 0);
    assert_eq!(w.quasi_zeros, vec![0]);
}

#[test]
fn property_n_fails_on_boolean_pair() {
    assert!(find_property_n(&boolean_pair()).unwrap().is_empty());
}

#[test]
fn circ_distributivity_on_scalars_mod3() {
    let pair = scalars_mod3_pair();
    let w = &find_property_n(&pair).unwrap()[0];
    assert!(check_circ_distributive(&pair, w).unwrap().passed());
}

#[test]
fn submagma_heights_on_scalars_mod3() {
    let sub = generated_submagma(&scalars_mod3_pair()).unwrap();
    assert!(sub.admissible);
    assert!(sub.report.passed());
    assert_eq!(sub.height, vec![Some(2), Some(1), Some(1)]);
}

#[test]
fn submagma_leaves_unreachable_elements_out() {
    let sub = generated_submagma(&boolean_pair()).unwrap();
    assert!(!sub.admissible);
    assert_eq!(sub.height, vec![None, Some(1)]);
    assert_eq!(sub.members, vec![1]);
}

#[test]
fn submagma_members_are_additively_closed() {
    for pair in [scalars_mod3_pair(), boolean_pair(), zmod_pair(6)] {
        let sub = generated_submagma(&pair).unwrap();
        for &x in &sub.members {
            for &y in &sub.members {
                assert!(sub.members.binary_search(&pair.module.add(x, y)).is_ok());
            }
        }
    }
}

#[test]
fn free_codec_certifies_rank_one_and_two() {
    let m = scalars_mod3();
    let codec = free_codec(&m, &[1]).unwrap();
    assert_eq!(codec.encode[0], vec![None]);
    assert_eq!(codec.encode[1], vec![Some(0)]);
    assert_eq!(codec.encode[2], vec![Some(1)]);

    let m2 = direct_power(&m, 2).unwrap();
    let b10 = m2.index_of("(1,0)").unwrap();
    let b01 = m2.index_of("(0,1)").unwrap();
    let codec2 = free_codec(&m2, &[b10, b01]).unwrap();
    for x in 0..m2.len() {
        assert_eq!(codec2.decode(&m2, &codec2.encode[x]), x);
    }
}

#[test]
fn boolean_is_free_of_rank_one_but_zmod3_is_not() {
    assert!(free_codec(&boolean_module(), &[1]).is_ok());
    assert!(matches!(
        free_codec(&zmod_module(3), &[1]),
        Err(CoreError::NotFree(_))
    ));
}

#[test]
fn direct_sum_requires_matching_acting_monoid() {
    let err = direct_sum(&scalars_mod3(), &boolean_module());
    assert!(matches!(err, Err(CoreError::Precondition(_))));
}

#[test]
fn direct_sum_of_zmods_passes_module_laws() {
    let m = direct_sum(&zmod_module(2), &zmod_module(3)).unwrap();
    assert_eq!(m.len(), 6);
    assert!(check_module(&m).unwrap().passed());
}

#[test]
fn trivial_monoid_module_over_one_element() {
    let m = TModule {
        acting: trivial_monoid(),
        carrier: vec!["0".into()],
        add: vec![vec![0]],
        zero: 0,
        left_action: vec![vec![0]],
        right_action: None,
    };
    assert!(check_module(&m).unwrap().passed());
}
