use hyperlab_core::pair::{check_circ_distributive, find_property_n, generated_submagma};
use hyperlab_core::{check_module, check_pair, check_surpassing, Verdict};
use hyperlab_hyper::{
    build_hyperpair, builtin, check_hyperfield, check_hypergroup, check_hypersemigroup,
    powerset_add, weakly_neutral_family, HyperError,
};

fn failures(report: &hyperlab_core::Report) -> Vec<String> {
    report.failures().map(|c| c.law.clone()).collect()
}

#[test]
fn sign_and_krasner_are_hyperfields() {
    for spec in ["sign", "krasner"] {
        let h = builtin(spec).unwrap();
        let report = check_hyperfield(&h).unwrap();
        assert!(report.passed(), "{spec}: {:?}", failures(&report));
    }
}

#[test]
fn krasner_negation_is_the_identity() {
    let h = builtin("krasner").unwrap();
    let outcome = check_hypergroup(&h).unwrap();
    assert_eq!(outcome.negation, Some(vec![0, 1]));
}

#[test]
fn sign_negation_swaps_the_signs() {
    let outcome = check_hypergroup(&builtin("sign").unwrap()).unwrap();
    assert_eq!(outcome.negation, Some(vec![0, 2, 1]));
}

#[test]
fn tropical_chain_is_a_hypergroup_without_mul() {
    let h = builtin("tropical_chain(4)").unwrap();
    let outcome = check_hypergroup(&h).unwrap();
    assert!(outcome.report.passed(), "{:?}", failures(&outcome.report));
    assert_eq!(outcome.negation, Some((0..5).collect()));
    assert!(matches!(check_hyperfield(&h), Err(HyperError::NeedsMul(_))));
}

#[test]
fn mass_b_is_a_hypergroup_across_its_validity_range() {
    for n in 3..=7 {
        let h = builtin(&format!("mass_b({n})")).unwrap();
        let outcome = check_hypergroup(&h).unwrap();
        assert!(outcome.report.passed(), "n={n}: {:?}", failures(&outcome.report));
        assert_eq!(outcome.negation, Some((0..n).collect()), "negation is the identity");
    }
}

#[test]
fn mass_b_below_three_is_a_parameter_error() {
    assert!(matches!(builtin("mass_b(2)"), Err(HyperError::ParamRange { .. })));
}

#[test]
fn mass_c_fails_associativity_from_four_up() {
    for n in 4..=6 {
        let h = builtin(&format!("mass_c({n})")).unwrap();
        let outcome = check_hypergroup(&h).unwrap();
        let expected: Vec<&str> = if n == 4 {
            // At n = 5 and up the triple sums each cover the whole carrier,
            // so associativity recovers; unique negation never does.
            vec!["add-associative", "unique-negation"]
        } else {
            vec!["unique-negation"]
        };
        assert_eq!(failures(&outcome.report), expected, "n={n}");
        assert!(outcome.negation.is_none());
    }
    let report = check_hypersemigroup(&builtin("mass_c(4)").unwrap()).unwrap();
    let Verdict::Fail { witness, .. } = &report.checks[1].verdict else {
        panic!("expected an associativity failure");
    };
    assert!(witness.starts_with("(s1+s1)+s2"), "first witness: {witness}");
}

#[test]
fn mass_a_collapses_to_krasner_at_two_but_overnegates_beyond() {
    assert!(check_hyperfield(&builtin("mass_a(2)").unwrap()).unwrap().passed());
    for n in 3..=5 {
        let outcome = check_hypergroup(&builtin(&format!("mass_a({n})")).unwrap()).unwrap();
        assert!(failures(&outcome.report).contains(&"unique-negation".to_string()), "n={n}");
    }
}

#[test]
fn idem_is_uniquely_negated_only_at_three() {
    let outcome = check_hypergroup(&builtin("idem(3)").unwrap()).unwrap();
    assert!(outcome.report.passed(), "{:?}", failures(&outcome.report));
    for n in [2, 4, 5, 6] {
        let outcome = check_hypergroup(&builtin(&format!("idem({n})")).unwrap()).unwrap();
        assert!(failures(&outcome.report).contains(&"unique-negation".to_string()), "n={n}");
    }
}

#[test]
fn unqualified_sum_families_have_no_neutral_zero() {
    for spec in ["all_sum(3)", "pair_sum(3)", "empty_sum(3)"] {
        let report = check_hypersemigroup(&builtin(spec).unwrap()).unwrap();
        assert_eq!(failures(&report), vec!["hyperzero-neutral"], "{spec}");
    }
}

#[test]
fn powerset_add_absorbs_the_empty_set() {
    let h = builtin("sign").unwrap();
    assert_eq!(powerset_add(&h, 0, 0b111), 0);
    assert_eq!(powerset_add(&h, 0b001, 0b110), 0b111 & powerset_add(&h, 0b001, 0b110));
    assert_eq!(powerset_add(&h, 0b001, 0b010), 0b010);
}

#[test]
fn sign_hyperpair_family_is_the_four_member_closure() {
    let hp = build_hyperpair(&builtin("sign").unwrap(), None, None).unwrap();
    assert_eq!(hp.family, vec![0b001, 0b010, 0b100, 0b111]);
    assert_eq!(hp.zero_family, vec![0, 3]);
    assert_eq!(hp.tangibles, vec![1, 2]);
    assert!(hp.mul_closed);
}

#[test]
fn krasner_hyperpair_family_is_all_three_nonempty_subsets() {
    let hp = build_hyperpair(&builtin("krasner").unwrap(), None, None).unwrap();
    assert_eq!(hp.family, vec![0b01, 0b10, 0b11]);
    assert_eq!(hp.zero_family, vec![0, 2]);
}

#[test]
fn hyperpair_modules_pass_the_core_laws() {
    for spec in ["sign", "krasner", "mass_a(3)", "mass_b(3)", "idem(4)"] {
        let hp = build_hyperpair(&builtin(spec).unwrap(), None, None).unwrap();
        let pair = hp.as_pair();
        let module = check_module(&pair.module).unwrap();
        assert!(module.passed(), "{spec}: {:?}", failures(&module));
        let report = check_pair(&pair).unwrap();
        assert!(report.passed(), "{spec}: {:?}", failures(&report));
    }
}

#[test]
fn sign_hyperpair_is_proper() {
    let pair = build_hyperpair(&builtin("sign").unwrap(), None, None).unwrap().as_pair();
    let report = check_pair(&pair).unwrap();
    assert!(report.notes.iter().any(|n| n == "proper: true"), "{:?}", report.notes);
}

#[test]
fn subset_order_is_a_surpassing_relation_on_hyperpairs() {
    for spec in [
        "sign",
        "krasner",
        "mass_a(3)",
        "mass_b(3)",
        "mass_c(4)",
        "idem(4)",
        "all_sum(3)",
        "pair_sum(3)",
    ] {
        let hp = build_hyperpair(&builtin(spec).unwrap(), None, None).unwrap();
        let report = check_surpassing(&hp.as_pair(), &hp.subset_order()).unwrap();
        assert!(report.passed(), "{spec}: {:?}", failures(&report));
    }
}

#[test]
fn empty_sum_is_not_a_hyperpair() {
    let hp = build_hyperpair(&builtin("empty_sum(3)").unwrap(), None, None).unwrap();
    assert!(hp.family.contains(&0), "the empty set is materialized");
    let pair = hp.as_pair();
    let module = check_module(&pair.module).unwrap();
    assert!(failures(&module).contains(&"zero-neutral".to_string()));
    let order = check_surpassing(&pair, &hp.subset_order()).unwrap();
    assert!(failures(&order).contains(&"zero-rigidity".to_string()));
}

#[test]
fn unqualified_sum_hyperpairs_flag_the_missing_neutral() {
    for spec in ["all_sum(3)", "pair_sum(3)"] {
        let hp = build_hyperpair(&builtin(spec).unwrap(), None, None).unwrap();
        let module = check_module(&hp.as_pair().module).unwrap();
        assert!(failures(&module).contains(&"zero-neutral".to_string()), "{spec}");
    }
}

#[test]
fn sign_hyperpair_pseudo_negative_is_minus_one() {
    let hp = build_hyperpair(&builtin("sign").unwrap(), None, None).unwrap();
    let witnesses = find_property_n(&hp.as_pair()).unwrap();
    assert_eq!(witnesses.len(), 1);
    assert_eq!(witnesses[0].pseudo_neg_one, 2, "the {{-1}} member");
    assert_eq!(witnesses[0].e, 3, "e is the full subset");
    assert_eq!(witnesses[0].quasi_zeros, vec![3]);
}

#[test]
fn pair_sum_fails_property_n_while_all_sum_satisfies_it() {
    for n in 2..=4 {
        let fails = build_hyperpair(&builtin(&format!("pair_sum({n})")).unwrap(), None, None).unwrap();
        assert!(find_property_n(&fails.as_pair()).unwrap().is_empty(), "pair_sum({n})");
        let holds = build_hyperpair(&builtin(&format!("all_sum({n})")).unwrap(), None, None).unwrap();
        let witnesses = find_property_n(&holds.as_pair()).unwrap();
        assert!(!witnesses.is_empty(), "all_sum({n})");
        let full = holds.family.len() - 1;
        assert!(witnesses.iter().all(|w| w.e == full), "e is the whole carrier");
    }
}

#[test]
fn krasner_and_sign_hyperpairs_are_circ_distributive() {
    for spec in ["krasner", "sign"] {
        let hp = build_hyperpair(&builtin(spec).unwrap(), None, None).unwrap();
        let pair = hp.as_pair();
        let witness = &find_property_n(&pair).unwrap()[0];
        let report = check_circ_distributive(&pair, witness).unwrap();
        assert!(report.passed(), "{spec}: {:?}", failures(&report));
    }
}

#[test]
fn sign_hyperpair_heights() {
    let hp = build_hyperpair(&builtin("sign").unwrap(), None, None).unwrap();
    let sub = generated_submagma(&hp.as_pair()).unwrap();
    assert_eq!(sub.height, vec![None, Some(1), Some(1), Some(2)]);
    assert!(!sub.admissible, "the zero singleton is not a sum of tangibles");
}

#[test]
fn all_sum_hyperpair_spans_everything_but_the_zero_singleton() {
    let hp = build_hyperpair(&builtin("all_sum(3)").unwrap(), None, None).unwrap();
    let sub = generated_submagma(&hp.as_pair()).unwrap();
    assert!(!sub.admissible, "the zero singleton is unreachable");
    assert_eq!(sub.height[hp.family.len() - 1], Some(2), "the full set is a tangible sum");
}

#[test]
fn hypergroup_negation_extends_to_the_hyperpair() {
    for spec in ["sign", "krasner", "mass_b(3)", "tropical_chain(3)"] {
        let h = builtin(spec).unwrap();
        let neg = check_hypergroup(&h).unwrap().negation.unwrap();
        let map = |mask: u32| -> u32 {
            hyperlab_hyper::subset::from_elems(hyperlab_hyper::subset::elems(mask).map(|x| neg[x]))
        };
        if h.mul.is_none() {
            continue;
        }
        let hp = build_hyperpair(&h, None, None).unwrap();
        for (i, &s1) in hp.family.iter().enumerate() {
            assert!(hp.family.contains(&map(s1)), "{spec}: closed under negation");
            for (j, &s2) in hp.family.iter().enumerate() {
                let sum = hp.family[hp.add[i][j]];
                assert_eq!(
                    map(sum),
                    powerset_add(&h, map(s2), map(s1)),
                    "{spec}: negation is an anti-automorphism on the family"
                );
            }
        }
    }
}

#[test]
fn hyperpair_without_mul_needs_tangibles() {
    let h = builtin("tropical_chain(3)").unwrap();
    assert!(matches!(
        build_hyperpair(&h, None, None),
        Err(HyperError::NeedsTangibles(_))
    ));
}

#[test]
fn tangible_override_must_be_a_submonoid() {
    let h = builtin("sign").unwrap();
    assert!(matches!(
        build_hyperpair(&h, Some(&[2]), None),
        Err(HyperError::Precondition(_))
    ));
    let hp = build_hyperpair(&h, Some(&[1]), None).unwrap();
    assert_eq!(hp.tangibles, vec![1]);
    assert_eq!(hp.family, vec![0b001, 0b010, 0b100, 0b111], "closure is unchanged");
}

#[test]
fn generalized_zero_seed_widens_the_zero_family() {
    let h = builtin("sign").unwrap();
    let hp = build_hyperpair(&h, None, Some(0b110)).unwrap();
    assert_eq!(hp.zero_family, vec![1, 2, 3], "members meeting {{1,-1}}");
}

#[test]
fn weakly_neutral_families_contain_every_zero_superset() {
    let (members, report) = weakly_neutral_family(&builtin("krasner").unwrap()).unwrap();
    assert_eq!(members, vec![0b01, 0b11]);
    assert!(report.passed());

    let (members, report) = weakly_neutral_family(&builtin("sign").unwrap()).unwrap();
    assert_eq!(members, vec![0b001, 0b011, 0b101, 0b111]);
    assert!(report.passed());
}

#[test]
fn weakly_neutral_family_requires_a_hypersemigroup() {
    assert!(matches!(
        weakly_neutral_family(&builtin("all_sum(3)").unwrap()),
        Err(HyperError::Precondition(_))
    ));
}

#[test]
fn hyperfield_suite_flags_a_non_invertible_element() {
    let mut h = builtin("krasner").unwrap();
    if let Some(mul) = h.mul.as_mut() {
        mul.table[1][1] = 0;
    }
    let report = check_hyperfield(&h).unwrap();
    assert!(failures(&report).contains(&"nonzero-multiplicative-group".to_string()));
}

#[test]
fn hypermagma_serde_round_trip() {
    let h = builtin("mass_b(4)").unwrap();
    let json = serde_json::to_string(&h).unwrap();
    let back: hyperlab_hyper::Hypermagma = serde_json::from_str(&json).unwrap();
    assert_eq!(h, back);
}
