use hyperlab_core::fixtures::{
    boolean_module, direct_sum, scalars_mod3, trivial_monoid, units_mod3, zmod_module,
};
use hyperlab_core::{TModule, Verdict};
use hyperlab_tensor::{balanced_maps, build_tensor, universal_property_oracle, TensorError, TensorTerm};

fn term(summands: &[(usize, usize)]) -> TensorTerm {
    TensorTerm::new(summands.to_vec()).unwrap()
}

// Expected class partitions below are frozen from hand-run closures of the
// generator rules; each comment sketches the derivation.

#[test]
fn boolean_square_has_five_classes() {
    // Over the trivial monoid both factors are the join semilattice {0, 1}.
    // Hand closure at bound 4: the four simple tensors stay separate except
    // that (0,1) + (1,0) forms its own two-member class; nothing else merges
    // at any length because every rule preserves the pair of coordinatewise
    // joins.
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 4, false).unwrap();
    assert_eq!(t.class_count(), 5);
    assert!(t.saturated, "notes: {:?}", t.notes);

    let z = t.simple_class(0, 0);
    let c01 = t.simple_class(0, 1);
    let c10 = t.simple_class(1, 0);
    let c11 = t.simple_class(1, 1);
    let mixed = t.class_of(&term(&[(0, 1), (1, 0)])).unwrap();
    assert_eq!(t.zero_class, z);
    let mut distinct = vec![z, c01, c10, c11, mixed];
    distinct.sort_unstable();
    distinct.dedup();
    assert_eq!(distinct.len(), 5);

    // The mixed class absorbs into the full simple tensor when summed with
    // it, and is idempotent like everything else here.
    assert_eq!(t.add_classes(mixed, c11), Some(c11));
    assert_eq!(t.add_classes(mixed, mixed), Some(mixed));
    assert_eq!(t.add_classes(c01, c10), Some(mixed));
}

#[test]
fn boolean_zero_class_is_additive_identity() {
    // (0,0) + (v,w) ~ (v,w) is derivable: split (v,w) into (0,w) + (v,w)
    // via v = 0 + v, then merge the zero coordinates back.
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 4, false).unwrap();
    for c in 0..t.class_count() {
        assert_eq!(t.add_classes(t.zero_class, c), Some(c));
        assert_eq!(t.add_classes(c, t.zero_class), Some(c));
    }
}

#[test]
fn zmod2_square_collapses_to_two_classes() {
    // With 0 = 1 + 1 available, (0,1) ~ (1,1) + (1,1) ~ (1, 1+1) = (1,0)
    // ~ (0,0): every zero-coordinate pair lands in the zero class and only
    // class(1,1) survives beside it.
    let m = zmod_module(2);
    let t = build_tensor(&m, &m, &trivial_monoid(), 3, false).unwrap();
    assert_eq!(t.class_count(), 2);
    assert!(t.saturated, "notes: {:?}", t.notes);
    assert_eq!(t.simple_class(0, 1), t.zero_class);
    assert_eq!(t.simple_class(1, 0), t.zero_class);
    let s = t.simple_class(1, 1);
    assert_ne!(s, t.zero_class);
    // F2 addition descends: s + s = 0.
    assert_eq!(t.add_classes(s, s), Some(t.zero_class));
}

#[test]
fn scalar_square_over_units_recovers_the_scalars() {
    // T = F3x acts on the rank-one free module F3. The slide moves any unit
    // across, so class(v, w) = class(1, v * w) for tangible v, w, and the
    // bounded tensor is F3 again: 3 classes with F3 addition.
    let m = scalars_mod3();
    let t = build_tensor(&m, &m, &units_mod3(), 3, false).unwrap();
    assert_eq!(t.class_count(), 3);
    assert!(t.saturated, "notes: {:?}", t.notes);
    let one = t.simple_class(1, 1);
    let two = t.simple_class(1, 2);
    assert_eq!(t.simple_class(2, 2), one, "2 * 2 = 1 in F3x");
    assert_eq!(t.simple_class(2, 1), two);
    assert_eq!(t.add_classes(one, two), Some(t.zero_class));
    assert_eq!(t.add_classes(one, one), Some(two));
}

#[test]
fn negation_rule_matches_plain_closure_on_zmod3() {
    // Z/3 has unique additive inverses, and the negation exchange
    // ((-v), w) ~ (v, (-w)) is already derivable from bilinearity there, so
    // switching it on changes nothing: 3 classes either way.
    let m = zmod_module(3);
    let plain = build_tensor(&m, &m, &trivial_monoid(), 4, false).unwrap();
    let signed = build_tensor(&m, &m, &trivial_monoid(), 4, true).unwrap();
    assert_eq!(plain.class_count(), 3);
    assert_eq!(signed.class_count(), 3);
    assert_eq!(plain.class_of_term, signed.class_of_term);
}

#[test]
fn negation_rule_needs_additive_inverses() {
    let b = boolean_module();
    let err = build_tensor(&b, &b, &trivial_monoid(), 3, true).unwrap_err();
    assert!(matches!(err, TensorError::Precondition(_)));
}

#[test]
fn four_summand_reduction_chain_lands_on_a_simple_tensor() {
    // With v3 = v1 + v2, the four-summand term
    //   (v3, v2) + (v2, v1) + (v2, v2) + (v1, v3)
    // reduces stepwise: merge the middle pair to (v2, v3), merge that with
    // (v1, v3) to (v3, v3), then merge with (v3, v2) to (v3, v2 + v3).
    // Each step is one bilinearity generator, so the bounded closure at 4
    // must identify the endpoints. Checked on three different additions.
    let fixtures: Vec<(hyperlab_core::TModule, usize, usize)> = vec![
        (zmod_module(4), 1, 2),
        (scalars_mod3(), 1, 1),
        (boolean_module(), 0, 1),
    ];
    for (m, v1, v2) in fixtures {
        let v3 = m.add(v1, v2);
        let t = build_tensor(&m, &m, &m.acting.clone(), 4, false).unwrap();
        let start = term(&[(v3, v2), (v2, v1), (v2, v2), (v1, v3)]);
        let end = TensorTerm::simple(v3, m.add(v2, v3));
        assert_eq!(
            t.class_of(&start),
            t.class_of(&end),
            "chain failed on {}",
            m.carrier.join(",")
        );
    }
}

#[test]
fn matched_action_summands_recombine() {
    // If a1 v2 = a2 w2 then v1 a1 (x) v2 + w1 a2 (x) w2 = (v1 + w1) (x) a2 w2:
    // slide both actions right, merge the now-equal right coordinates.
    // Instance in F3 over F3x: a1 = 2, v2 = 1, a2 = 1, w2 = 2, v1 = w1 = 1.
    let m = scalars_mod3();
    let t = build_tensor(&m, &m, &units_mod3(), 3, false).unwrap();
    let (a1, v2, a2, w2, v1, w1) = (1usize, 1usize, 0usize, 2usize, 1usize, 1usize);
    // Acting indices: units_mod3 carrier is [1, 2], so index 1 acts as 2.
    assert_eq!(m.act(a1, v2), m.act(a2, w2));
    let lhs = term(&[(m.act_right(v1, a1), v2), (m.act_right(w1, a2), w2)]);
    let rhs = TensorTerm::simple(m.add(v1, w1), m.act(a2, w2));
    assert_eq!(t.class_of(&lhs), t.class_of(&rhs));
}

#[test]
fn congruence_is_monotone_in_the_bound() {
    // Anything merged at a smaller bound stays merged at a larger one: the
    // rule set is identical and every short context is still available.
    let b = boolean_module();
    let small = build_tensor(&b, &b, &trivial_monoid(), 3, false).unwrap();
    let large = build_tensor(&b, &b, &trivial_monoid(), 5, false).unwrap();
    for (i, t1) in small.terms.iter().enumerate() {
        for (j, t2) in small.terms.iter().enumerate().skip(i + 1) {
            if small.class_of_term[i] == small.class_of_term[j] {
                assert_eq!(large.class_of(t1), large.class_of(t2));
            }
        }
    }
}

#[test]
fn rank_two_free_module_tensors_to_rank_two() {
    // (F3 + F3) tensored with F3 over F3x: sliding units across and adding
    // componentwise leaves exactly the 9 coordinate pairs as classes,
    // mirroring the free module of rank two itself.
    let pair = direct_sum(&scalars_mod3(), &scalars_mod3()).unwrap();
    let line = scalars_mod3();
    let t = build_tensor(&pair, &line, &units_mod3(), 4, false).unwrap();
    assert_eq!(t.class_count(), 9);
    assert!(t.saturated, "notes: {:?}", t.notes);
    let q = t.quotient_module().unwrap();
    assert_eq!(q.len(), 9);
}

#[test]
fn quotient_module_requires_saturation() {
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 2, false).unwrap();
    assert!(!t.saturated);
    assert!(matches!(
        t.quotient_module(),
        Err(TensorError::Unsaturated { bound: 2 })
    ));
}

#[test]
fn quotient_module_passes_module_laws() {
    let m = zmod_module(2);
    let t = build_tensor(&m, &m, &trivial_monoid(), 3, false).unwrap();
    let q = t.quotient_module().unwrap();
    assert_eq!(q.len(), 2);
    assert_eq!(q.zero, t.zero_class);
}

#[test]
fn oversized_carrier_reports_largest_feasible_bound() {
    let nine = direct_sum(&zmod_module(3), &zmod_module(3)).unwrap();
    let err = build_tensor(&nine, &nine, &trivial_monoid(), 4, false).unwrap_err();
    match err {
        TensorError::Resource { requested, feasible } => {
            assert_eq!(requested, 4);
            assert_eq!(feasible, 3);
        }
        other => panic!("expected a resource error, got {other}"),
    }
}

/// One-element module over the trivial monoid; everything maps to it, and
/// nothing is told apart by it.
fn point_module() -> TModule {
    TModule {
        acting: trivial_monoid(),
        carrier: vec!["e".into()],
        add: vec![vec![0]],
        zero: 0,
        left_action: vec![vec![0]],
        right_action: None,
    }
}

#[test]
fn boolean_balanced_maps_are_the_monotone_grids() {
    // Additivity over idempotent max-addition is exactly monotonicity in
    // each argument, so the balanced maps {0,1}x{0,1} -> {0,1} are the six
    // monotone 2x2 grids. Frozen here as explicit tables (row-major).
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 4, false).unwrap();
    let got: Vec<Vec<usize>> = balanced_maps(&t, &b)
        .unwrap()
        .into_iter()
        .map(|m| m.table)
        .collect();
    let expected = vec![
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, 1, 1],
        vec![0, 1, 0, 1],
        vec![0, 1, 1, 1],
        vec![1, 1, 1, 1],
    ];
    assert_eq!(got, expected);
}

#[test]
fn rank_two_balanced_maps_are_the_coefficient_pairs() {
    // Balanced maps (F3 + F3) x F3 -> F3 over F3x are forced onto the shape
    // (u1, u2), w |-> l1 u1 w + l2 u2 w by additivity in each slot, giving
    // one map per coefficient pair (l1, l2) in F3 x F3.
    let pair = direct_sum(&scalars_mod3(), &scalars_mod3()).unwrap();
    let line = scalars_mod3();
    let t = build_tensor(&pair, &line, &units_mod3(), 4, false).unwrap();
    let got: Vec<Vec<usize>> = balanced_maps(&t, &line)
        .unwrap()
        .into_iter()
        .map(|m| m.table)
        .collect();
    let mut expected = Vec::new();
    for l1 in 0..3 {
        for l2 in 0..3 {
            let mut table = Vec::new();
            for u1 in 0..3 {
                for u2 in 0..3 {
                    for w in 0..3usize {
                        table.push((l1 * u1 * w + l2 * u2 * w) % 3);
                    }
                }
            }
            expected.push(table);
        }
    }
    expected.sort_unstable();
    assert_eq!(got, expected);
}

#[test]
fn universal_property_holds_on_the_small_fixtures() {
    // Each closure is checked against a same-sized target: balanced maps
    // factor through classes, additive class maps pull back, the two sets
    // correspond one to one, and the maps jointly separate all classes.
    // Map counts are frozen per fixture.
    let b = boolean_module();
    let z2 = zmod_module(2);
    let z3 = zmod_module(3);
    let line = scalars_mod3();
    let plane = direct_sum(&line, &line).unwrap();
    let cases: Vec<(TModule, TModule, TModule, usize)> = vec![
        (b.clone(), b.clone(), b, 6),
        (z2.clone(), z2.clone(), z2, 2),
        (z3.clone(), z3.clone(), z3, 3),
        (line.clone(), line.clone(), line.clone(), 3),
        (plane, line.clone(), line, 9),
    ];
    for (m1, m2, target, count) in cases {
        let t = build_tensor(&m1, &m2, &m1.acting.clone(), 4, false).unwrap();
        assert_eq!(balanced_maps(&t, &target).unwrap().len(), count);
        let report = universal_property_oracle(&t, &[target]).unwrap();
        assert!(
            report.passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn one_element_target_cannot_separate_classes() {
    // Factorization laws still hold against the point module, but with only
    // constant maps available every one of the C(5,2) = 10 class pairs goes
    // unseparated, and the report says exactly that.
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 4, false).unwrap();
    let report = universal_property_oracle(&t, &[point_module()]).unwrap();
    for check in &report.checks {
        if check.law == "class-separation" {
            assert!(
                matches!(check.verdict, Verdict::Fail { count: 10, .. }),
                "unexpected verdict {:?}",
                check.verdict
            );
        } else {
            assert!(check.verdict.is_pass(), "law {} failed", check.law);
        }
    }
}

#[test]
fn class_members_and_labels_are_consistent() {
    let b = boolean_module();
    let t = build_tensor(&b, &b, &trivial_monoid(), 4, false).unwrap();
    let mixed = t.class_of(&term(&[(0, 1), (1, 0)])).unwrap();
    let members: Vec<_> = t.class_members(mixed).collect();
    assert!(members.contains(&&term(&[(0, 1), (1, 0)])));
    assert!(members.iter().all(|m| t.class_of(m) == Some(mixed)));
    // The label renders the shortest member.
    assert_eq!(t.class_label(mixed), "0(x)1 + 1(x)0");
}
