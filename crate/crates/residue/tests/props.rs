//! Property tests: orbit classes partition the carrier, the class
//! hyperaddition is exactly the image of parent sums, and any subset of
//! units that validates as a subgroup yields a hyperfield quotient.

use proptest::prelude::*;

use hyperlab_core::{Elem, FiniteMonoid, SurpassingRelation};
use hyperlab_hyper::{check_hyperfield, subset};
use hyperlab_residue::{
    field_module, induced_surpassing, residue, SubgroupSpec, FIELD_ORDERS,
};

fn unit_elements(t: &FiniteMonoid) -> Vec<Elem> {
    (0..t.len())
        .filter(|&a| (0..t.len()).any(|b| t.op(a, b) == t.identity && t.op(b, a) == t.identity))
        .collect()
}

fn cyclic(t: &FiniteMonoid, u: Elem) -> SubgroupSpec {
    let mut members = vec![t.identity];
    let mut power = u;
    while !members.contains(&power) {
        members.push(power);
        power = t.op(power, u);
    }
    SubgroupSpec::new(t.clone(), members).unwrap()
}

proptest! {
    #[test]
    fn classes_partition_the_carrier(qi in 0usize..7, seed in any::<u64>()) {
        let q = FIELD_ORDERS[qi];
        let m = field_module(q).unwrap();
        let units = unit_elements(&m.acting);
        let u = units[(seed as usize) % units.len()];
        let r = residue(&m, &cyclic(&m.acting, u)).unwrap();

        let mut seen = vec![false; q];
        for (index, class) in r.classes.iter().enumerate() {
            for &member in class {
                prop_assert!(!seen[member], "element in two classes");
                seen[member] = true;
                prop_assert_eq!(r.projection[member], index);
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn hyperaddition_is_the_image_of_parent_sums(
        qi in 0usize..7,
        seed in any::<u64>(),
        b1 in any::<usize>(),
        b2 in any::<usize>(),
    ) {
        let q = FIELD_ORDERS[qi];
        let m = field_module(q).unwrap();
        let units = unit_elements(&m.acting);
        let u = units[(seed as usize) % units.len()];
        let r = residue(&m, &cyclic(&m.acting, u)).unwrap();

        let (b1, b2) = (b1 % q, b2 % q);
        let (c1, c2) = (r.projection[b1], r.projection[b2]);
        let mut expected = 0u32;
        for &x in &r.classes[c1] {
            for &y in &r.classes[c2] {
                expected |= subset::singleton(r.projection[m.add(x, y)]);
            }
        }
        prop_assert_eq!(r.hypermagma.hyperop[c1][c2], expected);
    }

    #[test]
    fn any_valid_unit_subgroup_quotient_is_a_hyperfield(
        qi in 0usize..7,
        picks in any::<u32>(),
    ) {
        let q = FIELD_ORDERS[qi];
        let m = field_module(q).unwrap();
        let units = unit_elements(&m.acting);
        let mut members: Vec<Elem> = vec![m.acting.identity];
        for (i, &u) in units.iter().enumerate() {
            if picks & (1 << i) != 0 {
                members.push(u);
            }
        }
        if let Ok(g) = SubgroupSpec::new(m.acting.clone(), members) {
            let r = residue(&m, &g).unwrap();
            prop_assert!(check_hyperfield(&r.hypermagma).unwrap().passed());
        }
    }

    #[test]
    fn equality_always_induces_class_equality(qi in 0usize..7, seed in any::<u64>()) {
        let q = FIELD_ORDERS[qi];
        let m = field_module(q).unwrap();
        let units = unit_elements(&m.acting);
        let u = units[(seed as usize) % units.len()];
        let g = cyclic(&m.acting, u);
        let classes = residue(&m, &g).unwrap().classes.len();
        let s = SurpassingRelation::equality(m.len());
        let (induced, report) = induced_surpassing(&m, &s, &g).unwrap();
        prop_assert!(report.passed());
        prop_assert_eq!(induced, SurpassingRelation::equality(classes));
    }
}
