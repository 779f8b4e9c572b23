use hyperlab_core::fixtures::{boolean_module, direct_sum, trivial_monoid, zmod_module};
use hyperlab_core::report::LawScan;
use hyperlab_core::{Elem, Report, TModule, Verdict};
use hyperlab_residue::field_module;

use crate::closure::{build_tensor, CongruenceClosure};
use crate::homs::{check_hom, tensor_swap};
use crate::term::TensorTerm;
use crate::TensorError;

/// Evaluates every enumerated term into `0..target_len` and descends to a
/// class table; `Err` carries the witness of a class the evaluation splits.
fn eval_classes<F>(
    closure: &CongruenceClosure,
    eval: F,
) -> Result<Vec<Elem>, String>
where
    F: Fn(&TensorTerm) -> Elem,
{
    let table: Vec<Elem> = (0..closure.class_count())
        .map(|c| eval(closure.representative(c)))
        .collect();
    for (i, t) in closure.terms.iter().enumerate() {
        let c = closure.class_of_term[i];
        if eval(t) != table[c] {
            return Err(format!(
                "evaluation splits class {c} at {}",
                t.render(&closure.m1, &closure.m2)
            ));
        }
    }
    Ok(table)
}

/// Pass when `table` is a bijective strict module hom from the saturated
/// quotient onto `target`; a bijective hom is an isomorphism because the
/// inverse of an additive bijection is additive.
fn iso_verdict(closure: &CongruenceClosure, target: &TModule, table: &[Elem]) -> Verdict {
    if !closure.saturated {
        return Verdict::Undetermined { bound: closure.bound };
    }
    let q = match closure.quotient_module() {
        Ok(q) => q,
        Err(e) => {
            return Verdict::Fail { witness: e.to_string(), count: 1 };
        }
    };
    let mut sorted = table.to_vec();
    sorted.sort_unstable();
    if sorted != (0..target.len()).collect::<Vec<_>>() {
        return Verdict::Fail {
            witness: format!(
                "table is not a bijection onto {} elements",
                target.len()
            ),
            count: 1,
        };
    }
    match check_hom(table, &q, target, "comparison map") {
        Ok(()) => Verdict::Pass,
        Err(e) => Verdict::Fail { witness: e.to_string(), count: 1 },
    }
}

fn eval_case<F>(
    report: &mut Report,
    law: &str,
    closure: &CongruenceClosure,
    target: &TModule,
    eval: F,
) where
    F: Fn(&TensorTerm) -> Elem,
{
    let verdict = match eval_classes(closure, eval) {
        Err(witness) => Verdict::Fail { witness, count: 1 },
        Ok(table) => iso_verdict(closure, target, &table),
    };
    report.push(law, verdict);
}

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

/// Sum of the images of one summand slot under a per-slot map.
fn fold_sum<F>(t: &TensorTerm, target: &TModule, f: F) -> Elem
where
    F: Fn(Elem, Elem) -> Elem,
{
    let mut it = t.summands().iter().map(|&(v, w)| f(v, w));
    let first = it.next().expect("terms are never empty");
    it.fold(first, |acc, x| target.add(acc, x))
}

/// Structural isomorphisms of the bounded tensor, each realized as an
/// explicit comparison map and checked exhaustively at the given bound:
///
/// * the one-element module and the scalars are left and right units;
/// * tensoring distributes over direct sums (on modules with additive
///   inverses; an idempotent counterexample is recorded as a note);
/// * the two triple-product nestings agree through evaluation, and the
///   composed bijection is the canonical associator on generators;
/// * swapping the factors is an isomorphism, involutive on classes.
///
/// Sub-fixtures that fail to saturate at `bound` come back undetermined
/// rather than failed.
pub fn check_assoc_comm_dist(bound: usize) -> Result<Report, TensorError> {
    if bound < 3 {
        return Err(TensorError::Precondition(
            "the isomorphism suite needs bound >= 3 to saturate its scalar fixtures".into(),
        ));
    }
    let mut report = Report::new("tensor structure isomorphisms");
    let f3 = field_module(3)?;
    let fm = f3.acting.clone();
    let z2 = zmod_module(2);
    let b = boolean_module();
    let trivial = trivial_monoid();

    // Right unit: F (x) F -> F by multiplying the coordinates. The scalars
    // over the full multiplicative monoid are the free rank-one module, so
    // this is the evaluation of the unit isomorphism.
    let ff = build_tensor(&f3, &f3, &fm, bound, false)?;
    eval_case(&mut report, "unit-right-scalars", &ff, &f3, |t| {
        fold_sum(t, &f3, |v, w| f3.act(v, w))
    });
    // Left unit, mirrored.
    eval_case(&mut report, "unit-left-scalars", &ff, &f3, |t| {
        fold_sum(t, &f3, |v, w| f3.act(w, v))
    });

    // Degenerate left unit over the trivial monoid: the point module
    // tensors away, leaving the join of the right coordinates.
    let point = point_module();
    let pb = build_tensor(&point, &b, &trivial, bound, false)?;
    eval_case(&mut report, "unit-left-point", &pb, &b, |t| {
        fold_sum(t, &b, |_, w| w)
    });

    // Distribution over direct sums, on a module with additive inverses.
    let zz = direct_sum(&z2, &z2)?;
    let small = build_tensor(&z2, &z2, &trivial, bound, false)?;
    let k = small.class_count();
    let cls = |part: &CongruenceClosure, t: &TensorTerm| {
        part.class_of(t).expect("projection preserves length")
    };

    let left = build_tensor(&zz, &z2, &trivial, bound, false)?;
    eval_case(&mut report, "sum-right-distributes", &left, &direct_sum(
        &small.quotient_module()?,
        &small.quotient_module()?,
    )?, |t| {
        let c1 = cls(&small, &t.map(|v, w| (v / 2, w)));
        let c2 = cls(&small, &t.map(|v, w| (v % 2, w)));
        c1 * k + c2
    });

    let right = build_tensor(&z2, &zz, &trivial, bound, false)?;
    eval_case(&mut report, "sum-left-distributes", &right, &direct_sum(
        &small.quotient_module()?,
        &small.quotient_module()?,
    )?, |t| {
        let c1 = cls(&small, &t.map(|v, w| (v, w / 2)));
        let c2 = cls(&small, &t.map(|v, w| (v, w % 2)));
        c1 * k + c2
    });

    let both = build_tensor(&zz, &zz, &trivial, bound, false)?;
    let q_small = small.quotient_module()?;
    let quad = direct_sum(&direct_sum(&q_small, &q_small)?, &direct_sum(&q_small, &q_small)?)?;
    eval_case(&mut report, "sum-both-distribute", &both, &quad, |t| {
        let c = [
            cls(&small, &t.map(|v, w| (v / 2, w / 2))),
            cls(&small, &t.map(|v, w| (v / 2, w % 2))),
            cls(&small, &t.map(|v, w| (v % 2, w / 2))),
            cls(&small, &t.map(|v, w| (v % 2, w % 2))),
        ];
        ((c[0] * k + c[1]) * k + c[2]) * k + c[3]
    });

    // Associativity through evaluation: both nestings of F (x) F (x) F
    // evaluate isomorphically onto F...
    let ev_ff = eval_classes(&ff, |t| fold_sum(t, &f3, |v, w| f3.act(v, w)))
        .map_err(TensorError::Inconsistent)?;
    let q_ff = ff.quotient_module()?;
    let left_nest = build_tensor(&q_ff, &f3, &fm, bound, false)?;
    let right_nest = build_tensor(&f3, &q_ff, &fm, bound, false)?;
    eval_case(&mut report, "assoc-left-evaluates", &left_nest, &f3, |t| {
        fold_sum(t, &f3, |x, c| f3.act(ev_ff[x], c))
    });
    eval_case(&mut report, "assoc-right-evaluates", &right_nest, &f3, |t| {
        fold_sum(t, &f3, |a, x| f3.act(a, ev_ff[x]))
    });
    // ... and the composite bijection is the canonical associator
    // (a (x) b) (x) c -> a (x) (b (x) c) on every generator triple.
    let ev_left = eval_classes(&left_nest, |t| fold_sum(t, &f3, |x, c| f3.act(ev_ff[x], c)))
        .map_err(TensorError::Inconsistent)?;
    let ev_right = eval_classes(&right_nest, |t| fold_sum(t, &f3, |a, x| f3.act(a, ev_ff[x])))
        .map_err(TensorError::Inconsistent)?;
    let mut assoc = LawScan::new();
    for a in 0..f3.len() {
        for bb in 0..f3.len() {
            for c in 0..f3.len() {
                let lhs = ev_left[left_nest.simple_class(ff.simple_class(a, bb), c)];
                let rhs = ev_right[right_nest.simple_class(a, ff.simple_class(bb, c))];
                if lhs != rhs {
                    assoc.violation(|| {
                        format!("associator moves the generator ({a}, {bb}, {c})")
                    });
                }
            }
        }
    }
    report.push("assoc-canonical-on-generators", assoc.verdict());

    // Swapping factors: on the boolean square the swap fixes the zero, the
    // full simple tensor, and the mixed class, and exchanges the two
    // zero-sided simples; it is involutive and an isomorphism.
    let bb_closure = build_tensor(&b, &b, &trivial, bound, false)?;
    let table = tensor_swap(&bb_closure, &bb_closure)?;
    let mut swap_law = LawScan::new();
    for (c, &image) in table.iter().enumerate() {
        if table[image] != c {
            swap_law.violation(|| format!("swap is not involutive at class {c}"));
        }
    }
    report.push("swap-involutive-boolean", swap_law.verdict());
    let swap_iso = if bb_closure.saturated {
        iso_verdict(&bb_closure, &bb_closure.quotient_module()?, &table)
    } else {
        Verdict::Undetermined { bound: bb_closure.bound }
    };
    report.push("swap-iso-boolean", swap_iso);
    // On commutative scalars the swap descends to the identity.
    let swap_ff = tensor_swap(&ff, &ff)?;
    report.push(
        "swap-identity-on-scalars",
        if swap_ff == (0..ff.class_count()).collect::<Vec<_>>() {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: "scalar swap moved a class".into(), count: 1 }
        },
    );

    // Distribution genuinely needs additive inverses: over the idempotent
    // boolean module the comparison map misses the class of
    // (0,e) (x) 1 + (1,e) (x) 0 entirely. Recorded as context, not failure.
    let bb_sum = direct_sum(&b, &b)?;
    let bb_left = build_tensor(&bb_sum, &b, &trivial, bound, false)?;
    let parts = bb_closure.class_count();
    report.note(format!(
        "boolean counterexample: ({}+{}) (x) {} has {} classes, the split sum only {}",
        b.carrier.join("|"),
        b.carrier.join("|"),
        b.carrier.join("|"),
        bb_left.class_count(),
        parts * parts
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_bound_four() {
        let report = check_assoc_comm_dist(4).unwrap();
        assert!(
            report.passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }

    #[test]
    fn unsaturated_sub_fixtures_go_undetermined_at_bound_three() {
        // The boolean square and the doubled sum both need bound 4 to
        // saturate; their isomorphism laws must come back undetermined, not
        // failed, while the scalar fixtures still pass outright.
        let report = check_assoc_comm_dist(3).unwrap();
        let verdict_of = |law: &str| {
            report
                .checks
                .iter()
                .find(|c| c.law == law)
                .unwrap_or_else(|| panic!("missing law {law}"))
                .verdict
                .clone()
        };
        assert_eq!(verdict_of("swap-iso-boolean"), Verdict::Undetermined { bound: 3 });
        assert_eq!(
            verdict_of("sum-both-distribute"),
            Verdict::Undetermined { bound: 3 }
        );
        assert_eq!(verdict_of("unit-right-scalars"), Verdict::Pass);
        assert_eq!(verdict_of("assoc-canonical-on-generators"), Verdict::Pass);
    }
}
