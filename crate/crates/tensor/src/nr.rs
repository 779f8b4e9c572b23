use std::collections::BTreeSet;

use hyperlab_core::report::LawScan;
use hyperlab_core::{Elem, Report};
use hyperlab_hyper::{build_hyperpair, builtin, subset, Hypermagma};

use crate::closure::build_tensor;
use crate::term::TensorTerm;
use crate::TensorError;

/// Simple tensors reachable by pairwise slot-matching reductions; empty
/// means the sum has no simple form under these rules.
pub type NrSet = BTreeSet<(Elem, Elem)>;

/// Reduces `v(x)w + v'(x)w'` by slot matching: a shared left factor lifts
/// the hypersum through the right slot and vice versa. With no shared slot
/// no rule applies and the result is empty.
pub fn nr_add(h1: &Hypermagma, h2: &Hypermagma, a: (Elem, Elem), b: (Elem, Elem)) -> NrSet {
    let mut out = NrSet::new();
    if a.0 == b.0 {
        out.extend(subset::elems(h2.hadd(a.1, b.1)).map(|u| (a.0, u)));
    }
    if a.1 == b.1 {
        out.extend(subset::elems(h1.hadd(a.0, b.0)).map(|u| (u, a.1)));
    }
    out
}

/// Sums two reduction sets: every pair of representatives is reduced again
/// and the results pooled. An empty operand keeps the result empty.
pub fn nr_sum(h1: &Hypermagma, h2: &Hypermagma, x: &NrSet, y: &NrSet) -> NrSet {
    let mut out = NrSet::new();
    for &a in x {
        for &b in y {
            out.extend(nr_add(h1, h2, a, b));
        }
    }
    out
}

/// Two groupings of the expanded sum `2(x)2 + 2(x)1 + 1(x)2 + 1(x)1` over
/// the height-two tropical chain: grouping by the left factor reduces to
/// `{2(x)2}`, pairing the mixed terms first gets stuck at the empty set.
/// Returns both outcomes and a report failing grouping invariance.
pub fn nr_assoc_counterexample() -> Result<(NrSet, NrSet, Report), TensorError> {
    let h = builtin("tropical_chain(2)")?;
    let (v1, w1) = (2, 2);
    let (v2, w2) = (1, 1);
    let by_left = nr_sum(
        &h,
        &h,
        &nr_add(&h, &h, (v1, w1), (v1, w2)),
        &nr_add(&h, &h, (v2, w1), (v2, w2)),
    );
    let by_mixed = nr_sum(
        &h,
        &h,
        &nr_add(&h, &h, (v1, w1), (v2, w2)),
        &nr_add(&h, &h, (v1, w2), (v2, w1)),
    );
    let render = |s: &NrSet| {
        if s.is_empty() {
            "{}".to_string()
        } else {
            let body: Vec<String> = s
                .iter()
                .map(|&(v, w)| format!("{}(x){}", h.label(v), h.label(w)))
                .collect();
            format!("{{{}}}", body.join(", "))
        }
    };
    let mut scan = LawScan::new();
    if by_left != by_mixed {
        scan.violation(|| {
            format!(
                "left grouping gives {}, mixed grouping gives {}",
                render(&by_left),
                render(&by_mixed)
            )
        });
    }
    let mut report = Report::new("pairwise reduction of 2(x)2 + 2(x)1 + 1(x)2 + 1(x)1");
    report.push("grouping-invariance", scan.verdict());
    Ok((by_left, by_mixed, report))
}

/// Compares pairwise reduction with the congruence closure of the
/// subset-family module of `h`. The two constructions deliberately
/// differ: mixed pairs collapse to the empty set under pairwise
/// reduction while the closure keeps them as two-summand classes, and
/// matched-slot sums reduce pointwise while the closure follows the
/// family addition. The report verifies the family-addition identity on
/// matched slots and tallies the collapses.
pub fn nr_vs_closure(h: &Hypermagma, bound: usize) -> Result<Report, TensorError> {
    let hp = build_hyperpair(h, None, None)?;
    let pair = hp.as_pair();
    let m = &pair.module;
    let closure = build_tensor(m, m, &m.acting, bound, false)?;
    let single = |v: Elem| {
        hp.family_index(subset::singleton(v))
            .expect("singletons are seeded into the family")
    };
    let family_sum = |a: Elem, b: Elem| {
        hp.family_index(h.hadd(a, b))
            .expect("singleton sums are seeded into the family")
    };
    let mut follows = LawScan::new();
    let mut collapsed = 0usize;
    let mut matched = 0usize;
    for v in 0..h.len() {
        for w in 0..h.len() {
            for v2 in 0..h.len() {
                for w2 in 0..h.len() {
                    if nr_add(h, h, (v, w), (v2, w2)).is_empty() {
                        collapsed += 1;
                        continue;
                    }
                    matched += 1;
                    let sum = TensorTerm::new(vec![(single(v), single(w)), (single(v2), single(w2))])?;
                    let lhs = closure
                        .class_of(&sum)
                        .expect("two summands fit any bound");
                    let expected = if v == v2 {
                        closure.simple_class(single(v), family_sum(w, w2))
                    } else {
                        closure.simple_class(family_sum(v, v2), single(w))
                    };
                    if lhs != expected {
                        follows.violation(|| {
                            format!(
                                "{}(x){} + {}(x){} leaves its family sum class",
                                h.label(v),
                                h.label(w),
                                h.label(v2),
                                h.label(w2)
                            )
                        });
                    }
                }
            }
        }
    }
    let mut report = Report::new("pairwise reduction against the closure");
    report.push("matched-slots-follow-the-family-addition", follows.verdict());
    report.note(format!(
        "{matched} matched pairs follow the family addition; {collapsed} mixed pairs collapse \
         to the empty set while the closure keeps two-summand classes"
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_distinct_pairs_do_not_reduce() {
        let h = builtin("tropical_chain(2)").unwrap();
        assert!(nr_add(&h, &h, (2, 1), (1, 2)).is_empty());
    }

    #[test]
    fn diagonal_reduction_pools_both_slots() {
        let h = builtin("tropical_chain(2)").unwrap();
        let got = nr_add(&h, &h, (2, 2), (2, 2));
        let want: NrSet = [(2, 0), (2, 1), (2, 2), (0, 2), (1, 2)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn empty_operand_stays_empty() {
        let h = builtin("tropical_chain(2)").unwrap();
        let full = nr_add(&h, &h, (2, 2), (2, 2));
        assert!(nr_sum(&h, &h, &full, &NrSet::new()).is_empty());
    }
}
