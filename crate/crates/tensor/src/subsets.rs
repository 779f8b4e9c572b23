use hyperlab_core::report::LawScan;
use hyperlab_core::Report;
use hyperlab_hyper::{build_hyperpair, subset, Hypermagma, Hyperpair, Mask};
use itertools::Itertools;

use crate::closure::{build_tensor, CongruenceClosure};
use crate::term::TensorTerm;
use crate::TensorError;

/// Caps the family triple scan.
pub const SUBSET_TRIPLE_CAP: usize = 1 << 12;

/// Class containment lifted from componentwise subset order: every member
/// of `c` must be dominated by an equal-length member of `d` under some
/// summand matching with both slot masks contained.
fn class_le(
    closure: &CongruenceClosure,
    masks1: &[Mask],
    masks2: &[Mask],
    c: usize,
    d: usize,
) -> bool {
    if c == d {
        return true;
    }
    let dominated = |t: &TensorTerm, u: &TensorTerm| {
        let (ts, us) = (t.summands(), u.summands());
        ts.len() == us.len()
            && (0..us.len()).permutations(us.len()).any(|perm| {
                perm.iter().zip(ts).all(|(&j, &(v, w))| {
                    let (x, y) = us[j];
                    masks1[v] & !masks1[x] == 0 && masks2[w] & !masks2[y] == 0
                })
            })
    };
    closure
        .class_members(c)
        .all(|t| closure.class_members(d).any(|u| dominated(t, u)))
}

/// Scans all family triples `(S, S1', S2')` of the two subset families for
/// `S (x) (S1' + S2')` contained in `S (x) S1' + S (x) S2'` under the
/// lifted subset order. Bilinearity makes the two sides congruent, so the
/// scan doubles as a consistency check; strictly larger right sides would
/// be reported as notes. Runs on the bounded closure even when it is not
/// saturated, which the report notes.
pub fn subset_distributivity(
    h1: &Hypermagma,
    h2: &Hypermagma,
    bound: usize,
) -> Result<Report, TensorError> {
    let hp1 = build_hyperpair(h1, None, None)?;
    let hp2 = build_hyperpair(h2, None, None)?;
    let p1 = hp1.as_pair();
    let p2 = hp2.as_pair();
    if p1.module.acting != p2.module.acting {
        return Err(TensorError::Precondition(
            "the tangible monoids of the two families differ".into(),
        ));
    }
    let triples = hp1.family.len() * hp2.family.len() * hp2.family.len();
    if triples > SUBSET_TRIPLE_CAP {
        return Err(TensorError::Cap(format!(
            "{triples} family triples exceed the scan cap {SUBSET_TRIPLE_CAP}"
        )));
    }
    let closure = build_tensor(&p1.module, &p2.module, &p1.module.acting, bound, false)?;

    let mut scan = LawScan::new();
    let mut equal = 0usize;
    let mut strict = Vec::new();
    for s in 0..hp1.family.len() {
        for a in 0..hp2.family.len() {
            for b in 0..hp2.family.len() {
                let lhs = closure.simple_class(s, p2.module.add(a, b));
                let sum = TensorTerm::new(vec![(s, a), (s, b)])?;
                let rhs = closure
                    .class_of(&sum)
                    .expect("two summands fit any bound");
                if lhs == rhs {
                    equal += 1;
                } else if class_le(&closure, &hp1.family, &hp2.family, lhs, rhs) {
                    strict.push(strict_witness(&hp1, &hp2, s, a, b));
                } else {
                    scan.violation(|| {
                        format!(
                            "{} not dominated by {}",
                            closure.class_label(lhs),
                            closure.class_label(rhs)
                        )
                    });
                }
            }
        }
    }
    let mut report = Report::new("subset distributivity");
    report.push("action-distributes-up-to-containment", scan.verdict());
    report.note(format!(
        "{triples} triples scanned: {equal} equal, {} strictly contained",
        strict.len()
    ));
    for witness in strict.into_iter().take(3) {
        report.note(witness);
    }
    if !closure.saturated {
        report.note(format!(
            "closure is not saturated at bound {bound}; containments are provisional"
        ));
    }
    Ok(report)
}

fn strict_witness(hp1: &Hyperpair, hp2: &Hyperpair, s: usize, a: usize, b: usize) -> String {
    let left = subset::render(hp1.family[s], &hp1.base.carrier);
    let first = subset::render(hp2.family[a], &hp2.base.carrier);
    let second = subset::render(hp2.family[b], &hp2.base.carrier);
    format!("strict at {left}(x)({first} + {second})")
}
