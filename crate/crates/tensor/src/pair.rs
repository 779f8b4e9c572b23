use hyperlab_core::pair::{check_pair, Pair};
use hyperlab_core::report::LawScan;
use hyperlab_core::{Elem, Report};

use crate::closure::{build_tensor, CongruenceClosure};
use crate::TensorError;

/// Tensor product of two pairs: the quotient module of the underlying
/// tensor closure, with its zero family and the diagonal embedding.
#[derive(Debug, Clone)]
pub struct PairTensor {
    pub closure: CongruenceClosure,
    pub pair: Pair,
    pub report: Report,
}

fn require_pair(p: &Pair, name: &str) -> Result<(), TensorError> {
    let report = check_pair(p)?;
    if let Some(check) = report.failures().next() {
        return Err(TensorError::Precondition(format!(
            "{name} breaks a pair law before tensoring: {}",
            check.law
        )));
    }
    Ok(())
}

/// A class belongs to the tensor zero family when one of its enumerated
/// members puts a zero-set coordinate into every summand. Membership is a
/// property of the class, so the family is congruence-invariant by
/// construction.
pub(crate) fn zero_family(closure: &CongruenceClosure, p1: &Pair, p2: &Pair) -> Vec<Elem> {
    let mut family = vec![false; closure.class_count()];
    for (i, t) in closure.terms.iter().enumerate() {
        if t.summands()
            .iter()
            .all(|&(v, w)| p1.in_zero_set(v) || p2.in_zero_set(w))
        {
            family[closure.class_of_term[i]] = true;
        }
    }
    family
        .iter()
        .enumerate()
        .filter_map(|(c, &keep)| keep.then_some(c))
        .collect()
}

/// Builds the tensor product of two pairs over their shared acting monoid.
/// The module part needs a saturated closure; the zero family collects the
/// classes of terms supported entirely on zero-set coordinates, and the
/// acting monoid embeds as `a -> e1(a) (x) e2(1)`.
pub fn tensor_pair(p1: &Pair, p2: &Pair, bound: usize) -> Result<PairTensor, TensorError> {
    if p1.module.acting != p2.module.acting {
        return Err(TensorError::Precondition(
            "both pairs must share the acting monoid".into(),
        ));
    }
    require_pair(p1, "left pair")?;
    require_pair(p2, "right pair")?;

    let over = p1.module.acting.clone();
    let closure = build_tensor(&p1.module, &p2.module, &over, bound, false)?;
    let module = closure.quotient_module()?;

    let zero_set = zero_family(&closure, p1, p2);
    let embedding: Vec<Elem> = (0..over.len())
        .map(|a| closure.simple_class(p1.embedding[a], p2.one()))
        .collect();
    let mut tangibles = embedding.clone();
    tangibles.sort_unstable();
    tangibles.dedup();

    let pair = Pair {
        module,
        zero_set,
        tangibles,
        embedding,
    };

    let mut report = Report::new("tensor pair");
    let mut slide = LawScan::new();
    for a in 0..over.len() {
        let left = closure.simple_class(p1.embedding[a], p2.one());
        let right = closure.simple_class(p1.one(), p2.embedding[a]);
        if left != right {
            slide.violation(|| {
                format!("embedding of {} differs across the middle", over.label(a))
            });
        }
    }
    report.push("embedding-slide-coherent", slide.verdict());
    report.merge(check_pair(&pair)?);
    report.note(format!(
        "zero family holds {} of {} classes",
        pair.zero_set.len(),
        closure.class_count()
    ));
    Ok(PairTensor { closure, pair, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlab_core::fixtures::boolean_pair;

    #[test]
    fn zero_family_sees_multi_summand_members() {
        // (0,1) + (1,0) has a zero coordinate in each summand even though
        // neither coordinate pair is fully zero, so its class joins the
        // family alongside the plainly zero simple tensors.
        let p = boolean_pair();
        let t = tensor_pair(&p, &p, 4).unwrap();
        let mixed = t
            .closure
            .class_of(&crate::TensorTerm::new(vec![(0, 1), (1, 0)]).unwrap())
            .unwrap();
        assert!(t.pair.in_zero_set(mixed));
    }
}
