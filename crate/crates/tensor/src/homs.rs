use hyperlab_core::{Elem, TModule};

use crate::closure::CongruenceClosure;
use crate::TensorError;

/// Verifies a strict module hom given as a plain image table: additive,
/// zero-preserving, and equivariant for both actions.
pub(crate) fn check_hom(f: &[Elem], src: &TModule, tgt: &TModule, name: &str) -> Result<(), TensorError> {
    if f.len() != src.len() {
        return Err(TensorError::Precondition(format!(
            "{name} has {} entries for a carrier of {}",
            f.len(),
            src.len()
        )));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= tgt.len()) {
        return Err(TensorError::Precondition(format!(
            "{name} maps outside the target carrier: {bad}"
        )));
    }
    if f[src.zero] != tgt.zero {
        return Err(TensorError::Precondition(format!("{name} does not preserve zero")));
    }
    for x in 0..src.len() {
        for y in 0..src.len() {
            if f[src.add(x, y)] != tgt.add(f[x], f[y]) {
                return Err(TensorError::Precondition(format!(
                    "{name} is not additive at {} + {}",
                    src.label(x),
                    src.label(y)
                )));
            }
        }
    }
    for a in 0..src.acting.len() {
        for x in 0..src.len() {
            if f[src.act(a, x)] != tgt.act(a, f[x]) {
                return Err(TensorError::Precondition(format!(
                    "{name} breaks the left action at {}.{}",
                    src.acting.label(a),
                    src.label(x)
                )));
            }
            if f[src.act_right(x, a)] != tgt.act_right(f[x], a) {
                return Err(TensorError::Precondition(format!(
                    "{name} breaks the right action at {}.{}",
                    src.label(x),
                    src.acting.label(a)
                )));
            }
        }
    }
    Ok(())
}

/// Descends a summand-wise term map to a class table, verifying it is
/// constant on every source class.
fn descend<F>(
    src: &CongruenceClosure,
    tgt: &CongruenceClosure,
    map: F,
    soft: bool,
) -> Result<Vec<Elem>, TensorError>
where
    F: Fn(Elem, Elem) -> (Elem, Elem),
{
    let table: Vec<Elem> = (0..src.class_count())
        .map(|c| {
            tgt.class_of(&src.representative(c).map(|v, w| map(v, w)))
                .expect("bounds are compatible")
        })
        .collect();
    for (i, t) in src.terms.iter().enumerate() {
        let c = src.class_of_term[i];
        let image = tgt
            .class_of(&t.map(|v, w| map(v, w)))
            .expect("bounds are compatible");
        if image != table[c] {
            let msg = format!(
                "class {c} splits under the map at {}",
                t.render(&src.m1, &src.m2)
            );
            return Err(if soft {
                TensorError::Precondition(msg)
            } else {
                TensorError::Inconsistent(msg)
            });
        }
    }
    Ok(table)
}

/// The class map induced by a pair of strict module homs, one per factor.
/// For genuine homs the descent cannot fail: every generator rule maps to a
/// generator rule of the target; the exhaustive check stays as a guard.
pub fn tensor_of_homs(
    f1: &[Elem],
    f2: &[Elem],
    src: &CongruenceClosure,
    tgt: &CongruenceClosure,
) -> Result<Vec<Elem>, TensorError> {
    if src.over != tgt.over {
        return Err(TensorError::Precondition(
            "source and target tensors act over different monoids".into(),
        ));
    }
    if tgt.bound < src.bound {
        return Err(TensorError::Precondition(format!(
            "target bound {} cannot hold source terms of length {}",
            tgt.bound, src.bound
        )));
    }
    check_hom(f1, &src.m1, &tgt.m1, "left map")?;
    check_hom(f2, &src.m2, &tgt.m2, "right map")?;
    descend(src, tgt, |v, w| (f1[v], f2[w]), false)
}

/// The summand-swap map into the reversed tensor. Swapping reverses the
/// middle slide, so it descends only when the two actions mirror each
/// other; when they do not, the witness comes back as a precondition error.
pub fn tensor_swap(
    src: &CongruenceClosure,
    tgt: &CongruenceClosure,
) -> Result<Vec<Elem>, TensorError> {
    if src.over != tgt.over || src.m1 != tgt.m2 || src.m2 != tgt.m1 {
        return Err(TensorError::Precondition(
            "swap target must be the same tensor with the factors reversed".into(),
        ));
    }
    if tgt.bound < src.bound {
        return Err(TensorError::Precondition(format!(
            "target bound {} cannot hold source terms of length {}",
            tgt.bound, src.bound
        )));
    }
    descend(src, tgt, |v, w| (w, v), true)
}
