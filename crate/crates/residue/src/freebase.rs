//! Transfer of a free base along the residue construction: the base classes
//! stay a base, with coordinates drawn from the coset monoid of the acting
//! monoid.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use hyperlab_core::{free_codec, Elem, FiniteMonoid, FreeCodec, TModule};

use crate::residue::ResidueHypermodule;
use crate::{residue, ResidueError, SubgroupSpec};

/// Cap on enumerated coset coefficient vectors.
const CELL_ENUM_CAP: usize = 1 << 20;

/// A free base carried down to a residue hypermodule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueFreeBase {
    pub residue: ResidueHypermodule,
    /// Class of each base element, in base order; pairwise distinct.
    pub base_classes: Vec<usize>,
    /// The coset monoid of the acting monoid.
    pub quotient_acting: FiniteMonoid,
    /// Acting element to coset index.
    pub acting_projection: Vec<usize>,
    /// Coset coefficient vector of each class (`None` is the zero slot).
    pub encode: Vec<Vec<Option<usize>>>,
    /// Every coefficient vector with the set of classes its lifts reach;
    /// the sets partition the classes.
    pub cells: Vec<(Vec<Option<usize>>, Vec<usize>)>,
}

/// Quotients the acting monoid by `g`, checking normality and that coset
/// products are well-defined.
fn quotient_acting(t: &FiniteMonoid, g: &SubgroupSpec) -> Result<(FiniteMonoid, Vec<usize>), ResidueError> {
    for a in 0..t.len() {
        let right: BTreeSet<Elem> = g.members.iter().map(|&h| t.op(a, h)).collect();
        let left: BTreeSet<Elem> = g.members.iter().map(|&h| t.op(h, a)).collect();
        if right != left {
            return Err(ResidueError::NotNormal(format!(
                "in the acting monoid at {}",
                t.label(a)
            )));
        }
    }

    let mut projection = vec![usize::MAX; t.len()];
    let mut cosets: Vec<Vec<Elem>> = Vec::new();
    for a in 0..t.len() {
        if projection[a] != usize::MAX {
            continue;
        }
        let coset: Vec<Elem> = g
            .members
            .iter()
            .map(|&h| t.op(a, h))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for &member in &coset {
            projection[member] = cosets.len();
        }
        cosets.push(coset);
    }

    let q = cosets.len();
    let proj = &projection;
    let mut op = vec![vec![0usize; q]; q];
    for (i, c1) in cosets.iter().enumerate() {
        for (j, c2) in cosets.iter().enumerate() {
            let mut products = c1
                .iter()
                .flat_map(|&x| c2.iter().map(move |&y| proj[t.op(x, y)]));
            let first = products.next().expect("cosets are nonempty");
            if products.any(|p| p != first) {
                return Err(ResidueError::Precondition(format!(
                    "coset product of {} and {} is not well-defined",
                    t.label(c1[0]),
                    t.label(c2[0])
                )));
            }
            op[i][j] = first;
        }
    }

    let monoid = FiniteMonoid {
        elements: cosets.iter().map(|c| format!("[{}]", t.label(c[0]))).collect(),
        op,
        identity: projection[t.identity],
        absorbing: t.absorbing.map(|z| projection[z]),
    };
    Ok((monoid, projection))
}

/// Pushes a certified free base down to `m / g`: re-certifies the base,
/// checks the base classes stay distinct, and verifies by exhaustion that
/// the coset coordinate cells partition the classes (coverage is spanning,
/// disjointness is coordinate uniqueness).
pub fn residue_free_base(
    m: &TModule,
    codec: &FreeCodec,
    g: &SubgroupSpec,
) -> Result<ResidueFreeBase, ResidueError> {
    let codec = free_codec(m, &codec.base)?;
    let r = residue(m, g)?;

    let base_classes: Vec<usize> = codec.base.iter().map(|&b| r.projection[b]).collect();
    for (i, &c1) in base_classes.iter().enumerate() {
        for &c2 in &base_classes[i + 1..] {
            if c1 == c2 {
                return Err(ResidueError::BadBase(format!(
                    "base elements {} and {} collapse into one class",
                    m.label(codec.base[i]),
                    m.label(r.classes[c2][0])
                )));
            }
        }
    }

    let (quotient, acting_projection) = quotient_acting(&m.acting, g)?;
    let cosets: Vec<Vec<Elem>> = (0..quotient.len())
        .map(|c| {
            (0..m.acting.len())
                .filter(|&a| acting_projection[a] == c)
                .collect()
        })
        .collect();

    let k = codec.rank();
    let q = quotient.len();
    let total = (q + 1)
        .checked_pow(k as u32)
        .filter(|&x| x <= CELL_ENUM_CAP)
        .ok_or_else(|| {
            ResidueError::Precondition(format!(
                "cell enumeration over {k} slots exceeds the cap"
            ))
        })?;

    let mut cells: Vec<(Vec<Option<usize>>, Vec<usize>)> = Vec::with_capacity(total);
    let mut owner: Vec<Option<usize>> = vec![None; r.classes.len()];
    for mut index in 0..total {
        let mut vector: Vec<Option<usize>> = Vec::with_capacity(k);
        for _ in 0..k {
            let digit = index % (q + 1);
            index /= q + 1;
            vector.push(if digit == 0 { None } else { Some(digit - 1) });
        }

        let mut reached: BTreeSet<usize> = BTreeSet::new();
        let mut lift: Vec<Option<Elem>> = vec![None; k];
        enumerate_lifts(&vector, &cosets, 0, &mut lift, &mut |coeffs| {
            reached.insert(r.projection[codec.decode(m, coeffs)]);
        });

        let cell_index = cells.len();
        for &class in &reached {
            if let Some(previous) = owner[class] {
                return Err(ResidueError::BadBase(format!(
                    "class {} has coordinate vectors {:?} and {:?}",
                    r.hypermagma.label(class),
                    cells[previous].0,
                    vector
                )));
            }
            owner[class] = Some(cell_index);
        }
        cells.push((vector, reached.into_iter().collect()));
    }

    let mut encode = vec![Vec::new(); r.classes.len()];
    for (class, slot) in owner.iter().enumerate() {
        match slot {
            Some(cell) => encode[class] = cells[*cell].0.clone(),
            None => {
                return Err(ResidueError::BadBase(format!(
                    "class {} is not spanned by the base",
                    r.hypermagma.label(class)
                )))
            }
        }
    }

    Ok(ResidueFreeBase {
        residue: r,
        base_classes,
        quotient_acting: quotient,
        acting_projection,
        encode,
        cells,
    })
}

/// Calls `visit` with every lift of `vector` that picks one coset member
/// per non-zero slot.
fn enumerate_lifts(
    vector: &[Option<usize>],
    cosets: &[Vec<Elem>],
    slot: usize,
    lift: &mut Vec<Option<Elem>>,
    visit: &mut impl FnMut(&[Option<Elem>]),
) {
    if slot == vector.len() {
        visit(lift);
        return;
    }
    match vector[slot] {
        None => {
            lift[slot] = None;
            enumerate_lifts(vector, cosets, slot + 1, lift, visit);
        }
        Some(c) => {
            for &member in &cosets[c] {
                lift[slot] = Some(member);
                enumerate_lifts(vector, cosets, slot + 1, lift, visit);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperlab_core::fixtures::scalars_mod3;

    #[test]
    fn rank_one_quotient_has_two_classes() {
        let m = scalars_mod3();
        let codec = free_codec(&m, &[1]).unwrap();
        let g = SubgroupSpec::new(m.acting.clone(), vec![0, 1]).unwrap();
        let fb = residue_free_base(&m, &codec, &g).unwrap();
        assert_eq!(fb.residue.classes.len(), 2);
        assert_eq!(fb.base_classes, vec![1]);
        assert_eq!(fb.quotient_acting.len(), 1);
        assert_eq!(fb.encode[0], vec![None]);
        assert_eq!(fb.encode[1], vec![Some(0)]);
    }

    #[test]
    fn trivial_subgroup_keeps_the_base() {
        let m = scalars_mod3();
        let codec = free_codec(&m, &[1]).unwrap();
        let g = SubgroupSpec::trivial(m.acting.clone());
        let fb = residue_free_base(&m, &codec, &g).unwrap();
        assert_eq!(fb.residue.classes.len(), m.len());
        assert_eq!(fb.quotient_acting.len(), m.acting.len());
        for (_, classes) in &fb.cells {
            assert_eq!(classes.len(), 1);
        }
    }
}
