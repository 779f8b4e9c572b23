use std::collections::BTreeSet;

use hyperlab_core::report::LawScan;
use hyperlab_core::{Report, TModule, Verdict};
use hyperlab_hyper::{build_hyperpair, subset};
use hyperlab_residue::{residue, SubgroupSpec};

use crate::closure::{build_tensor, CongruenceClosure};
use crate::pair::zero_family;
use crate::TensorError;

/// Compares two quotient-then-tensor orders: cosets of the parent tensor
/// classes under the summand-wise subgroup action, against the tensor of
/// the two residue hypermodules realized through their subset families.
/// Quotient tensor elements are the classes of singleton-pair simples,
/// with every zero-family class folded into the single zero element.
#[derive(Debug, Clone)]
pub struct ResidueTensorIso {
    pub parent: CongruenceClosure,
    /// Parent class index to coset index, cosets numbered by least member.
    pub orbit_of_class: Vec<usize>,
    pub orbit_count: usize,
    /// Family tensor of the residue hyperpairs.
    pub left: CongruenceClosure,
    /// Bound at which the family tensor was built (grown past the request
    /// until it saturates, within a small margin).
    pub left_bound: usize,
    /// Zero-family classes of the family tensor, sorted.
    pub left_zero: Vec<usize>,
    /// Distinct quotient tensor elements over all residue class pairs.
    pub elem_count: usize,
    pub report: Report,
}

/// Builds both sides of the quotient-tensor comparison and scans the map
/// `y1 (x) y2 -> y1 G1 (x) y2 G2` on simple tensors for coset constancy
/// and bijectivity. The parent closure must saturate at the requested
/// bound; the family side may saturate at a slightly larger one.
pub fn residue_tensor_iso(
    m1: &TModule,
    g1: &SubgroupSpec,
    m2: &TModule,
    g2: &SubgroupSpec,
    bound: usize,
) -> Result<ResidueTensorIso, TensorError> {
    let r1 = residue(m1, g1)?;
    let r2 = residue(m2, g2)?;
    let parent = build_tensor(m1, m2, &m1.acting, bound, false)?;

    let mut orbit_uf: Vec<usize> = (0..parent.class_count()).collect();
    fn find(uf: &mut Vec<usize>, mut c: usize) -> usize {
        while uf[c] != c {
            uf[c] = uf[uf[c]];
            c = uf[c];
        }
        c
    }
    for (i, t) in parent.terms.iter().enumerate() {
        let c = parent.class_of_term[i];
        for &g in &g1.members {
            let moved = t.map(|v, w| (m1.act_right(v, g), w));
            let d = parent.class_of(&moved).expect("the action preserves length");
            let (rc, rd) = (find(&mut orbit_uf, c), find(&mut orbit_uf, d));
            orbit_uf[rc.max(rd)] = rc.min(rd);
        }
        for &g in &g2.members {
            let moved = t.map(|v, w| (v, m2.act_right(w, g)));
            let d = parent.class_of(&moved).expect("the action preserves length");
            let (rc, rd) = (find(&mut orbit_uf, c), find(&mut orbit_uf, d));
            orbit_uf[rc.max(rd)] = rc.min(rd);
        }
    }
    let mut orbit_of_class = vec![usize::MAX; parent.class_count()];
    let mut orbit_count = 0;
    for c in 0..parent.class_count() {
        let root = find(&mut orbit_uf, c);
        if orbit_of_class[root] == usize::MAX {
            orbit_of_class[root] = orbit_count;
            orbit_count += 1;
        }
        orbit_of_class[c] = orbit_of_class[root];
    }

    let hp1 = build_hyperpair(&r1.hypermagma, None, None)?;
    let hp2 = build_hyperpair(&r2.hypermagma, None, None)?;
    let p1 = hp1.as_pair();
    let p2 = hp2.as_pair();
    if p1.module.acting != p2.module.acting {
        return Err(TensorError::Precondition(
            "the residue tangible monoids differ, so the family tensor is undefined".into(),
        ));
    }
    let mut grown = None;
    for lb in bound.. {
        let closure = match build_tensor(&p1.module, &p2.module, &p1.module.acting, lb, false) {
            Ok(c) => c,
            Err(e) if grown.is_none() => return Err(e),
            Err(_) => break,
        };
        let saturated = closure.saturated;
        grown = Some((closure, lb));
        if saturated || lb >= bound + 3 {
            break;
        }
    }
    let (left, left_bound) = grown.expect("the loop stores a closure before breaking");
    let left_zero = zero_family(&left, &p1, &p2);

    let single1 = |c: usize| {
        hp1.family_index(subset::singleton(c))
            .expect("residue classes are seeded as singletons")
    };
    let single2 = |c: usize| {
        hp2.family_index(subset::singleton(c))
            .expect("residue classes are seeded as singletons")
    };
    let elem = |lc: usize| {
        if left_zero.binary_search(&lc).is_ok() {
            0
        } else {
            lc + 1
        }
    };
    let elements: BTreeSet<usize> = (0..r1.classes.len())
        .flat_map(|c1| {
            (0..r2.classes.len())
                .map(move |c2| (c1, c2))
        })
        .map(|(c1, c2)| elem(left.simple_class(single1(c1), single2(c2))))
        .collect();

    let mut report = Report::new("residue tensor comparison");
    report.note(format!(
        "parent classes: {}, cosets: {}, quotient tensor elements: {}",
        parent.class_count(),
        orbit_count,
        elements.len()
    ));
    report.note(format!("family tensor built at bound {left_bound}"));

    if parent.saturated && left.saturated {
        let mut zero_scan = LawScan::new();
        let zero_elem = elem(left.simple_class(
            single1(r1.class_of(m1.zero)),
            single2(r2.class_of(m2.zero)),
        ));
        if zero_elem != 0 {
            zero_scan.violation(|| "the zero simple lands outside the zero family".into());
        }
        report.push("zero-maps-to-zero", zero_scan.verdict());

        let mut constant = LawScan::new();
        let mut elem_of_orbit = vec![usize::MAX; orbit_count];
        let mut simple_supported = vec![false; orbit_count];
        for v in 0..m1.len() {
            for w in 0..m2.len() {
                let orbit = orbit_of_class[parent.simple_class(v, w)];
                simple_supported[orbit] = true;
                let image = elem(left.simple_class(
                    single1(r1.class_of(v)),
                    single2(r2.class_of(w)),
                ));
                if elem_of_orbit[orbit] == usize::MAX {
                    elem_of_orbit[orbit] = image;
                } else if elem_of_orbit[orbit] != image {
                    constant.violation(|| {
                        format!(
                            "{} (x) {} maps off its coset's image",
                            m1.label(v),
                            m2.label(w)
                        )
                    });
                }
            }
        }
        report.push("map-respects-the-congruence", constant.verdict());

        let mut biject = LawScan::new();
        let mut seen = BTreeSet::new();
        for orbit in 0..orbit_count {
            if !simple_supported[orbit] {
                biject.violation(|| format!("coset {orbit} contains no simple tensor"));
                continue;
            }
            if !seen.insert(elem_of_orbit[orbit]) {
                biject.violation(|| format!("coset {orbit} collides with an earlier coset"));
            }
        }
        for &e in &elements {
            if !seen.contains(&e) {
                biject.violation(|| "a quotient tensor element has no coset preimage".into());
            }
        }
        report.push("bijective-on-classes", biject.verdict());
    } else {
        let stuck = if parent.saturated { left_bound } else { bound };
        report.push("zero-maps-to-zero", Verdict::Undetermined { bound: stuck });
        report.push(
            "map-respects-the-congruence",
            Verdict::Undetermined { bound: stuck },
        );
        report.push("bijective-on-classes", Verdict::Undetermined { bound: stuck });
    }

    Ok(ResidueTensorIso {
        parent,
        orbit_of_class,
        orbit_count,
        left,
        left_bound,
        left_zero,
        elem_count: elements.len(),
        report,
    })
}
