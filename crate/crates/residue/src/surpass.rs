//! Surpassing relations pushed down to residue classes.

use hyperlab_core::report::LawScan;
use hyperlab_core::{Report, SurpassingRelation, TModule};
use hyperlab_hyper::subset;

use crate::{residue, ResidueError, SubgroupSpec};

/// Induces a relation on the classes of `m / g` from a relation on `m`:
/// a class is below another when every member is below some member of the
/// other. The one-sided reading is deliberate and not symmetrized.
///
/// The report re-checks the preorder laws and the lifted sum monotonicity
/// (members of a hyper-sum of lower classes are below members of the
/// hyper-sum of higher ones) on the quotient.
pub fn induced_surpassing(
    m: &TModule,
    s: &SurpassingRelation,
    g: &SubgroupSpec,
) -> Result<(SurpassingRelation, Report), ResidueError> {
    s.validate_shape(m.len())?;
    let r = residue(m, g)?;
    let k = r.classes.len();

    let rel: Vec<Vec<bool>> = (0..k)
        .map(|c1| {
            (0..k)
                .map(|c2| {
                    r.classes[c1]
                        .iter()
                        .all(|&x| r.classes[c2].iter().any(|&y| s.le(x, y)))
                })
                .collect()
        })
        .collect();
    let induced = SurpassingRelation { rel };

    let h = &r.hypermagma;
    let mut report = Report::new("induced-surpassing");

    let mut refl = LawScan::new();
    for c in 0..k {
        if !induced.le(c, c) {
            refl.violation(|| format!("{} not below itself", h.label(c)));
        }
    }
    report.push("reflexive", refl.verdict());

    let mut trans = LawScan::new();
    for c1 in 0..k {
        for c2 in 0..k {
            if !induced.le(c1, c2) {
                continue;
            }
            for c3 in 0..k {
                if induced.le(c2, c3) && !induced.le(c1, c3) {
                    trans.violation(|| {
                        format!(
                            "{} <= {} <= {} does not chain",
                            h.label(c1),
                            h.label(c2),
                            h.label(c3)
                        )
                    });
                }
            }
        }
    }
    report.push("transitive", trans.verdict());

    let mut sum = LawScan::new();
    for c1 in 0..k {
        for d1 in 0..k {
            if !induced.le(c1, d1) {
                continue;
            }
            for c2 in 0..k {
                for d2 in 0..k {
                    if !induced.le(c2, d2) {
                        continue;
                    }
                    let lower = h.hadd(c1, c2);
                    let upper = h.hadd(d1, d2);
                    for x in subset::elems(lower) {
                        if !subset::elems(upper).any(|y| induced.le(x, y)) {
                            sum.violation(|| {
                                format!(
                                    "{} in {}+{} is below nothing in {}+{}",
                                    h.label(x),
                                    h.label(c1),
                                    h.label(c2),
                                    h.label(d1),
                                    h.label(d2)
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    report.push("sum-monotone-lift", sum.verdict());

    Ok((induced, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_module;

    #[test]
    fn equality_induces_class_equality() {
        let m = field_module(3).unwrap();
        let g = SubgroupSpec::new(m.acting.clone(), vec![1, 2]).unwrap();
        let s = SurpassingRelation::equality(m.len());
        let (induced, report) = induced_surpassing(&m, &s, &g).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(induced, SurpassingRelation::equality(2));
    }

    #[test]
    fn relation_shape_must_match_the_module() {
        let m = field_module(3).unwrap();
        let g = SubgroupSpec::trivial(m.acting.clone());
        let s = SurpassingRelation::equality(5);
        assert!(induced_surpassing(&m, &s, &g).is_err());
    }
}
