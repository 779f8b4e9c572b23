//! The residue construction: quotient a module by the orbits of a normal
//! subgroup of its acting monoid and push the addition down to a
//! hyperaddition on classes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use hyperlab_core::report::LawScan;
use hyperlab_core::{check_module, Elem, Report, TModule};
use hyperlab_hyper::subset;
use hyperlab_hyper::{powerset_add, Hypermagma, Mask, MulStructure};

use crate::{ResidueError, SubgroupSpec};

/// A module carrier partitioned into subgroup orbits, with the induced
/// hyperaddition (and multiplication, when the module is self-acting and
/// products are constant on classes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueHypermodule {
    /// Orbit classes, each sorted; class 0 is the orbit of the module zero.
    pub classes: Vec<Vec<Elem>>,
    /// Hyperaddition on classes; `hyperzero` is always `Some(0)`.
    pub hypermagma: Hypermagma,
    /// Carrier index to class index.
    pub projection: Vec<usize>,
}

impl ResidueHypermodule {
    pub fn class_of(&self, b: Elem) -> usize {
        self.projection[b]
    }

    /// Renders a mask of classes with the hypermagma's class labels.
    pub fn render(&self, mask: Mask) -> String {
        let names: Vec<&str> = subset::elems(mask)
            .map(|c| self.hypermagma.label(c))
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Quotients `m` by the orbits of `g`. The class of zero lands at index 0
/// and the remaining classes are ordered by their least member.
pub fn residue(m: &TModule, g: &SubgroupSpec) -> Result<ResidueHypermodule, ResidueError> {
    let module_report = check_module(m)?;
    if !module_report.passed() {
        let law = module_report
            .failures()
            .next()
            .map(|c| c.law.clone())
            .unwrap_or_default();
        return Err(ResidueError::Precondition(format!(
            "module laws fail before quotienting: {law}"
        )));
    }
    g.validate()?;
    g.check_normal_for(m)?;

    let n = m.len();
    let mut projection = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    let assign = |seed: Elem, projection: &mut Vec<usize>, classes: &mut Vec<Vec<Elem>>| {
        if projection[seed] != usize::MAX {
            return;
        }
        let orbit = g.orbit(m, seed);
        let index = classes.len();
        for &member in &orbit {
            projection[member] = index;
        }
        classes.push(orbit);
    };
    assign(m.zero, &mut projection, &mut classes);
    for b in 0..n {
        assign(b, &mut projection, &mut classes);
    }

    let k = classes.len();
    let hyperop: Vec<Vec<Mask>> = classes
        .iter()
        .map(|c1| {
            classes
                .iter()
                .map(|c2| {
                    let mut mask: Mask = 0;
                    for &x in c1 {
                        for &y in c2 {
                            mask |= subset::singleton(projection[m.add(x, y)]);
                        }
                    }
                    mask
                })
                .collect()
        })
        .collect();
    let carrier: Vec<String> = classes
        .iter()
        .map(|c| format!("[{}]", m.label(c[0])))
        .collect();
    let mul = induced_mul(m, &classes, &projection);

    let hypermagma = Hypermagma {
        carrier,
        hyperop,
        hyperzero: Some(0),
        mul,
    };
    hypermagma.validate_shape()?;
    debug_assert_eq!(hypermagma.len(), k);
    Ok(ResidueHypermodule {
        classes,
        hypermagma,
        projection,
    })
}

/// Class multiplication exists when the module acts on itself (carrier and
/// acting monoid coincide, the left action is the monoid operation) and
/// every product is constant on class pairs.
fn induced_mul(m: &TModule, classes: &[Vec<Elem>], projection: &[usize]) -> Option<MulStructure> {
    let self_acting = m.acting.elements == m.carrier
        && m.left_action == m.acting.op
        && m.right_action.as_ref().map_or(true, |r| *r == m.left_action);
    if !self_acting {
        return None;
    }
    let mut table = vec![vec![0usize; classes.len()]; classes.len()];
    for (i, c1) in classes.iter().enumerate() {
        for (j, c2) in classes.iter().enumerate() {
            let mut targets = c1
                .iter()
                .flat_map(|&x| c2.iter().map(move |&y| projection[m.acting.op(x, y)]));
            let first = targets.next()?;
            if targets.any(|t| t != first) {
                return None;
            }
            table[i][j] = first;
        }
    }
    Some(MulStructure {
        table,
        one: projection[m.acting.identity],
    })
}

/// The distinguished constants of a residue hypermodule, as masks of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueConstants {
    /// Classes of the unit-difference set `{g1 - g2}`.
    pub e: Mask,
    /// Classes of `{b1 g1 - b2 g2}` for `b_i` in the members of `e`.
    pub ee: Mask,
    /// Hyperaddition of `e` with itself, extended to subsets.
    pub e_hyperadd_e: Mask,
    /// Per class `S`, the classes of `{b1 g1 - b2 g2}` for `b_i` in `S`.
    pub action_on_e: Vec<Mask>,
}

/// Computes `e`, `ee`, and `e [+] e` for a residue of a self-acting module
/// and checks that the product and the hyperaddition agree on `e`.
///
/// `m` must be the module `r` was built from: the difference sets live in
/// the parent, the masks report their classes.
pub fn residue_constants(
    m: &TModule,
    r: &ResidueHypermodule,
) -> Result<(ResidueConstants, Report), ResidueError> {
    let h = &r.hypermagma;
    let mul = h.mul.as_ref().ok_or_else(|| {
        ResidueError::NoUnit("the residue carries no induced multiplication".into())
    })?;
    let unit_members = r.classes[mul.one].clone();

    let mut negation = vec![None; m.len()];
    for x in 0..m.len() {
        negation[x] = (0..m.len()).find(|&y| m.add(x, y) == m.zero && m.add(y, x) == m.zero);
    }
    for &g in &unit_members {
        if negation[g].is_none() {
            return Err(ResidueError::NeedsNegation(format!(
                "{} has no additive inverse, so the unit class has no hypernegative",
                m.label(g)
            )));
        }
    }

    let difference_set = |s: &[Elem]| -> Result<BTreeSet<Elem>, ResidueError> {
        let mut out = BTreeSet::new();
        for &b1 in s {
            for &b2 in s {
                for &g1 in &unit_members {
                    for &g2 in &unit_members {
                        let x = m.act_right(b1, g1);
                        let y = m.act_right(b2, g2);
                        let neg = negation[y].ok_or_else(|| {
                            ResidueError::NeedsNegation(format!(
                                "{} has no additive inverse",
                                m.label(y)
                            ))
                        })?;
                        out.insert(m.add(x, neg));
                    }
                }
            }
        }
        Ok(out)
    };
    let classes_of = |s: &BTreeSet<Elem>| -> Mask {
        s.iter()
            .fold(0, |mask, &x| mask | subset::singleton(r.projection[x]))
    };

    let e_parent = difference_set(&unit_members)?;
    let e = classes_of(&e_parent);
    let e_members: Vec<Elem> = e_parent.iter().copied().collect();
    let ee = classes_of(&difference_set(&e_members)?);
    let e_hyperadd_e = powerset_add(h, e, e);
    let action_on_e: Vec<Mask> = r
        .classes
        .iter()
        .map(|c| difference_set(c).map(|s| classes_of(&s)))
        .collect::<Result<_, _>>()?;

    let mut report = Report::new("residue-constants");
    let mut neg_class = LawScan::new();
    let targets: BTreeSet<usize> = unit_members
        .iter()
        .map(|&g| r.projection[negation[g].expect("checked above")])
        .collect();
    if targets.len() != 1 {
        neg_class.violation(|| format!("negatives of the unit class span {targets:?}"));
    }
    report.push("negative-unit-class-well-defined", neg_class.verdict());

    let mut agree = LawScan::new();
    if let Some(&neg_one) = targets.iter().next() {
        let hyper_e = h.hadd(mul.one, neg_one);
        if hyper_e != e {
            agree.violation(|| {
                format!(
                    "unit hyperadd gives {} but the difference set gives {}",
                    r.render(hyper_e),
                    r.render(e)
                )
            });
        }
    }
    report.push("e-agrees-with-unit-hyperadd", agree.verdict());

    let mut law = LawScan::new();
    if ee != e_hyperadd_e {
        law.violation(|| {
            format!("ee = {} but e [+] e = {}", r.render(ee), r.render(e_hyperadd_e))
        });
    }
    report.push("ee-equals-e-hyperadd-e", law.verdict());
    report.note(format!("e = {}", r.render(e)));

    Ok((
        ResidueConstants {
            e,
            ee,
            e_hyperadd_e,
            action_on_e,
        },
        report,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_module;
    use hyperlab_core::fixtures::{scalars_mod3, zmod_module};

    fn units(m: &TModule) -> SubgroupSpec {
        let members = (0..m.acting.len())
            .filter(|&a| {
                (0..m.acting.len()).any(|b| {
                    m.acting.op(a, b) == m.acting.identity && m.acting.op(b, a) == m.acting.identity
                })
            })
            .collect();
        SubgroupSpec::new(m.acting.clone(), members).unwrap()
    }

    #[test]
    fn zero_class_is_first_and_fixed() {
        let m = field_module(5).unwrap();
        let g = units(&m);
        let r = residue(&m, &g).unwrap();
        assert_eq!(r.classes[0], vec![0]);
        assert_eq!(r.hypermagma.hyperzero, Some(0));
    }

    #[test]
    fn projection_is_consistent_with_classes() {
        let m = field_module(7).unwrap();
        let g = SubgroupSpec::new(m.acting.clone(), vec![1, 2, 4]).unwrap();
        let r = residue(&m, &g).unwrap();
        for (index, class) in r.classes.iter().enumerate() {
            for &member in class {
                assert_eq!(r.projection[member], index);
            }
        }
    }

    #[test]
    fn self_action_detection_accepts_fields_only() {
        let field = field_module(3).unwrap();
        let g = units(&field);
        assert!(residue(&field, &g).unwrap().hypermagma.mul.is_some());

        let m = scalars_mod3();
        let g = units(&m);
        assert!(residue(&m, &g).unwrap().hypermagma.mul.is_none());
    }

    #[test]
    fn non_normal_or_lawless_inputs_are_rejected() {
        let m = zmod_module(4);
        let g = SubgroupSpec::trivial(field_module(3).unwrap().acting);
        let err = residue(&m, &g).unwrap_err();
        assert!(matches!(err, ResidueError::Precondition(_)), "{err}");
    }

    #[test]
    fn constants_need_a_multiplication() {
        let m = scalars_mod3();
        let g = units(&m);
        let r = residue(&m, &g).unwrap();
        let err = residue_constants(&m, &r).unwrap_err();
        assert!(matches!(err, ResidueError::NoUnit(_)), "{err}");
    }
}
