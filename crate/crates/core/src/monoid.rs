use serde::{Deserialize, Serialize};

use crate::error::{check_index, check_table};
use crate::report::{LawScan, Report};
use crate::{CoreError, Elem};

/// A finite monoid as a dense Cayley table. Labels are presentation-only;
/// all arithmetic runs on indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMonoid {
    pub elements: Vec<String>,
    /// Row-major: `op[a][b]` is the index of `a * b`.
    pub op: Vec<Vec<Elem>>,
    pub identity: Elem,
    /// Two-sided absorbing element, if the monoid has one.
    pub absorbing: Option<Elem>,
}

impl FiniteMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.op[a][b]
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn validate_shape(&self) -> Result<(), CoreError> {
        let n = self.len();
        if n == 0 {
            return Err(CoreError::Shape("monoid carrier is empty".into()));
        }
        check_table("op", &self.op, n, n, n)?;
        check_index(self.identity, n)?;
        if let Some(z) = self.absorbing {
            check_index(z, n)?;
        }
        Ok(())
    }
}

/// Exhaustive monoid axioms: associativity, two-sided identity, and the
/// absorbing claim when one is declared.
pub fn check_monoid(m: &FiniteMonoid) -> Result<Report, CoreError> {
    m.validate_shape()?;
    let n = m.len();
    let mut report = Report::new("monoid");

    let mut assoc = LawScan::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                    assoc.violation(|| {
                        format!("({}*{})*{} != {}*({}*{})",
                            m.label(a), m.label(b), m.label(c),
                            m.label(a), m.label(b), m.label(c))
                    });
                }
            }
        }
    }
    report.push("associativity", assoc.verdict());

    let mut ident = LawScan::new();
    for a in 0..n {
        if m.op(m.identity, a) != a || m.op(a, m.identity) != a {
            ident.violation(|| format!("identity fails at {}", m.label(a)));
        }
    }
    report.push("identity", ident.verdict());

    if let Some(z) = m.absorbing {
        let mut abs = LawScan::new();
        for a in 0..n {
            if m.op(z, a) != z || m.op(a, z) != z {
                abs.violation(|| format!("absorbing fails at {}", m.label(a)));
            }
        }
        report.push("absorbing", abs.verdict());
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cyclic_group;
    use crate::report::Verdict;

    #[test]
    fn cyclic_groups_pass() {
        for n in 1..7 {
            assert!(check_monoid(&cyclic_group(n)).unwrap().passed());
        }
    }

    #[test]
    fn first_lex_associativity_witness() {
        let m = FiniteMonoid {
            elements: vec!["a".into(), "b".into()],
            op: vec![vec![1, 1], vec![0, 0]],
            identity: 0,
            absorbing: None,
        };
        let report = check_monoid(&m).unwrap();
        let assoc = report.checks.iter().find(|c| c.law == "associativity").unwrap();
        match &assoc.verdict {
            Verdict::Fail { witness, .. } => assert!(witness.starts_with("(a*a)*a")),
            other => panic!("expected a failure, got {other:?}"),
        }
    }

    #[test]
    fn bad_index_is_a_shape_error() {
        let m = FiniteMonoid {
            elements: vec!["a".into()],
            op: vec![vec![3]],
            identity: 0,
            absorbing: None,
        };
        assert!(check_monoid(&m).is_err());
    }
}
