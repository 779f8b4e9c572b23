use serde::{Deserialize, Serialize};

use crate::error::{check_index, check_table};
use crate::report::{LawScan, Report};
use crate::{CoreError, Elem, FiniteMonoid};

/// A finite module over a monoid: commutative additive monoid `(carrier, add, zero)`
/// with a left action of `acting`, and optionally a right action making it a
/// bimodule. Both action tables are `|T| x n`, row per acting element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TModule {
    pub acting: FiniteMonoid,
    pub carrier: Vec<String>,
    /// Row-major: `add[b1][b2]` is the index of `b1 + b2`.
    pub add: Vec<Vec<Elem>>,
    pub zero: Elem,
    /// `left_action[a][b]` is the index of `a . b` for `a` in the acting monoid.
    pub left_action: Vec<Vec<Elem>>,
    /// `right_action[a][b]` is the index of `b . a`; `None` means the left
    /// action is used on both sides.
    pub right_action: Option<Vec<Vec<Elem>>>,
}

impl TModule {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn add(&self, b1: Elem, b2: Elem) -> Elem {
        self.add[b1][b2]
    }

    pub fn act(&self, a: Elem, b: Elem) -> Elem {
        self.left_action[a][b]
    }

    pub fn act_right(&self, b: Elem, a: Elem) -> Elem {
        match &self.right_action {
            Some(t) => t[a][b],
            None => self.left_action[a][b],
        }
    }

    pub fn label(&self, b: Elem) -> &str {
        &self.carrier[b]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.carrier.iter().position(|l| l == label)
    }

    /// Sum of an element slice, folding from the additive zero.
    pub fn sum(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(self.zero, |acc, &b| self.add(acc, b))
    }

    pub fn validate_shape(&self) -> Result<(), CoreError> {
        self.acting.validate_shape()?;
        let n = self.len();
        let t = self.acting.len();
        if n == 0 {
            return Err(CoreError::Shape("module carrier is empty".into()));
        }
        check_table("add", &self.add, n, n, n)?;
        check_index(self.zero, n)?;
        check_table("left_action", &self.left_action, t, n, n)?;
        if let Some(r) = &self.right_action {
            check_table("right_action", r, t, n, n)?;
        }
        Ok(())
    }
}

/// Exhaustive module axioms over the declared acting monoid. The acting
/// monoid is assumed to pass [`crate::check_monoid`] already.
pub fn check_module(m: &TModule) -> Result<Report, CoreError> {
    m.validate_shape()?;
    let n = m.len();
    let t = m.acting.len();
    let mut report = Report::new("module");

    let mut assoc = LawScan::new();
    let mut comm = LawScan::new();
    for b1 in 0..n {
        for b2 in 0..n {
            if m.add(b1, b2) != m.add(b2, b1) {
                comm.violation(|| format!("{}+{} != {}+{}",
                    m.label(b1), m.label(b2), m.label(b2), m.label(b1)));
            }
            for b3 in 0..n {
                if m.add(m.add(b1, b2), b3) != m.add(b1, m.add(b2, b3)) {
                    assoc.violation(|| format!("({}+{})+{} reassociates differently",
                        m.label(b1), m.label(b2), m.label(b3)));
                }
            }
        }
    }
    report.push("add-associative", assoc.verdict());
    report.push("add-commutative", comm.verdict());

    let mut zero = LawScan::new();
    for b in 0..n {
        if m.add(m.zero, b) != b {
            zero.violation(|| format!("0+{} != {}", m.label(b), m.label(b)));
        }
    }
    report.push("zero-neutral", zero.verdict());

    let mut unit = LawScan::new();
    for b in 0..n {
        if m.act(m.acting.identity, b) != b {
            unit.violation(|| format!("1.{} != {}", m.label(b), m.label(b)));
        }
    }
    report.push("action-unital", unit.verdict());

    let mut act_assoc = LawScan::new();
    for a1 in 0..t {
        for a2 in 0..t {
            for b in 0..n {
                if m.act(a1, m.act(a2, b)) != m.act(m.acting.op(a1, a2), b) {
                    act_assoc.violation(|| format!("{}({}.{}) != ({}{}).{}",
                        m.acting.label(a1), m.acting.label(a2), m.label(b),
                        m.acting.label(a1), m.acting.label(a2), m.label(b)));
                }
            }
        }
    }
    report.push("action-associative", act_assoc.verdict());

    let mut absorb = LawScan::new();
    for a in 0..t {
        if m.act(a, m.zero) != m.zero {
            absorb.violation(|| format!("{}.0 != 0", m.acting.label(a)));
        }
    }
    report.push("zero-absorbing", absorb.verdict());

    if let Some(z) = m.acting.absorbing {
        let mut scalar = LawScan::new();
        for b in 0..n {
            if m.act(z, b) != m.zero {
                scalar.violation(|| format!("{}.{} != 0",
                    m.acting.label(z), m.label(b)));
            }
        }
        report.push("absorbing-scalar-to-zero", scalar.verdict());
    }

    let mut dist = LawScan::new();
    for a in 0..t {
        for b1 in 0..n {
            for b2 in 0..n {
                if m.act(a, m.add(b1, b2)) != m.add(m.act(a, b1), m.act(a, b2)) {
                    dist.violation(|| format!("{}.({}+{}) fails distributivity",
                        m.acting.label(a), m.label(b1), m.label(b2)));
                }
            }
        }
    }
    report.push("action-distributive", dist.verdict());

    if m.right_action.is_some() {
        let mut r_unit = LawScan::new();
        let mut r_assoc = LawScan::new();
        let mut r_absorb = LawScan::new();
        let mut r_dist = LawScan::new();
        let mut bimod = LawScan::new();
        for b in 0..n {
            if m.act_right(b, m.acting.identity) != b {
                r_unit.violation(|| format!("{}.1 != {}", m.label(b), m.label(b)));
            }
        }
        for a1 in 0..t {
            for a2 in 0..t {
                for b in 0..n {
                    if m.act_right(m.act_right(b, a1), a2)
                        != m.act_right(b, m.acting.op(a1, a2))
                    {
                        r_assoc.violation(|| format!("({}.{}).{} reassociates differently",
                            m.label(b), m.acting.label(a1), m.acting.label(a2)));
                    }
                }
            }
        }
        for a in 0..t {
            if m.act_right(m.zero, a) != m.zero {
                r_absorb.violation(|| format!("0.{} != 0", m.acting.label(a)));
            }
            for b1 in 0..n {
                for b2 in 0..n {
                    if m.act_right(m.add(b1, b2), a)
                        != m.add(m.act_right(b1, a), m.act_right(b2, a))
                    {
                        r_dist.violation(|| format!("({}+{}).{} fails distributivity",
                            m.label(b1), m.label(b2), m.acting.label(a)));
                    }
                }
            }
        }
        for a1 in 0..t {
            for b in 0..n {
                for a2 in 0..t {
                    if m.act_right(m.act(a1, b), a2) != m.act(a1, m.act_right(b, a2)) {
                        bimod.violation(|| format!("({}.{}).{} != {}.({}.{})",
                            m.acting.label(a1), m.label(b), m.acting.label(a2),
                            m.acting.label(a1), m.label(b), m.acting.label(a2)));
                    }
                }
            }
        }
        report.push("right-action-unital", r_unit.verdict());
        report.push("right-action-associative", r_assoc.verdict());
        report.push("right-zero-absorbing", r_absorb.verdict());
        report.push("right-action-distributive", r_dist.verdict());
        report.push("bimodule-compatibility", bimod.verdict());
    }

    Ok(report)
}
