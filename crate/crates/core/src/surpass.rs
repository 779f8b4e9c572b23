use serde::{Deserialize, Serialize};

use crate::report::{LawScan, Report};
use crate::{CoreError, Elem, Pair};

/// A candidate surpassing relation as a dense boolean matrix;
/// `rel[b1][b2]` means `b1` is surpassed by `b2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurpassingRelation {
    pub rel: Vec<Vec<bool>>,
}

impl SurpassingRelation {
    pub fn le(&self, b1: Elem, b2: Elem) -> bool {
        self.rel[b1][b2]
    }

    /// The discrete relation: only `b <= b`.
    pub fn equality(n: usize) -> Self {
        SurpassingRelation {
            rel: (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.is_empty()
    }

    pub fn validate_shape(&self, n: usize) -> Result<(), CoreError> {
        if self.rel.len() != n || self.rel.iter().any(|r| r.len() != n) {
            return Err(CoreError::Shape(format!(
                "relation matrix is not {n} x {n}"
            )));
        }
        Ok(())
    }
}

/// Exhaustive surpassing axioms against a pair: pre-order, monotonicity
/// under addition and both actions, rigidity on tangibles and at zero, and
/// the zero-set compatibility `0 <= c`. The derived absorption law
/// `b <= b + c` for `c` in `A0` follows from the axioms and is re-checked
/// and reported as its own line.
pub fn check_surpassing(p: &Pair, s: &SurpassingRelation) -> Result<Report, CoreError> {
    p.validate_shape()?;
    let m = &p.module;
    let n = m.len();
    s.validate_shape(n)?;
    let mut report = Report::new("surpassing");

    let mut refl = LawScan::new();
    for b in 0..n {
        if !s.le(b, b) {
            refl.violation(|| format!("{} not <= itself", m.label(b)));
        }
    }
    report.push("reflexive", refl.verdict());

    let mut trans = LawScan::new();
    for b1 in 0..n {
        for b2 in 0..n {
            if !s.le(b1, b2) {
                continue;
            }
            for b3 in 0..n {
                if s.le(b2, b3) && !s.le(b1, b3) {
                    trans.violation(|| format!("{} <= {} <= {} does not chain",
                        m.label(b1), m.label(b2), m.label(b3)));
                }
            }
        }
    }
    report.push("transitive", trans.verdict());

    let mut act = LawScan::new();
    for a in 0..m.acting.len() {
        for b1 in 0..n {
            for b2 in 0..n {
                if !s.le(b1, b2) {
                    continue;
                }
                if !s.le(m.act(a, b1), m.act(a, b2)) {
                    act.violation(|| format!("{} <= {} breaks under left {}",
                        m.label(b1), m.label(b2), m.acting.label(a)));
                }
                if !s.le(m.act_right(b1, a), m.act_right(b2, a)) {
                    act.violation(|| format!("{} <= {} breaks under right {}",
                        m.label(b1), m.label(b2), m.acting.label(a)));
                }
            }
        }
    }
    report.push("action-monotone", act.verdict());

    let mut sum = LawScan::new();
    for b1 in 0..n {
        for c1 in 0..n {
            if !s.le(b1, c1) {
                continue;
            }
            for b2 in 0..n {
                for c2 in 0..n {
                    if s.le(b2, c2) && !s.le(m.add(b1, b2), m.add(c1, c2)) {
                        sum.violation(|| format!("{}+{} not <= {}+{}",
                            m.label(b1), m.label(b2), m.label(c1), m.label(c2)));
                    }
                }
            }
        }
    }
    report.push("sum-monotone", sum.verdict());

    let mut rigid = LawScan::new();
    for &a1 in &p.tangibles {
        for &a2 in &p.tangibles {
            if s.le(a1, a2) && a1 != a2 {
                rigid.violation(|| format!("tangibles {} <= {} differ",
                    m.label(a1), m.label(a2)));
            }
        }
    }
    report.push("tangible-rigidity", rigid.verdict());

    let mut zero_rigid = LawScan::new();
    for b in 0..n {
        if s.le(b, m.zero) && b != m.zero {
            zero_rigid.violation(|| format!("{} <= 0", m.label(b)));
        }
    }
    report.push("zero-rigidity", zero_rigid.verdict());

    let mut below = LawScan::new();
    for &c in &p.zero_set {
        if !s.le(m.zero, c) {
            below.violation(|| format!("0 not <= {}", m.label(c)));
        }
    }
    report.push("zero-below-zero-set", below.verdict());

    let mut absorb = LawScan::new();
    for b in 0..n {
        for &c in &p.zero_set {
            if !s.le(b, m.add(b, c)) {
                absorb.violation(|| format!("{} not <= {}+{}",
                    m.label(b), m.label(b), m.label(c)));
            }
            if !s.le(b, m.add(c, b)) {
                absorb.violation(|| format!("{} not <= {}+{}",
                    m.label(b), m.label(c), m.label(b)));
            }
        }
    }
    report.push("derived-zero-set-absorption", absorb.verdict());

    Ok(report)
}
