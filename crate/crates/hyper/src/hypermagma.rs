use hyperlab_core::report::LawScan;
use hyperlab_core::{Elem, Report, Verdict};
use serde::{Deserialize, Serialize};

use crate::subset::{self, Mask};
use crate::{HyperError, MAX_CARRIER};

/// Multiplicative structure on a hypermagma carrier: an ordinary
/// single-valued table with a unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulStructure {
    pub table: Vec<Vec<Elem>>,
    pub one: Elem,
}

/// A finite hypermagma: subset-valued addition over a small carrier.
/// The empty set is a legal entry and absorbs in the power-set extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypermagma {
    pub carrier: Vec<String>,
    /// Row-major: `hyperop[a][b]` is the subset `a + b`.
    pub hyperop: Vec<Vec<Mask>>,
    pub hyperzero: Option<Elem>,
    pub mul: Option<MulStructure>,
}

impl Hypermagma {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.carrier[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.carrier.iter().position(|l| l == label)
    }

    pub fn hadd(&self, a: Elem, b: Elem) -> Mask {
        self.hyperop[a][b]
    }

    pub fn mul_elem(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.mul.as_ref().map(|m| m.table[a][b])
    }

    /// Whether `mul` restricts to a group on the nonzero carrier.
    pub fn mul_is_group_on_nonzero(&self) -> bool {
        let (Some(mul), Some(zero)) = (&self.mul, self.hyperzero) else {
            return false;
        };
        let nonzero: Vec<Elem> = (0..self.len()).filter(|&a| a != zero).collect();
        if nonzero.contains(&zero) || mul.one == zero {
            return false;
        }
        nonzero.iter().all(|&a| {
            nonzero.contains(&mul.table[a][mul.one])
                && nonzero.iter().all(|&b| mul.table[a][b] != zero)
                && nonzero
                    .iter()
                    .any(|&b| mul.table[a][b] == mul.one && mul.table[b][a] == mul.one)
        })
    }

    pub fn validate_shape(&self) -> Result<(), HyperError> {
        let n = self.len();
        if n == 0 {
            return Err(HyperError::Shape("carrier is empty".into()));
        }
        if n > MAX_CARRIER {
            return Err(HyperError::TooLarge(n));
        }
        let all = subset::full(n);
        if self.hyperop.len() != n || self.hyperop.iter().any(|r| r.len() != n) {
            return Err(HyperError::Shape(format!("hyperop is not {n} x {n}")));
        }
        for row in &self.hyperop {
            for &m in row {
                if m & !all != 0 {
                    return Err(HyperError::Shape(format!(
                        "hyperop entry {m:#x} has bits outside the carrier"
                    )));
                }
            }
        }
        if let Some(z) = self.hyperzero {
            if z >= n {
                return Err(HyperError::Shape(format!("hyperzero index {z} out of range")));
            }
        }
        if let Some(mul) = &self.mul {
            if mul.table.len() != n
                || mul.table.iter().any(|r| r.len() != n || r.iter().any(|&e| e >= n))
            {
                return Err(HyperError::Shape(format!("mul is not an index table {n} x {n}")));
            }
            if mul.one >= n {
                return Err(HyperError::Shape(format!("unit index {} out of range", mul.one)));
            }
        }
        Ok(())
    }
}

/// Power-set extension of the hyperaddition: the union of the elementwise
/// sums. The empty set absorbs because the union over no pairs is empty.
pub fn powerset_add(h: &Hypermagma, s1: Mask, s2: Mask) -> Mask {
    let mut out = 0;
    for a in subset::elems(s1) {
        for b in subset::elems(s2) {
            out |= h.hadd(a, b);
        }
    }
    out
}

/// Hypersemigroup suite: a declared hyperzero that is neutral, and
/// set-equality associativity of the extended addition over all triples.
pub fn check_hypersemigroup(h: &Hypermagma) -> Result<Report, HyperError> {
    h.validate_shape()?;
    let n = h.len();
    let mut report = Report::new("hypersemigroup");

    match h.hyperzero {
        None => report.push(
            "hyperzero-neutral",
            Verdict::Fail {
                witness: "no hyperzero declared".into(),
                count: 1,
            },
        ),
        Some(z) => {
            let mut law = LawScan::new();
            for a in 0..n {
                if h.hadd(z, a) != subset::singleton(a) || h.hadd(a, z) != subset::singleton(a) {
                    law.violation(|| format!("0 + {} != {{{}}}", h.label(a), h.label(a)));
                }
            }
            report.push("hyperzero-neutral", law.verdict());
        }
    }

    let mut assoc = LawScan::new();
    for a in 0..n {
        for b in 0..n {
            let ab = h.hadd(a, b);
            for c in 0..n {
                let left = powerset_add(h, ab, subset::singleton(c));
                let right = powerset_add(h, subset::singleton(a), h.hadd(b, c));
                if left != right {
                    assoc.violation(|| format!(
                        "({}+{})+{} = {} but {}+({}+{}) = {}",
                        h.label(a), h.label(b), h.label(c), subset::render(left, &h.carrier),
                        h.label(a), h.label(b), h.label(c), subset::render(right, &h.carrier)));
                }
            }
        }
    }
    report.push("add-associative", assoc.verdict());

    Ok(report)
}

/// Hypergroup suite result; the negation table is present only when every
/// law passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergroupOutcome {
    pub report: Report,
    pub negation: Option<Vec<Elem>>,
}

/// Hypergroup suite: hypersemigroup laws, a unique hypernegative for every
/// element, elementwise anti-automorphism, involutivity, and reversibility.
pub fn check_hypergroup(h: &Hypermagma) -> Result<HypergroupOutcome, HyperError> {
    let mut report = check_hypersemigroup(h)?;
    report.subject = "hypergroup".into();
    let n = h.len();

    let Some(z) = h.hyperzero else {
        report.push(
            "unique-negation",
            Verdict::Fail {
                witness: "no hyperzero declared".into(),
                count: 1,
            },
        );
        return Ok(HypergroupOutcome {
            report,
            negation: None,
        });
    };

    let mut neg: Vec<Option<Elem>> = vec![None; n];
    let mut unique = LawScan::new();
    for a in 0..n {
        let candidates: Vec<Elem> = (0..n)
            .filter(|&x| subset::contains(h.hadd(a, x), z) && subset::contains(h.hadd(x, a), z))
            .collect();
        if candidates.len() == 1 {
            neg[a] = Some(candidates[0]);
        } else {
            unique.violation(|| format!(
                "{} has {} hypernegatives",
                h.label(a),
                candidates.len()
            ));
        }
    }
    report.push("unique-negation", unique.verdict());

    let negation: Option<Vec<Elem>> = neg.iter().copied().collect();
    if let Some(neg) = &negation {
        let mut anti = LawScan::new();
        let mut invol = LawScan::new();
        for a in 0..n {
            if neg[neg[a]] != a {
                invol.violation(|| format!("-(-{}) != {}", h.label(a), h.label(a)));
            }
            for b in 0..n {
                let negated = subset::from_elems(subset::elems(h.hadd(a, b)).map(|x| neg[x]));
                if negated != h.hadd(neg[b], neg[a]) {
                    anti.violation(|| format!(
                        "-({}+{}) != (-{})+(-{})",
                        h.label(a), h.label(b), h.label(b), h.label(a)));
                }
            }
        }
        report.push("negation-anti-automorphism", anti.verdict());
        report.push("negation-involutive", invol.verdict());

        let mut rev = LawScan::new();
        for a1 in 0..n {
            for a2 in 0..n {
                let sum = h.hadd(a1, a2);
                for a3 in 0..n {
                    let lhs = subset::contains(sum, a3);
                    let rhs = subset::contains(h.hadd(a3, neg[a1]), a2);
                    if lhs != rhs {
                        rev.violation(|| format!(
                            "{} in {}+{} is {} but {} in {}+(-{}) is {}",
                            h.label(a3), h.label(a1), h.label(a2), lhs,
                            h.label(a2), h.label(a3), h.label(a1), rhs));
                    }
                }
            }
        }
        report.push("reversibility", rev.verdict());
    }

    let negation = negation.filter(|_| report.passed());
    Ok(HypergroupOutcome { report, negation })
}

/// Hyperfield suite: hypergroup laws plus commutative addition, a
/// multiplicative group on the nonzero carrier with absorbing zero, and
/// distributivity of the multiplication over the hyperaddition.
pub fn check_hyperfield(h: &Hypermagma) -> Result<Report, HyperError> {
    let Some(mul) = &h.mul else {
        return Err(HyperError::NeedsMul(
            "the hyperfield suite checks the multiplicative group".into(),
        ));
    };
    let mut report = check_hypergroup(h)?.report;
    report.subject = "hyperfield".into();
    let n = h.len();

    let mut comm = LawScan::new();
    for a in 0..n {
        for b in 0..n {
            if h.hadd(a, b) != h.hadd(b, a) {
                comm.violation(|| format!("{}+{} != {}+{}",
                    h.label(a), h.label(b), h.label(b), h.label(a)));
            }
        }
    }
    report.push("add-commutative", comm.verdict());

    let mut assoc = LawScan::new();
    let mut unit = LawScan::new();
    for a in 0..n {
        if mul.table[mul.one][a] != a || mul.table[a][mul.one] != a {
            unit.violation(|| format!("1.{} != {}", h.label(a), h.label(a)));
        }
        for b in 0..n {
            for c in 0..n {
                if mul.table[mul.table[a][b]][c] != mul.table[a][mul.table[b][c]] {
                    assoc.violation(|| format!("({}{}){} reassociates differently",
                        h.label(a), h.label(b), h.label(c)));
                }
            }
        }
    }
    report.push("mul-associative", assoc.verdict());
    report.push("mul-unital", unit.verdict());

    let Some(z) = h.hyperzero else {
        return Ok(report);
    };

    let mut absorb = LawScan::new();
    for a in 0..n {
        if mul.table[z][a] != z || mul.table[a][z] != z {
            absorb.violation(|| format!("0.{} != 0", h.label(a)));
        }
    }
    report.push("mul-zero-absorbing", absorb.verdict());

    let mut group = LawScan::new();
    for a in (0..n).filter(|&a| a != z) {
        for b in (0..n).filter(|&b| b != z) {
            if mul.table[a][b] == z {
                group.violation(|| format!("{}.{} = 0", h.label(a), h.label(b)));
            }
        }
        let has_inverse = (0..n)
            .filter(|&b| b != z)
            .any(|b| mul.table[a][b] == mul.one && mul.table[b][a] == mul.one);
        if !has_inverse {
            group.violation(|| format!("{} has no inverse", h.label(a)));
        }
    }
    report.push("nonzero-multiplicative-group", group.verdict());

    let mut dist = LawScan::new();
    for a in 0..n {
        for b1 in 0..n {
            for b2 in 0..n {
                let sum = h.hadd(b1, b2);
                let left = subset::from_elems(subset::elems(sum).map(|x| mul.table[a][x]));
                if left != h.hadd(mul.table[a][b1], mul.table[a][b2]) {
                    dist.violation(|| format!("{}({}+{}) fails distributivity",
                        h.label(a), h.label(b1), h.label(b2)));
                }
                let right = subset::from_elems(subset::elems(sum).map(|x| mul.table[x][a]));
                if right != h.hadd(mul.table[b1][a], mul.table[b2][a]) {
                    dist.violation(|| format!("({}+{}){} fails distributivity",
                        h.label(b1), h.label(b2), h.label(a)));
                }
            }
        }
    }
    report.push("mul-distributive", dist.verdict());

    Ok(report)
}

/// All subsets `S` with `a` in `a + S` for every `a`, plus the check that
/// the family is closed under the extended hyperaddition.
pub fn weakly_neutral_family(h: &Hypermagma) -> Result<(Vec<Mask>, Report), HyperError> {
    if !check_hypersemigroup(h)?.passed() {
        return Err(HyperError::Precondition(
            "weakly neutral family needs a hypersemigroup".into(),
        ));
    }
    let n = h.len();
    let members: Vec<Mask> = (0..=subset::full(n))
        .filter(|&s| (0..n).all(|a| subset::contains(powerset_add(h, subset::singleton(a), s), a)))
        .collect();

    let mut report = Report::new("weakly-neutral-family");
    if members.len() * members.len() > 20_000_000 {
        return Err(HyperError::Cap(format!(
            "family closure check over {} members is too large",
            members.len()
        )));
    }
    let mut closed = LawScan::new();
    for &s1 in &members {
        for &s2 in &members {
            let sum = powerset_add(h, s1, s2);
            if members.binary_search(&sum).is_err() {
                closed.violation(|| format!(
                    "{} + {} = {} is not weakly neutral",
                    subset::render(s1, &h.carrier),
                    subset::render(s2, &h.carrier),
                    subset::render(sum, &h.carrier)));
            }
        }
    }
    report.push("closed-under-hyperaddition", closed.verdict());
    Ok((members, report))
}
