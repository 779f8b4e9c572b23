use serde::{Deserialize, Serialize};

use crate::error::check_index;
use crate::report::{LawScan, Report, Verdict};
use crate::{CoreError, Elem, TModule};

/// A module together with a distinguished zero-substitute subset `A0`
/// (closed under addition and both actions) and a tangible subset given as
/// the image of an embedding of the acting monoid into the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub module: TModule,
    /// Sorted indices of `A0`.
    pub zero_set: Vec<Elem>,
    /// Sorted indices of the tangible subset; must equal the embedding image.
    pub tangibles: Vec<Elem>,
    /// `embedding[a]` is the carrier index of the acting element `a`.
    pub embedding: Vec<Elem>,
}

impl Pair {
    /// Classical pair: `A0 = {0}`, tangibles are the embedding image.
    pub fn classical(module: TModule, embedding: Vec<Elem>) -> Pair {
        let mut tangibles: Vec<Elem> = embedding.clone();
        tangibles.sort_unstable();
        tangibles.dedup();
        Pair {
            zero_set: vec![module.zero],
            module,
            tangibles,
            embedding,
        }
    }

    /// Carrier index of the multiplicative unit `1`.
    pub fn one(&self) -> Elem {
        self.embedding[self.module.acting.identity]
    }

    pub fn in_zero_set(&self, b: Elem) -> bool {
        self.zero_set.binary_search(&b).is_ok()
    }

    pub fn is_tangible(&self, b: Elem) -> bool {
        self.tangibles.binary_search(&b).is_ok()
    }

    /// Acting-monoid preimage of a tangible carrier element, when the
    /// embedding is injective.
    pub fn tangible_preimage(&self, b: Elem) -> Option<Elem> {
        self.embedding.iter().position(|&x| x == b)
    }

    pub fn validate_shape(&self) -> Result<(), CoreError> {
        self.module.validate_shape()?;
        let n = self.module.len();
        for &b in self.zero_set.iter().chain(&self.tangibles) {
            check_index(b, n)?;
        }
        if self.embedding.len() != self.module.acting.len() {
            return Err(CoreError::Shape(format!(
                "embedding has {} entries, acting monoid has {}",
                self.embedding.len(),
                self.module.acting.len()
            )));
        }
        for &b in &self.embedding {
            check_index(b, n)?;
        }
        if self.zero_set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::Shape("zero_set is not sorted and unique".into()));
        }
        if self.tangibles.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::Shape("tangibles is not sorted and unique".into()));
        }
        Ok(())
    }
}

/// Exhaustive pair axioms: `A0` closure under addition and both actions,
/// embedding coherence. Properness and weak admissibility are informational
/// notes, not laws: a prepair may legitimately lack either.
pub fn check_pair(p: &Pair) -> Result<Report, CoreError> {
    p.validate_shape()?;
    let m = &p.module;
    let t = m.acting.len();
    let mut report = Report::new("pair");

    let mut add_closed = LawScan::new();
    for &c1 in &p.zero_set {
        for &c2 in &p.zero_set {
            if !p.in_zero_set(m.add(c1, c2)) {
                add_closed.violation(|| format!("{}+{} leaves the zero set",
                    m.label(c1), m.label(c2)));
            }
        }
    }
    report.push("zero-set-add-closed", add_closed.verdict());

    let mut act_closed = LawScan::new();
    for a in 0..t {
        for &c in &p.zero_set {
            if !p.in_zero_set(m.act(a, c)) {
                act_closed.violation(|| format!("{}.{} leaves the zero set",
                    m.acting.label(a), m.label(c)));
            }
            if !p.in_zero_set(m.act_right(c, a)) {
                act_closed.violation(|| format!("{}.{} leaves the zero set",
                    m.label(c), m.acting.label(a)));
            }
        }
    }
    report.push("zero-set-action-closed", act_closed.verdict());

    let mut image: Vec<Elem> = p.embedding.clone();
    image.sort_unstable();
    image.dedup();
    report.push(
        "tangibles-match-embedding",
        if image == p.tangibles {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: "tangible set differs from the embedding image".into(),
                count: 1,
            }
        },
    );

    let mut equivariant = LawScan::new();
    for a in 0..t {
        for x in 0..t {
            if p.embedding[m.acting.op(a, x)] != m.act(a, p.embedding[x]) {
                equivariant.violation(|| format!("embedding breaks {}*{}",
                    m.acting.label(a), m.acting.label(x)));
            }
            if p.embedding[m.acting.op(x, a)] != m.act_right(p.embedding[x], a) {
                equivariant.violation(|| format!("embedding breaks {}*{} on the right",
                    m.acting.label(x), m.acting.label(a)));
            }
        }
    }
    report.push("embedding-equivariant", equivariant.verdict());

    let mut commute = LawScan::new();
    if m.right_action.is_some() {
        for a in 0..t {
            for b in 0..m.len() {
                if m.act(a, b) != m.act_right(b, a) {
                    commute.violation(|| format!("{}.{} != {}.{}",
                        m.acting.label(a), m.label(b), m.label(b), m.acting.label(a)));
                }
            }
        }
    }
    report.push("tangible-action-commutes", commute.verdict());

    let weakly_admissible = p.embedding.len()
        == p.embedding.iter().collect::<std::collections::BTreeSet<_>>().len();
    let proper = p.tangibles.iter().all(|b| !p.in_zero_set(*b));
    report.note(format!("weakly admissible: {weakly_admissible}"));
    report.note(format!("proper: {proper}"));

    Ok(report)
}

/// One pseudo-negative of the unit, with its induced data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyNWitness {
    /// Carrier index of a tangible `d` with `1 + d` in `A0`.
    pub pseudo_neg_one: Elem,
    /// Carrier index of `e = 1 + pseudo_neg_one`.
    pub e: Elem,
    /// Sorted quasi-zero set `{a + a.d : a tangible}`; always inside `A0`.
    pub quasi_zeros: Vec<Elem>,
}

/// All pseudo-negatives of the unit. An empty result means the property
/// fails; multiple witnesses are legitimate and the caller picks one.
pub fn find_property_n(p: &Pair) -> Result<Vec<PropertyNWitness>, CoreError> {
    p.validate_shape()?;
    let m = &p.module;
    let one = p.one();
    let mut out = Vec::new();
    for &d in &p.tangibles {
        let e = m.add(one, d);
        if !p.in_zero_set(e) {
            continue;
        }
        let td = p.tangible_preimage(d).ok_or_else(|| {
            CoreError::Precondition("pseudo-negative candidate is not an embedded tangible".into())
        })?;
        let mut quasi_zeros: Vec<Elem> = p
            .tangibles
            .iter()
            .map(|&a| m.add(a, m.act_right(a, td)))
            .collect();
        quasi_zeros.sort_unstable();
        quasi_zeros.dedup();
        // a + a.d = a.(1 + d) lands in A0 whenever the pair axioms hold;
        // verified rather than assumed.
        if quasi_zeros.iter().all(|&q| p.in_zero_set(q)) {
            out.push(PropertyNWitness {
                pseudo_neg_one: d,
                e,
                quasi_zeros,
            });
        }
    }
    Ok(out)
}

/// Exhaustive check of `(b1+b2)e = b1 e + b2 e` where `b e` abbreviates
/// `b + b.d` for the witness's pseudo-negative `d`, plus the separate
/// idempotence flag `b + b = b` on `A0`.
pub fn check_circ_distributive(p: &Pair, w: &PropertyNWitness) -> Result<Report, CoreError> {
    p.validate_shape()?;
    let m = &p.module;
    let td = p.tangible_preimage(w.pseudo_neg_one).ok_or_else(|| {
        CoreError::Precondition("witness pseudo-negative is not an embedded tangible".into())
    })?;
    let n = m.len();
    let circ = |b: Elem| m.add(b, m.act_right(b, td));
    let mut report = Report::new("circ-distributive");

    let mut dist = LawScan::new();
    for b1 in 0..n {
        for b2 in 0..n {
            if circ(m.add(b1, b2)) != m.add(circ(b1), circ(b2)) {
                dist.violation(|| format!("({}+{})e != {}e+{}e",
                    m.label(b1), m.label(b2), m.label(b1), m.label(b2)));
            }
        }
    }
    report.push("circ-distributive", dist.verdict());

    let mut idem = LawScan::new();
    for &c in &p.zero_set {
        if m.add(c, c) != c {
            idem.violation(|| format!("{}+{} != {}", m.label(c), m.label(c), m.label(c)));
        }
    }
    report.push("zero-set-idempotent", idem.verdict());

    Ok(report)
}

/// Additive closure of the tangibles with the minimal height of each member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Submagma {
    /// Sorted members of the closure.
    pub members: Vec<Elem>,
    /// `height[b]` is `None` outside the closure; tangibles have height 1,
    /// a sum has one more than the larger summand height, minimized.
    pub height: Vec<Option<u32>>,
    /// Whether the closure is the whole carrier.
    pub admissible: bool,
    /// Action-closure law of the generated submagma.
    pub report: Report,
}

/// Least additively closed superset of the tangibles, with heights, plus the
/// assertion that it is closed under both actions.
pub fn generated_submagma(p: &Pair) -> Result<Submagma, CoreError> {
    p.validate_shape()?;
    let m = &p.module;
    let n = m.len();
    let mut height: Vec<Option<u32>> = vec![None; n];
    for &a in &p.tangibles {
        height[a] = Some(1);
    }
    // Level m holds everything expressible as a sum of two members of
    // strictly smaller height; tangibles stay at height 1.
    let mut level = 1u32;
    loop {
        level += 1;
        let current: Vec<Elem> = (0..n).filter(|&b| height[b].is_some()).collect();
        let mut grew = false;
        for &b1 in &current {
            for &b2 in &current {
                let s = m.add(b1, b2);
                if height[s].is_none() {
                    height[s] = Some(level);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let members: Vec<Elem> = (0..n).filter(|&b| height[b].is_some()).collect();
    let mut report = Report::new("generated-submagma");
    let mut closed = LawScan::new();
    for a in 0..m.acting.len() {
        for &b in &members {
            if height[m.act(a, b)].is_none() {
                closed.violation(|| format!("{}.{} escapes the closure",
                    m.acting.label(a), m.label(b)));
            }
            if height[m.act_right(b, a)].is_none() {
                closed.violation(|| format!("{}.{} escapes the closure",
                    m.label(b), m.acting.label(a)));
            }
        }
    }
    report.push("action-closure", closed.verdict());

    let admissible = members.len() == n;
    Ok(Submagma {
        members,
        height,
        admissible,
        report,
    })
}
