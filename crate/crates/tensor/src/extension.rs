use hyperlab_core::report::LawScan;
use hyperlab_core::{check_module, check_monoid, Elem, FiniteMonoid, Report, TModule};

use crate::closure::{close_terms, finish_classes};
use crate::monoid::check_embedding;
use crate::term::{enumerate_terms, TensorTerm};
use crate::TensorError;

/// Scalar extension of a module along a monoid embedding `T -> T'`: terms
/// are multisets of `(t', x)` pairs, congruent under same-scalar additivity
/// `(t', x) + (t', y) ~ (t', x + y)` and the slide `(t' e(a), x) ~ (t', a x)`.
/// The new scalars act on classes through the first coordinate.
#[derive(Debug, Clone)]
pub struct ExtensionClosure {
    pub t_prime: FiniteMonoid,
    pub embedding: Vec<Elem>,
    pub m: TModule,
    pub bound: usize,
    pub rules: Vec<(TensorTerm, TensorTerm)>,
    pub terms: Vec<TensorTerm>,
    pub class_of_term: Vec<usize>,
    pub representatives: Vec<usize>,
    pub saturated: bool,
    pub notes: Vec<String>,
    pub class_add: Vec<Vec<Option<usize>>>,
    /// `action[t'][c]`: verified descent of `t' . (s (x) x) = (t' s) (x) x`.
    pub action: Vec<Vec<Elem>>,
    pub report: Report,
}

impl ExtensionClosure {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, t: &TensorTerm) -> Option<usize> {
        self.terms
            .binary_search(t)
            .ok()
            .map(|i| self.class_of_term[i])
    }

    pub fn simple_class(&self, scalar: Elem, x: Elem) -> usize {
        self.class_of(&TensorTerm::simple(scalar, x))
            .expect("single summands are always enumerated")
    }

    pub fn class_label(&self, class: usize) -> String {
        self.terms[self.representatives[class]]
            .render_labeled(&self.t_prime.elements, &self.m.carrier)
    }

    /// The classes as a module over the extended scalars. Fails honestly
    /// when the closure is unsaturated or when no class is additively
    /// neutral: extending along a proper submonoid splits the carrier by
    /// which scalar cosets a term touches, and no class then absorbs all
    /// of them.
    pub fn extension_module(&self) -> Result<TModule, TensorError> {
        if !self.saturated {
            return Err(TensorError::Unsaturated { bound: self.bound });
        }
        let k = self.class_count();
        let add: Vec<Vec<Elem>> = self
            .class_add
            .iter()
            .map(|row| row.iter().map(|e| e.expect("saturated")).collect())
            .collect();
        let zero = self.simple_class(self.t_prime.identity, self.m.zero);
        if let Some(c) = (0..k).find(|&c| add[c][zero] != c || add[zero][c] != c) {
            return Err(TensorError::Precondition(format!(
                "the extension has no additive identity: {} + {} leaves {}",
                self.class_label(c),
                self.class_label(zero),
                self.class_label(c)
            )));
        }
        let module = TModule {
            acting: self.t_prime.clone(),
            carrier: (0..k).map(|c| self.class_label(c)).collect(),
            add,
            zero,
            left_action: self.action.clone(),
            right_action: None,
        };
        let report = check_module(&module)?;
        if let Some(check) = report.failures().next() {
            return Err(TensorError::Inconsistent(format!(
                "extension breaks a module law: {}",
                check.law
            )));
        }
        Ok(module)
    }
}

/// Builds the bounded scalar extension `T' (x)_T M` along `embedding`.
pub fn tensor_extension(
    t_prime: &FiniteMonoid,
    embedding: &[Elem],
    m: &TModule,
    bound: usize,
) -> Result<ExtensionClosure, TensorError> {
    let report = check_monoid(t_prime)?;
    if let Some(check) = report.failures().next() {
        return Err(TensorError::Precondition(format!(
            "extended scalars break a monoid law: {}",
            check.law
        )));
    }
    let module_report = check_module(m)?;
    if let Some(check) = module_report.failures().next() {
        return Err(TensorError::Precondition(format!(
            "module breaks a law before extension: {}",
            check.law
        )));
    }
    check_embedding(&m.acting, t_prime, embedding, "scalar embedding")?;
    if bound < 2 {
        return Err(TensorError::Precondition(
            "bound must be at least 2 to hold a two-summand generator".into(),
        ));
    }

    let np = t_prime.len();
    let mut rules = Vec::new();
    for s in 0..np {
        for x in 0..m.len() {
            for y in x..m.len() {
                rules.push((
                    TensorTerm::simple(s, m.add(x, y)),
                    TensorTerm::new(vec![(s, x), (s, y)])?,
                ));
            }
            for a in 0..m.acting.len() {
                rules.push((
                    TensorTerm::simple(t_prime.op(s, embedding[a]), x),
                    TensorTerm::simple(s, m.act(a, x)),
                ));
            }
        }
    }
    rules.retain(|(l, r)| l != r);
    rules.sort();
    rules.dedup();

    let terms = enumerate_terms(np, m.len(), bound)?;
    let raw = close_terms(terms, &rules, bound)?;
    let (class_add, saturated, notes) = finish_classes(&raw, bound);

    let k = raw.representatives.len();
    let mut action = vec![vec![0; k]; np];
    let mut descends = LawScan::new();
    for s in 0..np {
        for c in 0..k {
            action[s][c] = raw
                .class_of(&raw.terms[raw.representatives[c]].map(|t, x| (t_prime.op(s, t), x)))
                .expect("scaling preserves length");
        }
    }
    for (i, t) in raw.terms.iter().enumerate() {
        let c = raw.class_of_term[i];
        for s in 0..np {
            let image = raw
                .class_of(&t.map(|u, x| (t_prime.op(s, u), x)))
                .expect("scaling preserves length");
            if image != action[s][c] {
                descends.violation(|| {
                    format!(
                        "scalar {} splits class {c}",
                        t_prime.label(s)
                    )
                });
            }
        }
    }
    let mut report = Report::new("scalar extension");
    report.push("t-prime-action-descends", descends.verdict());
    if !report.passed() {
        return Err(TensorError::Inconsistent(
            "extended scalars do not act on the closure classes".into(),
        ));
    }

    Ok(ExtensionClosure {
        t_prime: t_prime.clone(),
        embedding: embedding.to_vec(),
        m: m.clone(),
        bound,
        rules,
        terms: raw.terms,
        class_of_term: raw.class_of_term,
        representatives: raw.representatives,
        saturated,
        notes,
        class_add,
        action,
        report,
    })
}
