use std::collections::HashMap;

use hyperlab_core::{check_module, Elem, FiniteMonoid, TModule};
use serde::{Deserialize, Serialize};

use crate::term::{enumerate_terms, TensorTerm};
use crate::TensorError;

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut i: u32) -> u32 {
        while self.parent[i as usize] != i {
            let grand = self.parent[self.parent[i as usize] as usize];
            self.parent[i as usize] = grand;
            i = grand;
        }
        i
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra as usize] >= self.rank[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo as usize] = hi;
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        true
    }
}

/// Classes of the bounded congruence closure, before any module-specific
/// interpretation. Class ids are assigned in term-enumeration order, so the
/// representative of a class is its shortest, lexicographically least term.
pub(crate) struct RawClosure {
    pub terms: Vec<TensorTerm>,
    pub class_of_term: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl RawClosure {
    pub fn class_of(&self, t: &TensorTerm) -> Option<usize> {
        self.terms
            .binary_search(t)
            .ok()
            .map(|i| self.class_of_term[i])
    }
}

/// Closes the generator merges under all single-summand contexts, to the
/// fixpoint. Adding a summand multiset is adding summands one at a time
/// through terms of monotonically growing length, so the result is closed
/// under every context that stays within the bound.
pub(crate) fn close_terms(
    terms: Vec<TensorTerm>,
    rules: &[(TensorTerm, TensorTerm)],
    bound: usize,
) -> Result<RawClosure, TensorError> {
    let index: HashMap<&TensorTerm, u32> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| (t, i as u32))
        .collect();
    let mut uf = UnionFind::new(terms.len());
    for (lhs, rhs) in rules {
        let (Some(&l), Some(&r)) = (index.get(lhs), index.get(rhs)) else {
            return Err(TensorError::Precondition(format!(
                "generator exceeds the bound {bound}: {} summands",
                lhs.len().max(rhs.len())
            )));
        };
        uf.union(l, r);
    }

    let pids: Vec<(Elem, Elem)> = terms
        .iter()
        .take_while(|t| t.len() == 1)
        .map(|t| t.summands()[0])
        .collect();
    loop {
        let mut changed = false;
        let mut signature: HashMap<(u32, usize), u32> = HashMap::new();
        for i in 0..terms.len() {
            if terms[i].len() >= bound {
                break;
            }
            for (p, &pid) in pids.iter().enumerate() {
                let j = index[&terms[i].with_summand(pid)];
                let (ri, rj) = (uf.find(i as u32), uf.find(j));
                match signature.get(&(ri, p)) {
                    Some(&prev) => {
                        if uf.union(prev, rj) {
                            changed = true;
                        }
                    }
                    None => {
                        signature.insert((ri, p), rj);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut class_of_term = vec![usize::MAX; terms.len()];
    let mut representatives = Vec::new();
    let mut class_of_root: HashMap<u32, usize> = HashMap::new();
    for i in 0..terms.len() {
        let root = uf.find(i as u32);
        let class = *class_of_root.entry(root).or_insert_with(|| {
            representatives.push(i);
            representatives.len() - 1
        });
        class_of_term[i] = class;
    }
    Ok(RawClosure { terms, class_of_term, representatives })
}

/// Partial class addition plus the saturation verdict. An entry is present
/// when the two shortest representatives fit in the bound together;
/// saturation additionally needs every representative to leave room for a
/// two-summand generator context and the total table to be associative.
pub(crate) fn finish_classes(
    raw: &RawClosure,
    bound: usize,
) -> (Vec<Vec<Option<usize>>>, bool, Vec<String>) {
    let k = raw.representatives.len();
    let minlen: Vec<usize> = raw
        .representatives
        .iter()
        .map(|&i| raw.terms[i].len())
        .collect();
    let mut class_add = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            if minlen[i] + minlen[j] <= bound {
                let sum = raw.terms[raw.representatives[i]]
                    .plus(&raw.terms[raw.representatives[j]]);
                class_add[i][j] = raw.class_of(&sum);
            }
        }
    }

    let mut notes = Vec::new();
    if let Some(c) = (0..k).find(|&c| minlen[c] + 2 > bound) {
        notes.push(format!(
            "class {c} has no representative short enough to absorb a generator context"
        ));
    }
    if let Some((i, j)) = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| class_add[i][j].is_none())
    {
        notes.push(format!("class sum {i} + {j} exceeds the bound"));
    }
    if notes.is_empty() {
        'assoc: for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let left = class_add[class_add[a][b].unwrap()][c];
                    let right = class_add[a][class_add[b][c].unwrap()];
                    if left != right {
                        notes.push(format!(
                            "class addition is not associative at ({a}, {b}, {c})"
                        ));
                        break 'assoc;
                    }
                }
            }
        }
    }
    let saturated = notes.is_empty();
    (class_add, saturated, notes)
}

/// The tensor product of two modules over a shared monoid, cut off at a
/// term-length bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClosure {
    pub m1: TModule,
    pub m2: TModule,
    pub over: FiniteMonoid,
    pub bound: usize,
    pub negation: bool,
    pub rules: Vec<(TensorTerm, TensorTerm)>,
    /// All terms of length <= bound, in (length, lex) order.
    pub terms: Vec<TensorTerm>,
    pub class_of_term: Vec<usize>,
    /// Class id -> index of its shortest representative in `terms`.
    pub representatives: Vec<usize>,
    pub saturated: bool,
    /// Reasons saturation failed; empty when `saturated`.
    pub notes: Vec<String>,
    /// Partial: an entry needs both representatives to fit in the bound.
    pub class_add: Vec<Vec<Option<usize>>>,
    /// Class of the simple tensor of the two module zeros. Nothing else is
    /// merged into it beyond what the rules derive.
    pub zero_class: usize,
}

impl CongruenceClosure {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, t: &TensorTerm) -> Option<usize> {
        self.terms
            .binary_search(t)
            .ok()
            .map(|i| self.class_of_term[i])
    }

    pub fn simple_class(&self, v1: Elem, v2: Elem) -> usize {
        self.class_of(&TensorTerm::simple(v1, v2))
            .expect("single summands are always enumerated")
    }

    pub fn representative(&self, class: usize) -> &TensorTerm {
        &self.terms[self.representatives[class]]
    }

    pub fn add_classes(&self, c1: usize, c2: usize) -> Option<usize> {
        self.class_add[c1][c2]
    }

    pub fn class_label(&self, class: usize) -> String {
        self.representative(class).render(&self.m1, &self.m2)
    }

    /// All enumerated members of a class, shortest first.
    pub fn class_members(&self, class: usize) -> impl Iterator<Item = &TensorTerm> {
        self.terms
            .iter()
            .zip(&self.class_of_term)
            .filter(move |&(_, &c)| c == class)
            .map(|(t, _)| t)
    }

    /// The classes as a bona fide module: total addition, the zero class as
    /// additive zero, and the actions descending summand-wise. Available
    /// only for saturated closures; the descent of both actions and the
    /// module laws are verified exhaustively.
    pub fn quotient_module(&self) -> Result<TModule, TensorError> {
        if !self.saturated {
            return Err(TensorError::Unsaturated { bound: self.bound });
        }
        let k = self.class_count();
        let add: Vec<Vec<Elem>> = self
            .class_add
            .iter()
            .map(|row| row.iter().map(|e| e.expect("saturated")).collect())
            .collect();
        for (c, row) in add.iter().enumerate() {
            if row[self.zero_class] != c {
                return Err(TensorError::Inconsistent(format!(
                    "zero class is not additively neutral on class {c}"
                )));
            }
        }

        let left_action =
            self.descend_action(|a, t| t.map(|v, w| (self.m1.act(a, v), w)), "left")?;
        let right_action = match self.m2.right_action {
            Some(_) => Some(self.descend_action(
                |a, t| t.map(|v, w| (v, self.m2.act_right(w, a))),
                "right",
            )?),
            None => None,
        };

        let module = TModule {
            acting: self.over.clone(),
            carrier: (0..k).map(|c| self.class_label(c)).collect(),
            add,
            zero: self.zero_class,
            left_action,
            right_action,
        };
        let report = check_module(&module)?;
        if let Some(check) = report.failures().next() {
            return Err(TensorError::Inconsistent(format!(
                "quotient breaks a module law: {}",
                check.law
            )));
        }
        Ok(module)
    }

    fn descend_action<F>(&self, apply: F, side: &str) -> Result<Vec<Vec<Elem>>, TensorError>
    where
        F: Fn(Elem, &TensorTerm) -> TensorTerm,
    {
        let k = self.class_count();
        let mut table = vec![vec![0; k]; self.over.len()];
        for a in 0..self.over.len() {
            for c in 0..k {
                table[a][c] = self
                    .class_of(&apply(a, self.representative(c)))
                    .expect("action preserves length");
            }
        }
        for (i, t) in self.terms.iter().enumerate() {
            let c = self.class_of_term[i];
            for a in 0..self.over.len() {
                let image = self.class_of(&apply(a, t)).expect("action preserves length");
                if image != table[a][c] {
                    return Err(TensorError::Inconsistent(format!(
                        "{side} action does not descend to classes: acting element {a} \
                         splits class {c}"
                    )));
                }
            }
        }
        Ok(table)
    }
}

/// Unique additive inverses, needed to interpret a negation map.
fn additive_negation(m: &TModule) -> Result<Vec<Elem>, TensorError> {
    (0..m.len())
        .map(|x| {
            let mut inverses = (0..m.len()).filter(|&y| m.add(x, y) == m.zero);
            match (inverses.next(), inverses.next()) {
                (Some(y), None) => Ok(y),
                (None, _) => Err(TensorError::Precondition(format!(
                    "{} has no additive inverse, so there is no negation map",
                    m.label(x)
                ))),
                (Some(_), Some(_)) => Err(TensorError::Precondition(format!(
                    "{} has several additive inverses; negation is ambiguous",
                    m.label(x)
                ))),
            }
        })
        .collect()
}

fn checked_module(m: &TModule, name: &str) -> Result<(), TensorError> {
    let report = check_module(m)?;
    if let Some(check) = report.failures().next() {
        return Err(TensorError::Precondition(format!(
            "{name} breaks a module law before tensoring: {}",
            check.law
        )));
    }
    Ok(())
}

/// Generator pairs for the module tensor: additivity in each slot, the
/// middle slide `(x1 a, x2) ~ (x1, a x2)`, and optionally the negation
/// exchange `((-v1), v2) ~ (v1, (-v2))`.
pub(crate) fn module_rules(
    m1: &TModule,
    m2: &TModule,
    over: &FiniteMonoid,
    with_negation: bool,
) -> Result<Vec<(TensorTerm, TensorTerm)>, TensorError> {
    let (n1, n2) = (m1.len(), m2.len());
    let mut rules = Vec::new();
    for v in 0..n1 {
        for w in v..n1 {
            for x2 in 0..n2 {
                rules.push((
                    TensorTerm::simple(m1.add(v, w), x2),
                    TensorTerm::new(vec![(v, x2), (w, x2)])?,
                ));
            }
        }
    }
    for x1 in 0..n1 {
        for v in 0..n2 {
            for w in v..n2 {
                rules.push((
                    TensorTerm::simple(x1, m2.add(v, w)),
                    TensorTerm::new(vec![(x1, v), (x1, w)])?,
                ));
            }
        }
    }
    for a in 0..over.len() {
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                rules.push((
                    TensorTerm::simple(m1.act_right(x1, a), x2),
                    TensorTerm::simple(x1, m2.act(a, x2)),
                ));
            }
        }
    }
    if with_negation {
        let neg1 = additive_negation(m1)?;
        let neg2 = additive_negation(m2)?;
        for v1 in 0..n1 {
            for v2 in 0..n2 {
                rules.push((
                    TensorTerm::simple(neg1[v1], v2),
                    TensorTerm::simple(v1, neg2[v2]),
                ));
            }
        }
    }
    rules.retain(|(l, r)| l != r);
    rules.sort();
    rules.dedup();
    Ok(rules)
}

/// Builds the bounded tensor product of a right module and a left module
/// over the same monoid: every term of length <= bound, grouped by the
/// congruence the bilinearity and slide generators produce.
pub fn build_tensor(
    m1: &TModule,
    m2: &TModule,
    over: &FiniteMonoid,
    bound: usize,
    with_negation: bool,
) -> Result<CongruenceClosure, TensorError> {
    if m1.acting != *over || m2.acting != *over {
        return Err(TensorError::Precondition(
            "both modules must act over the tensoring monoid".into(),
        ));
    }
    checked_module(m1, "left factor")?;
    checked_module(m2, "right factor")?;
    if bound < 2 {
        return Err(TensorError::Precondition(
            "bound must be at least 2 to hold a two-summand generator".into(),
        ));
    }

    let rules = module_rules(m1, m2, over, with_negation)?;
    let terms = enumerate_terms(m1.len(), m2.len(), bound)?;
    let raw = close_terms(terms, &rules, bound)?;
    let (class_add, saturated, notes) = finish_classes(&raw, bound);
    let zero_class = raw
        .class_of(&TensorTerm::simple(m1.zero, m2.zero))
        .expect("the zero pair is enumerated");

    Ok(CongruenceClosure {
        m1: m1.clone(),
        m2: m2.clone(),
        over: over.clone(),
        bound,
        negation: with_negation,
        rules,
        terms: raw.terms,
        class_of_term: raw.class_of_term,
        representatives: raw.representatives,
        saturated,
        notes,
        class_add,
        zero_class,
    })
}
