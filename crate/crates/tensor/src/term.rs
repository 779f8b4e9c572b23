use std::cmp::Ordering;

use hyperlab_core::{Elem, TModule};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::TensorError;

/// Hard cap on the number of enumerated terms per closure instance.
pub const TERM_ENUM_CAP: usize = 1 << 20;

/// A formal sum of simple tensors: a nonempty multiset of coordinate pairs
/// into the two carriers, stored sorted so equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorTerm {
    summands: Vec<(Elem, Elem)>,
}

impl TensorTerm {
    pub fn simple(v1: Elem, v2: Elem) -> Self {
        TensorTerm { summands: vec![(v1, v2)] }
    }

    pub fn new(mut summands: Vec<(Elem, Elem)>) -> Result<Self, TensorError> {
        if summands.is_empty() {
            return Err(TensorError::Precondition(
                "a tensor term is a nonempty sum of simple tensors".into(),
            ));
        }
        summands.sort_unstable();
        Ok(TensorTerm { summands })
    }

    pub fn summands(&self) -> &[(Elem, Elem)] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiset union: the formal sum of the two terms.
    pub fn plus(&self, other: &Self) -> Self {
        let summands = self
            .summands
            .iter()
            .copied()
            .merge(other.summands.iter().copied())
            .collect();
        TensorTerm { summands }
    }

    pub fn with_summand(&self, s: (Elem, Elem)) -> Self {
        let pos = self.summands.partition_point(|&t| t <= s);
        let mut summands = self.summands.clone();
        summands.insert(pos, s);
        TensorTerm { summands }
    }

    /// Applies `f` to every summand and re-sorts.
    pub fn map<F: FnMut(Elem, Elem) -> (Elem, Elem)>(&self, mut f: F) -> Self {
        let mut summands: Vec<(Elem, Elem)> =
            self.summands.iter().map(|&(v, w)| f(v, w)).collect();
        summands.sort_unstable();
        TensorTerm { summands }
    }

    pub fn render(&self, m1: &TModule, m2: &TModule) -> String {
        self.render_labeled(&m1.carrier, &m2.carrier)
    }

    pub fn render_labeled(&self, labels1: &[String], labels2: &[String]) -> String {
        self.summands
            .iter()
            .map(|&(v, w)| format!("{}(x){}", labels1[v], labels2[w]))
            .join(" + ")
    }
}

/// Shorter terms first, then lexicographic on the sorted summands; this is
/// the enumeration order, so a class representative of minimal index is
/// also one of minimal length.
impl Ord for TensorTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.summands
            .len()
            .cmp(&other.summands.len())
            .then_with(|| self.summands.cmp(&other.summands))
    }
}

impl PartialOrd for TensorTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of terms of length 1..=bound over `pids` coordinate pairs, or
/// `None` past [`TERM_ENUM_CAP`].
pub fn count_terms(pids: usize, bound: usize) -> Option<usize> {
    let mut total: u128 = 0;
    for t in 1..=bound {
        // C(pids + t - 1, t), multisets of size t
        let mut c: u128 = 1;
        for i in 0..t {
            c = c.checked_mul((pids + i) as u128)? / (i + 1) as u128;
        }
        total = total.checked_add(c)?;
        if total > TERM_ENUM_CAP as u128 {
            return None;
        }
    }
    Some(total as usize)
}

/// Largest bound whose term count stays within the cap; 0 when even single
/// summands do not fit.
pub fn feasible_bound(pids: usize, requested: usize) -> usize {
    (1..=requested)
        .take_while(|&b| count_terms(pids, b).is_some())
        .last()
        .unwrap_or(0)
}

/// Every term of length 1..=bound over an `n1 x n2` coordinate grid, in
/// (length, lexicographic) order, which agrees with [`TensorTerm`]'s `Ord`.
pub fn enumerate_terms(
    n1: usize,
    n2: usize,
    bound: usize,
) -> Result<Vec<TensorTerm>, TensorError> {
    let pids = n1 * n2;
    let Some(total) = count_terms(pids, bound) else {
        return Err(TensorError::Resource {
            requested: bound,
            feasible: feasible_bound(pids, bound),
        });
    };
    let pairs: Vec<(Elem, Elem)> =
        (0..n1).cartesian_product(0..n2).collect();
    let mut terms = Vec::with_capacity(total);
    let mut stack: Vec<(Elem, Elem)> = Vec::with_capacity(bound);
    for t in 1..=bound {
        push_multisets(&pairs, 0, t, &mut stack, &mut terms);
    }
    debug_assert_eq!(terms.len(), total);
    Ok(terms)
}

fn push_multisets(
    pairs: &[(Elem, Elem)],
    lo: usize,
    remaining: usize,
    stack: &mut Vec<(Elem, Elem)>,
    out: &mut Vec<TensorTerm>,
) {
    if remaining == 0 {
        out.push(TensorTerm { summands: stack.clone() });
        return;
    }
    for (i, &p) in pairs.iter().enumerate().skip(lo) {
        stack.push(p);
        push_multisets(pairs, i, remaining - 1, stack, out);
        stack.pop();
    }
}
