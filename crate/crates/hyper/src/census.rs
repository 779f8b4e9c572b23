//! Enumeration of small commutative hypermagma tables.
//!
//! Tables have the zero at index 0 (genuinely neutral), so the free cells
//! are the nonzero diagonal and the nonzero unordered off-diagonal pairs,
//! each ranging over every subset of the carrier. Survivors are
//! deduplicated up to carrier permutations fixing index 0 by keeping only
//! the lexicographically least table of each orbit, and returned sorted,
//! which makes the output deterministic in both execution modes.

use std::collections::BTreeSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::hypermagma::Hypermagma;
use crate::subset::{self, Mask};
use crate::HyperError;

/// Hard cap: at order 4 the enumeration already covers 16^6 tables.
pub const MAX_CENSUS_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusSuite {
    Hypersemigroup,
    Hypergroup,
}

impl CensusSuite {
    pub fn parse(name: &str) -> Result<CensusSuite, HyperError> {
        match name {
            "hypersemigroup" => Ok(CensusSuite::Hypersemigroup),
            "hypergroup" => Ok(CensusSuite::Hypergroup),
            _ => Err(HyperError::Shape(format!("unknown census suite `{name}`"))),
        }
    }
}

type Table = Vec<Vec<Mask>>;

fn padd(table: &Table, s1: Mask, s2: Mask) -> Mask {
    let mut out = 0;
    for a in subset::elems(s1) {
        for b in subset::elems(s2) {
            out |= table[a][b];
        }
    }
    out
}

/// Early-exit associativity over all triples.
fn quick_associative(n: usize, table: &Table) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if padd(table, ab, subset::singleton(c))
                    != padd(table, subset::singleton(a), table[b][c])
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Early-exit hypergroup test on an associative table with neutral zero.
fn quick_hypergroup(n: usize, table: &Table) -> bool {
    let mut neg = vec![0; n];
    for a in 0..n {
        let mut candidates = (0..n).filter(|&x| subset::contains(table[a][x], 0));
        match (candidates.next(), candidates.next()) {
            (Some(x), None) => neg[a] = x,
            _ => return false,
        }
    }
    for a in 0..n {
        if neg[neg[a]] != a {
            return false;
        }
        for b in 0..n {
            let negated = subset::from_elems(subset::elems(table[a][b]).map(|x| neg[x]));
            if negated != table[neg[b]][neg[a]] {
                return false;
            }
        }
    }
    for a1 in 0..n {
        for a2 in 0..n {
            let sum = table[a1][a2];
            for a3 in 0..n {
                if subset::contains(sum, a3) != subset::contains(table[a3][neg[a1]], a2) {
                    return false;
                }
            }
        }
    }
    true
}

fn passes(n: usize, table: &Table, suite: CensusSuite) -> bool {
    match suite {
        CensusSuite::Hypersemigroup => quick_associative(n, table),
        CensusSuite::Hypergroup => quick_associative(n, table) && quick_hypergroup(n, table),
    }
}

/// Free cells in a fixed order: nonzero diagonal, then nonzero pairs.
fn free_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = (1..n).map(|a| (a, a)).collect();
    for a in 1..n {
        for b in a + 1..n {
            cells.push((a, b));
        }
    }
    cells
}

fn base_table(n: usize) -> Table {
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        table[0][a] = subset::singleton(a);
        table[a][0] = subset::singleton(a);
    }
    table
}

fn fill(table: &mut Table, cells: &[(usize, usize)], values: &[Mask]) {
    for (&(a, b), &v) in cells.iter().zip(values) {
        table[a][b] = v;
        table[b][a] = v;
    }
}

/// Lexicographically least flattened table over carrier permutations
/// fixing index 0 (applied to both coordinates and to the subset values).
fn canonical_form(n: usize, table: &Table) -> Vec<Mask> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Mask>> = None;
    permute_rest(n, table, &mut perm, 1, &mut best);
    best.expect("at least the identity permutation applies")
}

fn permute_rest(n: usize, table: &Table, perm: &mut Vec<usize>, k: usize, best: &mut Option<Vec<Mask>>) {
    if k == n {
        let mut flat = Vec::with_capacity(n * n);
        let mut inverse = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        for a in 0..n {
            for b in 0..n {
                let value = table[inverse[a]][inverse[b]];
                flat.push(subset::from_elems(subset::elems(value).map(|x| perm[x])));
            }
        }
        if best.as_ref().is_none_or(|b| flat < *b) {
            *best = Some(flat);
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute_rest(n, table, perm, k + 1, best);
        perm.swap(k, i);
    }
}

fn survivors_for_first_value(
    n: usize,
    cells: &[(usize, usize)],
    first: Mask,
    suite: CensusSuite,
) -> BTreeSet<Vec<Mask>> {
    let mut found = BTreeSet::new();
    let choices = subset::full(n) as usize + 1;
    let rest = cells.len() - 1;
    let mut table = base_table(n);
    let mut values = vec![0u32; cells.len()];
    values[0] = first;
    let mut counter = vec![0usize; rest];
    loop {
        for (i, &c) in counter.iter().enumerate() {
            values[i + 1] = c as Mask;
        }
        fill(&mut table, cells, &values);
        if passes(n, &table, suite) {
            found.insert(canonical_form(n, &table));
        }
        let mut i = 0;
        loop {
            if i == rest {
                return found;
            }
            counter[i] += 1;
            if counter[i] < choices {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

fn assemble(n: usize, forms: BTreeSet<Vec<Mask>>) -> Vec<Hypermagma> {
    forms
        .into_iter()
        .map(|flat| {
            let hyperop = (0..n).map(|a| flat[a * n..(a + 1) * n].to_vec()).collect();
            Hypermagma {
                carrier: (0..n).map(|i| format!("e{i}")).collect(),
                hyperop,
                hyperzero: Some(0),
                mul: None,
            }
        })
        .collect()
}

fn check_order(order: usize) -> Result<(), HyperError> {
    if order == 0 {
        return Err(HyperError::Shape("census needs a nonempty carrier".into()));
    }
    if order > MAX_CENSUS_ORDER {
        return Err(HyperError::Cap(format!(
            "census order {order} exceeds the cap {MAX_CENSUS_ORDER}"
        )));
    }
    Ok(())
}

/// Sequential enumeration; always available.
pub fn census_seq(order: usize, suite: CensusSuite) -> Result<Vec<Hypermagma>, HyperError> {
    check_order(order)?;
    let cells = free_cells(order);
    if cells.is_empty() {
        let table = base_table(order);
        let forms = if passes(order, &table, suite) {
            BTreeSet::from([canonical_form(order, &table)])
        } else {
            BTreeSet::new()
        };
        return Ok(assemble(order, forms));
    }
    let mut forms = BTreeSet::new();
    for first in 0..=subset::full(order) {
        forms.extend(survivors_for_first_value(order, &cells, first, suite));
    }
    Ok(assemble(order, forms))
}

/// Parallel enumeration, partitioned by the first free cell; the merged
/// output is identical to the sequential one.
#[cfg(feature = "parallel")]
pub fn census(order: usize, suite: CensusSuite) -> Result<Vec<Hypermagma>, HyperError> {
    check_order(order)?;
    let cells = free_cells(order);
    if cells.is_empty() {
        return census_seq(order, suite);
    }
    let forms = (0..=subset::full(order))
        .into_par_iter()
        .map(|first| survivors_for_first_value(order, &cells, first, suite))
        .reduce(BTreeSet::new, |mut acc, part| {
            acc.extend(part);
            acc
        });
    Ok(assemble(order, forms))
}

#[cfg(not(feature = "parallel"))]
pub fn census(order: usize, suite: CensusSuite) -> Result<Vec<Hypermagma>, HyperError> {
    census_seq(order, suite)
}
