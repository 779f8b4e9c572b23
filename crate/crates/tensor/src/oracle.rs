use hyperlab_core::report::LawScan;
use hyperlab_core::{Elem, Report, TModule};
use serde::{Deserialize, Serialize};

use crate::closure::CongruenceClosure;
use crate::term::TensorTerm;
use crate::TensorError;

/// Backtracking node budget per enumeration (per parallel branch).
pub const ORACLE_NODE_CAP: usize = 1 << 22;

/// A map off the raw pair grid, additive in each slot and invariant under
/// sliding the acting monoid across the middle. Stored row-major, so the
/// image of `(v, w)` is `table[v * n2 + w]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BalancedMap {
    pub n2: usize,
    pub table: Vec<Elem>,
}

impl BalancedMap {
    pub fn eval(&self, v: Elem, w: Elem) -> Elem {
        self.table[v * self.n2 + w]
    }

    /// Image of a whole term: the target sum of its summand images.
    pub fn apply(&self, t: &TensorTerm, target: &TModule) -> Elem {
        let mut it = t.summands().iter().map(|&(v, w)| self.eval(v, w));
        let first = it.next().expect("terms are never empty");
        it.fold(first, |acc, x| target.add(acc, x))
    }
}

/// Value constraints over table cells. `Sum` reads as
/// `val[total] = val[a] + val[b]` in the target; `Eq` identifies two cells.
#[derive(Debug, Clone, Copy)]
enum Constraint {
    Sum { a: usize, b: usize, total: usize },
    Eq { a: usize, b: usize },
}

fn constraint_cells(c: &Constraint) -> [usize; 3] {
    match *c {
        Constraint::Sum { a, b, total } => [a, b, total],
        Constraint::Eq { a, b } => [a, b, b],
    }
}

struct Search<'a> {
    target: &'a TModule,
    constraints: &'a [Constraint],
    /// Cell -> ids of constraints mentioning it.
    touching: Vec<Vec<usize>>,
    nodes: usize,
}

impl<'a> Search<'a> {
    fn new(target: &'a TModule, constraints: &'a [Constraint], cells: usize) -> Self {
        let mut touching = vec![Vec::new(); cells];
        for (i, c) in constraints.iter().enumerate() {
            let mut seen = constraint_cells(c);
            seen.sort_unstable();
            for (k, &cell) in seen.iter().enumerate() {
                if k == 0 || seen[k - 1] != cell {
                    touching[cell].push(i);
                }
            }
        }
        Search { target, constraints, touching, nodes: 0 }
    }

    /// Assigns one cell and propagates forced consequences, recording every
    /// write on the trail. Returns false on contradiction; the caller
    /// unwinds the trail either way it needs.
    fn assign(
        &self,
        val: &mut [Option<Elem>],
        trail: &mut Vec<usize>,
        cell: usize,
        value: Elem,
    ) -> bool {
        match val[cell] {
            Some(old) => return old == value,
            None => {
                val[cell] = Some(value);
                trail.push(cell);
            }
        }
        let mut queue = vec![cell];
        while let Some(c) = queue.pop() {
            for &ci in &self.touching[c] {
                match self.constraints[ci] {
                    Constraint::Sum { a, b, total } => match (val[a], val[b], val[total]) {
                        (Some(x), Some(y), Some(z)) => {
                            if self.target.add(x, y) != z {
                                return false;
                            }
                        }
                        (Some(x), Some(y), None) => {
                            let z = self.target.add(x, y);
                            val[total] = Some(z);
                            trail.push(total);
                            queue.push(total);
                        }
                        _ => {}
                    },
                    Constraint::Eq { a, b } => match (val[a], val[b]) {
                        (Some(x), Some(y)) => {
                            if x != y {
                                return false;
                            }
                        }
                        (Some(x), None) => {
                            val[b] = Some(x);
                            trail.push(b);
                            queue.push(b);
                        }
                        (None, Some(y)) => {
                            val[a] = Some(y);
                            trail.push(a);
                            queue.push(a);
                        }
                        _ => {}
                    },
                }
            }
        }
        true
    }

    /// Depth-first over unassigned cells in index order. Every constraint is
    /// fully checked the moment its last cell gets a value, so complete
    /// assignments are exactly the solutions.
    fn run(
        &mut self,
        val: &mut Vec<Option<Elem>>,
        trail: &mut Vec<usize>,
        from: usize,
        out: &mut Vec<Vec<Elem>>,
    ) -> Result<(), TensorError> {
        self.nodes += 1;
        if self.nodes > ORACLE_NODE_CAP {
            return Err(TensorError::Cap(format!(
                "map enumeration exceeded {ORACLE_NODE_CAP} search nodes"
            )));
        }
        let Some(cell) = (from..val.len()).find(|&c| val[c].is_none()) else {
            out.push(val.iter().map(|v| v.unwrap()).collect());
            return Ok(());
        };
        for value in 0..self.target.len() {
            let mark = trail.len();
            if self.assign(val, trail, cell, value) {
                self.run(val, trail, cell + 1, out)?;
            }
            for &c in &trail[mark..] {
                val[c] = None;
            }
            trail.truncate(mark);
        }
        Ok(())
    }
}

/// All solutions of the constraint system, each a full cell table, sorted.
/// The parallel build splits on the first cell's value and searches the
/// branches independently; the sequential build walks them in order.
fn solve_seq(
    target: &TModule,
    constraints: &[Constraint],
    cells: usize,
) -> Result<Vec<Vec<Elem>>, TensorError> {
    let mut search = Search::new(target, constraints, cells);
    let mut out = Vec::new();
    search.run(&mut vec![None; cells], &mut Vec::new(), 0, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

#[cfg(feature = "parallel")]
fn solve(
    target: &TModule,
    constraints: &[Constraint],
    cells: usize,
) -> Result<Vec<Vec<Elem>>, TensorError> {
    use rayon::prelude::*;

    if cells == 0 {
        return solve_seq(target, constraints, cells);
    }
    let branches: Vec<Vec<Vec<Elem>>> = (0..target.len())
        .into_par_iter()
        .map(|first| {
            let mut search = Search::new(target, constraints, cells);
            let mut val = vec![None; cells];
            let mut trail = Vec::new();
            let mut out = Vec::new();
            if search.assign(&mut val, &mut trail, 0, first) {
                search.run(&mut val, &mut trail, 1, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<_, TensorError>>()?;
    let mut out: Vec<Vec<Elem>> = branches.into_iter().flatten().collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(not(feature = "parallel"))]
fn solve(
    target: &TModule,
    constraints: &[Constraint],
    cells: usize,
) -> Result<Vec<Vec<Elem>>, TensorError> {
    solve_seq(target, constraints, cells)
}

fn balance_constraints(m1: &TModule, m2: &TModule) -> Vec<Constraint> {
    let (n1, n2) = (m1.len(), m2.len());
    let cell = |v: Elem, w: Elem| v * n2 + w;
    let mut out = Vec::new();
    for v in 0..n1 {
        for v2 in v..n1 {
            for w in 0..n2 {
                out.push(Constraint::Sum {
                    a: cell(v, w),
                    b: cell(v2, w),
                    total: cell(m1.add(v, v2), w),
                });
            }
        }
    }
    for v in 0..n1 {
        for w in 0..n2 {
            for w2 in w..n2 {
                out.push(Constraint::Sum {
                    a: cell(v, w),
                    b: cell(v, w2),
                    total: cell(v, m2.add(w, w2)),
                });
            }
        }
    }
    for a in 0..m1.acting.len() {
        for v in 0..n1 {
            for w in 0..n2 {
                let lhs = cell(m1.act_right(v, a), w);
                let rhs = cell(v, m2.act(a, w));
                if lhs != rhs {
                    out.push(Constraint::Eq { a: lhs, b: rhs });
                }
            }
        }
    }
    out
}

/// Every balanced map from the factor grid of `closure` into `target`.
pub fn balanced_maps(
    closure: &CongruenceClosure,
    target: &TModule,
) -> Result<Vec<BalancedMap>, TensorError> {
    if target.acting != closure.over {
        return Err(TensorError::Precondition(
            "oracle target must act over the tensoring monoid".into(),
        ));
    }
    let constraints = balance_constraints(&closure.m1, &closure.m2);
    let cells = closure.m1.len() * closure.m2.len();
    let n2 = closure.m2.len();
    Ok(solve(target, &constraints, cells)?
        .into_iter()
        .map(|table| BalancedMap { n2, table })
        .collect())
}

/// Every additive map from the classes of `closure` into `target`:
/// assignments `h` with `h(c1 + c2) = h(c1) + h(c2)` throughout the total
/// class addition table. Needs a saturated closure.
pub fn additive_class_maps(
    closure: &CongruenceClosure,
    target: &TModule,
) -> Result<Vec<Vec<Elem>>, TensorError> {
    if !closure.saturated {
        return Err(TensorError::Unsaturated { bound: closure.bound });
    }
    let k = closure.class_count();
    let mut constraints = Vec::new();
    for i in 0..k {
        for j in i..k {
            constraints.push(Constraint::Sum {
                a: i,
                b: j,
                total: closure.add_classes(i, j).expect("saturated"),
            });
        }
    }
    solve(target, &constraints, k)
}

/// Checks that the classes of `closure` behave as the universal recipient of
/// balanced maps, with the given modules standing in for arbitrary targets:
///
/// * every balanced map is constant on classes, so it factors through them;
/// * the factored map adds classes to added images, and the pullback of any
///   additive class map along the simple tensors is balanced;
/// * those two directions invert each other, map for map;
/// * distinct classes are told apart by some balanced map into some target.
///
/// The last law is as strong as the supplied target list; a report with a
/// separation failure says the targets are too coarse, not that the closure
/// is wrong.
pub fn universal_property_oracle(
    closure: &CongruenceClosure,
    targets: &[TModule],
) -> Result<Report, TensorError> {
    if !closure.saturated {
        return Err(TensorError::Unsaturated { bound: closure.bound });
    }
    let k = closure.class_count();
    let mut report = Report::new("universal property of the bounded tensor");
    let mut separated = vec![vec![false; k]; k];

    for (ti, target) in targets.iter().enumerate() {
        let maps = balanced_maps(closure, target)?;
        let class_maps = additive_class_maps(closure, target)?;
        report.note(format!(
            "target {ti}: {} balanced maps, {} additive class maps",
            maps.len(),
            class_maps.len()
        ));

        let mut factor = LawScan::new();
        let mut induced: Vec<Vec<Elem>> = Vec::with_capacity(maps.len());
        for (mi, psi) in maps.iter().enumerate() {
            let g: Vec<Elem> = (0..k)
                .map(|c| psi.apply(closure.representative(c), target))
                .collect();
            for (i, t) in closure.terms.iter().enumerate() {
                let c = closure.class_of_term[i];
                if psi.apply(t, target) != g[c] {
                    factor.violation(|| {
                        format!(
                            "map {mi} into target {ti} splits class {c} at {}",
                            t.render(&closure.m1, &closure.m2)
                        )
                    });
                }
            }
            induced.push(g);
        }
        report.push(format!("balanced-maps-factor-t{ti}"), factor.verdict());

        let mut forward = LawScan::new();
        for (mi, g) in induced.iter().enumerate() {
            if !class_maps.contains(g) {
                forward.violation(|| {
                    format!("factored map {mi} is not additive on classes (target {ti})")
                });
            }
        }
        report.push(format!("factored-maps-are-additive-t{ti}"), forward.verdict());

        let mut backward = LawScan::new();
        let mut pulled: Vec<BalancedMap> = Vec::with_capacity(class_maps.len());
        for (hi, h) in class_maps.iter().enumerate() {
            let table: Vec<Elem> = (0..closure.m1.len())
                .flat_map(|v| {
                    (0..closure.m2.len()).map(move |w| h[closure.simple_class(v, w)])
                })
                .collect();
            let psi = BalancedMap { n2: closure.m2.len(), table };
            if !maps.contains(&psi) {
                backward.violation(|| {
                    format!("class map {hi} does not pull back to a balanced map (target {ti})")
                });
            }
            pulled.push(psi);
        }
        report.push(format!("class-maps-pull-back-t{ti}"), backward.verdict());

        let mut inverse = LawScan::new();
        if maps.len() != class_maps.len() {
            inverse.violation(|| {
                format!(
                    "{} balanced maps vs {} class maps (target {ti})",
                    maps.len(),
                    class_maps.len()
                )
            });
        }
        for (mi, g) in induced.iter().enumerate() {
            let round: Vec<Elem> = (0..closure.m1.len())
                .flat_map(|v| (0..closure.m2.len()).map(move |w| g[closure.simple_class(v, w)]))
                .collect();
            if round != maps[mi].table {
                inverse.violation(|| {
                    format!("map {mi} does not survive the round trip (target {ti})")
                });
            }
        }
        for (hi, (h, psi)) in class_maps.iter().zip(&pulled).enumerate() {
            let round: Vec<Elem> = (0..k)
                .map(|c| psi.apply(closure.representative(c), target))
                .collect();
            if round != *h {
                inverse.violation(|| {
                    format!("class map {hi} does not survive the round trip (target {ti})")
                });
            }
        }
        report.push(format!("correspondence-bijective-t{ti}"), inverse.verdict());

        for g in &induced {
            for i in 0..k {
                for j in 0..k {
                    if g[i] != g[j] {
                        separated[i][j] = true;
                    }
                }
            }
        }
    }

    let mut separation = LawScan::new();
    for i in 0..k {
        for j in i + 1..k {
            if !separated[i][j] {
                separation.violation(|| {
                    format!(
                        "no balanced map into any target tells {} from {}",
                        closure.class_label(i),
                        closure.class_label(j)
                    )
                });
            }
        }
    }
    report.push("class-separation", separation.verdict());
    Ok(report)
}
