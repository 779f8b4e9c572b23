//! Small shared structures used across the workspace's tests and builtins.

use crate::{CoreError, FiniteMonoid, Pair, TModule};

/// The one-element monoid `{1}`.
pub fn trivial_monoid() -> FiniteMonoid {
    FiniteMonoid {
        elements: vec!["1".into()],
        op: vec![vec![0]],
        identity: 0,
        absorbing: None,
    }
}

/// Additively written cyclic group of order `n`, labels `0..n-1`.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n > 0);
    FiniteMonoid {
        elements: (0..n).map(|i| i.to_string()).collect(),
        op: (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect(),
        identity: 0,
        absorbing: None,
    }
}

/// The unit group `{1, 2}` of arithmetic mod 3.
pub fn units_mod3() -> FiniteMonoid {
    FiniteMonoid {
        elements: vec!["1".into(), "2".into()],
        op: vec![vec![0, 1], vec![1, 0]],
        identity: 0,
        absorbing: None,
    }
}

/// The boolean semiring `{0, 1}` with `1 + 1 = 1`, as a module over the
/// trivial monoid.
pub fn boolean_module() -> TModule {
    TModule {
        acting: trivial_monoid(),
        carrier: vec!["0".into(), "1".into()],
        add: vec![vec![0, 1], vec![1, 1]],
        zero: 0,
        left_action: vec![vec![0, 1]],
        right_action: None,
    }
}

/// Classical pair `(B, {0})` on the boolean semiring.
pub fn boolean_pair() -> Pair {
    Pair::classical(boolean_module(), vec![1])
}

/// `Z/n` with addition mod `n`, as a module over the trivial monoid.
pub fn zmod_module(n: usize) -> TModule {
    assert!(n > 0);
    TModule {
        acting: trivial_monoid(),
        carrier: (0..n).map(|i| i.to_string()).collect(),
        add: (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect(),
        zero: 0,
        left_action: vec![(0..n).collect()],
        right_action: None,
    }
}

/// Classical pair `(Z/n, {0})` with the unit embedded at `1` (at `0` for `n = 1`).
pub fn zmod_pair(n: usize) -> Pair {
    let embedding = vec![if n > 1 { 1 } else { 0 }];
    Pair::classical(zmod_module(n), embedding)
}

/// Arithmetic mod 3 as a module over its unit group `{1, 2}`: the rank-1
/// free module over that group.
pub fn scalars_mod3() -> TModule {
    TModule {
        acting: units_mod3(),
        carrier: vec!["0".into(), "1".into(), "2".into()],
        add: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        zero: 0,
        left_action: vec![vec![0, 1, 2], vec![0, 2, 1]],
        right_action: Some(vec![vec![0, 1, 2], vec![0, 2, 1]]),
    }
}

/// Classical pair on [`scalars_mod3`], tangibles `{1, 2}`.
pub fn scalars_mod3_pair() -> Pair {
    Pair::classical(scalars_mod3(), vec![1, 2])
}

/// Direct sum of two modules over the same acting monoid, with pair labels
/// and componentwise structure. Index layout is row-major in the left factor.
pub fn direct_sum(m1: &TModule, m2: &TModule) -> Result<TModule, CoreError> {
    if m1.acting != m2.acting {
        return Err(CoreError::Precondition(
            "direct sum needs a common acting monoid".into(),
        ));
    }
    let n1 = m1.len();
    let n2 = m2.len();
    let idx = |x1: usize, x2: usize| x1 * n2 + x2;
    let carrier: Vec<String> = (0..n1)
        .flat_map(|x1| (0..n2).map(move |x2| (x1, x2)))
        .map(|(x1, x2)| format!("({},{})", m1.label(x1), m2.label(x2)))
        .collect();
    let add = (0..n1 * n2)
        .map(|p| {
            let (p1, p2) = (p / n2, p % n2);
            (0..n1 * n2)
                .map(|q| {
                    let (q1, q2) = (q / n2, q % n2);
                    idx(m1.add(p1, q1), m2.add(p2, q2))
                })
                .collect()
        })
        .collect();
    let left_action = (0..m1.acting.len())
        .map(|a| {
            (0..n1 * n2)
                .map(|p| idx(m1.act(a, p / n2), m2.act(a, p % n2)))
                .collect()
        })
        .collect();
    let right_action = if m1.right_action.is_some() || m2.right_action.is_some() {
        Some(
            (0..m1.acting.len())
                .map(|a| {
                    (0..n1 * n2)
                        .map(|p| idx(m1.act_right(p / n2, a), m2.act_right(p % n2, a)))
                        .collect()
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(TModule {
        acting: m1.acting.clone(),
        carrier,
        add,
        zero: idx(m1.zero, m2.zero),
        left_action,
        right_action,
    })
}

/// `k`-fold direct power, `k >= 1`.
pub fn direct_power(m: &TModule, k: usize) -> Result<TModule, CoreError> {
    if k == 0 {
        return Err(CoreError::Precondition("direct power needs k >= 1".into()));
    }
    let mut out = m.clone();
    for _ in 1..k {
        out = direct_sum(&out, m)?;
    }
    Ok(out)
}
