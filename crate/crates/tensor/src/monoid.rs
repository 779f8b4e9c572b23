use hyperlab_core::{check_monoid, Elem, FiniteMonoid, TModule};
use serde::{Deserialize, Serialize};

use crate::TensorError;

/// Tensor of two monoids over a middle monoid acting on the right of the
/// first and the left of the second through embeddings. Carrier pairs are
/// indexed row-major (`x1 * |T2| + x2`); classes are the equivalence closure
/// of sliding the middle across, and carry a monoid structure exactly when
/// the componentwise product descends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidTensor {
    pub t1: FiniteMonoid,
    pub t2: FiniteMonoid,
    pub middle: FiniteMonoid,
    pub embed1: Vec<Elem>,
    pub embed2: Vec<Elem>,
    pub class_of_pair: Vec<usize>,
    /// Class id -> least pair index in the class.
    pub representatives: Vec<usize>,
    /// Present when the componentwise product is constant on classes.
    pub monoid: Option<FiniteMonoid>,
}

impl MonoidTensor {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, x1: Elem, x2: Elem) -> usize {
        self.class_of_pair[x1 * self.t2.len() + x2]
    }

    pub fn class_label(&self, class: usize) -> String {
        let p = self.representatives[class];
        format!(
            "{}(x){}",
            self.t1.label(p / self.t2.len()),
            self.t2.label(p % self.t2.len())
        )
    }

    fn members(&self, class: usize) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        let n2 = self.t2.len();
        self.class_of_pair
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == class)
            .map(move |(p, _)| (p / n2, p % n2))
    }
}

pub(crate) fn check_embedding(
    t: &FiniteMonoid,
    target: &FiniteMonoid,
    embed: &[Elem],
    name: &str,
) -> Result<(), TensorError> {
    if embed.len() != t.len() {
        return Err(TensorError::Precondition(format!(
            "{name} has {} entries for a middle monoid of {}",
            embed.len(),
            t.len()
        )));
    }
    if let Some(&bad) = embed.iter().find(|&&x| x >= target.len()) {
        return Err(TensorError::Precondition(format!(
            "{name} maps outside its codomain: {bad}"
        )));
    }
    if embed[t.identity] != target.identity {
        return Err(TensorError::Precondition(format!(
            "{name} does not preserve the identity"
        )));
    }
    for a in 0..t.len() {
        for b in 0..t.len() {
            if embed[t.op(a, b)] != target.op(embed[a], embed[b]) {
                return Err(TensorError::Precondition(format!(
                    "{name} is not multiplicative at {} * {}",
                    t.label(a),
                    t.label(b)
                )));
            }
        }
    }
    Ok(())
}

/// Builds the monoid tensor `T1 (x)_T T2`. The slide relation here needs no
/// length bound: pairs only ever merge with pairs, so a plain equivalence
/// closure over the seeds is the whole congruence.
pub fn monoid_tensor(
    t1: &FiniteMonoid,
    t2: &FiniteMonoid,
    middle: &FiniteMonoid,
    embed1: &[Elem],
    embed2: &[Elem],
) -> Result<MonoidTensor, TensorError> {
    for (m, name) in [(t1, "left monoid"), (t2, "right monoid"), (middle, "middle monoid")] {
        let report = check_monoid(m)?;
        let failed = report.failures().next().map(|check| check.law.clone());
        if let Some(law) = failed {
            return Err(TensorError::Precondition(format!(
                "{name} breaks a monoid law: {law}"
            )));
        }
    }
    check_embedding(middle, t1, embed1, "left embedding")?;
    check_embedding(middle, t2, embed2, "right embedding")?;

    let (n1, n2) = (t1.len(), t2.len());
    let idx = |x1: Elem, x2: Elem| x1 * n2 + x2;
    let mut parent: Vec<usize> = (0..n1 * n2).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in 0..middle.len() {
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                let l = find(&mut parent, idx(t1.op(x1, embed1[a]), x2));
                let r = find(&mut parent, idx(x1, t2.op(embed2[a], x2)));
                parent[l] = r;
            }
        }
    }

    let mut class_of_pair = vec![usize::MAX; n1 * n2];
    let mut representatives = Vec::new();
    for p in 0..n1 * n2 {
        let root = find(&mut parent, p);
        if class_of_pair[root] == usize::MAX {
            class_of_pair[root] = representatives.len();
            representatives.push(p);
        }
        class_of_pair[p] = class_of_pair[root];
    }

    let k = representatives.len();
    let prod =
        |p: usize, q: usize| idx(t1.op(p / n2, q / n2), t2.op(p % n2, q % n2));
    let mut op = vec![vec![0; k]; k];
    for (i, &p) in representatives.iter().enumerate() {
        for (j, &q) in representatives.iter().enumerate() {
            op[i][j] = class_of_pair[prod(p, q)];
        }
    }
    let descends = (0..n1 * n2).all(|p| {
        (0..n1 * n2).all(|q| {
            class_of_pair[prod(p, q)]
                == op[class_of_pair[p]][class_of_pair[q]]
        })
    });

    let mut out = MonoidTensor {
        t1: t1.clone(),
        t2: t2.clone(),
        middle: middle.clone(),
        embed1: embed1.to_vec(),
        embed2: embed2.to_vec(),
        class_of_pair,
        representatives,
        monoid: None,
    };
    if descends {
        let identity = out.class_of(t1.identity, t2.identity);
        let absorbing = match (t1.absorbing, t2.absorbing) {
            (Some(z1), Some(z2)) => {
                let z = out.class_of(z1, z2);
                let total = (0..k).all(|c| op[c][z] == z && op[z][c] == z);
                total.then_some(z)
            }
            _ => None,
        };
        let monoid = FiniteMonoid {
            elements: (0..k).map(|c| out.class_label(c)).collect(),
            op,
            identity,
            absorbing,
        };
        let report = check_monoid(&monoid)?;
        if let Some(check) = report.failures().next() {
            return Err(TensorError::Inconsistent(format!(
                "descended product breaks a monoid law: {}",
                check.law
            )));
        }
        out.monoid = Some(monoid);
    }
    Ok(out)
}

/// Action of the monoid tensor on a module sandwiched between the factors:
/// the class of `(a1, a2)` sends `b` to `a1 (b a2)`. Every member of every
/// class must induce the same map, and when the class monoid exists the
/// action must respect its product; both are checked exhaustively.
pub fn action_on(mt: &MonoidTensor, m: &TModule) -> Result<Vec<Vec<Elem>>, TensorError> {
    if m.acting != mt.t1 || m.acting != mt.t2 {
        return Err(TensorError::Precondition(
            "the module must carry both factors as its acting monoid".into(),
        ));
    }
    let k = mt.class_count();
    let apply = |a1: Elem, a2: Elem, b: Elem| m.act(a1, m.act_right(b, a2));
    let mut table = vec![vec![0; m.len()]; k];
    for c in 0..k {
        let p = mt.representatives[c];
        let (a1, a2) = (p / mt.t2.len(), p % mt.t2.len());
        for b in 0..m.len() {
            table[c][b] = apply(a1, a2, b);
        }
        for (b1, b2) in mt.members(c) {
            for b in 0..m.len() {
                if apply(b1, b2, b) != table[c][b] {
                    return Err(TensorError::Precondition(format!(
                        "the middle relation does not act on the module: class {c} \
                         disagrees at {}",
                        m.label(b)
                    )));
                }
            }
        }
    }
    if let Some(monoid) = &mt.monoid {
        for c1 in 0..k {
            for c2 in 0..k {
                let prod = monoid.op(c1, c2);
                for b in 0..m.len() {
                    if table[prod][b] != table[c1][table[c2][b]] {
                        return Err(TensorError::Inconsistent(format!(
                            "action ignores the class product at ({c1}, {c2})"
                        )));
                    }
                }
            }
        }
    }
    Ok(table)
}
