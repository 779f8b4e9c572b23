use std::collections::BTreeSet;

use hyperlab_core::{Elem, FiniteMonoid, Pair, SurpassingRelation, TModule};
use serde::{Deserialize, Serialize};

use crate::hypermagma::{powerset_add, Hypermagma};
use crate::subset::{self, Mask};
use crate::HyperError;

/// Caps the closure so the materialized family tables stay small.
pub const MAX_FAMILY: usize = 2048;

/// The family of subsets generated by the singletons under the extended
/// hyperaddition and the tangible action, with the induced tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperpair {
    pub base: Hypermagma,
    /// Sorted member subsets; indices below refer to this list.
    pub family: Vec<Mask>,
    /// Family indices of members meeting the zero seed.
    pub zero_family: Vec<usize>,
    /// Family-indexed addition table.
    pub add: Vec<Vec<usize>>,
    /// Base-carrier elements acting on the family, sorted.
    pub tangibles: Vec<Elem>,
    /// `action[t][f]` is the family index of `tangibles[t] . family[f]`.
    pub action: Vec<Vec<usize>>,
    /// Whether the family is also closed under elementwise multiplication.
    pub mul_closed: bool,
}

impl Hyperpair {
    pub fn family_index(&self, member: Mask) -> Option<usize> {
        self.family.binary_search(&member).ok()
    }

    /// The family as a module pair: members form the carrier, the tangible
    /// submonoid acts, singletons of tangibles are the embedded image, and
    /// the zero family is the distinguished zero set. Core checkers apply
    /// to the result directly.
    pub fn as_pair(&self) -> Pair {
        let mul = self.base.mul.as_ref().expect("tangibles act through mul");
        let t_count = self.tangibles.len();
        let pos = |e: Elem| self.tangibles.iter().position(|&t| t == e).unwrap();
        let mut op = vec![vec![0; t_count]; t_count];
        for (i, &a) in self.tangibles.iter().enumerate() {
            for (j, &b) in self.tangibles.iter().enumerate() {
                op[i][j] = pos(mul.table[a][b]);
            }
        }
        let acting = FiniteMonoid {
            elements: self.tangibles.iter().map(|&t| self.base.label(t)).map(String::from).collect(),
            op,
            identity: pos(mul.one),
            absorbing: None,
        };

        let right_action = self
            .tangibles
            .iter()
            .map(|&t| {
                self.family
                    .iter()
                    .map(|&s| {
                        let image = subset::from_elems(subset::elems(s).map(|x| mul.table[x][t]));
                        self.family_index(image).expect("family is action-closed")
                    })
                    .collect()
            })
            .collect();

        let zero_singleton = subset::singleton(self.base.hyperzero.expect("hyperpair needs a hyperzero"));
        let module = TModule {
            acting,
            carrier: self.family.iter().map(|&s| subset::render(s, &self.base.carrier)).collect(),
            add: self.add.clone(),
            zero: self.family_index(zero_singleton).expect("zero singleton is seeded"),
            left_action: self.action.clone(),
            right_action: Some(right_action),
        };

        let embedding: Vec<usize> = self
            .tangibles
            .iter()
            .map(|&t| self.family_index(subset::singleton(t)).expect("singletons are seeded"))
            .collect();
        let mut tangible_members = embedding.clone();
        tangible_members.sort_unstable();

        Pair {
            module,
            zero_set: self.zero_family.clone(),
            tangibles: tangible_members,
            embedding,
        }
    }

    /// Set inclusion between family members, as a relation table.
    pub fn subset_order(&self) -> SurpassingRelation {
        let rel = self
            .family
            .iter()
            .map(|&s1| self.family.iter().map(|&s2| s1 & !s2 == 0).collect())
            .collect();
        SurpassingRelation { rel }
    }
}

/// Closes the singletons of `h` under the extended hyperaddition and the
/// tangible action.
///
/// Tangibles default to the nonzero carrier when the multiplication is a
/// group there, else to the unit alone; `tangibles` overrides the default
/// and must be a submonoid. The zero family collects members meeting
/// `zero_seed` (default: the hyperzero alone).
pub fn build_hyperpair(
    h: &Hypermagma,
    tangibles: Option<&[Elem]>,
    zero_seed: Option<Mask>,
) -> Result<Hyperpair, HyperError> {
    h.validate_shape()?;
    let n = h.len();
    let Some(zero) = h.hyperzero else {
        return Err(HyperError::Precondition("hyperpair needs a hyperzero".into()));
    };

    let Some(mul) = &h.mul else {
        return Err(HyperError::NeedsTangibles(
            "no multiplication, so no tangible action exists".into(),
        ));
    };
    let tangibles: Vec<Elem> = match tangibles {
        Some(ts) => {
            let mut ts: Vec<Elem> = ts.to_vec();
            ts.sort_unstable();
            ts.dedup();
            if ts.iter().any(|&t| t >= n) {
                return Err(HyperError::Shape("tangible index out of range".into()));
            }
            if !ts.contains(&mul.one)
                || ts.iter().any(|&a| ts.iter().any(|&b| !ts.contains(&mul.table[a][b])))
            {
                return Err(HyperError::Precondition(
                    "tangible override must be a submonoid containing the unit".into(),
                ));
            }
            ts
        }
        None if h.mul_is_group_on_nonzero() => (0..n).filter(|&a| a != zero).collect(),
        None => vec![mul.one],
    };

    let mut members: BTreeSet<Mask> = (0..n).map(subset::singleton).collect();
    let mut frontier: Vec<Mask> = members.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        let mut produced: Vec<Mask> = Vec::new();
        for &t in &tangibles {
            produced.push(subset::from_elems(subset::elems(s).map(|x| mul.table[t][x])));
            produced.push(subset::from_elems(subset::elems(s).map(|x| mul.table[x][t])));
        }
        for &other in members.iter() {
            produced.push(powerset_add(h, s, other));
            produced.push(powerset_add(h, other, s));
        }
        for p in produced {
            if members.insert(p) {
                frontier.push(p);
            }
        }
        if members.len() > MAX_FAMILY {
            return Err(HyperError::Cap(format!(
                "hyperpair family exceeds {MAX_FAMILY} members"
            )));
        }
    }

    let family: Vec<Mask> = members.into_iter().collect();
    let index = |m: Mask| family.binary_search(&m).expect("family is closed");

    let add = family
        .iter()
        .map(|&s1| family.iter().map(|&s2| index(powerset_add(h, s1, s2))).collect())
        .collect();
    let action = tangibles
        .iter()
        .map(|&t| {
            family
                .iter()
                .map(|&s| index(subset::from_elems(subset::elems(s).map(|x| mul.table[t][x]))))
                .collect()
        })
        .collect();

    let seed = zero_seed.unwrap_or_else(|| subset::singleton(zero));
    let zero_family: Vec<usize> = family
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s & seed != 0)
        .map(|(i, _)| i)
        .collect();

    let mul_closed = family.iter().all(|&s1| {
        family.iter().all(|&s2| {
            let prod = subset::from_elems(
                subset::elems(s1).flat_map(|x| subset::elems(s2).map(move |y| mul.table[x][y])),
            );
            family.binary_search(&prod).is_ok()
        })
    });

    Ok(Hyperpair {
        base: h.clone(),
        family,
        zero_family,
        add,
        tangibles,
        action,
        mul_closed,
    })
}
