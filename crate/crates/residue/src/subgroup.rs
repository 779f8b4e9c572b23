//! Subgroups of an acting monoid, validated as groups and checked for
//! normality against a concrete module (`bG = Gb` as subsets of the carrier).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use hyperlab_core::{Elem, FiniteMonoid, TModule};

use crate::ResidueError;

/// A subset of an acting monoid certified to form a group under its
/// operation. `members` is kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSpec {
    pub parent: FiniteMonoid,
    pub members: Vec<Elem>,
}

impl SubgroupSpec {
    /// Builds and validates a subgroup: in range, closed, unital, invertible.
    pub fn new(parent: FiniteMonoid, members: Vec<Elem>) -> Result<Self, ResidueError> {
        let mut members: Vec<Elem> = members.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        members.shrink_to_fit();
        let spec = SubgroupSpec { parent, members };
        spec.validate()?;
        Ok(spec)
    }

    /// The trivial subgroup containing only the identity.
    pub fn trivial(parent: FiniteMonoid) -> Self {
        let members = vec![parent.identity];
        SubgroupSpec { parent, members }
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Re-checks the group axioms; callers constructing the struct directly
    /// get the same guarantees as [`SubgroupSpec::new`].
    pub fn validate(&self) -> Result<(), ResidueError> {
        if self.members.is_empty() {
            return Err(ResidueError::NotAGroup("no members".into()));
        }
        for &g in &self.members {
            if g >= self.parent.len() {
                return Err(ResidueError::NotAGroup(format!(
                    "member index {g} outside the monoid"
                )));
            }
        }
        if !self.contains(self.parent.identity) {
            return Err(ResidueError::NotAGroup(format!(
                "identity {} missing",
                self.parent.label(self.parent.identity)
            )));
        }
        for &g1 in &self.members {
            for &g2 in &self.members {
                let prod = self.parent.op(g1, g2);
                if !self.contains(prod) {
                    return Err(ResidueError::NotAGroup(format!(
                        "{} * {} = {} escapes the subgroup",
                        self.parent.label(g1),
                        self.parent.label(g2),
                        self.parent.label(prod)
                    )));
                }
            }
        }
        for &g in &self.members {
            let invertible = self.members.iter().any(|&h| {
                self.parent.op(g, h) == self.parent.identity
                    && self.parent.op(h, g) == self.parent.identity
            });
            if !invertible {
                return Err(ResidueError::NotAGroup(format!(
                    "{} has no inverse among the members",
                    self.parent.label(g)
                )));
            }
        }
        Ok(())
    }

    /// Normality in the module sense: `{b.g} = {g.b}` as subsets of the
    /// carrier for every carrier element `b`.
    pub fn check_normal_for(&self, m: &TModule) -> Result<(), ResidueError> {
        if self.parent != m.acting {
            return Err(ResidueError::Precondition(
                "subgroup parent differs from the module's acting monoid".into(),
            ));
        }
        for b in 0..m.len() {
            let right: BTreeSet<Elem> = self.members.iter().map(|&g| m.act_right(b, g)).collect();
            let left: BTreeSet<Elem> = self.members.iter().map(|&g| m.act(g, b)).collect();
            if right != left {
                return Err(ResidueError::NotNormal(format!(
                    "at {}: right orbit {:?} differs from left orbit {:?}",
                    m.label(b),
                    right.iter().map(|&x| m.label(x)).collect::<Vec<_>>(),
                    left.iter().map(|&x| m.label(x)).collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    /// The right orbit `bG` of a carrier element, sorted.
    pub fn orbit(&self, m: &TModule, b: Elem) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self.members.iter().map(|&g| m.act_right(b, g)).collect();
        set.into_iter().collect()
    }
}
