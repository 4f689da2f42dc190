use std::collections::BTreeSet;
use std::fmt;

use crate::lp::{AnswerSet, Literal, LiteralSet};

use super::{AbaError, ArgumentGraph, ArgumentId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Stable,
    Admissible,
}

/// A set of arguments checked against `semantics`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Extension {
    members: BTreeSet<ArgumentId>,
    assumptions: LiteralSet,
    semantics: Semantics,
}

impl Extension {
    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.members
    }

    /// Union of the assumption-premises of the members.
    pub fn assumption_base(&self) -> &LiteralSet {
        &self.assumptions
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn contains(&self, id: ArgumentId) -> bool {
        self.members.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Conclusions of the members.
    pub fn conclusions(&self, g: &ArgumentGraph) -> LiteralSet {
        self.members.iter().map(|&id| g.argument(id).conclusion.clone()).collect()
    }

    /// Classical conclusions of the members.
    pub fn classical_conclusions(&self, g: &ArgumentGraph) -> LiteralSet {
        self.conclusions(g).into_iter().filter(Literal::is_classical).collect()
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

/// Assumption sets are bitmasks over the framework's assumptions in order.
type Mask = u128;

impl ArgumentGraph {
    fn assumption_index(&self) -> Vec<&Literal> {
        let asm: Vec<&Literal> = self.framework().assumptions().iter().collect();
        assert!(asm.len() <= Mask::BITS as usize, "too many assumptions ({})", asm.len());
        asm
    }

    fn premise_masks(&self, asm: &[&Literal]) -> Vec<Mask> {
        self.arguments()
            .iter()
            .map(|a| {
                asm.iter()
                    .enumerate()
                    .filter(|(_, l)| a.assumption_premises.contains(**l))
                    .fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect()
    }

    fn make_extension(&self, members: BTreeSet<ArgumentId>, semantics: Semantics) -> Extension {
        let assumptions =
            members.iter().flat_map(|&id| self.argument(id).assumption_premises.iter().cloned()).collect();
        Extension { members, assumptions, semantics }
    }

    /// Arguments whose assumption-premises all lie in `delta`.
    pub fn supported_by(&self, delta: &LiteralSet) -> BTreeSet<ArgumentId> {
        self.arguments().iter().filter(|a| a.assumption_premises.is_subset(delta)).map(|a| a.id).collect()
    }

    /// Every stable extension, ordered by classical conclusions.
    ///
    /// A stable extension is `{A | AP(A) ⊆ Δ}` for an assumption set `Δ`
    /// containing exactly the assumptions whose contrary it does not derive.
    /// Assumptions whose contrary concludes no argument are in every such `Δ`;
    /// only the remaining ones are searched.
    pub fn stable_extensions(&self) -> Vec<Extension> {
        let asm = self.assumption_index();
        let masks = self.premise_masks(&asm);
        let contrary_args: Vec<Vec<usize>> = asm
            .iter()
            .map(|a| {
                let c = self.framework().contrary(a).expect("every assumption has a contrary");
                self.concluding(c).iter().map(|id| id.index()).collect()
            })
            .collect();

        let mut fixed: Mask = 0;
        let mut free = Vec::new();
        for (i, c) in contrary_args.iter().enumerate() {
            if c.is_empty() {
                fixed |= 1 << i;
            } else {
                free.push(i);
            }
        }
        assert!(free.len() < 32, "too many attackable assumptions to enumerate ({})", free.len());

        let mut found: Vec<(LiteralSet, Extension)> = Vec::new();
        for bits in 0u64..(1u64 << free.len()) {
            let delta =
                free.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).fold(fixed, |m, (_, &i)| m | 1 << i);
            // Δ must be exactly the assumptions whose contrary is not derived from Δ
            let stable = free.iter().all(|&i| {
                let derived = contrary_args[i].iter().any(|&a| masks[a] & !delta == 0);
                (delta >> i & 1 == 1) != derived
            });
            if stable {
                let members: BTreeSet<ArgumentId> =
                    (0..masks.len()).filter(|&a| masks[a] & !delta == 0).map(ArgumentId).collect();
                let e = self.make_extension(members, Semantics::Stable);
                found.push((e.classical_conclusions(self), e));
            }
        }
        found.sort();
        found.into_iter().map(|(_, e)| e).collect()
    }

    pub fn is_conflict_free(&self, ids: &BTreeSet<ArgumentId>) -> bool {
        ids.iter().all(|&b| self.attacks().attackers_of(b).iter().all(|a| !ids.contains(a)))
    }

    /// Conflict-free and attacks every argument outside `ids`.
    pub fn is_stable(&self, ids: &BTreeSet<ArgumentId>) -> bool {
        self.is_conflict_free(ids)
            && self
                .arguments()
                .iter()
                .filter(|b| !ids.contains(&b.id))
                .all(|b| self.attacks().attackers_of(b.id).iter().any(|a| ids.contains(a)))
    }

    /// Conflict-free and counter-attacks every attacker of a member.
    pub fn is_admissible(&self, ids: &BTreeSet<ArgumentId>) -> bool {
        self.is_conflict_free(ids)
            && ids.iter().all(|&m| {
                self.attacks()
                    .attackers_of(m)
                    .iter()
                    .all(|&b| self.attacks().attackers_of(b).iter().any(|c| ids.contains(c)))
            })
    }

    /// `ids` as an admissible extension, if it is one.
    pub fn admissible_extension(&self, ids: BTreeSet<ArgumentId>) -> Option<Extension> {
        self.is_admissible(&ids).then(|| self.make_extension(ids, Semantics::Admissible))
    }

    /// `{A | AP(A) ⊆ Δ_S}`, checked to be stable.
    pub fn corresponding_stable_extension(&self, s: &AnswerSet) -> Result<Extension, AbaError> {
        let members = self.supported_by(s.delta());
        if !self.is_stable(&members) {
            return Err(AbaError::NotStable);
        }
        Ok(self.make_extension(members, Semantics::Stable))
    }

    /// Members of `e` concluding `k`.
    pub fn corresponding_arguments(&self, e: &Extension, k: &Literal) -> Result<Vec<ArgumentId>, AbaError> {
        if !self.framework().language().contains(k) {
            return Err(AbaError::UnknownLiteral(k.clone()));
        }
        Ok(self.concluding(k).iter().copied().filter(|&id| e.contains(id)).collect())
    }
}
