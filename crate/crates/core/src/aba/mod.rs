//! Assumption-based argumentation over the framework translated from a
//! logic program: arguments, attacks, stable and admissible extensions.

mod argument;
mod extension;
mod framework;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::lp::{Literal, LogicProgram};

pub use argument::{enumerate_arguments, Argument, ArgumentId, Derivation};
pub use extension::{Extension, Semantics};
pub use framework::AbaFramework;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbaError {
    #[error("literal {0} is not in the language of the framework")]
    UnknownLiteral(Literal),
    #[error("unknown argument {0}")]
    UnknownArgument(ArgumentId),
    #[error("arguments supported by the answer set do not form a stable extension")]
    NotStable,
}

/// `attacker` attacks `attacked` on the assumption-premise `assumption`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attack {
    pub attacker: ArgumentId,
    pub attacked: ArgumentId,
    pub assumption: Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AttackRelation {
    edges: BTreeSet<Attack>,
    attackers: Vec<Vec<ArgumentId>>,
    attacked: Vec<Vec<ArgumentId>>,
}

impl AttackRelation {
    pub fn edges(&self) -> &BTreeSet<Attack> {
        &self.edges
    }

    /// Attackers of `id`, ascending.
    pub fn attackers_of(&self, id: ArgumentId) -> &[ArgumentId] {
        &self.attackers[id.0]
    }

    /// Arguments attacked by `id`, ascending.
    pub fn attacked_by(&self, id: ArgumentId) -> &[ArgumentId] {
        &self.attacked[id.0]
    }

    pub fn attacks(&self, attacker: ArgumentId, attacked: ArgumentId) -> bool {
        self.attackers[attacked.0].binary_search(&attacker).is_ok()
    }
}

/// `(A, B, β)` for every `β ∈ AP(B)` with `contrary(β) = conclusion(A)`.
pub fn compute_attacks(f: &AbaFramework, args: &[Argument]) -> AttackRelation {
    let mut by_conclusion: BTreeMap<&Literal, Vec<ArgumentId>> = BTreeMap::new();
    for a in args {
        by_conclusion.entry(&a.conclusion).or_default().push(a.id);
    }
    let mut edges = BTreeSet::new();
    let mut attackers = vec![Vec::new(); args.len()];
    let mut attacked = vec![Vec::new(); args.len()];
    for b in args {
        for beta in &b.assumption_premises {
            let Some(c) = f.contrary(beta) else { continue };
            for &a in by_conclusion.get(c).map(Vec::as_slice).unwrap_or(&[]) {
                edges.insert(Attack { attacker: a, attacked: b.id, assumption: beta.clone() });
                attackers[b.id.0].push(a);
                attacked[a.0].push(b.id);
            }
        }
    }
    for v in attackers.iter_mut().chain(attacked.iter_mut()) {
        v.sort();
        v.dedup();
    }
    AttackRelation { edges, attackers, attacked }
}

/// The translated framework of a program together with all its arguments
/// and the attack relation between them.
#[derive(Debug, Clone)]
pub struct ArgumentGraph {
    framework: AbaFramework,
    arguments: Vec<Argument>,
    attacks: AttackRelation,
    by_conclusion: BTreeMap<Literal, Vec<ArgumentId>>,
}

impl ArgumentGraph {
    pub fn new(framework: AbaFramework) -> Self {
        let arguments = enumerate_arguments(&framework);
        let attacks = compute_attacks(&framework, &arguments);
        let mut by_conclusion: BTreeMap<Literal, Vec<ArgumentId>> = BTreeMap::new();
        for a in &arguments {
            by_conclusion.entry(a.conclusion.clone()).or_default().push(a.id);
        }
        ArgumentGraph { framework, arguments, attacks, by_conclusion }
    }

    pub fn from_program(p: &LogicProgram) -> Self {
        ArgumentGraph::new(AbaFramework::translate(p))
    }

    pub fn framework(&self) -> &AbaFramework {
        &self.framework
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    pub fn attacks(&self) -> &AttackRelation {
        &self.attacks
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    /// Panics on an id from another graph; see [`ArgumentGraph::get`].
    pub fn argument(&self, id: ArgumentId) -> &Argument {
        &self.arguments[id.0]
    }

    pub fn get(&self, id: ArgumentId) -> Result<&Argument, AbaError> {
        self.arguments.get(id.0).ok_or(AbaError::UnknownArgument(id))
    }

    /// All arguments concluding `k`, ascending.
    pub fn concluding(&self, k: &Literal) -> &[ArgumentId] {
        self.by_conclusion.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The argument with exactly this signature, if any.
    pub fn find(&self, conclusion: &Literal, ap: &[Literal], fp: &[Literal]) -> Option<ArgumentId> {
        let ap: BTreeSet<Literal> = ap.iter().cloned().collect();
        let fp: BTreeSet<Literal> = fp.iter().cloned().collect();
        self.concluding(conclusion)
            .iter()
            .copied()
            .find(|&id| self.arguments[id.0].assumption_premises == ap && self.arguments[id.0].fact_premises == fp)
    }

    /// The assumption-argument `({β}, ∅) ⊢ β`.
    pub fn assumption_argument(&self, beta: &Literal) -> Option<ArgumentId> {
        self.find(beta, std::slice::from_ref(beta), &[])
    }

    /// The fact-argument `(∅, {β}) ⊢ β`.
    pub fn fact_argument(&self, beta: &Literal) -> Option<ArgumentId> {
        self.find(beta, &[], std::slice::from_ref(beta))
    }
}
