use std::collections::BTreeMap;
use std::fmt;

use crate::lp::{Clause, Literal, LiteralSet, LogicProgram};

/// A flat ABA framework `⟨L, R, A, ‾⟩` obtained from a logic program.
#[derive(Clone, PartialEq, Eq)]
pub struct AbaFramework {
    language: LiteralSet,
    rules: Vec<Clause>,
    assumptions: LiteralSet,
    contrary: BTreeMap<Literal, Literal>,
}

impl AbaFramework {
    /// Rules are the clauses, assumptions are `NAF_P`, the contrary of
    /// `not l` is `l`, and the language is `Lit_P ∪ NAF_P`.
    pub fn translate(p: &LogicProgram) -> Self {
        let assumptions = p.naf_literals();
        let contrary = assumptions.iter().map(|a| (a.clone(), a.classical())).collect();
        AbaFramework { language: p.language(), rules: p.clauses().to_vec(), assumptions, contrary }
    }

    pub fn language(&self) -> &LiteralSet {
        &self.language
    }

    pub fn rules(&self) -> &[Clause] {
        &self.rules
    }

    pub fn assumptions(&self) -> &LiteralSet {
        &self.assumptions
    }

    pub fn is_assumption(&self, l: &Literal) -> bool {
        self.assumptions.contains(l)
    }

    pub fn contrary(&self, assumption: &Literal) -> Option<&Literal> {
        self.contrary.get(assumption)
    }

    pub fn contraries(&self) -> &BTreeMap<Literal, Literal> {
        &self.contrary
    }

    /// Heads of body-less rules.
    pub fn facts(&self) -> LiteralSet {
        self.rules.iter().filter(|r| r.is_fact()).map(|r| r.head().clone()).collect()
    }

    /// No rule head is an assumption.
    pub fn is_flat(&self) -> bool {
        self.rules.iter().all(|r| !self.assumptions.contains(r.head()))
    }
}

impl fmt::Debug for AbaFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AbaFramework").field("rules", &self.rules).field("assumptions", &self.assumptions).finish()
    }
}
