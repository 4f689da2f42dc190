//! Answer-set semantics: reduct, least model of NAF-free programs, the
//! answer-set check and enumeration, and modus-ponens derivability.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::literal::Literal;
use super::program::{Clause, LogicProgram};

pub type LiteralSet = BTreeSet<Literal>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("{0} is not an answer set of the program")]
    NotAnAnswerSet(SetDisplay),
    #[error("answer set {0} contains complementary literals")]
    Inconsistent(SetDisplay),
}

/// Wrapper that prints a literal set as `{a, -b, not c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDisplay(pub LiteralSet);

impl fmt::Display for SetDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// An answer set `S` together with `Δ_S`, the NAF literals it satisfies.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnswerSet {
    literals: LiteralSet,
    delta: LiteralSet,
}

impl AnswerSet {
    /// The classical literals `S`.
    pub fn literals(&self) -> &LiteralSet {
        &self.literals
    }

    /// `Δ_S = { not l | l ∈ Lit_P, l ∉ S }`.
    pub fn delta(&self) -> &LiteralSet {
        &self.delta
    }

    /// `S ∪ Δ_S`.
    pub fn with_naf(&self) -> LiteralSet {
        self.literals.union(&self.delta).cloned().collect()
    }

    /// Membership in `S ∪ Δ_S`.
    pub fn satisfies(&self, k: &Literal) -> bool {
        if k.is_naf() {
            self.delta.contains(k)
        } else {
            self.literals.contains(k)
        }
    }
}

impl fmt::Display for AnswerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        SetDisplay(self.literals.clone()).fmt(f)
    }
}

/// Result of answer-set enumeration. An inconsistent program reports no
/// answer sets at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnswerSets {
    pub answer_sets: Vec<AnswerSet>,
    pub consistent: bool,
}

/// Whether `s` holds some `a` together with `-a`.
pub fn has_complementary_pair(s: &LiteralSet) -> bool {
    s.iter().any(|l| l.is_classical() && !l.is_negated() && s.contains(&l.complement()))
}

/// `Δ_S` relative to the literal universe of `p`.
pub fn delta_of(p: &LogicProgram, s: &LiteralSet) -> LiteralSet {
    p.classical_literals().into_iter().filter(|l| !s.contains(l)).filter_map(|l| l.to_naf()).collect()
}

/// Gelfond-Lifschitz reduct `P^S`: drop clauses blocked by `s`, then strip the
/// remaining NAF literals. Clause order is kept.
pub fn reduct(p: &LogicProgram, s: &LiteralSet) -> LogicProgram {
    p.clauses()
        .iter()
        .filter(|c| c.naf_body().all(|n| !s.contains(&n.classical())))
        .map(|c| Clause::new(c.head().clone(), c.positive_body().cloned().collect()))
        .collect()
}

/// Least set closed under the clauses of a NAF-free program. If it contains
/// a complementary pair the result is all of `Lit_P`.
pub fn least_answer_set_positive(p: &LogicProgram) -> LiteralSet {
    debug_assert!(!p.has_naf(), "least_answer_set_positive on a program with NAF");
    let mut s = LiteralSet::new();
    let mut changed = true;
    while changed {
        changed = false;
        for c in p.clauses() {
            if !s.contains(c.head()) && c.body().iter().all(|b| s.contains(b)) {
                s.insert(c.head().clone());
                changed = true;
            }
        }
    }
    if has_complementary_pair(&s) {
        p.classical_literals()
    } else {
        s
    }
}

/// `s` equals the least answer set of `P^s`.
pub fn is_answer_set(p: &LogicProgram, s: &LiteralSet) -> bool {
    // The reduct of p w.r.t. s may have a smaller Herbrand base than p, so the
    // "all of Lit" case is evaluated against p's universe.
    let r = reduct(p, s);
    let mut least = least_answer_set_positive(&r);
    if has_complementary_pair(&least) {
        least = p.classical_literals();
    }
    *s == least
}

/// All answer sets of a ground program in lexicographic order.
///
/// Candidates are subsets of the clause heads: every member of an answer set
/// heads some clause that survives the reduct.
pub fn enumerate_answer_sets(p: &LogicProgram) -> AnswerSets {
    let heads: Vec<Literal> = p.heads().into_iter().collect();
    assert!(heads.len() < 32, "too many distinct clause heads to enumerate ({})", heads.len());
    let mut found = Vec::new();
    let mut saw_everything = false;
    for mask in 0u64..(1u64 << heads.len()) {
        let candidate: LiteralSet =
            heads.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone()).collect();
        if is_answer_set(p, &candidate) {
            if has_complementary_pair(&candidate) {
                saw_everything = true;
            } else {
                found.push(candidate);
            }
        }
    }
    if saw_everything || found.is_empty() {
        return AnswerSets { answer_sets: Vec::new(), consistent: false };
    }
    found.sort();
    let answer_sets = found
        .into_iter()
        .map(|literals| {
            let delta = delta_of(p, &literals);
            AnswerSet { literals, delta }
        })
        .collect();
    AnswerSets { answer_sets, consistent: true }
}

/// Attaches `Δ_S` to an answer set after checking it is one.
pub fn naf_completion(p: &LogicProgram, s: &LiteralSet) -> Result<AnswerSet, SemanticsError> {
    if has_complementary_pair(s) {
        return Err(SemanticsError::Inconsistent(SetDisplay(s.clone())));
    }
    if !is_answer_set(p, s) {
        return Err(SemanticsError::NotAnAnswerSet(SetDisplay(s.clone())));
    }
    Ok(AnswerSet { literals: s.clone(), delta: delta_of(p, s) })
}

/// Everything derivable from `P ∪ {not l ← | not l ∈ delta}` by modus ponens,
/// reading NAF literals as plain propositions.
pub fn mp_closure(p: &LogicProgram, delta: &LiteralSet) -> LiteralSet {
    let mut derived = delta.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for c in p.clauses() {
            if !derived.contains(c.head()) && c.body().iter().all(|b| derived.contains(b)) {
                derived.insert(c.head().clone());
                changed = true;
            }
        }
    }
    derived
}

/// `P ∪ delta ⊢_MP k`.
pub fn derives_mp(p: &LogicProgram, delta: &LiteralSet, k: &Literal) -> bool {
    mp_closure(p, delta).contains(k)
}
