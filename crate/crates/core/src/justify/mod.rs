//! Basic and labelled justifications flattened from Attack Trees, and the
//! BABAS/LABAS justifications of a literal with respect to an answer set.

mod types;

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;

use thiserror::Error;

use crate::aba::{AbaError, ArgumentGraph, ArgumentId, Extension};
use crate::attack_tree::{for_each_attack_tree, AttackTree, Sign};
use crate::lp::{AnswerSet, Literal};

pub use types::{JustLiteral, JustPair, Justification, PairKind, PairSet, Polarity, Tag, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JustifyError {
    #[error("literal {0} is not in the language of the program")]
    UnknownLiteral(Literal),
    #[error("{0} does not hold in the answer set")]
    NotInAnswerSet(Literal),
    #[error("{0} holds in the answer set")]
    InAnswerSet(Literal),
    #[error("selection {index} is out of range: {available} positive justifications")]
    SelectionOutOfRange { index: usize, available: usize },
    #[error(transparent)]
    Aba(#[from] AbaError),
}

/// `supp_rel(k, conc(N))` for every premise `k ≠ conc(N)` of every node `N`,
/// and `att_rel(conc(M), k)` for every child `M` attacking `N` on `k`.
/// Repeat nodes add nothing their ancestor does not.
pub fn basic_justification(g: &ArgumentGraph, t: &AttackTree) -> PairSet {
    basic_from_parts(g, &Parts::of(t))
}

/// The sorted distinct signed arguments of non-repeat nodes and their
/// distinct edges to children; both justifications depend only on these.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Parts {
    nodes: Vec<(ArgumentId, Sign)>,
    edges: Vec<(ArgumentId, Sign, ArgumentId)>,
}

impl Parts {
    fn of(t: &AttackTree) -> Parts {
        let mut nodes = Vec::with_capacity(t.nodes().len());
        let mut edges = Vec::with_capacity(t.nodes().len());
        for n in t.nodes().iter().filter(|n| !n.is_repeat()) {
            nodes.push((n.argument, n.sign));
            edges.extend(n.children.iter().map(|&c| (n.argument, n.sign, t.node(c).argument)));
        }
        nodes.sort_unstable();
        nodes.dedup();
        edges.sort_unstable();
        edges.dedup();
        Parts { nodes, edges }
    }
}

fn basic_from_parts(g: &ArgumentGraph, parts: &Parts) -> PairSet {
    let mut out = Vec::new();
    let mut last = None;
    for &(id, _) in &parts.nodes {
        if last.replace(id) == Some(id) {
            continue;
        }
        let a = g.argument(id);
        for k in a.assumption_premises.iter().chain(&a.fact_premises) {
            if *k != a.conclusion {
                out.push(JustPair::basic(PairKind::Support, k.clone(), a.conclusion.clone()));
            }
        }
    }
    for &(id, _, m) in &parts.edges {
        let m = g.argument(m);
        for k in attacked_premises(g, id, &m.conclusion) {
            out.push(JustPair::basic(PairKind::Attack, m.conclusion.clone(), k.clone()));
        }
    }
    out.into_iter().collect()
}

/// Assumption-premises of `target` whose contrary is `by`.
fn attacked_premises<'g>(
    g: &'g ArgumentGraph,
    target: ArgumentId,
    by: &'g Literal,
) -> impl Iterator<Item = &'g Literal> {
    let f = g.framework();
    g.argument(target).assumption_premises.iter().filter(move |k| f.contrary(k) == Some(by))
}

/// '+' node `N`: `supp_rel+(k+_asm, conc(N)+_N)` per assumption-premise,
/// `supp_rel+(k+_fact, conc(N)+_N)` per fact-premise, `att_rel-(conc(M)-_M, k+_asm)`
/// per child `M`.
/// '-' node `N` with child `M` attacking on `k`: `supp_rel-(k-_asm, conc(N)-_N)`
/// unless `k = conc(N)`, and `att_rel+(conc(M)+_M, k-_asm)` with `M` tagged
/// `fact` when it is a fact-argument.
pub fn labelled_justification(g: &ArgumentGraph, t: &AttackTree) -> PairSet {
    labelled_from_parts(g, &Parts::of(t))
}

fn labelled_from_parts(g: &ArgumentGraph, parts: &Parts) -> PairSet {
    let mut out = Vec::new();
    for a in parts.nodes.iter().filter(|(_, s)| *s == Sign::Plus).map(|&(id, _)| g.argument(id)) {
        let conc = JustLiteral::labelled(a.conclusion.clone(), Sign::Plus, Tag::Argument(a.id));
        for (premises, tag) in [(&a.assumption_premises, Tag::Asm), (&a.fact_premises, Tag::Fact)] {
            for k in premises.iter().filter(|k| **k != a.conclusion) {
                out.push(JustPair::labelled(
                    PairKind::Support,
                    JustLiteral::labelled(k.clone(), Sign::Plus, tag),
                    conc.clone(),
                ));
            }
        }
    }
    for &(id, sign, m) in &parts.edges {
        let a = g.argument(id);
        let m = g.argument(m);
        match sign {
            Sign::Plus => {
                for k in attacked_premises(g, a.id, &m.conclusion) {
                    out.push(JustPair::labelled(
                        PairKind::Attack,
                        JustLiteral::labelled(m.conclusion.clone(), Sign::Minus, Tag::Argument(m.id)),
                        JustLiteral::labelled(k.clone(), Sign::Plus, Tag::Asm),
                    ));
                }
            }
            Sign::Minus => {
                let m_tag = if m.is_fact_argument() { Tag::Fact } else { Tag::Argument(m.id) };
                for k in attacked_premises(g, a.id, &m.conclusion) {
                    let k_lab = JustLiteral::labelled(k.clone(), Sign::Minus, Tag::Asm);
                    if *k != a.conclusion {
                        out.push(JustPair::labelled(
                            PairKind::Support,
                            k_lab.clone(),
                            JustLiteral::labelled(a.conclusion.clone(), Sign::Minus, Tag::Argument(a.id)),
                        ));
                    }
                    out.push(JustPair::labelled(
                        PairKind::Attack,
                        JustLiteral::labelled(m.conclusion.clone(), Sign::Plus, m_tag),
                        k_lab,
                    ));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The answer set, its stable extension and the program's arguments.
pub struct JustificationContext<'a> {
    graph: &'a ArgumentGraph,
    answer_set: &'a AnswerSet,
    extension: Extension,
}

impl<'a> JustificationContext<'a> {
    pub fn new(graph: &'a ArgumentGraph, answer_set: &'a AnswerSet) -> Result<Self, JustifyError> {
        let extension = graph.corresponding_stable_extension(answer_set)?;
        Ok(JustificationContext { graph, answer_set, extension })
    }

    pub fn graph(&self) -> &ArgumentGraph {
        self.graph
    }

    pub fn extension(&self) -> &Extension {
        &self.extension
    }

    fn check_language(&self, k: &Literal) -> Result<(), JustifyError> {
        if self.graph.framework().language().contains(k) {
            Ok(())
        } else {
            Err(JustifyError::UnknownLiteral(k.clone()))
        }
    }

    /// `lab(k)` for an argument concluding `k`.
    pub fn lab(&self, k: &Literal, sign: Sign, argument: ArgumentId) -> JustLiteral {
        let tag = if self.graph.framework().is_assumption(k) {
            Tag::Asm
        } else if self.graph.framework().rules().iter().any(|r| r.is_fact() && r.head() == k) {
            assert!(sign == Sign::Plus, "fact {k} cannot be justified negatively");
            Tag::Fact
        } else {
            Tag::Argument(argument)
        };
        JustLiteral::labelled(k.clone(), sign, tag)
    }

    /// Calls `f` with every argument concluding `k` and each of its trees,
    /// in id then enumeration order.
    pub fn for_each_tree(&self, k: &Literal, mut f: impl FnMut(ArgumentId, AttackTree)) {
        for &a in self.graph.concluding(k) {
            for_each_attack_tree(self.graph, self.extension.members(), a, |t| {
                f(a, t);
                ControlFlow::Continue(())
            });
        }
    }

    /// Subject and pair set of each tree of `k` with a new structure, in
    /// enumeration order; `positive` keeps only arguments in the extension.
    fn flattened(&self, k: &Literal, sign: Sign, variant: Variant, mut f: impl FnMut(JustLiteral, PairSet)) {
        let mut seen: HashSet<(Option<ArgumentId>, Parts)> = HashSet::new();
        self.for_each_tree(k, |a, t| {
            if sign == Sign::Plus && !self.extension.contains(a) {
                return;
            }
            let parts = Parts::of(&t);
            let subject_arg = (variant == Variant::Labelled).then_some(a);
            if seen.contains(&(subject_arg, parts.clone())) {
                return;
            }
            let flat = match variant {
                Variant::Basic => (JustLiteral::plain(k.clone()), basic_from_parts(self.graph, &parts)),
                Variant::Labelled => (self.lab(k, sign, a), labelled_from_parts(self.graph, &parts)),
            };
            seen.insert((subject_arg, parts));
            f(flat.0, flat.1);
        });
    }

    fn positive_candidates(&self, k: &Literal, variant: Variant) -> Result<Vec<Justification>, JustifyError> {
        self.check_language(k)?;
        if !self.answer_set.satisfies(k) {
            return Err(JustifyError::NotInAnswerSet(k.clone()));
        }
        let mut seen: BTreeSet<(JustLiteral, PairSet)> = BTreeSet::new();
        let mut out = Vec::new();
        self.flattened(k, Sign::Plus, variant, |subject, pairs| {
            if seen.insert((subject.clone(), pairs.clone())) {
                out.push(Justification {
                    subject,
                    polarity: Polarity::Positive,
                    variant,
                    sets: vec![pairs],
                    set_subjects: None,
                });
            }
        });
        Ok(out)
    }

    fn positive(&self, k: &Literal, variant: Variant, selection: usize) -> Result<Justification, JustifyError> {
        let mut all = self.positive_candidates(k, variant)?;
        let available = all.len();
        if selection >= available {
            return Err(JustifyError::SelectionOutOfRange { index: selection, available });
        }
        Ok(all.swap_remove(selection))
    }

    fn negative(&self, k: &Literal, variant: Variant) -> Result<Justification, JustifyError> {
        self.check_language(k)?;
        if self.answer_set.satisfies(k) {
            return Err(JustifyError::InAnswerSet(k.clone()));
        }
        let mut seen: BTreeSet<(JustLiteral, PairSet)> = BTreeSet::new();
        let mut sets = Vec::new();
        let mut subjects = Vec::new();
        self.flattened(k, Sign::Minus, variant, |subject, pairs| {
            if seen.insert((subject.clone(), pairs.clone())) {
                subjects.push(subject);
                sets.push(pairs);
            }
        });
        let (subject, set_subjects) = match variant {
            Variant::Basic => (JustLiteral::plain(k.clone()), None),
            Variant::Labelled => {
                let tag = self.graph.framework().is_assumption(k).then_some(Tag::Asm);
                (JustLiteral { literal: k.clone(), sign: Some(Sign::Minus), tag }, Some(subjects))
            }
        };
        Ok(Justification { subject, polarity: Polarity::Negative, variant, sets, set_subjects })
    }

    pub fn babas_positive(&self, k: &Literal, selection: usize) -> Result<Justification, JustifyError> {
        self.positive(k, Variant::Basic, selection)
    }

    pub fn babas_positive_all(&self, k: &Literal) -> Result<Vec<Justification>, JustifyError> {
        self.positive_candidates(k, Variant::Basic)
    }

    pub fn babas_negative(&self, k: &Literal) -> Result<Justification, JustifyError> {
        self.negative(k, Variant::Basic)
    }

    pub fn labas_positive(&self, k: &Literal, selection: usize) -> Result<Justification, JustifyError> {
        self.positive(k, Variant::Labelled, selection)
    }

    pub fn labas_positive_all(&self, k: &Literal) -> Result<Vec<Justification>, JustifyError> {
        self.positive_candidates(k, Variant::Labelled)
    }

    pub fn labas_negative(&self, k: &Literal) -> Result<Justification, JustifyError> {
        self.negative(k, Variant::Labelled)
    }

    /// Positive justification when `k` holds, negative otherwise; every
    /// positive alternative when `all` is set.
    pub fn justify(&self, k: &Literal, variant: Variant, all: bool) -> Result<Vec<Justification>, JustifyError> {
        self.check_language(k)?;
        if !self.answer_set.satisfies(k) {
            return Ok(vec![self.negative(k, variant)?]);
        }
        if all {
            self.positive_candidates(k, variant)
        } else {
            Ok(vec![self.positive(k, variant, 0)?])
        }
    }
}

/// Positive BABAS justification; `selection` indexes the alternatives.
pub fn babas_positive(
    g: &ArgumentGraph,
    s: &AnswerSet,
    k: &Literal,
    selection: usize,
) -> Result<Justification, JustifyError> {
    JustificationContext::new(g, s)?.babas_positive(k, selection)
}

pub fn babas_negative(g: &ArgumentGraph, s: &AnswerSet, k: &Literal) -> Result<Justification, JustifyError> {
    JustificationContext::new(g, s)?.babas_negative(k)
}

/// Positive LABAS justification; `selection` indexes the alternatives.
pub fn labas_positive(
    g: &ArgumentGraph,
    s: &AnswerSet,
    k: &Literal,
    selection: usize,
) -> Result<Justification, JustifyError> {
    JustificationContext::new(g, s)?.labas_positive(k, selection)
}

pub fn labas_negative(g: &ArgumentGraph, s: &AnswerSet, k: &Literal) -> Result<Justification, JustifyError> {
    JustificationContext::new(g, s)?.labas_negative(k)
}

/// One graph of a justification set: its literals and its pairs as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustificationGraph {
    pub subject: JustLiteral,
    pub nodes: BTreeSet<JustLiteral>,
    pub edges: Vec<JustPair>,
}

/// One graph per pair set.
pub fn justification_graph(j: &Justification) -> Vec<JustificationGraph> {
    (0..j.sets.len())
        .map(|i| {
            let subject = j.subject_of(i).clone();
            let mut nodes: BTreeSet<JustLiteral> = [subject.clone()].into_iter().collect();
            for p in &j.sets[i] {
                nodes.insert(p.source.clone());
                nodes.insert(p.target.clone());
            }
            JustificationGraph { subject, nodes, edges: j.sets[i].iter().cloned().collect() }
        })
        .collect()
}
