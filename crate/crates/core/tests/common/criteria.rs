//! The acceptance criteria as functions returning a one-line summary on
//! success and the first violation on failure.

use std::collections::{BTreeMap, BTreeSet};

use abas::aba::{ArgumentGraph, ArgumentId};
use abas::attack_tree::{
    build_attack_tree, enumerate_attack_trees, for_each_attack_tree, is_admissible_dispute_tree,
    translate_dispute_tree, AttackTree, Sign,
};
use abas::justify::{basic_justification, labelled_justification, Justification, JustificationContext};
use abas::lp::{enumerate_answer_sets, mp_closure, parse_program, AnswerSet, Literal, LogicProgram};

use super::*;

pub type Outcome = Result<String, String>;

/// A criterion result. `Limitation` is a failure whose every counterexample
/// falls in the documented complementary-pair class.
#[derive(Debug)]
pub enum Verdict {
    Pass(String),
    Fail(String),
    Limitation(String),
}

impl From<Outcome> for Verdict {
    fn from(o: Outcome) -> Verdict {
        match o {
            Ok(detail) => Verdict::Pass(detail),
            Err(why) => Verdict::Fail(why),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub const CORPUS_SIZE: usize = 500;
pub const CORPUS_SEED: u64 = 0x5eed_ab45;

/// P1 arguments by reference id.
pub fn p1_ids(g: &ArgumentGraph) -> BTreeMap<&'static str, ArgumentId> {
    [
        ("A1", ("not a", &["not a"][..], &[][..])),
        ("A2", ("not -a", &["not -a"][..], &[][..])),
        ("A3", ("not c", &["not c"][..], &[][..])),
        ("A4", ("not -c", &["not -c"][..], &[][..])),
        ("A5", ("not d", &["not d"][..], &[][..])),
        ("A6", ("not -d", &["not -d"][..], &[][..])),
        ("A7", ("not e", &["not e"][..], &[][..])),
        ("A8", ("not -e", &["not -e"][..], &[][..])),
        ("A9", ("a", &["not -a"][..], &[][..])),
        ("A10", ("a", &["not c", "not d", "not e"][..], &[][..])),
        ("A11", ("-a", &["not c", "not d"][..], &[][..])),
        ("A12", ("c", &["not e"][..], &[][..])),
        ("A13", ("d", &["not -a"][..], &[][..])),
        ("A14", ("e", &[][..], &["e"][..])),
    ]
    .into_iter()
    .map(|(name, (c, ap, fp))| (name, arg(g, c, ap, fp)))
    .collect()
}

fn inverse(ids: &BTreeMap<&'static str, ArgumentId>) -> BTreeMap<ArgumentId, &'static str> {
    ids.iter().map(|(k, v)| (*v, *k)).collect()
}

/// `A10-(A13+(A11-(A13+*)))`: children in parentheses, `*` marks a repeat.
pub fn tree_shape(t: &AttackTree, name: &dyn Fn(ArgumentId) -> String) -> String {
    fn walk(t: &AttackTree, i: usize, name: &dyn Fn(ArgumentId) -> String, out: &mut String) {
        let n = t.node(i);
        out.push_str(&name(n.argument));
        out.push_str(n.sign.symbol());
        if n.is_repeat() {
            out.push('*');
        }
        if !n.children.is_empty() {
            out.push('(');
            for (j, &c) in n.children.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                walk(t, c, name, out);
            }
            out.push(')');
        }
    }
    let mut out = String::new();
    walk(t, 0, name, &mut out);
    out
}

struct P1 {
    p: LogicProgram,
    g: ArgumentGraph,
    s: Vec<AnswerSet>,
    ids: BTreeMap<&'static str, ArgumentId>,
}

fn p1() -> P1 {
    let p = parse_program(super::P1).unwrap();
    let g = ArgumentGraph::from_program(&p);
    let s = enumerate_answer_sets(&p).answer_sets;
    let ids = p1_ids(&g);
    P1 { p, g, s, ids }
}

fn p1_index_of(p1: &P1, s: &[&str]) -> usize {
    p1.s.iter().position(|x| *x.literals() == lits(s)).expect("answer set present")
}

pub fn criterion_1() -> Outcome {
    let p1 = p1();
    let sets: BTreeSet<BTreeSet<Literal>> = p1.s.iter().map(|s| s.literals().clone()).collect();
    let expected: BTreeSet<BTreeSet<Literal>> = [lits(&["e", "d", "a"]), lits(&["e", "-a"])].into_iter().collect();
    ensure!(sets == expected, "answer sets {sets:?}");
    ensure!(p1.s.len() == 2, "{} answer sets", p1.s.len());
    ensure!(p1.g.len() == 14, "{} arguments", p1.g.len());
    let names = inverse(&p1.ids);
    ensure!(names.len() == 14, "reference signatures are not all distinct");
    let ext: BTreeSet<BTreeSet<&str>> =
        p1.g.stable_extensions().iter().map(|e| e.members().iter().map(|id| names[id]).collect()).collect();
    let e1: BTreeSet<&str> = ["A2", "A3", "A4", "A6", "A8", "A9", "A13", "A14"].into_iter().collect();
    let e2: BTreeSet<&str> = ["A1", "A3", "A4", "A5", "A6", "A8", "A11", "A14"].into_iter().collect();
    ensure!(ext == [e1.clone(), e2.clone()].into_iter().collect(), "stable extensions {ext:?}");
    for (s, e) in [(&["e", "d", "a"][..], &e1), (&["e", "-a"][..], &e2)] {
        let x = p1.g.corresponding_stable_extension(&p1.s[p1_index_of(&p1, s)]).map_err(|e| e.to_string())?;
        let got: BTreeSet<&str> = x.members().iter().map(|id| names[id]).collect();
        ensure!(&got == e, "corresponding extension of {s:?} is {got:?}");
    }
    let _ = &p1.p;
    Ok("2 answer sets, 14 arguments, stable extensions E1 and E2".into())
}

pub fn criterion_2() -> Outcome {
    let p1 = p1();
    let names = inverse(&p1.ids);
    let name = |id: ArgumentId| names[&id].to_string();
    let ext = |s: &[&str]| p1.g.corresponding_stable_extension(&p1.s[p1_index_of(&p1, s)]).unwrap();
    let e1 = ext(&["e", "d", "a"]);
    let e2 = ext(&["e", "-a"]);
    let shapes = |x: &BTreeSet<ArgumentId>, root: &str| -> Vec<String> {
        enumerate_attack_trees(&p1.g, x, p1.ids[root]).iter().map(|t| tree_shape(t, &name)).collect()
    };
    let cases: [(&str, &BTreeSet<ArgumentId>, &str, &[&str]); 4] = [
        ("E1", e1.members(), "A10", &["A10-(A13+(A11-(A13+*)))", "A10-(A14+)"]),
        ("E2", e2.members(), "A10", &["A10-(A14+)"]),
        ("E2", e2.members(), "A9", &["A9-(A11+(A12-(A14+),A13-(A11+*)))"]),
        ("E1", e1.members(), "A14", &["A14+"]),
    ];
    for (en, x, root, want) in cases {
        let got = shapes(x, root);
        let got_set: BTreeSet<&str> = got.iter().map(String::as_str).collect();
        ensure!(got.len() == want.len(), "({en}, {root}): {} trees {got:?}", got.len());
        ensure!(got_set == want.iter().copied().collect(), "({en}, {root}): trees {got:?}, expected {want:?}");
    }
    // the repeat node points at the A11+ ancestor
    let t = &enumerate_attack_trees(&p1.g, e2.members(), p1.ids["A9"])[0];
    let rep = t.nodes().iter().find(|n| n.is_repeat()).ok_or("no repeat node")?;
    let target = t.node(rep.repeat_of.unwrap());
    ensure!(target.argument == p1.ids["A11"] && target.sign == Sign::Plus, "repeat points at {target:?}");
    Ok("(E1,A10): 2 trees, (E2,A10): 1, (E2,A9): 1 with repeat cycle, A14: single node".into())
}

fn relabel_to(j: &Justification, map: &BTreeMap<ArgumentId, ArgumentId>) -> Justification {
    relabel(j, map)
}

fn reference_map(pairs: &[(ArgumentId, usize)]) -> BTreeMap<ArgumentId, ArgumentId> {
    pairs.iter().map(|&(mine, reference)| (mine, ArgumentId(reference - 1))).collect()
}

pub fn criterion_3() -> Outcome {
    let p1 = p1();
    let s1 = &p1.s[p1_index_of(&p1, &["e", "d", "a"])];
    let s2 = &p1.s[p1_index_of(&p1, &["e", "-a"])];
    let c1 = JustificationContext::new(&p1.g, s1).map_err(|e| e.to_string())?;
    let c2 = JustificationContext::new(&p1.g, s2).map_err(|e| e.to_string())?;

    let j = c1.babas_positive(&lit("e"), 0).map_err(|e| e.to_string())?;
    ensure!(j.sets.len() == 1 && elements(&j, 0) == strs(&["e"]), "babas+(S1, e) = {j}");

    let j = c2.babas_negative(&lit("a")).map_err(|e| e.to_string())?;
    let got: BTreeSet<BTreeSet<String>> = (0..j.sets.len()).map(|i| elements(&j, i)).collect();
    let want: BTreeSet<BTreeSet<String>> = [
        strs(&[
            "a",
            "supp_rel(not -a, a)",
            "att_rel(-a, not -a)",
            "supp_rel(not c, -a)",
            "supp_rel(not d, -a)",
            "att_rel(c, not c)",
            "att_rel(d, not d)",
            "supp_rel(not e, c)",
            "att_rel(e, not e)",
            "supp_rel(not -a, d)",
        ]),
        strs(&["a", "supp_rel(not c, a)", "supp_rel(not d, a)", "supp_rel(not e, a)", "att_rel(e, not e)"]),
    ]
    .into_iter()
    .collect();
    ensure!(j.sets.len() == 2 && got == want, "babas-(S2, a) = {j}");

    let j = c1.babas_negative(&lit("-c")).map_err(|e| e.to_string())?;
    ensure!(j.sets.is_empty(), "babas-(S1, -c) = {j}");

    let trees = enumerate_attack_trees(&p1.g, c2.extension().members(), p1.ids["A10"]);
    ensure!(trees.len() == 1, "{} trees for (E2, A10)", trees.len());
    let map = reference_map(&p1.ids.iter().map(|(k, v)| (*v, k[1..].parse().unwrap())).collect::<Vec<_>>());
    let lj: BTreeSet<String> = labelled_justification(&p1.g, &trees[0])
        .iter()
        .map(|p| {
            let mut p = p.clone();
            for l in [&mut p.source, &mut p.target] {
                if let Some(abas::justify::Tag::Argument(id)) = l.tag {
                    l.tag = Some(abas::justify::Tag::Argument(map[&id]));
                }
            }
            p.to_string()
        })
        .collect();
    ensure!(lj == strs(&["supp_rel-(not e-_asm, a-_A10)", "att_rel+(e+_fact, not e-_asm)"]), "justL(E2, A10) = {lj:?}");

    // P3: one positive LABAS justification of q
    let p3 = parse_program(super::P3).unwrap();
    let g3 = ArgumentGraph::from_program(&p3);
    let s3 = enumerate_answer_sets(&p3).answer_sets;
    ensure!(s3.len() == 1 && *s3[0].literals() == lits(&["a", "b", "q"]), "P3 answer sets");
    let map3 = reference_map(&[
        (arg(&g3, "q", &["not p"], &[]), 9),
        (arg(&g3, "p", &["not a"], &[]), 12),
        (arg(&g3, "p", &["not b"], &[]), 13),
    ]);
    let ctx3 = JustificationContext::new(&g3, &s3[0]).map_err(|e| e.to_string())?;
    let all3 = ctx3.labas_positive_all(&lit("q")).map_err(|e| e.to_string())?;
    ensure!(all3.len() == 1, "{} positive LABAS justifications of q in P3", all3.len());
    let got = elements(&relabel_to(&all3[0], &map3), 0);
    let want = strs(&[
        "q+_A9",
        "supp_rel+(not p+_asm, q+_A9)",
        "att_rel-(p-_A12, not p+_asm)",
        "att_rel-(p-_A13, not p+_asm)",
        "supp_rel-(not a-_asm, p-_A12)",
        "att_rel+(a+_fact, not a-_asm)",
        "supp_rel-(not b-_asm, p-_A13)",
        "att_rel+(b+_fact, not b-_asm)",
    ]);
    ensure!(got == want, "labas+(P3, q) = {got:?}");

    // P4: two positive LABAS justifications of q
    let p4 = parse_program(super::P4).unwrap();
    let g4 = ArgumentGraph::from_program(&p4);
    let s4 = enumerate_answer_sets(&p4).answer_sets;
    ensure!(s4.len() == 1 && *s4[0].literals() == lits(&["a", "b", "q"]), "P4 answer sets");
    let map4 = reference_map(&[(arg(&g4, "q", &["not p"], &[]), 9), (arg(&g4, "p", &["not a", "not b"], &[]), 14)]);
    let ctx4 = JustificationContext::new(&g4, &s4[0]).map_err(|e| e.to_string())?;
    let all4 = ctx4.labas_positive_all(&lit("q")).map_err(|e| e.to_string())?;
    let got: BTreeSet<BTreeSet<String>> = all4.iter().map(|j| elements(&relabel_to(j, &map4), 0)).collect();
    let want: BTreeSet<BTreeSet<String>> = ["a", "b"]
        .into_iter()
        .map(|x| {
            [
                "q+_A9".to_string(),
                "supp_rel+(not p+_asm, q+_A9)".to_string(),
                "att_rel-(p-_A14, not p+_asm)".to_string(),
                format!("supp_rel-(not {x}-_asm, p-_A14)"),
                format!("att_rel+({x}+_fact, not {x}-_asm)"),
            ]
            .into_iter()
            .collect()
        })
        .collect();
    ensure!(all4.len() == 2 && got == want, "labas+(P4, q) = {got:?}");
    Ok("P1 BABAS/labelled, P3 and P4 LABAS match".into())
}

pub fn criterion_4() -> Outcome {
    let p = parse_program(super::DOCTOR).unwrap();
    let r = enumerate_answer_sets(&p);
    let expected = lits(&[
        "shortSighted",
        "afraidToTouchEyes",
        "student",
        "likesSports",
        "tightOnMoney",
        "correctiveLens",
        "caresAboutPracticality",
        "intraocularLens",
    ]);
    ensure!(r.answer_sets.len() == 1, "{} answer sets", r.answer_sets.len());
    ensure!(*r.answer_sets[0].literals() == expected, "answer set {}", r.answer_sets[0]);
    let s = &r.answer_sets[0];
    let g = ArgumentGraph::from_program(&p);
    let ctx = JustificationContext::new(&g, s).map_err(|e| e.to_string())?;

    let neg = ctx.labas_negative(&lit("laserSurgery")).map_err(|e| e.to_string())?;
    ensure!(neg.sets.len() == 2, "labas-(laserSurgery) has {} sets", neg.sets.len());
    let attackers: BTreeSet<String> = neg
        .sets
        .iter()
        .map(|set| {
            set.iter()
                .filter(|p| p.kind == abas::justify::PairKind::Attack && p.target.literal.is_naf())
                .filter(|p| p.target.sign == Some(Sign::Minus) && p.target.literal.classical() != lit("laserSurgery"))
                .map(|p| p.source.literal.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    ensure!(attackers == strs(&["correctiveLens", "tightOnMoney"]), "reasons {attackers:?}");

    let pos = ctx.labas_positive(&lit("intraocularLens"), 0).map_err(|e| e.to_string())?;
    let naf_plus = pos.positive_assumptions(0);
    ensure!(!naf_plus.is_empty(), "no positive assumptions");
    ensure!(naf_plus.is_subset(s.delta()), "NAF+ {naf_plus:?} not within S_NAF");
    Ok(format!("unique answer set, 2 reasons against laserSurgery, NAF+ of intraocularLens has {}", naf_plus.len()))
}

/// Violations found by a corpus check, split into those where the literal
/// set involved holds a complementary pair and all others.
#[derive(Debug, Default)]
pub struct Violations {
    pub complementary: usize,
    pub other: Vec<String>,
    pub first_complementary: Option<String>,
}

impl Violations {
    fn record(&mut self, complementary: bool, what: String) {
        if complementary {
            self.complementary += 1;
            self.first_complementary.get_or_insert(what);
        } else {
            self.other.push(what);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.complementary == 0 && self.other.is_empty()
    }

    fn verdict(&self, summary: String) -> Verdict {
        if self.is_empty() {
            return Verdict::Pass(format!("{summary}, zero violations"));
        }
        let mut msg = format!("{summary}, {} violations", self.complementary + self.other.len());
        if self.complementary > 0 {
            msg.push_str(&format!(
                "; {} involve a set holding a complementary pair, first: {}",
                self.complementary,
                self.first_complementary.as_deref().unwrap_or("")
            ));
        }
        if let Some(first) = self.other.first() {
            msg.push_str(&format!("; {} others, first: {first}", self.other.len()));
            return Verdict::Fail(msg);
        }
        Verdict::Limitation(msg)
    }
}

fn one_line(text: &str) -> String {
    text.trim().replace('\n', " ")
}

/// Counts violations of the answer set / stable extension bijection on
/// programs with at least one consistent answer set.
pub fn correspondence_violations(corpus: &[(String, LogicProgram)]) -> (usize, usize, Violations) {
    let mut v = Violations::default();
    let mut programs = 0;
    let mut checked_sets = 0;
    for (text, p) in corpus {
        let oracle = brute_force_answer_sets(p);
        let r = enumerate_answer_sets(p);
        let got: Vec<BTreeSet<Literal>> = r.answer_sets.iter().map(|s| s.literals().clone()).collect();
        if got != oracle.answer_sets || r.consistent == oracle.answer_sets.is_empty() {
            v.record(false, format!("answer sets differ from the oracle on {}", one_line(text)));
            continue;
        }
        if !r.consistent {
            continue;
        }
        programs += 1;
        let g = ArgumentGraph::from_program(p);
        let att = independent_attackers(&g);
        let exts = g.stable_extensions();
        // answer set -> stable extension
        for s in &r.answer_sets {
            checked_sets += 1;
            match g.corresponding_stable_extension(s) {
                Err(err) => v.record(false, format!("{err} for {s} on {}", one_line(text))),
                Ok(x) => {
                    let m = x.members();
                    let stable = m.iter().all(|b| att[b.index()].is_disjoint(m))
                        && g.arguments()
                            .iter()
                            .filter(|b| !m.contains(&b.id))
                            .all(|b| !att[b.id.index()].is_disjoint(m));
                    if !stable || x.conclusions(&g) != s.with_naf() || !exts.contains(&x) {
                        v.record(false, format!("extension of {s} on {}", one_line(text)));
                    }
                }
            }
        }
        // stable extension -> answer set
        for e in &exts {
            let c = e.classical_conclusions(&g);
            if !oracle.answer_sets.contains(&c) {
                let complementary = abas::lp::has_complementary_pair(&c);
                v.record(
                    complementary,
                    format!("extension {e} concludes {c:?}, not an answer set, on {}", one_line(text)),
                );
            }
        }
        if exts.len() != r.answer_sets.len() {
            let extra = exts.iter().filter(|e| !oracle.answer_sets.contains(&e.classical_conclusions(&g))).count();
            if exts.len() - extra != r.answer_sets.len() {
                v.record(
                    false,
                    format!(
                        "extension count {} vs {} answer sets on {}",
                        exts.len(),
                        r.answer_sets.len(),
                        one_line(text)
                    ),
                );
            }
        }
    }
    (programs, checked_sets, v)
}

pub fn criterion_5(corpus: &[(String, LogicProgram)]) -> Verdict {
    let (programs, sets, v) = correspondence_violations(corpus);
    v.verdict(format!("{programs} consistent programs, {sets} answer sets"))
}

/// Runs `f` on each consistent corpus program with its graph and answer sets.
fn for_consistent(
    corpus: &[(String, LogicProgram)],
    mut f: impl FnMut(&str, &LogicProgram, &ArgumentGraph, &[AnswerSet]) -> Result<(), String>,
) -> Result<usize, String> {
    let mut n = 0;
    for (text, p) in corpus {
        let r = enumerate_answer_sets(p);
        if !r.consistent {
            continue;
        }
        let g = ArgumentGraph::from_program(p);
        f(text, p, &g, &r.answer_sets)?;
        n += 1;
    }
    Ok(n)
}

/// Runs `f` on every tree rooted at `root`, stopping at the first error.
/// Returns the number visited.
fn each_tree(
    g: &ArgumentGraph,
    x: &BTreeSet<ArgumentId>,
    root: ArgumentId,
    mut f: impl FnMut(&AttackTree) -> Result<(), String>,
) -> Result<usize, String> {
    let mut n = 0;
    let mut err = None;
    for_each_attack_tree(g, x, root, |t| {
        n += 1;
        match f(&t) {
            Ok(()) => std::ops::ControlFlow::Continue(()),
            Err(e) => {
                err = Some(e);
                std::ops::ControlFlow::Break(())
            }
        }
    });
    err.map_or(Ok(n), Err)
}

pub fn criterion_6(corpus: &[(String, LogicProgram)]) -> Outcome {
    let mut trees = 0usize;
    let mut justifications = 0usize;
    let programs = for_consistent(corpus, |text, _p, g, sets| {
        let att = independent_attackers(g);
        for s in sets {
            let mut admissible_sets: std::collections::HashSet<BTreeSet<ArgumentId>> = Default::default();
            let ctx = JustificationContext::new(g, s).map_err(|e| e.to_string())?;
            let e = ctx.extension().members();
            let s_naf = s.with_naf();
            for a in g.arguments() {
                let visited = each_tree(g, e, a.id, |t| {
                    ensure!(
                        t.sign() == if e.contains(&a.id) { Sign::Plus } else { Sign::Minus },
                        "root sign of {}",
                        a.id
                    );
                    for n in t.nodes() {
                        ensure!(
                            (n.sign == Sign::Plus) == e.contains(&n.argument),
                            "sign of {} in\n{t}on\n{text}",
                            n.argument
                        );
                        if n.is_repeat() {
                            continue;
                        }
                        match n.sign {
                            Sign::Plus => {
                                let kids: BTreeSet<ArgumentId> =
                                    n.children.iter().map(|&c| t.node(c).argument).collect();
                                ensure!(
                                    kids == att[n.argument.index()],
                                    "children of {}+ in\n{t}on\n{text}",
                                    n.argument
                                );
                                ensure!(kids.len() == n.children.len(), "duplicate children in\n{t}");
                            }
                            Sign::Minus => {
                                ensure!(
                                    n.children.len() == 1,
                                    "{}- has {} children in\n{t}on\n{text}",
                                    n.argument,
                                    n.children.len()
                                );
                            }
                        }
                    }
                    let plus = t.plus_arguments();
                    ensure!(plus.is_subset(e), "plus arguments outside the extension in\n{t}on\n{text}");
                    if !admissible_sets.contains(&plus) {
                        ensure!(independent_admissible(g, &plus), "plus arguments not admissible in\n{t}on\n{text}");
                        ensure!(g.is_admissible(&plus), "library admissibility disagrees in\n{t}on\n{text}");
                        admissible_sets.insert(plus.clone());
                    }
                    let concl: BTreeSet<Literal> = plus.iter().map(|&id| g.argument(id).conclusion.clone()).collect();
                    ensure!(concl.is_subset(&s_naf), "plus conclusions outside S_NAF in\n{t}on\n{text}");
                    match t.sign() {
                        Sign::Plus => {
                            ensure!(
                                is_admissible_dispute_tree(&translate_dispute_tree(t)),
                                "dispute tree of\n{t}on\n{text}"
                            )
                        }
                        Sign::Minus => {
                            if let Some(&c) = t.root().children.first() {
                                let d = t.node(c).argument;
                                let sub = build_attack_tree(g, e, d, t.defender_choice()).map_err(|e| e.to_string())?;
                                ensure!(sub.sign() == Sign::Plus, "subtree of\n{t}is not positive");
                                ensure!(
                                    is_admissible_dispute_tree(&translate_dispute_tree(&sub)),
                                    "subtree dispute tree of\n{t}on\n{text}"
                                );
                            }
                        }
                    }
                    Ok(())
                })?;
                ensure!(visited > 0, "no tree for {} on\n{text}", a.id);
                trees += visited;
            }
            for k in g.framework().language() {
                let js = ctx.justify(k, abas::justify::Variant::Labelled, true).map_err(|e| e.to_string())?;
                for j in &js {
                    for i in 0..j.sets.len() {
                        justifications += 1;
                        let naf_plus = j.positive_assumptions(i);
                        ensure!(naf_plus.is_subset(&s_naf), "NAF+ of {k} outside S_NAF on\n{text}");
                        let support = g.supported_by(&naf_plus);
                        ensure!(independent_admissible(g, &support), "NAF+ of {k} not admissible on\n{text}");
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(format!("{programs} programs, {trees} trees, {justifications} LABAS sets over every literal, zero violations"))
}

/// Depth-3 unfoldings up to this size are materialised with `unfold`.
pub const UNFOLD_NODE_LIMIT: u128 = 200;

/// Node count of `t` unfolded `depth` times, memoised on (node, budget).
fn unfolded_size(t: &AttackTree, depth: usize) -> u128 {
    fn go(t: &AttackTree, i: usize, budget: usize, memo: &mut [Vec<Option<u128>>]) -> u128 {
        if let Some(z) = memo[i][budget] {
            return z;
        }
        let n = t.node(i);
        let z = match n.repeat_of {
            Some(_) if budget == 0 => 1,
            Some(j) => 1 + t.node(j).children.iter().map(|&c| go(t, c, budget - 1, memo)).sum::<u128>(),
            None => 1 + n.children.iter().map(|&c| go(t, c, budget, memo)).sum::<u128>(),
        };
        memo[i][budget] = Some(z);
        z
    }
    let mut memo = vec![vec![None; depth + 1]; t.nodes().len()];
    go(t, 0, depth, &mut memo)
}

type Shape = (BTreeSet<(ArgumentId, Sign)>, BTreeSet<(ArgumentId, Sign, ArgumentId)>);

/// Signed arguments and parent-child edges of the non-repeat nodes of `t`.
fn shape(t: &AttackTree) -> Shape {
    let mut out = Shape::default();
    for n in t.nodes().iter().filter(|n| !n.is_repeat()) {
        out.0.insert((n.argument, n.sign));
        out.1.extend(n.children.iter().map(|&c| (n.argument, n.sign, t.node(c).argument)));
    }
    out
}

/// [`shape`] of `t.unfold(depth)` without materialising it: a copy of node
/// `i` with budget `b` depends only on `(i, b)`.
fn unfolded_shape(t: &AttackTree, depth: usize) -> Shape {
    let mut out = Shape::default();
    let mut seen = BTreeSet::new();
    let mut stack = vec![(0usize, depth)];
    while let Some((i, b)) = stack.pop() {
        if !seen.insert((i, b)) {
            continue;
        }
        let n = t.node(i);
        let (source, b) = match n.repeat_of {
            Some(_) if b == 0 => continue,
            Some(j) => (j, b - 1),
            None => (i, b),
        };
        out.0.insert((n.argument, n.sign));
        for &c in &t.node(source).children {
            out.1.insert((n.argument, n.sign, t.node(c).argument));
            stack.push((c, b));
        }
    }
    out
}

pub fn criterion_7(corpus: &[(String, LogicProgram)]) -> Outcome {
    let mut negative = 0usize;
    let mut with_repeats = 0usize;
    let mut materialised = 0usize;
    let programs = for_consistent(corpus, |text, _p, g, sets| {
        for s in sets {
            let e = g.corresponding_stable_extension(s).map_err(|e| e.to_string())?;
            for a in g.arguments().iter().filter(|a| !e.contains(a.id)) {
                let visited = each_tree(g, e.members(), a.id, |t| {
                    with_repeats += usize::from(t.has_repeats());
                    if unfolded_size(t, 3) <= UNFOLD_NODE_LIMIT {
                        materialised += 1;
                        let u = t.unfold(3);
                        ensure!(
                            u.nodes().iter().all(|n| n.repeat_of.is_none_or(|r| r < u.nodes().len())),
                            "dangling repeat"
                        );
                        ensure!(
                            basic_justification(g, &u) == basic_justification(g, t),
                            "basic differs after unfolding\n{t}on\n{text}"
                        );
                        ensure!(
                            labelled_justification(g, &u) == labelled_justification(g, t),
                            "labelled differs after unfolding\n{t}on\n{text}"
                        );
                        ensure!(shape(&u) == unfolded_shape(t, 3), "state-space shape disagrees with unfold on\n{t}");
                    }
                    ensure!(unfolded_shape(t, 3) == shape(t), "unfolding adds structure to\n{t}on\n{text}");
                    Ok(())
                })?;
                negative += visited;
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{programs} programs, {negative} negative trees ({with_repeats} with repeats) unfolded to depth 3, \
         {materialised} materialised, the rest compared by node and edge structure, zero violations"
    ))
}

/// Counts violations of the two modus-ponens equivalences over every
/// candidate set of every consistent program.
pub fn modus_ponens_violations(corpus: &[(String, LogicProgram)]) -> (usize, usize, Violations) {
    let mut v = Violations::default();
    let mut candidates = 0usize;
    let mut programs = 0usize;
    for (text, p) in corpus {
        let r = enumerate_answer_sets(p);
        if !r.consistent {
            continue;
        }
        programs += 1;
        let lit_p: Vec<Literal> = p.classical_literals().into_iter().collect();
        let naf_p = p.naf_literals();
        let answer: BTreeSet<&BTreeSet<Literal>> = r.answer_sets.iter().map(|s| s.literals()).collect();
        for mask in 0u32..(1u32 << lit_p.len()) {
            let s: BTreeSet<Literal> =
                lit_p.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone()).collect();
            let delta: BTreeSet<Literal> = naf_p.iter().filter(|n| !s.contains(&n.classical())).cloned().collect();
            let closure = mp_closure(p, &delta);
            let classical: BTreeSet<Literal> = closure.iter().filter(|l| l.is_classical()).cloned().collect();
            let is_answer = answer.contains(&s);
            let s_naf: BTreeSet<Literal> = s.union(&delta).cloned().collect();
            candidates += 1;
            if is_answer != (classical == s) || is_answer != (closure == s_naf) {
                let complementary = abas::lp::has_complementary_pair(&s);
                v.record(complementary, format!("candidate {s:?} on {}", one_line(text)));
            }
        }
    }
    (programs, candidates, v)
}

pub fn criterion_8(corpus: &[(String, LogicProgram)]) -> Verdict {
    let (programs, candidates, v) = modus_ponens_violations(corpus);
    v.verdict(format!("{programs} consistent programs, {candidates} candidate sets"))
}
