#![allow(dead_code)]

pub mod criteria;

use std::collections::{BTreeMap, BTreeSet};

use abas::aba::{ArgumentGraph, ArgumentId};
use abas::justify::{Justification, Tag};
use abas::lp::{parse_program, Literal, LogicProgram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P1: &str = include_str!("../../examples/programs/p1.lp");
pub const P2: &str = include_str!("../../examples/programs/p2.lp");
pub const P3: &str = include_str!("../../examples/programs/p3.lp");
pub const P4: &str = include_str!("../../examples/programs/p4.lp");
pub const DOCTOR: &str = include_str!("../../examples/programs/doctor.lp");

pub fn lit(s: &str) -> Literal {
    Literal::lit(s)
}

pub fn lits(items: &[&str]) -> BTreeSet<Literal> {
    items.iter().map(|s| lit(s)).collect()
}

/// Id of the argument with signature `(ap, fp) ⊢ conclusion`.
pub fn arg(g: &ArgumentGraph, conclusion: &str, ap: &[&str], fp: &[&str]) -> ArgumentId {
    let ap: Vec<Literal> = ap.iter().map(|s| lit(s)).collect();
    let fp: Vec<Literal> = fp.iter().map(|s| lit(s)).collect();
    g.find(&lit(conclusion), &ap, &fp).unwrap_or_else(|| panic!("no argument ({ap:?}, {fp:?}) ⊢ {conclusion}"))
}

/// Rewrites argument tags through `map`.
pub fn relabel(j: &Justification, map: &BTreeMap<ArgumentId, ArgumentId>) -> Justification {
    let fix = |l: &abas::justify::JustLiteral| {
        let mut l = l.clone();
        if let Some(Tag::Argument(id)) = l.tag {
            l.tag = Some(Tag::Argument(*map.get(&id).unwrap_or(&id)));
        }
        l
    };
    let mut out = j.clone();
    out.subject = fix(&j.subject);
    out.set_subjects = j.set_subjects.as_ref().map(|s| s.iter().map(fix).collect());
    out.sets = j
        .sets
        .iter()
        .map(|set| {
            set.iter()
                .map(|p| {
                    let mut p = p.clone();
                    p.source = fix(&p.source);
                    p.target = fix(&p.target);
                    p
                })
                .collect()
        })
        .collect();
    out
}

/// `{subject} ∪ pairs` of set `i` as text elements.
pub fn elements(j: &Justification, i: usize) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = j.sets[i].iter().map(|p| p.to_string()).collect();
    out.insert(j.subject_of(i).to_string());
    out
}

pub fn strs(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Random ground program text: at most 6 atoms, 10 clauses and 3 body
/// literals per clause.
pub fn random_program(rng: &mut impl Rng) -> String {
    const ATOMS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
    let n_atoms = rng.gen_range(1..=6);
    let n_clauses = rng.gen_range(1..=10);
    let mut text = String::new();
    let classical = |rng: &mut dyn rand::RngCore| {
        let atom = ATOMS[rng.gen_range(0..n_atoms)];
        if rng.gen_bool(0.2) {
            format!("-{atom}")
        } else {
            atom.to_string()
        }
    };
    for _ in 0..n_clauses {
        let head = classical(rng);
        let n_body = rng.gen_range(0..=3);
        let body: Vec<String> = (0..n_body)
            .map(|_| {
                let l = classical(rng);
                if rng.gen_bool(0.55) {
                    format!("not {l}")
                } else {
                    l
                }
            })
            .collect();
        if body.is_empty() {
            text.push_str(&format!("{head}.\n"));
        } else {
            text.push_str(&format!("{head} :- {}.\n", body.join(", ")));
        }
    }
    text
}

/// Answer sets by trying every subset of the classical literals, with a
/// reduct and least model of its own.
pub struct Oracle {
    pub answer_sets: Vec<BTreeSet<Literal>>,
    /// The whole of `Lit_P` is an answer set.
    pub contradictory: bool,
}

pub fn brute_force_answer_sets(p: &LogicProgram) -> Oracle {
    let lits: Vec<Literal> =
        p.atoms().iter().flat_map(|a| [Literal::atom(a.as_str()), Literal::neg(a.as_str())]).collect();
    let index: BTreeMap<&Literal, usize> = lits.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let n = lits.len();
    assert!(n <= 16, "oracle supports at most 8 atoms");
    let full: u32 = (1u32 << n) - 1;
    let bit = |l: &Literal| 1u32 << index[l];
    let clauses: Vec<(u32, u32, u32)> = p
        .clauses()
        .iter()
        .map(|c| {
            let mut pos = 0;
            let mut neg = 0;
            for b in c.body() {
                if b.is_naf() {
                    neg |= bit(&b.classical());
                } else {
                    pos |= bit(b);
                }
            }
            (bit(c.head()), pos, neg)
        })
        .collect();
    let inconsistent = |m: u32| (0..n / 2).any(|i| m >> (2 * i) & 3 == 3);

    let mut answer_sets = Vec::new();
    let mut contradictory = false;
    for s in 0..=full {
        let mut m = 0u32;
        loop {
            let mut next = m;
            for &(h, pos, neg) in &clauses {
                if neg & s == 0 && pos & m == pos {
                    next |= h;
                }
            }
            if next == m {
                break;
            }
            m = next;
        }
        if inconsistent(m) {
            m = full;
        }
        if m == s {
            if inconsistent(s) {
                contradictory = true;
            } else {
                answer_sets.push((0..n).filter(|i| s >> i & 1 == 1).map(|i| lits[i].clone()).collect());
            }
        }
    }
    answer_sets.sort();
    Oracle { answer_sets, contradictory }
}

/// The random programs checked by the property criteria: the first `count`
/// consistent programs drawn, and the number of inconsistent ones skipped.
pub fn corpus(count: usize, seed: u64) -> (Vec<(String, LogicProgram)>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut skipped = 0;
    while out.len() < count {
        let text = random_program(&mut rng);
        let p = parse_program(&text).expect("generated programs parse");
        let oracle = brute_force_answer_sets(&p);
        if oracle.contradictory || oracle.answer_sets.is_empty() {
            skipped += 1;
        } else {
            out.push((text, p));
        }
    }
    (out, skipped)
}

/// Attacks recomputed from argument signatures alone.
pub fn independent_attackers(g: &ArgumentGraph) -> Vec<BTreeSet<ArgumentId>> {
    g.arguments()
        .iter()
        .map(|b| {
            g.arguments()
                .iter()
                .filter(|a| b.assumption_premises.iter().any(|k| k.is_naf() && k.classical() == a.conclusion))
                .map(|a| a.id)
                .collect()
        })
        .collect()
}

/// Conflict-free and defending all members, from signatures alone.
pub fn independent_admissible(g: &ArgumentGraph, x: &BTreeSet<ArgumentId>) -> bool {
    let att = independent_attackers(g);
    let conflict_free = x.iter().all(|b| att[b.index()].is_disjoint(x));
    conflict_free && x.iter().all(|m| att[m.index()].iter().all(|b| !att[b.index()].is_disjoint(x)))
}
