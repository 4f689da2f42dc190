use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::lp::{Literal, LiteralSet};

use super::framework::AbaFramework;

/// Index of an argument in enumeration order. Displayed 1-based as `A1`, `A2`, ...
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(pub usize);

impl ArgumentId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0 + 1)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for ArgumentId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n: usize = s
            .strip_prefix('A')
            .or_else(|| s.strip_prefix('a'))
            .unwrap_or(s)
            .parse()
            .map_err(|_| format!("invalid argument id {s:?}"))?;
        if n == 0 {
            return Err(format!("invalid argument id {s:?}: ids start at A1"));
        }
        Ok(ArgumentId(n - 1))
    }
}

/// A finite derivation tree. Leaves hold assumptions or facts; inner nodes
/// apply a rule with a non-empty body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Assumption(Literal),
    Fact(Literal),
    Rule { head: Literal, rule: usize, premises: Vec<Derivation> },
}

impl Derivation {
    pub fn conclusion(&self) -> &Literal {
        match self {
            Derivation::Assumption(l) | Derivation::Fact(l) => l,
            Derivation::Rule { head, .. } => head,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Derivation::Assumption(_) | Derivation::Fact(_) => 1,
            Derivation::Rule { premises, .. } => 1 + premises.iter().map(Derivation::node_count).sum::<usize>(),
        }
    }

    /// Assumptions and facts held by leaves.
    pub fn leaves(&self) -> (LiteralSet, LiteralSet) {
        let mut asm = LiteralSet::new();
        let mut facts = LiteralSet::new();
        self.collect_leaves(&mut asm, &mut facts);
        (asm, facts)
    }

    fn collect_leaves(&self, asm: &mut LiteralSet, facts: &mut LiteralSet) {
        match self {
            Derivation::Assumption(l) => {
                asm.insert(l.clone());
            }
            Derivation::Fact(l) => {
                facts.insert(l.clone());
            }
            Derivation::Rule { premises, .. } => premises.iter().for_each(|p| p.collect_leaves(asm, facts)),
        }
    }

    /// Structural validity against a framework: leaves are assumptions or
    /// facts, inner nodes match a rule with a non-empty body.
    pub fn is_valid_in(&self, f: &AbaFramework) -> bool {
        match self {
            Derivation::Assumption(l) => f.is_assumption(l),
            Derivation::Fact(l) => f.rules().iter().any(|r| r.is_fact() && r.head() == l),
            Derivation::Rule { head, rule, premises } => {
                let Some(r) = f.rules().get(*rule) else { return false };
                r.head() == head
                    && !r.body().is_empty()
                    && r.body().len() == premises.len()
                    && r.body().iter().zip(premises).all(|(b, p)| b == p.conclusion() && p.is_valid_in(f))
            }
        }
    }
}

/// `(AP, FP) ⊢ conclusion` with one witnessing derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Argument {
    pub id: ArgumentId,
    pub conclusion: Literal,
    pub assumption_premises: LiteralSet,
    pub fact_premises: LiteralSet,
    pub witness: Derivation,
}

impl Argument {
    /// `({α}, ∅) ⊢ α`
    pub fn is_assumption_argument(&self) -> bool {
        self.fact_premises.is_empty()
            && self.assumption_premises.len() == 1
            && self.assumption_premises.contains(&self.conclusion)
    }

    /// `(∅, {β}) ⊢ β`
    pub fn is_fact_argument(&self) -> bool {
        self.assumption_premises.is_empty()
            && self.fact_premises.len() == 1
            && self.fact_premises.contains(&self.conclusion)
    }

    pub fn signature(&self) -> (&Literal, &LiteralSet, &LiteralSet) {
        (&self.conclusion, &self.assumption_premises, &self.fact_premises)
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: ({}, {}) ⊢ {}",
            self.id,
            crate::lp::SetDisplay(self.assumption_premises.clone()),
            crate::lp::SetDisplay(self.fact_premises.clone()),
            self.conclusion
        )
    }
}

type Signature = (Literal, LiteralSet, LiteralSet);

struct Entry {
    sig: Signature,
    size: usize,
    /// rule index used at the root of the witness; leaves rank by their fact
    /// clause index, assumptions rank first
    rank: usize,
    rule: Option<usize>,
    children: Vec<usize>,
}

/// Every argument of the framework, one per distinct `(conclusion, AP, FP)`.
///
/// Computed as a least fixpoint over the rules seeded with assumption- and
/// fact-arguments. The stored witness has the fewest nodes among the
/// derivations found, ties going to the earlier rule.
///
/// Ids: assumption-arguments first in literal order, then all other
/// arguments in `(conclusion, AP, FP)` order.
pub fn enumerate_arguments(f: &AbaFramework) -> Vec<Argument> {
    let mut entries: Vec<Entry> = Vec::new();
    let mut index: HashMap<Signature, usize> = HashMap::new();
    let mut by_conclusion: BTreeMap<Literal, Vec<usize>> = BTreeMap::new();

    let mut insert = |entries: &mut Vec<Entry>, by_conclusion: &mut BTreeMap<Literal, Vec<usize>>, e: Entry| -> bool {
        match index.get(&e.sig) {
            Some(&i) => {
                let old = &mut entries[i];
                if (e.size, e.rank) < (old.size, old.rank) {
                    old.size = e.size;
                    old.rank = e.rank;
                    old.rule = e.rule;
                    old.children = e.children;
                    true
                } else {
                    false
                }
            }
            None => {
                let i = entries.len();
                index.insert(e.sig.clone(), i);
                by_conclusion.entry(e.sig.0.clone()).or_default().push(i);
                entries.push(e);
                true
            }
        }
    };

    for a in f.assumptions() {
        let sig = (a.clone(), [a.clone()].into_iter().collect(), LiteralSet::new());
        insert(&mut entries, &mut by_conclusion, Entry { sig, size: 1, rank: 0, rule: None, children: vec![] });
    }
    for (i, r) in f.rules().iter().enumerate() {
        if r.is_fact() {
            let sig = (r.head().clone(), LiteralSet::new(), [r.head().clone()].into_iter().collect());
            insert(&mut entries, &mut by_conclusion, Entry { sig, size: 1, rank: i, rule: None, children: vec![] });
        }
    }

    let mut changed = true;
    while changed {
        changed = false;
        for (ri, rule) in f.rules().iter().enumerate() {
            if rule.is_fact() {
                continue;
            }
            let options: Vec<Vec<usize>> =
                rule.body().iter().map(|b| by_conclusion.get(b).cloned().unwrap_or_default()).collect();
            if options.iter().any(Vec::is_empty) {
                continue;
            }
            let mut pick = vec![0usize; options.len()];
            loop {
                let children: Vec<usize> = pick.iter().zip(&options).map(|(&k, o)| o[k]).collect();
                let mut ap = LiteralSet::new();
                let mut fp = LiteralSet::new();
                let mut size = 1;
                for &c in &children {
                    ap.extend(entries[c].sig.1.iter().cloned());
                    fp.extend(entries[c].sig.2.iter().cloned());
                    size += entries[c].size;
                }
                let e = Entry { sig: (rule.head().clone(), ap, fp), size, rank: ri, rule: Some(ri), children };
                changed |= insert(&mut entries, &mut by_conclusion, e);

                let mut d = 0;
                while d < pick.len() {
                    pick[d] += 1;
                    if pick[d] < options[d].len() {
                        break;
                    }
                    pick[d] = 0;
                    d += 1;
                }
                if d == pick.len() {
                    break;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (&entries[a].sig, &entries[b].sig);
        (sa.0.is_classical(), sa).cmp(&(sb.0.is_classical(), sb))
    });

    order
        .iter()
        .enumerate()
        .map(|(id, &i)| {
            let e = &entries[i];
            Argument {
                id: ArgumentId(id),
                conclusion: e.sig.0.clone(),
                assumption_premises: e.sig.1.clone(),
                fact_premises: e.sig.2.clone(),
                witness: build_witness(&entries, i, f),
            }
        })
        .collect()
}

fn build_witness(entries: &[Entry], i: usize, f: &AbaFramework) -> Derivation {
    let e = &entries[i];
    match e.rule {
        Some(rule) => Derivation::Rule {
            head: e.sig.0.clone(),
            rule,
            premises: e.children.iter().map(|&c| build_witness(entries, c, f)).collect(),
        },
        None if f.is_assumption(&e.sig.0) => Derivation::Assumption(e.sig.0.clone()),
        None => Derivation::Fact(e.sig.0.clone()),
    }
}
