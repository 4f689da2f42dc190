//! Attack Trees of an argument with respect to a set of arguments, kept in
//! a finite regular representation, and their abstract dispute trees.

mod dispute;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aba::{ArgumentGraph, ArgumentId};

pub use dispute::{is_admissible_dispute_tree, translate_dispute_tree, DisputeNode, DisputeTree, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AttackTreeError {
    #[error("unknown argument {0}")]
    UnknownArgument(ArgumentId),
    #[error("no defender chosen for {0}")]
    MissingDefender(ArgumentId),
    #[error("{defender} does not attack {argument}")]
    NotAnAttacker { argument: ArgumentId, defender: ArgumentId },
    #[error("defender {defender} of {argument} is outside the reference set")]
    DefenderOutsideSet { argument: ArgumentId, defender: ArgumentId },
}

/// `repeat_of` is set iff the same `(argument, sign)` occurs on the path
/// from the root; a repeat node has no children and stands for the subtree
/// of that ancestor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub argument: ArgumentId,
    pub sign: Sign,
    pub children: Vec<usize>,
    pub repeat_of: Option<usize>,
}

impl Node {
    pub fn is_repeat(&self) -> bool {
        self.repeat_of.is_some()
    }
}

/// Nodes are stored in preorder with the root at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackTree {
    nodes: Vec<Node>,
    reference: BTreeSet<ArgumentId>,
    defender_choice: BTreeMap<ArgumentId, ArgumentId>,
}

impl AttackTree {
    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn root_argument(&self) -> ArgumentId {
        self.nodes[0].argument
    }

    pub fn sign(&self) -> Sign {
        self.nodes[0].sign
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    /// The argument set the tree was built against.
    pub fn reference_set(&self) -> &BTreeSet<ArgumentId> {
        &self.reference
    }

    /// Defender used at every '-' node of each argument, restricted to the
    /// arguments that occur.
    pub fn defender_choice(&self) -> &BTreeMap<ArgumentId, ArgumentId> {
        &self.defender_choice
    }

    pub fn has_repeats(&self) -> bool {
        self.nodes.iter().any(Node::is_repeat)
    }

    pub fn plus_arguments(&self) -> BTreeSet<ArgumentId> {
        self.arguments_with(Sign::Plus)
    }

    pub fn minus_arguments(&self) -> BTreeSet<ArgumentId> {
        self.arguments_with(Sign::Minus)
    }

    fn arguments_with(&self, sign: Sign) -> BTreeSet<ArgumentId> {
        self.nodes.iter().filter(|n| n.sign == sign).map(|n| n.argument).collect()
    }

    /// Expands every repeat node `depth` more times. Repeat nodes left at the
    /// frontier point at their nearest matching ancestor in the copy.
    pub fn unfold(&self, depth: usize) -> AttackTree {
        let mut nodes = Vec::new();
        let mut path = Vec::new();
        self.copy_unfolded(0, depth, &mut nodes, &mut path);
        AttackTree { nodes, reference: self.reference.clone(), defender_choice: self.defender_choice.clone() }
    }

    fn copy_unfolded(&self, i: usize, budget: usize, out: &mut Vec<Node>, path: &mut Vec<usize>) -> usize {
        let n = &self.nodes[i];
        let idx = out.len();
        let (source, budget) = match n.repeat_of {
            Some(_) if budget == 0 => {
                let target = path
                    .iter()
                    .rev()
                    .copied()
                    .find(|&p| out[p].argument == n.argument && out[p].sign == n.sign)
                    .expect("repeat node has a matching ancestor");
                out.push(Node { argument: n.argument, sign: n.sign, children: vec![], repeat_of: Some(target) });
                return idx;
            }
            Some(t) => (t, budget - 1),
            None => (i, budget),
        };
        out.push(Node { argument: n.argument, sign: n.sign, children: vec![], repeat_of: None });
        path.push(idx);
        let children: Vec<usize> =
            self.nodes[source].children.clone().into_iter().map(|c| self.copy_unfolded(c, budget, out, path)).collect();
        path.pop();
        out[idx].children = children;
        idx
    }
}

impl fmt::Display for AttackTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn walk(t: &AttackTree, i: usize, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let n = &t.nodes[i];
            write!(f, "{:indent$}{}{}", "", n.argument, n.sign, indent = depth * 2)?;
            if n.is_repeat() {
                f.write_str(" (repeat)")?;
            }
            writeln!(f)?;
            n.children.iter().try_for_each(|&c| walk(t, c, depth + 1, f))
        }
        walk(self, 0, 0, f)
    }
}

/// The Attack Tree of `root` with respect to `x` under a fixed defender
/// choice. The root is '+' iff it lies in `x`; children of '+' nodes are
/// all attackers, signed '-'; a '-' node gets the chosen defender, signed
/// '+', or no child when no attacker lies in `x`.
pub fn build_attack_tree(
    g: &ArgumentGraph,
    x: &BTreeSet<ArgumentId>,
    root: ArgumentId,
    choice: &BTreeMap<ArgumentId, ArgumentId>,
) -> Result<AttackTree, AttackTreeError> {
    g.get(root).map_err(|_| AttackTreeError::UnknownArgument(root))?;
    let mut b = Builder { g, x, choice, nodes: Vec::new(), path: Vec::new(), used: BTreeMap::new() };
    let sign = if x.contains(&root) { Sign::Plus } else { Sign::Minus };
    b.expand(root, sign)?;
    Ok(AttackTree { nodes: b.nodes, reference: x.clone(), defender_choice: b.used })
}

struct Builder<'a> {
    g: &'a ArgumentGraph,
    x: &'a BTreeSet<ArgumentId>,
    choice: &'a BTreeMap<ArgumentId, ArgumentId>,
    nodes: Vec<Node>,
    path: Vec<usize>,
    used: BTreeMap<ArgumentId, ArgumentId>,
}

impl Builder<'_> {
    fn expand(&mut self, argument: ArgumentId, sign: Sign) -> Result<usize, AttackTreeError> {
        let idx = self.nodes.len();
        let repeat_of =
            self.path.iter().copied().find(|&p| self.nodes[p].argument == argument && self.nodes[p].sign == sign);
        self.nodes.push(Node { argument, sign, children: vec![], repeat_of });
        if repeat_of.is_some() {
            return Ok(idx);
        }
        let attackers = self.g.attacks().attackers_of(argument);
        let next: Vec<ArgumentId> = match sign {
            Sign::Plus => attackers.to_vec(),
            Sign::Minus => {
                if !attackers.iter().any(|a| self.x.contains(a)) {
                    vec![]
                } else {
                    let &d = self.choice.get(&argument).ok_or(AttackTreeError::MissingDefender(argument))?;
                    if !attackers.contains(&d) {
                        return Err(AttackTreeError::NotAnAttacker { argument, defender: d });
                    }
                    if !self.x.contains(&d) {
                        return Err(AttackTreeError::DefenderOutsideSet { argument, defender: d });
                    }
                    self.used.insert(argument, d);
                    vec![d]
                }
            }
        };
        self.path.push(idx);
        let mut children = Vec::with_capacity(next.len());
        for a in next {
            children.push(self.expand(a, sign.flip())?);
        }
        self.path.pop();
        self.nodes[idx].children = children;
        Ok(idx)
    }
}

/// One tree per defender choice over the '-' arguments reachable under that
/// choice, branching on defenders in ascending id order. Distinct choices
/// give distinct trees, so no tree is produced twice.
pub fn enumerate_attack_trees(g: &ArgumentGraph, x: &BTreeSet<ArgumentId>, root: ArgumentId) -> Vec<AttackTree> {
    let mut out = Vec::new();
    for_each_attack_tree(g, x, root, |t| {
        out.push(t);
        ControlFlow::Continue(())
    });
    out
}

/// Visits the trees of [`enumerate_attack_trees`] in the same order without
/// collecting them; stops early on `Break`.
pub fn for_each_attack_tree<F>(g: &ArgumentGraph, x: &BTreeSet<ArgumentId>, root: ArgumentId, mut visit: F)
where
    F: FnMut(AttackTree) -> ControlFlow<()>,
{
    if g.get(root).is_err() {
        return;
    }
    let mut e = Enumerator { g, x, nodes: Vec::new(), parents: Vec::new(), choice: BTreeMap::new() };
    let sign = if x.contains(&root) { Sign::Plus } else { Sign::Minus };
    let _ = e.run(vec![Task { parent: None, argument: root, sign }], &mut visit);
}

/// Number of trees of [`enumerate_attack_trees`], stopping at `limit`.
pub fn count_attack_trees(g: &ArgumentGraph, x: &BTreeSet<ArgumentId>, root: ArgumentId, limit: usize) -> usize {
    let mut n = 0;
    for_each_attack_tree(g, x, root, |_| {
        n += 1;
        if n >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    n
}

#[derive(Clone, Copy)]
struct Task {
    parent: Option<usize>,
    argument: ArgumentId,
    sign: Sign,
}

/// Expands tasks in preorder, branching on the defender of each '-'
/// argument the first time it is reached; the state is cloned only at
/// branch points.
struct Enumerator<'a> {
    g: &'a ArgumentGraph,
    x: &'a BTreeSet<ArgumentId>,
    nodes: Vec<Node>,
    parents: Vec<Option<usize>>,
    choice: BTreeMap<ArgumentId, ArgumentId>,
}

impl Enumerator<'_> {
    fn run(&mut self, mut stack: Vec<Task>, visit: &mut dyn FnMut(AttackTree) -> ControlFlow<()>) -> ControlFlow<()> {
        while let Some(task) = stack.pop() {
            let idx = self.nodes.len();
            let mut up = task.parent;
            let mut repeat_of = None;
            while let Some(p) = up {
                if self.nodes[p].argument == task.argument && self.nodes[p].sign == task.sign {
                    repeat_of = Some(p);
                    break;
                }
                up = self.parents[p];
            }
            self.nodes.push(Node { argument: task.argument, sign: task.sign, children: vec![], repeat_of });
            self.parents.push(task.parent);
            if let Some(p) = task.parent {
                self.nodes[p].children.push(idx);
            }
            if repeat_of.is_some() {
                continue;
            }
            let attackers = self.g.attacks().attackers_of(task.argument);
            let child = |argument| Task { parent: Some(idx), argument, sign: task.sign.flip() };
            match task.sign {
                Sign::Plus => stack.extend(attackers.iter().rev().map(|&a| child(a))),
                Sign::Minus => {
                    if let Some(&d) = self.choice.get(&task.argument) {
                        stack.push(child(d));
                        continue;
                    }
                    let defenders: Vec<ArgumentId> = attackers.iter().copied().filter(|d| self.x.contains(d)).collect();
                    if defenders.is_empty() {
                        continue;
                    }
                    let (nodes, parents) = (self.nodes.clone(), self.parents.clone());
                    for (k, &d) in defenders.iter().enumerate() {
                        if k > 0 {
                            self.nodes.clone_from(&nodes);
                            self.parents.clone_from(&parents);
                        }
                        self.choice.insert(task.argument, d);
                        let mut branch = stack.clone();
                        branch.push(child(d));
                        let flow = self.run(branch, visit);
                        self.choice.remove(&task.argument);
                        flow?;
                    }
                    return ControlFlow::Continue(());
                }
            }
        }
        visit(AttackTree { nodes: self.nodes.clone(), reference: self.x.clone(), defender_choice: self.choice.clone() })
    }
}
