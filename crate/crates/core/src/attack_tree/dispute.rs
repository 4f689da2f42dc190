use std::collections::BTreeSet;

use crate::aba::ArgumentId;

use super::{AttackTree, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Proponent,
    Opponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisputeNode {
    pub argument: ArgumentId,
    pub status: Status,
    pub children: Vec<usize>,
    pub repeat_of: Option<usize>,
}

/// Same shape as the Attack Tree it came from; root at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisputeTree {
    pub nodes: Vec<DisputeNode>,
}

impl DisputeTree {
    pub fn arguments_with(&self, status: Status) -> BTreeSet<ArgumentId> {
        self.nodes.iter().filter(|n| n.status == status).map(|n| n.argument).collect()
    }
}

/// '+' becomes proponent, '-' opponent.
pub fn translate_dispute_tree(t: &AttackTree) -> DisputeTree {
    let nodes = t
        .nodes()
        .iter()
        .map(|n| DisputeNode {
            argument: n.argument,
            status: match n.sign {
                Sign::Plus => Status::Proponent,
                Sign::Minus => Status::Opponent,
            },
            children: n.children.clone(),
            repeat_of: n.repeat_of,
        })
        .collect();
    DisputeTree { nodes }
}

/// No argument labels both a proponent and an opponent node.
pub fn is_admissible_dispute_tree(dt: &DisputeTree) -> bool {
    dt.arguments_with(Status::Proponent).is_disjoint(&dt.arguments_with(Status::Opponent))
}
