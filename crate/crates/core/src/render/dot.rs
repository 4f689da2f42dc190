use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::aba::ArgumentGraph;
use crate::attack_tree::{AttackTree, Sign};
use crate::justify::{justification_graph, JustLiteral, Justification, PairKind, Tag};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn sign_color(sign: Option<Sign>, color: bool) -> &'static str {
    match (sign, color) {
        (Some(Sign::Plus), true) => "green",
        (Some(Sign::Minus), true) => "red",
        _ => "black",
    }
}

/// One digraph; '+' nodes green, '-' red, repeat nodes dashed with a dashed
/// back-edge to their ancestor.
pub fn attack_tree_dot(g: &ArgumentGraph, t: &AttackTree, name: &str, color: bool) -> String {
    let mut out = format!("digraph {} {{\n  node [shape=box];\n", quote(name));
    for (i, n) in t.nodes().iter().enumerate() {
        let a = g.argument(n.argument);
        let label = format!("{}{}: {}", n.argument, n.sign, a.conclusion);
        let style = if n.is_repeat() { ", style=dashed" } else { "" };
        writeln!(out, "  n{i} [label={}, color={}{style}];", quote(&label), sign_color(Some(n.sign), color)).unwrap();
    }
    for (i, n) in t.nodes().iter().enumerate() {
        for c in &n.children {
            writeln!(out, "  n{i} -> n{c};").unwrap();
        }
        if let Some(r) = n.repeat_of {
            writeln!(out, "  n{i} -> n{r} [style=dashed, constraint=false];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn node_label(l: &JustLiteral) -> String {
    let mut s = l.literal.to_string();
    if let Some(sign) = l.sign {
        s.push_str(sign.symbol());
    }
    s
}

/// One digraph per pair set; supp_rel edges dotted, att_rel solid, tags
/// as external labels.
pub fn justification_dot(j: &Justification, color: bool) -> String {
    let mut out = String::new();
    for (gi, graph) in justification_graph(j).iter().enumerate() {
        writeln!(out, "digraph {} {{", quote(&format!("justification_{}", gi + 1))).unwrap();
        let ids: BTreeMap<&JustLiteral, usize> = graph.nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
        for (n, i) in &ids {
            let mut attrs = format!("label={}, color={}", quote(&node_label(n)), sign_color(n.sign, color));
            if let Some(tag) = n.tag {
                let t = match tag {
                    Tag::Asm | Tag::Fact => tag.to_string(),
                    Tag::Argument(id) => id.to_string(),
                };
                write!(attrs, ", xlabel={}", quote(&t)).unwrap();
            }
            if *n == &graph.subject {
                attrs.push_str(", peripheries=2");
            }
            writeln!(out, "  n{i} [{attrs}];").unwrap();
        }
        for e in &graph.edges {
            let style = match e.kind {
                PairKind::Support => "dotted",
                PairKind::Attack => "solid",
            };
            writeln!(
                out,
                "  n{} -> n{} [style={style}, label={}];",
                ids[&e.source],
                ids[&e.target],
                quote(&e.kind.to_string())
            )
            .unwrap();
        }
        out.push_str("}\n");
    }
    if out.is_empty() {
        out.push_str("digraph \"justification\" {\n}\n");
    }
    out
}
