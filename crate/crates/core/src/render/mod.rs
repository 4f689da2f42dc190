//! Text, JSON and DOT output.

mod dot;

use std::fmt::Write as _;

use crate::aba::{AbaFramework, ArgumentGraph, Extension};
use crate::justify::Justification;
use crate::lp::{AnswerSet, SetDisplay};

pub use dot::{attack_tree_dot, justification_dot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderConfig {
    pub format: Format,
    /// Colour DOT nodes by sign.
    pub color: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig { format: Format::Text, color: true }
    }
}

/// Compact JSON, one object.
pub fn export_json(j: &Justification) -> String {
    serde_json::to_string(j).expect("justifications serialize")
}

pub fn import_json(text: &str) -> Result<Justification, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn render_justification(j: &Justification, cfg: &RenderConfig) -> String {
    match cfg.format {
        Format::Text => j.to_string(),
        Format::Json => export_json(j) + "\n",
        Format::Dot => justification_dot(j, cfg.color),
    }
}

/// `i: {...}` per answer set.
pub fn answer_sets_text(sets: &[AnswerSet]) -> String {
    sets.iter().enumerate().map(|(i, s)| format!("{i}: {s}\n")).collect()
}

pub fn framework_text(f: &AbaFramework) -> String {
    let mut out = String::new();
    writeln!(out, "language: {}", SetDisplay(f.language().clone())).unwrap();
    writeln!(out, "assumptions: {}", SetDisplay(f.assumptions().clone())).unwrap();
    out.push_str("contraries:\n");
    for (a, c) in f.contraries() {
        writeln!(out, "  {a} -> {c}").unwrap();
    }
    out.push_str("rules:\n");
    for r in f.rules() {
        writeln!(out, "  {r}").unwrap();
    }
    out
}

/// Arguments, then attacks as `attacker -> attacked on assumption`.
pub fn arguments_text(g: &ArgumentGraph) -> String {
    let mut out = String::new();
    for a in g.arguments() {
        writeln!(out, "{a}").unwrap();
    }
    out.push_str("attacks:\n");
    for e in g.attacks().edges() {
        writeln!(out, "  {} -> {} on {}", e.attacker, e.attacked, e.assumption).unwrap();
    }
    out
}

/// `i: {A..}` with the classical conclusions of each extension.
pub fn extensions_text(g: &ArgumentGraph, exts: &[Extension]) -> String {
    exts.iter()
        .enumerate()
        .map(|(i, e)| format!("{i}: {e} concludes {}\n", SetDisplay(e.classical_conclusions(g))))
        .collect()
}
