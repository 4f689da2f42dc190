use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::aba::ArgumentId;
use crate::attack_tree::Sign;
use crate::lp::{parse_literal, Literal};

/// Subscript of a labelled literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Asm,
    Fact,
    Argument(ArgumentId),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Asm => f.write_str("asm"),
            Tag::Fact => f.write_str("fact"),
            Tag::Argument(id) => write!(f, "{id}"),
        }
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "asm" => Ok(Tag::Asm),
            "fact" => Ok(Tag::Fact),
            other => other.parse().map(Tag::Argument).map_err(serde::de::Error::custom),
        }
    }
}

mod literal_text {
    use super::*;

    pub fn serialize<S: Serializer>(l: &Literal, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(l)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Literal, D::Error> {
        let s = String::deserialize(d)?;
        parse_literal(&s).map_err(serde::de::Error::custom)
    }
}

/// A literal, decorated with sign and tag in labelled justifications.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct JustLiteral {
    #[serde(with = "literal_text")]
    pub literal: Literal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<Tag>,
}

impl JustLiteral {
    pub fn plain(literal: Literal) -> Self {
        JustLiteral { literal, sign: None, tag: None }
    }

    pub fn labelled(literal: Literal, sign: Sign, tag: Tag) -> Self {
        JustLiteral { literal, sign: Some(sign), tag: Some(tag) }
    }

    /// Sign and tag dropped.
    pub fn strip(&self) -> JustLiteral {
        JustLiteral::plain(self.literal.clone())
    }
}

impl fmt::Display for JustLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal)?;
        if let Some(s) = self.sign {
            write!(f, "{s}")?;
        }
        if let Some(t) = self.tag {
            write!(f, "_{t}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairKind {
    #[serde(rename = "supp_rel")]
    Support,
    #[serde(rename = "att_rel")]
    Attack,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Support => "supp_rel",
            PairKind::Attack => "att_rel",
        })
    }
}

/// `supp_rel(source, target)` or `att_rel(source, target)`; labelled pairs
/// carry the sign of their source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct JustPair {
    pub kind: PairKind,
    pub source: JustLiteral,
    pub target: JustLiteral,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_sign: Option<Sign>,
}

impl JustPair {
    pub fn basic(kind: PairKind, source: Literal, target: Literal) -> Self {
        JustPair { kind, source: JustLiteral::plain(source), target: JustLiteral::plain(target), pair_sign: None }
    }

    pub fn labelled(kind: PairKind, source: JustLiteral, target: JustLiteral) -> Self {
        let pair_sign = source.sign;
        JustPair { kind, source, target, pair_sign }
    }

    /// Signs and tags dropped.
    pub fn strip(&self) -> JustPair {
        JustPair { kind: self.kind, source: self.source.strip(), target: self.target.strip(), pair_sign: None }
    }
}

impl fmt::Display for JustPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(s) = self.pair_sign {
            write!(f, "{s}")?;
        }
        write!(f, "({}, {})", self.source, self.target)
    }
}

pub type PairSet = BTreeSet<JustPair>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Basic,
    Labelled,
}

/// A positive justification has exactly one pair set; a negative one has
/// one per argument and tree, possibly none. The justified literal is kept
/// as `subject`, not inside the sets. Negative labelled justifications key
/// each set by its own subject in `set_subjects`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Justification {
    pub subject: JustLiteral,
    pub polarity: Polarity,
    pub variant: Variant,
    pub sets: Vec<PairSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_subjects: Option<Vec<JustLiteral>>,
}

impl Justification {
    /// Subject of the `i`-th set.
    pub fn subject_of(&self, i: usize) -> &JustLiteral {
        self.set_subjects.as_ref().map_or(&self.subject, |s| &s[i])
    }

    /// `{subject} ∪ pairs` of the `i`-th set in text notation.
    pub fn set_to_string(&self, i: usize) -> String {
        let mut parts = vec![self.subject_of(i).to_string()];
        parts.extend(self.sets[i].iter().map(|p| p.to_string()));
        format!("{{{}}}", parts.join(", "))
    }

    /// Literals of a set that carry the `asm` tag with sign '+'.
    pub fn positive_assumptions(&self, i: usize) -> BTreeSet<Literal> {
        let subject = std::iter::once(self.subject_of(i));
        subject
            .chain(self.sets[i].iter().flat_map(|p| [&p.source, &p.target]))
            .filter(|l| l.sign == Some(Sign::Plus) && l.tag == Some(Tag::Asm))
            .map(|l| l.literal.clone())
            .collect()
    }
}

impl fmt::Display for Justification {
    /// One set per line; a negative justification without sets prints `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sets.is_empty() {
            return writeln!(f, "{{}}");
        }
        (0..self.sets.len()).try_for_each(|i| writeln!(f, "{}", self.set_to_string(i)))
    }
}
