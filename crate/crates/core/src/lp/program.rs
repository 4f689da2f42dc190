use std::collections::BTreeSet;
use std::fmt;

use super::literal::{Literal, Symbol};

/// `head :- body.` over ground literals. The head is always classical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    head: Literal,
    body: Vec<Literal>,
}

impl Clause {
    /// Panics if `head` is a NAF literal. The parser rejects that case with a
    /// proper error before it gets here.
    pub fn new(head: Literal, body: Vec<Literal>) -> Self {
        assert!(head.is_classical(), "NAF literal {head} in clause head");
        Clause { head, body }
    }

    pub fn fact(head: Literal) -> Self {
        Clause::new(head, Vec::new())
    }

    pub fn head(&self) -> &Literal {
        &self.head
    }

    pub fn body(&self) -> &[Literal] {
        &self.body
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }

    pub fn positive_body(&self) -> impl Iterator<Item = &Literal> {
        self.body.iter().filter(|l| l.is_classical())
    }

    pub fn naf_body(&self) -> impl Iterator<Item = &Literal> {
        self.body.iter().filter(|l| l.is_naf())
    }

    pub fn has_naf(&self) -> bool {
        self.body.iter().any(Literal::is_naf)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (i, l) in self.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{l}")?;
            }
        }
        f.write_str(".")
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite ground logic program. Clause order and duplicates are kept as
/// written.
///
/// The Herbrand base is the set of atoms occurring anywhere in the clauses.
/// `Lit_P` closes it under classical negation and `NAF_P` puts `not` in front
/// of every member of `Lit_P`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LogicProgram {
    clauses: Vec<Clause>,
    atoms: BTreeSet<Symbol>,
}

impl LogicProgram {
    pub fn new(clauses: Vec<Clause>) -> Self {
        let atoms = clauses
            .iter()
            .flat_map(|c| std::iter::once(c.head()).chain(c.body()))
            .map(|l| l.atom_name().clone())
            .collect();
        LogicProgram { clauses, atoms }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Herbrand base.
    pub fn atoms(&self) -> &BTreeSet<Symbol> {
        &self.atoms
    }

    /// `Lit_P`, in literal order.
    pub fn classical_literals(&self) -> BTreeSet<Literal> {
        self.atoms
            .iter()
            .flat_map(|a| [Literal::new(a.clone(), false, false), Literal::new(a.clone(), true, false)])
            .collect()
    }

    /// `NAF_P`, in literal order.
    pub fn naf_literals(&self) -> BTreeSet<Literal> {
        self.atoms
            .iter()
            .flat_map(|a| [Literal::new(a.clone(), false, true), Literal::new(a.clone(), true, true)])
            .collect()
    }

    /// `Lit_P ∪ NAF_P`.
    pub fn language(&self) -> BTreeSet<Literal> {
        let mut all = self.classical_literals();
        all.extend(self.naf_literals());
        all
    }

    /// Whether `l` belongs to `Lit_P ∪ NAF_P`.
    pub fn contains_literal(&self, l: &Literal) -> bool {
        self.atoms.contains(l.atom_name())
    }

    /// Heads of body-less clauses.
    pub fn facts(&self) -> BTreeSet<Literal> {
        self.clauses.iter().filter(|c| c.is_fact()).map(|c| c.head().clone()).collect()
    }

    pub fn is_fact(&self, l: &Literal) -> bool {
        self.clauses.iter().any(|c| c.is_fact() && c.head() == l)
    }

    pub fn heads(&self) -> BTreeSet<Literal> {
        self.clauses.iter().map(|c| c.head().clone()).collect()
    }

    pub fn has_naf(&self) -> bool {
        self.clauses.iter().any(Clause::has_naf)
    }

    /// Program extended with one more clause; the Herbrand base grows as needed.
    pub fn with_clause(&self, clause: Clause) -> LogicProgram {
        let mut clauses = self.clauses.clone();
        clauses.push(clause);
        LogicProgram::new(clauses)
    }
}

impl FromIterator<Clause> for LogicProgram {
    fn from_iter<I: IntoIterator<Item = Clause>>(iter: I) -> Self {
        LogicProgram::new(iter.into_iter().collect())
    }
}

impl fmt::Display for LogicProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LogicProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.clauses).finish()
    }
}
