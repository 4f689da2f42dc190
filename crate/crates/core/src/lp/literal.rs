use std::fmt;
use std::sync::Arc;

/// Interned atom name. Cloning is a reference-count bump.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A ground literal: an atom, optionally classically negated (`-a`), optionally
/// under negation as failure (`not a`, `not -a`).
///
/// Ordered by atom name, then classical negation, then NAF, which puts the
/// literals of one atom in the order `a`, `not a`, `-a`, `not -a`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    atom: Symbol,
    negated: bool,
    naf: bool,
}

impl Literal {
    pub fn new(atom: Symbol, negated: bool, naf: bool) -> Self {
        Literal { atom, negated, naf }
    }

    /// Positive classical literal `a`.
    pub fn atom(name: &str) -> Self {
        Literal::new(Symbol::new(name), false, false)
    }

    /// Classically negated literal `-a`.
    pub fn neg(name: &str) -> Self {
        Literal::new(Symbol::new(name), true, false)
    }

    /// Parses the display form: `a`, `-a`, `not a`, `not -a`.
    ///
    /// Panics on malformed input; meant for tests and examples. Use
    /// [`crate::lp::parse_literal`] for user input.
    pub fn lit(text: &str) -> Self {
        crate::lp::parse_literal(text).unwrap_or_else(|e| panic!("bad literal {text:?}: {e}"))
    }

    pub fn atom_name(&self) -> &Symbol {
        &self.atom
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn is_naf(&self) -> bool {
        self.naf
    }

    pub fn is_classical(&self) -> bool {
        !self.naf
    }

    /// `not l` for a classical `l`. Returns `None` for a NAF literal since
    /// `not not l` is not a literal.
    pub fn to_naf(&self) -> Option<Literal> {
        if self.naf {
            None
        } else {
            Some(Literal { naf: true, ..self.clone() })
        }
    }

    /// The corresponding classical literal: clears the NAF flag.
    pub fn classical(&self) -> Literal {
        Literal { naf: false, ..self.clone() }
    }

    /// Classical complement: `a` ↔ `-a`. Keeps the NAF flag.
    pub fn complement(&self) -> Literal {
        Literal { negated: !self.negated, ..self.clone() }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.naf {
            f.write_str("not ")?;
        }
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
