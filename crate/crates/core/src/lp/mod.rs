//! Ground logic programs with classical negation and negation as failure,
//! evaluated under the answer-set semantics.

mod ground;
mod literal;
mod parse;
mod program;
mod semantics;

use thiserror::Error;

pub use ground::GroundError;
pub use literal::{Literal, Symbol};
pub use parse::{
    parse_literal, parse_source, ParseError, ParseErrorKind, SourceClause, SourceLiteral, SourceProgram, Term,
};
pub use program::{Clause, LogicProgram};
pub use semantics::{
    delta_of, derives_mp, enumerate_answer_sets, has_complementary_pair, is_answer_set, least_answer_set_positive,
    mp_closure, naf_completion, reduct, AnswerSet, AnswerSets, LiteralSet, SemanticsError, SetDisplay,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ground(#[from] GroundError),
}

/// Parses and grounds program text.
pub fn parse_program(text: &str) -> Result<LogicProgram, LoadError> {
    Ok(parse_source(text)?.ground()?)
}
