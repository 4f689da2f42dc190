//! Command-line driver.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 inconsistent
//! program, 4 literal outside the language, 5 answer-set index out of range,
//! 6 unknown argument id, 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::aba::{ArgumentGraph, ArgumentId};
use crate::attack_tree::enumerate_attack_trees;
use crate::justify::{JustificationContext, JustifyError, Variant};
use crate::lp::{enumerate_answer_sets, parse_literal, parse_program, AnswerSet, Literal, LogicProgram};
use crate::render::{self, Format, RenderConfig};

pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_UNKNOWN_LITERAL: i32 = 4;
pub const EXIT_ANSWER_SET_RANGE: i32 = 5;
pub const EXIT_UNKNOWN_ARGUMENT: i32 = 6;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "abas", about = "Answer sets, ABA arguments, Attack Trees and their justifications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Babas,
    Labas,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List answer sets with their indices.
    Answersets { file: PathBuf },
    /// Show the translated ABA framework.
    Framework { file: PathBuf },
    /// List arguments and attacks.
    Arguments { file: PathBuf },
    /// List stable extensions, indexed like the answer sets.
    Extensions { file: PathBuf },
    /// Attack Trees of an argument with respect to the stable extension of an answer set.
    AttackTree {
        file: PathBuf,
        #[arg(long)]
        argument: String,
        #[arg(long)]
        answer_set: usize,
        /// Print every tree rather than the first.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Justify a literal with respect to an answer set.
    Justify {
        file: PathBuf,
        /// `a`, `-a` for classical negation, `not:a` or `not:-a` for negation as failure.
        #[arg(long, allow_hyphen_values = true)]
        literal: String,
        #[arg(long)]
        answer_set: usize,
        #[arg(long, value_enum, default_value_t = Method::Babas)]
        method: Method,
        /// Print every positive justification rather than the first.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Plain black DOT nodes.
        #[arg(long)]
        no_color: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

/// `not:x` is read as `not x`.
pub fn parse_cli_literal(text: &str) -> Result<Literal, String> {
    let text = match text.strip_prefix("not:") {
        Some(rest) => format!("not {rest}"),
        None => text.to_string(),
    };
    parse_literal(&text).map_err(|e| format!("invalid literal {text:?}: {e}"))
}

fn load(file: &PathBuf) -> Result<LogicProgram, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| fail(EXIT_IO, format!("{}: {e}", file.display())))?;
    parse_program(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", file.display())))
}

fn answer_sets(p: &LogicProgram) -> Result<Vec<AnswerSet>, Failure> {
    let r = enumerate_answer_sets(p);
    if !r.consistent {
        return Err(fail(EXIT_INCONSISTENT, "the program is inconsistent: it has no consistent answer set"));
    }
    Ok(r.answer_sets)
}

fn pick(sets: Vec<AnswerSet>, i: usize) -> Result<AnswerSet, Failure> {
    let n = sets.len();
    sets.into_iter()
        .nth(i)
        .ok_or_else(|| fail(EXIT_ANSWER_SET_RANGE, format!("answer set {i} out of range: the program has {n}")))
}

fn justify_failure(e: JustifyError) -> Failure {
    let code = match e {
        JustifyError::UnknownLiteral(_) => EXIT_UNKNOWN_LITERAL,
        _ => EXIT_USAGE,
    };
    fail(code, e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| fail(EXIT_IO, e.to_string());
    match cmd {
        Command::Answersets { file } => {
            let sets = answer_sets(&load(&file)?)?;
            out.write_all(render::answer_sets_text(&sets).as_bytes()).map_err(io)
        }
        Command::Framework { file } => {
            let g = ArgumentGraph::from_program(&load(&file)?);
            out.write_all(render::framework_text(g.framework()).as_bytes()).map_err(io)
        }
        Command::Arguments { file } => {
            let g = ArgumentGraph::from_program(&load(&file)?);
            out.write_all(render::arguments_text(&g).as_bytes()).map_err(io)
        }
        Command::Extensions { file } => {
            let p = load(&file)?;
            answer_sets(&p)?;
            let g = ArgumentGraph::from_program(&p);
            out.write_all(render::extensions_text(&g, &g.stable_extensions()).as_bytes()).map_err(io)
        }
        Command::AttackTree { file, argument, answer_set, all, format } => {
            let p = load(&file)?;
            let s = pick(answer_sets(&p)?, answer_set)?;
            let g = ArgumentGraph::from_program(&p);
            let id: ArgumentId = argument.parse().map_err(|e: String| fail(EXIT_UNKNOWN_ARGUMENT, e))?;
            g.get(id).map_err(|e| fail(EXIT_UNKNOWN_ARGUMENT, e.to_string()))?;
            let e = g.corresponding_stable_extension(&s).map_err(|e| fail(EXIT_INCONSISTENT, e.to_string()))?;
            let mut trees = enumerate_attack_trees(&g, e.members(), id);
            if !all {
                trees.truncate(1);
            }
            let mut text = String::new();
            for (i, t) in trees.iter().enumerate() {
                match format {
                    Format::Dot => {
                        text.push_str(&render::attack_tree_dot(&g, t, &format!("attack_tree_{}", i + 1), true))
                    }
                    Format::Json => return Err(fail(EXIT_USAGE, "attack trees are rendered as text or dot")),
                    Format::Text => {
                        if i > 0 {
                            text.push('\n');
                        }
                        text.push_str(&t.to_string());
                    }
                }
            }
            out.write_all(text.as_bytes()).map_err(io)
        }
        Command::Justify { file, literal, answer_set, method, all, format, out: path, no_color } => {
            let p = load(&file)?;
            let k = parse_cli_literal(&literal).map_err(|e| fail(EXIT_PARSE, e))?;
            let s = pick(answer_sets(&p)?, answer_set)?;
            let g = ArgumentGraph::from_program(&p);
            let ctx = JustificationContext::new(&g, &s).map_err(justify_failure)?;
            let variant = match method {
                Method::Babas => Variant::Basic,
                Method::Labas => Variant::Labelled,
            };
            let js = ctx.justify(&k, variant, all).map_err(justify_failure)?;
            let cfg = RenderConfig { format, color: !no_color };
            let text: String = js.iter().map(|j| render::render_justification(j, &cfg)).collect();
            match path {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))
                }
                None => out.write_all(text.as_bytes()).map_err(io),
            }
        }
    }
}

/// Runs the driver on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
