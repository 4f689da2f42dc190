//! The flat ABA framework a program translates into: rules, assumptions and
//! contraries, followed by every argument and attack.
//!
//! cargo run --example framework [-- path/to/program.lp]

use abas::aba::ArgumentGraph;
use abas::lp::parse_program;
use abas::render::{arguments_text, framework_text};

const DEFAULT: &str = include_str!("programs/p2.lp");

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable program"),
        None => DEFAULT.to_string(),
    };
    let g = ArgumentGraph::from_program(&parse_program(&text).expect("valid program"));
    print!("{}", framework_text(g.framework()));
    println!();
    print!("{}", arguments_text(&g));
}
