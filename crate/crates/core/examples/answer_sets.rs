//! Answer sets of a program with their NAF completions.
//!
//! cargo run --example answer_sets [-- path/to/program.lp]

use abas::lp::{enumerate_answer_sets, parse_program, SetDisplay};

const DEFAULT: &str = include_str!("programs/p1.lp");

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable program"),
        None => DEFAULT.to_string(),
    };
    let p = parse_program(&text).expect("valid program");
    let r = enumerate_answer_sets(&p);
    if !r.consistent {
        println!("inconsistent: no answer set other than the full literal set");
        return;
    }
    for (i, s) in r.answer_sets.iter().enumerate() {
        println!("S{}: {s}", i + 1);
        println!("  assumed false: {}", SetDisplay(s.delta().clone()));
    }
}
