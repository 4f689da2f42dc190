//! Stable extensions side by side with the answer sets they correspond to.
//!
//! cargo run --example stable_extensions

use abas::aba::ArgumentGraph;
use abas::lp::{enumerate_answer_sets, parse_program, SetDisplay};

const P1: &str = include_str!("programs/p1.lp");

fn main() {
    let p = parse_program(P1).unwrap();
    let g = ArgumentGraph::from_program(&p);
    for (i, s) in enumerate_answer_sets(&p).answer_sets.iter().enumerate() {
        let e = g.corresponding_stable_extension(s).unwrap();
        println!("S{} = {s}", i + 1);
        println!("E{} = {e}", i + 1);
        println!("  conclusions: {}", SetDisplay(e.conclusions(&g)));
        println!("  admissible: {}", g.is_admissible(e.members()));
    }
}
