//! Every Attack Tree of every argument of the running example, with respect
//! to each stable extension. Repeat nodes close cycles.
//!
//! cargo run --example attack_trees

use abas::aba::ArgumentGraph;
use abas::attack_tree::enumerate_attack_trees;
use abas::lp::{enumerate_answer_sets, parse_program};

const P1: &str = include_str!("programs/p1.lp");

fn main() {
    let p = parse_program(P1).unwrap();
    let g = ArgumentGraph::from_program(&p);
    for (i, s) in enumerate_answer_sets(&p).answer_sets.iter().enumerate() {
        let e = g.corresponding_stable_extension(s).unwrap();
        println!("== E{} = {e}", i + 1);
        for a in g.arguments() {
            let trees = enumerate_attack_trees(&g, e.members(), a.id);
            for (n, t) in trees.iter().enumerate() {
                println!("-- {} tree {} of {}", g.argument(a.id), n + 1, trees.len());
                print!("{t}");
            }
        }
    }
}
