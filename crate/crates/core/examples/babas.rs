//! Basic justifications: why `e` and `a` hold in S1, and why `a` does not
//! hold in S2.
//!
//! cargo run --example babas

use abas::aba::ArgumentGraph;
use abas::justify::JustificationContext;
use abas::lp::{enumerate_answer_sets, parse_program, Literal};

const P1: &str = include_str!("programs/p1.lp");

fn main() {
    let p = parse_program(P1).unwrap();
    let g = ArgumentGraph::from_program(&p);
    let sets = enumerate_answer_sets(&p).answer_sets;
    let s1 = JustificationContext::new(&g, &sets[0]).unwrap();
    let s2 = JustificationContext::new(&g, &sets[1]).unwrap();

    println!("e in S1:\n{}", s1.babas_positive(&Literal::lit("e"), 0).unwrap());
    for (i, j) in s1.babas_positive_all(&Literal::lit("a")).unwrap().iter().enumerate() {
        println!("a in S1, alternative {}:\n{j}", i + 1);
    }
    println!("a not in S2:\n{}", s2.babas_negative(&Literal::lit("a")).unwrap());
    println!("-c not in S1 (no argument):\n{}", s1.babas_negative(&Literal::lit("-c")).unwrap());
}
