//! Labelled justifications. Two programs derive `q` because `p` fails, but
//! for different reasons: two attacked derivations of `p`, or one derivation
//! resting on two attacked assumptions.
//!
//! cargo run --example labas

use abas::aba::ArgumentGraph;
use abas::justify::JustificationContext;
use abas::lp::{enumerate_answer_sets, parse_program, Literal, SetDisplay};

const P3: &str = include_str!("programs/p3.lp");
const P4: &str = include_str!("programs/p4.lp");

fn main() {
    for (name, text) in [("p3", P3), ("p4", P4)] {
        let p = parse_program(text).unwrap();
        let g = ArgumentGraph::from_program(&p);
        let s = &enumerate_answer_sets(&p).answer_sets[0];
        let ctx = JustificationContext::new(&g, s).unwrap();
        println!("== {name}");
        for j in ctx.labas_positive_all(&Literal::lit("q")).unwrap() {
            println!("{j}");
            println!("assumed true: {}", SetDisplay(j.positive_assumptions(0)));
        }
        println!("p:\n{}", ctx.labas_negative(&Literal::lit("p")).unwrap());
    }
}
