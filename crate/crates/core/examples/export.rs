//! JSON and DOT export of a justification and an Attack Tree. Pipe a DOT
//! section into `dot -Tsvg` to draw it.
//!
//! cargo run --example export [-- json|dot]

use abas::aba::ArgumentGraph;
use abas::attack_tree::enumerate_attack_trees;
use abas::justify::JustificationContext;
use abas::lp::{enumerate_answer_sets, parse_program, Literal};
use abas::render::{attack_tree_dot, export_json, import_json, justification_dot};

const P1: &str = include_str!("programs/p1.lp");

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "dot".into());
    let p = parse_program(P1).unwrap();
    let g = ArgumentGraph::from_program(&p);
    let s2 = &enumerate_answer_sets(&p).answer_sets[1];
    let ctx = JustificationContext::new(&g, s2).unwrap();
    let j = ctx.labas_negative(&Literal::lit("a")).unwrap();
    match which.as_str() {
        "json" => {
            let json = export_json(&j);
            assert_eq!(import_json(&json).unwrap(), j);
            println!("{json}");
        }
        _ => {
            print!("{}", justification_dot(&j, true));
            let a9 = g.concluding(&Literal::lit("a"))[0];
            for (i, t) in enumerate_attack_trees(&g, ctx.extension().members(), a9).iter().enumerate() {
                print!("{}", attack_tree_dot(&g, t, &format!("attack_tree_{}", i + 1), true));
            }
        }
    }
}
