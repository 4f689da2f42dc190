//! Positive Attack Trees read as abstract dispute trees: '+' nodes become
//! proponents, '-' nodes opponents.
//!
//! cargo run --example dispute_trees

use abas::aba::ArgumentGraph;
use abas::attack_tree::{enumerate_attack_trees, is_admissible_dispute_tree, translate_dispute_tree, Status};
use abas::lp::{enumerate_answer_sets, parse_program, SetDisplay};

const P2: &str = include_str!("programs/p2.lp");

fn main() {
    let p = parse_program(P2).unwrap();
    let g = ArgumentGraph::from_program(&p);
    let s = &enumerate_answer_sets(&p).answer_sets[0];
    let e = g.corresponding_stable_extension(s).unwrap();
    for a in g.arguments() {
        for t in enumerate_attack_trees(&g, e.members(), a.id) {
            let d = translate_dispute_tree(&t);
            let proponents = d.arguments_with(Status::Proponent);
            let conclusions = proponents.iter().map(|&id| g.argument(id).conclusion.clone()).collect();
            println!(
                "{}{}: proponents {:?} concluding {}, admissible: {}",
                a.id,
                t.sign(),
                proponents.iter().map(|id| id.to_string()).collect::<Vec<_>>(),
                SetDisplay(conclusions),
                is_admissible_dispute_tree(&d)
            );
        }
    }
}
