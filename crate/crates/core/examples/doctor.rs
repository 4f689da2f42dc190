//! Explaining a treatment recommendation: why laser surgery is ruled out
//! and why an intraocular lens is chosen.
//!
//! cargo run --example doctor

use abas::aba::ArgumentGraph;
use abas::attack_tree::Sign;
use abas::justify::{JustificationContext, PairKind};
use abas::lp::{enumerate_answer_sets, parse_program, Literal, SetDisplay};

const DOCTOR: &str = include_str!("programs/doctor.lp");

fn main() {
    let p = parse_program(DOCTOR).unwrap();
    let g = ArgumentGraph::from_program(&p);
    let sets = enumerate_answer_sets(&p).answer_sets;
    let s = &sets[0];
    println!("answer set: {s}");
    let ctx = JustificationContext::new(&g, s).unwrap();

    let laser = ctx.labas_negative(&Literal::lit("laserSurgery")).unwrap();
    println!("\nlaserSurgery is not chosen; {} reasons:", laser.sets.len());
    for set in &laser.sets {
        let decisive: Vec<String> = set
            .iter()
            .filter(|p| p.kind == PairKind::Attack && p.source.sign == Some(Sign::Plus))
            .map(|p| format!("{} defeats {}", p.source.literal, p.target.literal))
            .collect();
        println!("  {}", decisive.join("; "));
    }

    let lens = ctx.labas_positive(&Literal::lit("intraocularLens"), 0).unwrap();
    println!("\nintraocularLens is chosen:\n{lens}");
    println!("assumed true: {}", SetDisplay(lens.positive_assumptions(0)));
}
