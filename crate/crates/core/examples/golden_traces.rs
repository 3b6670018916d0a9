//! Runs the BMSa on the 15x15 example table under both orders and prints
//! the step trace until the missing cell blocks it.
use bmsa::bmsa::{run, BmsaOutcome};
use bmsa::fixtures;
use bmsa::lattice::MonomialOrder;

fn main() {
    let (field, table) = fixtures::example1_table();
    for order in [MonomialOrder::Lex, MonomialOrder::Graded] {
        let r = run(&table, fixtures::EXAMPLE1_T, order, &field).expect("run");
        println!("== {order} (condition met: {})", r.condition_met);
        for s in &r.trace {
            println!("({},{}) {:?}: F = {{{}}}", s.l[0], s.l[1], s.action, s.f.join(", "));
        }
        if let BmsaOutcome::Blocked { cell, .. } = r.outcome {
            println!("blocked: u{cell} is unknown");
        }
    }
}
