//! Classifies the blocking index and infers the missing syndrome where a
//! guaranteed relation exists.
use bmsa::bmsa::{run, BmsaOutcome};
use bmsa::fixtures;
use bmsa::inference::{classify, infer};
use bmsa::lattice::MonomialOrder;

fn main() {
    let (field, table) = fixtures::example1_table();
    for order in [MonomialOrder::Lex, MonomialOrder::Graded] {
        let r = run(&table, fixtures::EXAMPLE1_T, order, &field).expect("run");
        let BmsaOutcome::Blocked { state, .. } = r.outcome else { continue };
        let l = state.l().unwrap();
        println!("{order}: blocked at {l}, class {:?}", classify(l, &state));
        println!("  {:?}", infer(l, &state, &table, &field));
    }
}
