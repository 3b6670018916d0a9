//! Forces the parametrized-basis path on the 15x15 example and prints the
//! candidate ledger.
use bmsa::family::render_ledger;
use bmsa::fixtures;
use bmsa::inference::{resolve, ResolveOptions};
use bmsa::lattice::MonomialOrder;

fn main() {
    let (field, table) = fixtures::example1_table();
    let opts = ResolveOptions::family_only(MonomialOrder::Lex);
    let r = resolve(&table, fixtures::EXAMPLE1_T, &field.primitive_pair(), &field, &opts).expect("resolvable");
    print!("{}", render_ledger(&r.family_ledger));
    let basis: Vec<String> = r.basis.iter().map(|p| p.render(MonomialOrder::Lex)).collect();
    println!("basis = {{{}}}", basis.join(", "));
    println!("e = {}", r.error.to_poly().render(MonomialOrder::Lex));
}
