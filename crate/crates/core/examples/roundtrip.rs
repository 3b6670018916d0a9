//! Seeded encode, corrupt and decode statistics over the 15x15 example code,
//! with the cell (1,2) missing and with an extra border cell masked.
use bmsa::cli::roundtrip;
use bmsa::fixtures;
use bmsa::inference::ResolveOptions;
use bmsa::lattice::{ip, MonomialOrder};

fn main() {
    let code = fixtures::example1_code();
    for (name, opts) in [
        ("auto", ResolveOptions::default()),
        ("lex only", ResolveOptions::family_only(MonomialOrder::Lex)),
        ("graded only", ResolveOptions::family_only(MonomialOrder::Graded)),
    ] {
        let s = roundtrip(&code, 500, 7, None, None, &opts, false).unwrap();
        println!(
            "{name}: {}/{} corrected, routes {:?}, exceptions {:?}",
            s.corrected, s.trials, s.routes, s.exceptions
        );
    }
    let s = roundtrip(&code, 200, 7, Some(4), None, &ResolveOptions::default(), false).unwrap();
    println!("weight 4: {} undecodable, {} miscorrected", s.undecodable, s.miscorrected);
    let s = roundtrip(&code, 200, 7, None, Some(ip(1, 2)), &ResolveOptions::default(), false).unwrap();
    println!("masked (1,2): {}/{} corrected", s.corrected, s.trials);
}
