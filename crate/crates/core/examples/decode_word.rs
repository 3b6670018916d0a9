//! Decodes a received word read from JSON files.
//!
//! cargo run --example decode_word [CODE.json WORD.json]
use std::path::PathBuf;

use bmsa::codes::DecodeOutcome;
use bmsa::inference::ResolveOptions;
use bmsa::io::{read_json, CodeSpecFile, WordFile};
use bmsa::lattice::MonomialOrder;

fn main() {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let args: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    let (code_path, word_path) = match args.as_slice() {
        [c, w] => (c.clone(), w.clone()),
        _ => (data.join("example1_code.json"), data.join("example1_word.json")),
    };
    let code = read_json::<CodeSpecFile>(&code_path).and_then(|s| s.build()).expect("code spec");
    let word = read_json::<WordFile>(&word_path).and_then(|w| w.to_poly(&code.field)).expect("word");
    let choice = code.choose_tau().expect("an offset");
    let missing: Vec<String> = choice.missing.iter().map(|n| n.to_string()).collect();
    println!("tau = {}, missing = [{}]", choice.tau, missing.join(", "));
    match code.decode(&word, choice.tau, &ResolveOptions::default()) {
        DecodeOutcome::Corrected { error, resolution, .. } => {
            println!("decoded under {} via {:?}", resolution.order, resolution.route);
            println!("e = {}", error.to_poly().render(MonomialOrder::Lex));
        }
        DecodeOutcome::Undecodable(why) => println!("undecodable: {why}"),
    }
}
