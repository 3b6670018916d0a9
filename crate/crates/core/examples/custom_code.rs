//! Builds a code from orbit representatives, picks the offset and decodes a
//! few random corrupted codewords.
use bmsa::codes::{inject_error, AbelianCode, DecodeOutcome};
use bmsa::gf::{FieldSpec, FieldTower};
use bmsa::inference::ResolveOptions;
use bmsa::lattice::{ip, MonomialOrder};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let field = FieldTower::new(&FieldSpec::binary(4, 15, 15)).unwrap();
    let alpha = field.primitive_pair();
    let reps = [ip(0, 0), ip(0, 1), ip(0, 3), ip(0, 5), ip(1, 0), ip(3, 0), ip(5, 0), ip(1, 1), ip(2, 1)];
    let code = AbelianCode::from_orbit_reps(field, &reps, 3, alpha).unwrap();
    let choice = code.choose_tau().unwrap();
    let basis = code.codeword_basis().unwrap();
    let missing: Vec<String> = choice.missing.iter().map(|n| n.to_string()).collect();
    println!(
        "|D| = {}, dimension {}, tau = {}, missing [{}]",
        code.defining_set.len(),
        basis.len(),
        choice.tau,
        missing.join(", ")
    );
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for w in 0..=4 {
        let word = code.random_codeword(&basis, &mut rng);
        let (received, truth) = inject_error(&word, w, &code.field, &mut rng);
        let opts = ResolveOptions { orders: vec![MonomialOrder::Graded, MonomialOrder::Lex], ..Default::default() };
        match code.decode(&received, choice.tau, &opts) {
            DecodeOutcome::Corrected { error, resolution, .. } => {
                println!("w = {w}: {:?} under {}, correct: {}", resolution.route, resolution.order, error == truth)
            }
            DecodeOutcome::Undecodable(why) => println!("w = {w}: undecodable ({why})"),
        }
    }
}
