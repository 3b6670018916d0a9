//! Compares BMSa footprints and decodes with the brute-force references.
use bmsa::bmsa::{BmsaState, StepResult};
use bmsa::codes::inject_error;
use bmsa::fixtures;
use bmsa::inference::ResolveOptions;
use bmsa::lattice::{ip, MonomialOrder};
use bmsa::oracle::{brute_decode, brute_footprint};
use bmsa::poly::BiPoly;
use bmsa::syndrome::SyndromeTable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let code = fixtures::example1_code();
    let f = &code.field;
    let tau = code.choose_tau().unwrap().tau;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut prefixes, mut decodes) = (0, 0);
    for _ in 0..20 {
        let (received, truth) = inject_error(&BiPoly::zero(), 3, f, &mut rng);
        let full = SyndromeTable::complete(&received, ip(0, 0), &code.alpha, f);
        for order in [MonomialOrder::Lex, MonomialOrder::Graded] {
            let mut st = BmsaState::new(order, code.t, f.periods()).unwrap();
            while let Some(l) = st.l() {
                assert_eq!(brute_footprint(&full, l, order, code.t, f).unwrap(), st.footprint);
                prefixes += 1;
                assert!(matches!(st.step(&full, f).unwrap(), StepResult::Advanced(_)));
            }
        }
        let brute = brute_decode(&code, &received).unwrap();
        assert_eq!(brute, truth);
        assert_eq!(code.decode(&received, tau, &ResolveOptions::default()).error(), Some(&brute));
        decodes += 1;
    }
    println!("{prefixes} footprints and {decodes} decodes agree with the oracles");
}
