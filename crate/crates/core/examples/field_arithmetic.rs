//! Arithmetic in GF(16), roots of unity and the index set S(t).
use bmsa::gf::{FieldSpec, FieldTower};
use bmsa::lattice::{ip, s_t_set, MonomialOrder};

fn main() {
    let f = FieldTower::new(&FieldSpec::binary(4, 15, 15)).expect("valid field");
    let a = |k| f.pow_a(k);
    println!("a^9 + a^3 = {}", f.add(a(9), a(3)));
    println!("a^6 + a^4 = {}", f.add(a(6), a(4)));
    println!("a^7 * a^8 = {}", f.mul(a(7), a(8)));
    println!("1 / a^4 = {}", f.inv(a(4)).unwrap());
    println!("frobenius(a^5) = {}", f.frobenius(a(5)));
    let alpha = f.primitive_pair();
    println!("alpha = (a^{}, a^{})", alpha.e1, alpha.e2);
    println!("X1^2 X2 at alpha^(1,3) = {}", f.monomial_at(&alpha, ip(2, 1), ip(1, 3)));
    for order in [MonomialOrder::Lex, MonomialOrder::Graded] {
        let st = s_t_set(3, order, f.periods()).unwrap();
        let shown: Vec<String> = st.iter().map(|n| n.to_string()).collect();
        println!("S(3) under {order}: {}", shown.join(" "));
    }
}
