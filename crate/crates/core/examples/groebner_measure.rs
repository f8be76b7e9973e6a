//! Groebner bases, dimension and degree, intersection and saturation in the dual plane.
//!
//! `cargo run --example groebner_measure`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lefschetz_locus::groebner::MonomialOrder;
use lefschetz_locus::{GroebnerBasis, Polynomial, PrimeField, Ring};

fn ideal(field: PrimeField, gens: &[&str]) -> lefschetz_locus::Result<GroebnerBasis> {
    let polys = gens
        .iter()
        .map(|g| Polynomial::parse(field, Ring::Dual, g))
        .collect::<lefschetz_locus::Result<Vec<_>>>()?;
    Ok(GroebnerBasis::new(field, &polys))
}

fn show(label: &str, gb: &GroebnerBasis) {
    let m = gb.measure();
    let basis: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
    println!("{label}: dim {} degree {}  [{}]", m.projective_dimension, m.degree, basis.join(", "));
}

fn main() -> lefschetz_locus::Result<()> {
    let field = PrimeField::default();
    // a conic meeting a line in two points
    let points = ideal(field, &["l1^2 + l2^2 - l3^2", "l1 - l2"])?;
    show("conic and line", &points);
    show("  in lex", &points.to_order(MonomialOrder::Lex));

    let cubic = ideal(field, &["l1^3 - l2*l3^2"])?;
    show("cuspidal cubic", &cubic);

    let both = points.intersect(&cubic);
    show("intersection", &both);

    // (l1) cut with a power of the irrelevant ideal: same scheme, not saturated
    let irrelevant = ideal(field, &["l1^2", "l1*l2", "l1*l3"])?;
    show("irrelevant component", &irrelevant);
    show("saturated", &irrelevant.saturate());
    println!("same scheme as (l1): {}", irrelevant.same_scheme(&ideal(field, &["l1"])?));

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    if let Some(found) = points.rational_points(&mut rng) {
        println!("rational points of the conic and line: {:?}", found.points);
    }
    Ok(())
}
