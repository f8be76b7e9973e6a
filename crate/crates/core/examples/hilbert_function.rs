//! Hilbert function, socle and cohomology of a few cokernels.
//!
//! `cargo run --example hilbert_function`

use lefschetz_locus::bundle;
use lefschetz_locus::{DegreeData, GradedModule, PrimeField};

fn main() -> lefschetz_locus::Result<()> {
    let field = PrimeField::default();
    let fixtures = [
        (vec![2, 2, 3], vec![0]),
        (vec![3, 4, 4], vec![0]),
        (vec![1, 1, 1, 2], vec![0, 0]),
        (vec![2, 2, 2, 3], vec![0, 1]),
    ];
    for (a, b) in fixtures {
        let degrees = DegreeData::new(a, b)?;
        let m = GradedModule::generic(field, &degrees, 1)?;
        println!(
            "a = {:?}  b = {:?}  d = {}  socle degree {}",
            degrees.a(),
            degrees.b(),
            degrees.d(),
            degrees.socle_degree()
        );
        println!("  h from degree {}: {:?}  length {}", m.start(), m.hilbert_function(), m.length());
        println!("  socle in degrees {:?}", m.socle());
        // h_t = h^1(E(t)) for the kernel bundle
        let h1: Vec<u64> = (m.start()..=m.top())
            .map(|t| bundle::h1(&degrees, t))
            .collect::<lefschetz_locus::Result<_>>()?;
        println!("  h1(E(t)) over the same range: {h1:?}");
        println!("  unimodal {}  symmetric {}", m.is_unimodal(), m.is_symmetric());
    }
    Ok(())
}
