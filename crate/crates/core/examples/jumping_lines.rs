//! Splitting types on random lines and on lines of the non-Lefschetz locus.
//!
//! `cargo run --example jumping_lines`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lefschetz_locus::jumping::{self, JumpingLines, LinePoint};
use lefschetz_locus::{bundle, lefschetz};
use lefschetz_locus::{DegreeData, GradedModule, PrimeField};

fn main() -> lefschetz_locus::Result<()> {
    let field = PrimeField::default();
    let degrees = DegreeData::new(vec![2, 2, 2], vec![0])?;
    let m = GradedModule::generic(field, &degrees, 1)?;
    let stability = bundle::classify_stability(&degrees)?;
    let jl = JumpingLines::new(m.presentation(), 1)?;
    println!("generic splitting type {} ({})", jl.generic(), stability.class.as_str());

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (_, gb) = lefschetz::middle_locus(&m);
    let on_locus = jumping::sample_locus_points(&gb, 5, &mut rng);
    let random: Vec<_> = (0..5).map(|_| field.random_point(&mut rng)).collect();
    for (kind, lines) in [("random", random), ("locus", on_locus)] {
        for ell in lines {
            let split = jl.splitting_type(&LinePoint::new(field, ell)?)?;
            let lef = lefschetz::is_lefschetz(&m, &ell)?.lefschetz;
            println!("{kind:>6} {ell:?}: splits as {split}, Lefschetz {lef}");
        }
    }
    Ok(())
}
