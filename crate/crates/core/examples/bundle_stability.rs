//! Chern classes, stability and the splitting-type oracle from degree data alone.
//!
//! `cargo run --example bundle_stability`

use lefschetz_locus::bundle;
use lefschetz_locus::DegreeData;

fn main() -> lefschetz_locus::Result<()> {
    let fixtures = [
        (vec![2, 2, 3], vec![0]),
        (vec![2, 2, 4], vec![0]),
        (vec![2, 2, 6], vec![0]),
        (vec![1, 1, 1, 8], vec![0, 0]),
    ];
    for (a, b) in fixtures {
        let degrees = DegreeData::new(a, b)?;
        let c = bundle::chern(&degrees);
        let s = bundle::classify_stability(&degrees)?;
        println!("a = {:?}  b = {:?}", degrees.a(), degrees.b());
        println!("  c1 = {}  c2 = {}  E_norm = E({})  c2(E_norm) = {}", c.c1, c.c2, s.t0, s.c2_norm);
        match s.instability_index {
            Some(k) => println!("  unstable, k = {k}"),
            None => println!("  {}", s.class.as_str()),
        }
        let generic = s.generic_splitting();
        println!("  general line: E_norm splits as {generic}");
        let jump = bundle::SplittingType::new(generic.alpha + 1, generic.beta - 1);
        println!("  a line of type {jump} is Lefschetz: {}", bundle::lefschetz_oracle(&s, &jump)?);
        let chi: Vec<i64> = (-3..=3).map(|t| bundle::euler_characteristic(&degrees, t)).collect();
        println!("  chi(E(t)) for t = -3..3: {chi:?}");
    }
    Ok(())
}
