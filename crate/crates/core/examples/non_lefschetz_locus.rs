//! Measure the non-Lefschetz locus and compare it with the closed-form predictions.
//!
//! `cargo run --example non_lefschetz_locus -- 2,2,3 0`

use lefschetz_locus::{bundle, lefschetz, predictor};
use lefschetz_locus::{DegreeData, GradedModule, PresentationMatrix, PrimeField};

fn parse(arg: Option<String>, default: &str) -> Vec<i64> {
    arg.as_deref()
        .unwrap_or(default)
        .split(',')
        .map(|s| s.trim().parse().expect("integer degree"))
        .collect()
}

fn report(m: &GradedModule, label: &str) -> lefschetz_locus::Result<()> {
    let degrees = m.degrees();
    let stability = bundle::classify_stability(degrees)?;
    let prediction = predictor::predict(m, &stability, &bundle::chern(degrees))?;
    let (ideal, gb) = lefschetz::middle_locus(m);
    let measured = gb.measure();
    let cmp = predictor::compare(&prediction, &measured);
    println!("{label}: h = {:?}, {}", m.hilbert_function(), stability.class.as_str());
    println!(
        "  B_{} is {}x{}, {} maximal minors, Groebner basis of {} elements",
        ideal.degree,
        ideal.rows,
        ideal.cols,
        ideal.generators.len(),
        gb.len()
    );
    for c in &cmp.claims {
        println!("  {:<28} expected {:>3}  measured {:>3}", c.name, c.expected, c.measured);
    }
    println!("  verdict: {}", cmp.verdict.as_str());
    Ok(())
}

fn main() -> lefschetz_locus::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = parse(args.next(), "2,2,3");
    let b = parse(args.next(), "0");
    let field = PrimeField::default();
    let degrees = DegreeData::new(a, b)?;
    report(&GradedModule::generic(field, &degrees, 1)?, "generic")?;

    // the monomial complete intersection is far from general
    let mono = PresentationMatrix::monomial_complete_intersection(field, [3, 4, 4])?;
    report(&GradedModule::new(mono)?, "monomial (3,4,4)")?;
    Ok(())
}
