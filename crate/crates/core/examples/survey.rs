//! Batch run over the complete-intersection grid and random two-row presentations.
//!
//! `cargo run --release --example survey`

use lefschetz_locus::cli::{self, Grid, SurveySpec};
use lefschetz_locus::PrimeField;

fn main() -> lefschetz_locus::Result<()> {
    let spec = SurveySpec {
        grid: Grid::All,
        seed: 0,
        prime: PrimeField::default(),
        random_sequences: 5,
        lines: 100,
        include_monomial: true,
    };
    let report = cli::run_survey(&spec)?;
    print!("{}", cli::render_survey(&report));
    println!(
        "{} match, {} need a general matrix, {} mismatch",
        report.matches, report.generality_required, report.mismatches
    );
    Ok(())
}
