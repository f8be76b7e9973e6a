//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use lefschetz_locus::bundle::{self, Stability};
use lefschetz_locus::cli::{self, Grid, SurveySpec};
use lefschetz_locus::jumping::{self, JumpingLines, LinePoint};
use lefschetz_locus::lefschetz;
use lefschetz_locus::predictor::{self, binomial};
use lefschetz_locus::{DegreeData, FieldElement, GradedModule, PresentationMatrix, PrimeField, Verdict};

type Outcome = Result<String, String>;

fn field() -> PrimeField {
    PrimeField::default()
}

fn degrees(a: &[i64], b: &[i64]) -> DegreeData {
    DegreeData::new(a.to_vec(), b.to_vec()).expect("valid degree data")
}

fn generic(a: &[i64], b: &[i64], seed: u64) -> GradedModule {
    GradedModule::generic(field(), &degrees(a, b), seed).expect("generic module")
}

fn monomial_344() -> GradedModule {
    let p = PresentationMatrix::monomial_complete_intersection(field(), [3, 4, 4]).unwrap();
    GradedModule::new(p).unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:.2?}, limit {limit:?}");
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut seen: Vec<Vec<Vec<String>>> = Vec::new();
    let mut worst = Duration::ZERO;
    for seed in 1..=5 {
        let start = Instant::now();
        let m = generic(&[2, 2, 3], &[0], seed);
        let entries = m.presentation().to_strings();
        ensure!(!seen.contains(&entries), "seed {seed} repeats an earlier matrix");
        seen.push(entries);
        let h = m.hilbert_from_zero();
        ensure!(h == [1, 3, 4, 3, 1], "seed {seed}: h = {h:?}");
        let i = m.degrees().middle_degree();
        ensure!(i == 1, "middle degree {i}");
        let (_, gb) = lefschetz::middle_locus(&m);
        let measure = gb.measure();
        ensure!(
            measure.projective_dimension == 0 && measure.degree == 6,
            "seed {seed}: dimension {} degree {}",
            measure.projective_dimension,
            measure.degree
        );
        let by_h = binomial(h[2] as i64, h[1] as i64 - 1);
        let by_c2 = binomial(bundle::chern(m.degrees()).twist(3).c2, 2);
        ensure!(by_h == 6 && by_c2 == 6, "C(h2, h1 - 1) = {by_h}, C(c2(E(3)), 2) = {by_c2}");
        // the eliminant of a lex basis in random coordinates counts the same points
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let search = gb.rational_points(&mut rng).ok_or("no point search on a 0-dimensional locus")?;
        ensure!(search.eliminant_degree == 6, "eliminant degree {}", search.eliminant_degree);
        within(Duration::from_secs(10), start, &format!("seed {seed}"))?;
        worst = worst.max(start.elapsed());
    }
    Ok(format!("5 seeds, h = (1,3,4,3,1), 6 points each, slowest {worst:.2?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let m = generic(&[2, 2, 2], &[0], 1);
    let (_, gb) = lefschetz::middle_locus(&m);
    let measure = gb.measure();
    ensure!(measure.codimension() == 1, "codimension {}", measure.codimension());
    let h1 = m.h(1) as u64;
    ensure!(measure.degree == h1 && h1 == 3, "degree {} vs h1 = {h1}", measure.degree);
    within(Duration::from_secs(10), start, "(2,2,2)")?;
    Ok(format!("curve of degree {} = h1", measure.degree))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let m = monomial_344();
    let deg = m.degrees();
    let stability = bundle::classify_stability(deg).map_err(|e| e.to_string())?;
    let prediction = predictor::predict(&m, &stability, &bundle::chern(deg)).map_err(|e| e.to_string())?;
    let (_, gb) = lefschetz::middle_locus(&m);
    let cmp = predictor::compare(&prediction, &gb.measure());
    ensure!(prediction.expected_codimension == 2, "expected codimension {}", prediction.expected_codimension);
    ensure!(cmp.codim == 1, "measured codimension {}", cmp.codim);
    ensure!(cmp.verdict == Verdict::GeneralityRequired, "verdict {}", cmp.verdict.as_str());
    within(Duration::from_secs(30), start, "monomial (3,4,4)")?;
    Ok("expected 2, measured 1, generality-required".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let m = generic(&[1, 1, 1, 2], &[0, 0], 1);
    let h = m.hilbert_from_zero();
    ensure!(h == [2, 3, 2], "h = {h:?}");
    let deg = m.degrees();
    ensure!(deg.d() == 5, "d = {}", deg.d());
    let stability = bundle::classify_stability(deg).map_err(|e| e.to_string())?;
    ensure!(stability.class == Stability::Stable, "class {:?}", stability.class);
    let (_, gb) = lefschetz::middle_locus(&m);
    let measure = gb.measure();
    ensure!(
        measure.projective_dimension == 0 && measure.degree == 3,
        "dimension {} degree {}",
        measure.projective_dimension,
        measure.degree
    );
    let by_h = binomial(h[1] as i64, h[0] as i64 - 1);
    let by_c2 = binomial(bundle::chern(deg).twist(2).c2, 2);
    ensure!(by_h == 3 && by_c2 == 3, "C(3,1) = {by_h}, C(c2(E(2)), 2) = {by_c2}");
    within(Duration::from_secs(10), start, "(1,1,1,2)/(0,0)")?;
    Ok("h = (2,3,2), stable, 3 points".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let m = generic(&[2, 2, 2, 3], &[0, 1], 1);
    let h = m.hilbert_from_zero();
    ensure!(h == [1, 4, 6, 6, 4, 1], "h = {h:?}");
    ensure!(m.degrees().d() == 8, "d = {}", m.degrees().d());
    let (_, gb) = lefschetz::middle_locus(&m);
    let measure = gb.measure();
    ensure!(measure.codimension() == 1, "codimension {}", measure.codimension());
    ensure!(measure.degree == 6 && h[2] == 6, "degree {} vs h2 = {}", measure.degree, h[2]);
    within(Duration::from_secs(60), start, "(2,2,2,3)/(0,1)")?;
    Ok("h = (1,4,6,6,4,1), curve of degree 6 = h2".into())
}

/// Fixtures 1 to 5, with all five seeds of the first.
fn fixtures_1_to_5() -> Vec<(String, GradedModule, u64)> {
    let mut out = Vec::new();
    for seed in 1..=5 {
        out.push((format!("(2,2,3) seed {seed}"), generic(&[2, 2, 3], &[0], seed), seed));
    }
    out.push(("(2,2,2)".into(), generic(&[2, 2, 2], &[0], 1), 1));
    out.push(("monomial (3,4,4)".into(), monomial_344(), 1));
    out.push(("(1,1,1,2)/(0,0)".into(), generic(&[1, 1, 1, 2], &[0, 0], 1), 1));
    out.push(("(2,2,2,3)/(0,1)".into(), generic(&[2, 2, 2, 3], &[0, 1], 1), 1));
    out
}

/// Points on a curve cannot be listed exhaustively; this many are sampled.
const CURVE_SAMPLES: usize = 60;

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let f = field();
    let mut uniform = 0;
    let mut on_locus = 0;
    for (name, m, seed) in fixtures_1_to_5() {
        let jl = JumpingLines::new(m.presentation(), seed).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(7919));
        let mut lines: Vec<[FieldElement; 3]> = (0..150).map(|_| f.random_point(&mut rng)).collect();
        let (_, gb) = lefschetz::middle_locus(&m);
        let limit = if gb.measure().projective_dimension == 0 {
            usize::MAX
        } else {
            CURVE_SAMPLES
        };
        let points = jumping::sample_locus_points(&gb, limit, &mut rng);
        uniform += lines.len();
        on_locus += points.len();
        let n_points = points.len();
        lines.extend(points);
        let results: Vec<(bool, bool, bool)> = lines
            .par_iter()
            .map(|ell| {
                let lef = lefschetz::is_lefschetz(&m, ell).map_err(|e| e.to_string())?.lefschetz;
                let line = LinePoint::new(f, *ell).map_err(|e| e.to_string())?;
                let jumping = jl.is_jumping(&line).map_err(|e| e.to_string())?;
                Ok((jumping, lef, jumping == !lef))
            })
            .collect::<Result<_, String>>()?;
        let exceptions = results.iter().filter(|r| !r.2).count();
        ensure!(exceptions == 0, "{name}: {exceptions} exceptions");
        let locus_lefschetz = results[150..].iter().filter(|r| r.1).count();
        ensure!(locus_lefschetz == 0, "{name}: {locus_lefschetz} of {n_points} locus points are Lefschetz");
    }
    ensure!(on_locus > 0, "no base-field points on any locus");
    within(Duration::from_secs(300), start, "suite")?;
    Ok(format!(
        "{uniform} uniform lines and {on_locus} locus points, 0 exceptions, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let f = field();
    let fixtures: Vec<(&[i64], &[i64])> = vec![
        (&[1, 1, 1, 8], &[0, 0]),
        (&[2, 2, 6], &[0]),
        (&[1, 2, 4], &[0]),
        (&[1, 1, 3], &[0]),
        (&[2, 2, 3], &[0]),
        (&[1, 1, 1, 2], &[0, 0]),
        (&[3, 3, 3], &[0]),
        (&[2, 2, 2], &[0]),
        (&[2, 2, 4], &[0]),
    ];
    let mut unstable = 0;
    let mut failing = 0;
    for (k, (a, b)) in fixtures.iter().enumerate() {
        let seed = 100 + k as u64;
        let m = generic(a, b, seed);
        let stability = bundle::classify_stability(m.degrees()).map_err(|e| e.to_string())?;
        if stability.class.is_unstable() {
            unstable += 1;
        }
        let jl = JumpingLines::new(m.presentation(), seed).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // half on the locus when it has points, so both branches of the table are hit
        let (_, gb) = lefschetz::middle_locus(&m);
        let mut lines = jumping::sample_locus_points(&gb, 50, &mut rng);
        while lines.len() < 100 {
            lines.push(f.random_point(&mut rng));
        }
        let results: Vec<(bool, bool)> = lines
            .par_iter()
            .map(|ell| {
                let lef = lefschetz::is_lefschetz(&m, ell).map_err(|e| e.to_string())?.lefschetz;
                let split = jl.splitting_type(&LinePoint::new(f, *ell).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let oracle = bundle::lefschetz_oracle(&stability, &split.twist(stability.t0)).map_err(|e| e.to_string())?;
                Ok((oracle, lef))
            })
            .collect::<Result<_, String>>()?;
        let bad = results.iter().filter(|(o, l)| o != l).count();
        ensure!(bad == 0, "{a:?}/{b:?}: {bad} disagreements in 100 lines");
        failing += results.iter().filter(|(_, l)| !l).count();
    }
    ensure!(unstable >= 3, "only {unstable} unstable fixtures");
    ensure!(failing > 0, "no non-Lefschetz line was sampled");
    within(Duration::from_secs(120), start, "suite")?;
    Ok(format!(
        "{} fixtures ({unstable} unstable), 100 lines each, {failing} non-Lefschetz lines, 0 disagreements",
        fixtures.len()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let spec = SurveySpec {
        grid: Grid::All,
        seed: 0,
        prime: field(),
        random_sequences: 5,
        lines: 100,
        include_monomial: false,
    };
    let report = cli::run_survey(&spec).map_err(|e| e.to_string())?;
    ensure!(report.rows.len() == cli::ci_grid().len() + 5, "{} rows", report.rows.len());
    for row in &report.rows {
        for c in &row.checks {
            ensure!(c.pass, "{:?}/{:?}: {} failed", row.a, row.b, c.name);
        }
    }
    within(Duration::from_secs(600), start, "grid")?;
    Ok(format!(
        "{} fixtures, {} checks each, all pass, {:.2?}",
        report.rows.len(),
        report.rows[0].checks.len(),
        start.elapsed()
    ))
}

fn identity_fixtures() -> Vec<DegreeData> {
    let mut out: Vec<DegreeData> = vec![
        degrees(&[2, 2, 3], &[0]),
        degrees(&[2, 2, 2], &[0]),
        degrees(&[3, 4, 4], &[0]),
        degrees(&[1, 1, 1, 2], &[0, 0]),
        degrees(&[2, 2, 2, 3], &[0, 1]),
        degrees(&[1, 1, 1, 8], &[0, 0]),
        degrees(&[2, 2, 6], &[0]),
        degrees(&[1, 2, 4], &[0]),
        degrees(&[1, 1, 3], &[0]),
    ];
    out.extend(cli::ci_grid());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    out.extend((0..5).map(|_| cli::random_n2_sequence(&mut rng)));
    out
}

fn criterion_9() -> Outcome {
    let fixtures = identity_fixtures();
    let mut binomial_checked = 0;
    for deg in &fixtures {
        let c = bundle::chern(deg);
        for t in -10..=10 {
            let closed = bundle::euler_characteristic(deg, t);
            let sums = bundle::euler_characteristic_by_line_bundles(deg, t);
            ensure!(closed == sums, "{deg:?} t = {t}: chi {closed} vs {sums}");
            // E(t) is the kernel bundle of the shifted degrees
            let shifted = DegreeData::new(
                deg.a().iter().map(|x| x - t).collect(),
                deg.b().iter().map(|x| x - t).collect(),
            )
            .map_err(|e| e.to_string())?;
            let direct = bundle::chern(&shifted);
            ensure!(
                direct.c2 == c.c2 + c.c1 * t + t * t && direct.c1 == c.c1 + 2 * t,
                "{deg:?} t = {t}: c(E(t)) = ({}, {})",
                direct.c1,
                direct.c2
            );
        }
        let stability = bundle::classify_stability(deg).map_err(|e| e.to_string())?;
        if deg.d() % 2 != 0 && stability.class == Stability::Stable {
            let m = GradedModule::generic(field(), deg, 1).map_err(|e| e.to_string())?;
            // h indexed as in criteria 1 and 4: the pair (i*, i* + 1) at i* = (d - 5) / 2
            let i = (deg.d() - 5) / 2;
            let by_h = binomial(m.h(i + 1) as i64, m.h(i) as i64 - 1);
            let by_c2 = binomial(stability.c2_norm, 2);
            ensure!(by_h == by_c2, "{deg:?}: C(h_{}, h_{} - 1) = {by_h}, C(c2(E_norm), 2) = {by_c2}", i + 1, i);
            binomial_checked += 1;
        }
    }
    ensure!(binomial_checked >= 3, "only {binomial_checked} d-odd stable fixtures");
    Ok(format!(
        "{} fixtures over -10 <= t <= 10, binomial identity on {binomial_checked} d-odd stable fixtures",
        fixtures.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("generic (2,2,3), five seeds", criterion_1),
        ("generic (2,2,2)", criterion_2),
        ("monomial (3,4,4)", criterion_3),
        ("(1,1,1,2)/(0,0)", criterion_4),
        ("(2,2,2,3)/(0,1)", criterion_5),
        ("jumping lines = non-Lefschetz lines", criterion_6),
        ("splitting-type oracle", criterion_7),
        ("structural grid", criterion_8),
        ("numerical identities", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{took:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{took:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
