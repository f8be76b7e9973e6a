//! Jobs and JSON reports behind the `lefschetz-locus` binary.
//!
//! Every report is a plain serializable value; identical jobs give
//! byte-identical JSON.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bundle::{self, ChernData, SplittingType, StabilityReport};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::jumping::{self, JumpingLines, LinePoint};
use crate::lefschetz;
use crate::predictor::{self, Claim, Verdict};
use crate::presentation::{DegreeData, GradedModule, PresentationMatrix};

pub const TOOL: &str = "lefschetz-locus";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default number of sampled lines for the jumping-line and WLP checks.
pub const DEFAULT_SAMPLES: usize = 20;

/// A single fixture: degrees plus either a seed or an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub degrees: DegreeData,
    pub matrix: Option<Vec<Vec<String>>>,
    pub seed: u64,
    pub prime: PrimeField,
    pub samples: usize,
}

/// On-disk job description: `{"a": [...], "b": [...], "seed": N}` or with `"matrix"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
}

impl JobSpec {
    pub fn new(a: Vec<i64>, b: Vec<i64>, seed: u64, prime: PrimeField) -> Result<Self> {
        Ok(JobSpec {
            degrees: DegreeData::new(a, b)?,
            matrix: None,
            seed,
            prime,
            samples: DEFAULT_SAMPLES,
        })
    }

    pub fn with_matrix(mut self, matrix: Vec<Vec<String>>) -> Self {
        self.matrix = Some(matrix);
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn from_job_file(path: &Path, prime: PrimeField, default_seed: u64) -> Result<Self> {
        let job: JobFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        let spec = JobSpec::new(job.a, job.b, job.seed.unwrap_or(default_seed), prime)?;
        Ok(match job.matrix {
            Some(m) => spec.with_matrix(m),
            None => spec,
        })
    }

    /// The module for this job; seeded draws may move to a later seed.
    pub fn module(&self) -> Result<GradedModule> {
        match &self.matrix {
            Some(rows) => GradedModule::new(PresentationMatrix::parse(self.prime, &self.degrees, rows)?),
            None => GradedModule::generic(self.prime, &self.degrees, self.seed),
        }
    }
}

/// Reads a matrix file: a JSON array of rows of polynomial strings.
pub fn read_matrix_file(path: &Path) -> Result<Vec<Vec<String>>> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub prime: u32,
    pub seed: u64,
    /// Seed of the accepted draw; differs from `seed` after a rejection, absent for explicit matrices.
    pub seed_used: Option<u64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub explicit_matrix: bool,
}

fn header(command: &'static str, spec: &JobSpec, m: Option<&GradedModule>) -> Header {
    Header {
        tool: TOOL,
        version: VERSION,
        command,
        prime: spec.prime.p(),
        seed: spec.seed,
        seed_used: m.and_then(|m| m.presentation().seed()),
        a: spec.degrees.a().to_vec(),
        b: spec.degrees.b().to_vec(),
        explicit_matrix: spec.matrix.is_some(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    pub pass: bool,
}

fn check(name: &'static str, statement: &'static str, pass: bool) -> Check {
    Check { name, statement, pass }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    #[serde(flatten)]
    pub header: Header,
    pub d: i64,
    pub socle_degree: i64,
    /// Degree of the first entry of `hilbert`.
    pub hilbert_start: i64,
    pub hilbert: Vec<usize>,
    pub length: usize,
    pub socle: Vec<i64>,
    pub expected_socle: Vec<i64>,
    pub checks: Vec<Check>,
}

impl HilbertReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn hilbert_checks(m: &GradedModule) -> Vec<Check> {
    vec![
        check("finite-length", "M_t = 0 for e < t <= e + 3", true),
        check("unimodal", "the Hilbert function is unimodal", m.is_unimodal()),
        check("symmetric", "h_t = h_{d-3-t}", m.is_symmetric()),
        check(
            "socle",
            "the socle sits in degrees d - b_j - 3",
            m.socle() == m.degrees().expected_socle(),
        ),
        check(
            "cohomology",
            "h_t = h0(E(t)) + h2(E(t)) - chi(E(t))",
            m.hilbert_matches_closed_form(),
        ),
    ]
}

pub fn run_hilbert(spec: &JobSpec) -> Result<HilbertReport> {
    let m = spec.module()?;
    let deg = m.degrees();
    Ok(HilbertReport {
        header: header("hilbert", spec, Some(&m)),
        d: deg.d(),
        socle_degree: deg.socle_degree(),
        hilbert_start: m.start(),
        hilbert: m.hilbert_function().to_vec(),
        length: m.length(),
        socle: m.socle(),
        expected_socle: deg.expected_socle(),
        checks: hilbert_checks(&m),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusSummary {
    pub middle_degree: i64,
    pub rows: usize,
    pub cols: usize,
    pub minor_size: usize,
    pub minors: usize,
    pub basis_size: usize,
    pub hilbert_numerator: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpingSummary {
    pub generic_splitting: SplittingType,
    pub predicted_generic_splitting: SplittingType,
    pub uniform_lines: usize,
    pub locus_lines: usize,
    /// Lines where `is_jumping != !is_lefschetz`.
    pub exceptions: usize,
    /// Lines where the case-table oracle disagrees with the rank test.
    pub oracle_exceptions: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusReport {
    #[serde(flatten)]
    pub header: Header,
    pub hilbert: Vec<usize>,
    pub hilbert_start: i64,
    pub chern: ChernData,
    pub stability: StabilityReport,
    pub codim: i64,
    pub degree: u64,
    pub expected: i64,
    pub predicted_codim: i64,
    pub predicted_degree: u64,
    pub verdict: Verdict,
    pub claims: Vec<Claim>,
    pub locus: LocusSummary,
    pub jumping: JumpingSummary,
}

impl LocusReport {
    pub fn all_pass(&self) -> bool {
        self.verdict == Verdict::Match && self.jumping.exceptions == 0 && self.jumping.oracle_exceptions == 0
    }
}

/// Checks `is_jumping = !is_lefschetz` and the oracle on uniform lines plus locus points.
pub fn jumping_summary(
    m: &GradedModule,
    stability: &StabilityReport,
    locus_gb: &crate::groebner::GroebnerBasis,
    samples: usize,
    seed: u64,
) -> Result<JumpingSummary> {
    let f = m.field();
    let jl = JumpingLines::new(m.presentation(), seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut lines: Vec<[FieldElement; 3]> = (0..samples).map(|_| f.random_point(&mut rng)).collect();
    let from_locus = jumping::sample_locus_points(locus_gb, samples.max(1), &mut rng);
    let locus_lines = from_locus.len();
    lines.extend(from_locus);
    let outcomes: Vec<(bool, bool)> = lines
        .par_iter()
        .map(|ell| -> Result<(bool, bool)> {
            let line = LinePoint::new(f, *ell)?;
            let lef = lefschetz::is_lefschetz(m, ell)?.lefschetz;
            let split = jl.splitting_type(&line)?;
            let jumping = split != jl.generic();
            let oracle = bundle::lefschetz_oracle(stability, &split.twist(stability.t0))?;
            Ok((jumping == !lef, oracle == lef))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JumpingSummary {
        generic_splitting: jl.generic(),
        predicted_generic_splitting: stability.generic_splitting().twist(-stability.t0),
        uniform_lines: samples,
        locus_lines,
        exceptions: outcomes.iter().filter(|o| !o.0).count(),
        oracle_exceptions: outcomes.iter().filter(|o| !o.1).count(),
    })
}

pub fn run_locus(spec: &JobSpec) -> Result<LocusReport> {
    let m = spec.module()?;
    let deg = m.degrees();
    let chern = bundle::chern(deg);
    let stability = bundle::classify_stability(deg)?;
    let (ideal, gb) = lefschetz::middle_locus(&m);
    let measured = gb.measure();
    let prediction = predictor::predict(&m, &stability, &chern)?;
    let comparison = predictor::compare(&prediction, &measured);
    let jumping = jumping_summary(&m, &stability, &gb, spec.samples, spec.seed)?;
    Ok(LocusReport {
        header: header("locus", spec, Some(&m)),
        hilbert: m.hilbert_function().to_vec(),
        hilbert_start: m.start(),
        chern,
        stability,
        codim: comparison.codim,
        degree: comparison.degree,
        expected: prediction.expected_codimension,
        predicted_codim: prediction.predicted_codimension,
        predicted_degree: prediction.predicted_degree,
        verdict: comparison.verdict,
        claims: comparison.claims,
        locus: LocusSummary {
            middle_degree: ideal.degree,
            rows: ideal.rows,
            cols: ideal.cols,
            minor_size: ideal.minor_size,
            minors: ideal.generators.len(),
            basis_size: gb.len(),
            hilbert_numerator: measured.hilbert_numerator,
        },
        jumping,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    #[serde(flatten)]
    pub header: Header,
    pub line: [FieldElement; 3],
    pub lefschetz: bool,
    pub failing_degrees: Vec<i64>,
    pub splitting_type: SplittingType,
    pub normalized_splitting_type: SplittingType,
    pub generic_splitting_type: SplittingType,
    pub jumping: bool,
    pub oracle: bool,
    pub oracle_agrees: bool,
    pub jumping_iff_not_lefschetz: bool,
}

impl LineReport {
    pub fn all_pass(&self) -> bool {
        self.oracle_agrees && self.jumping_iff_not_lefschetz
    }
}

pub fn run_line(spec: &JobSpec, line: [i64; 3]) -> Result<LineReport> {
    let f = spec.prime;
    let ell = line.map(|c| f.from_i64(c));
    let point = LinePoint::new(f, ell)?;
    let m = spec.module()?;
    let stability = bundle::classify_stability(m.degrees())?;
    let check = lefschetz::is_lefschetz(&m, &ell)?;
    let jl = JumpingLines::new(m.presentation(), spec.seed)?;
    let split = jl.splitting_type(&point)?;
    let normalized = split.twist(stability.t0);
    let oracle = bundle::lefschetz_oracle(&stability, &normalized)?;
    let jumping = split != jl.generic();
    Ok(LineReport {
        header: header("line", spec, Some(&m)),
        line: ell,
        lefschetz: check.lefschetz,
        failing_degrees: check.failing_degrees,
        splitting_type: split,
        normalized_splitting_type: normalized,
        generic_splitting_type: jl.generic(),
        jumping,
        oracle,
        oracle_agrees: oracle == check.lefschetz,
        jumping_iff_not_lefschetz: jumping == !check.lefschetz,
    })
}

/// Which fixtures a survey covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grid {
    /// Generic complete intersections with `2 <= a_1 <= a_2 <= a_3 <= 4`.
    Ci,
    /// Seeded random sequences with two target degrees.
    N2,
    All,
}

#[derive(Clone, Debug)]
pub struct SurveySpec {
    pub grid: Grid,
    pub seed: u64,
    pub prime: PrimeField,
    /// Distinct random sequences with two target degrees.
    pub random_sequences: usize,
    /// Lines sampled per fixture for the WLP check.
    pub lines: usize,
    pub include_monomial: bool,
}

/// Sorted `a` in `[b2 + 1, 3]` over `b = (0, b2)`, `b2 in {0, 1}`.
pub fn random_n2_sequence<R: Rng + ?Sized>(rng: &mut R) -> DegreeData {
    let b2 = rng.gen_range(0..=1);
    let mut a: Vec<i64> = (0..4).map(|_| rng.gen_range(b2 + 1..=3)).collect();
    a.sort_unstable();
    DegreeData::new(a, vec![0, b2]).expect("valid sequence")
}

/// All `(a_1, a_2, a_3)` with `2 <= a_1 <= a_2 <= a_3 <= 4`.
pub fn ci_grid() -> Vec<DegreeData> {
    let mut out = Vec::new();
    for a1 in 2..=4 {
        for a2 in a1..=4 {
            for a3 in a2..=4 {
                out.push(DegreeData::new(vec![a1, a2, a3], vec![0]).unwrap());
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub monomial: bool,
    pub seed_used: Option<u64>,
    pub hilbert: Vec<usize>,
    pub stability: bundle::Stability,
    pub codim: i64,
    pub expected: i64,
    pub predicted_codim: i64,
    pub degree: u64,
    pub predicted_degree: u64,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimTally {
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub prime: u32,
    pub seed: u64,
    pub grid: Grid,
    pub rows: Vec<SurveyRow>,
    pub tally: Vec<ClaimTally>,
    pub matches: usize,
    pub generality_required: usize,
    pub mismatches: usize,
}

impl SurveyReport {
    pub fn all_pass(&self) -> bool {
        self.tally.iter().all(|t| t.fail == 0) && self.matches == self.rows.len()
    }
}

/// Structural checks for one fixture: those of `hilbert` plus WLP, the
/// expected-codimension floor and scheme equality of the middle locus with
/// the full one.
pub fn survey_row(m: &GradedModule, monomial: bool, lines: usize, seed: u64) -> Result<SurveyRow> {
    let deg = m.degrees();
    let chern = bundle::chern(deg);
    let stability = bundle::classify_stability(deg)?;
    let locus = lefschetz::locus_ideal(m);
    let measured = locus.middle_basis.measure();
    let prediction = predictor::predict(m, &stability, &chern)?;
    let comparison = predictor::compare(&prediction, &measured);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = m.field();
    let mut wlp = false;
    for _ in 0..lines.max(1) {
        if lefschetz::is_lefschetz(m, &f.random_point(&mut rng))?.lefschetz {
            wlp = true;
            break;
        }
    }
    let mut checks = hilbert_checks(m);
    checks.push(check("wlp", "some sampled line is a Lefschetz element", wlp));
    checks.push(check(
        "expected-codimension-one",
        "expected codimension is 1 when d is even or E is unstable",
        !(deg.d() % 2 == 0 || stability.class.is_unstable()) || prediction.expected_codimension == 1,
    ));
    checks.push(check(
        "middle-degree-locus",
        "the middle-degree locus and the full locus are the same scheme",
        locus.middle_equals_intersection(),
    ));
    Ok(SurveyRow {
        a: deg.a().to_vec(),
        b: deg.b().to_vec(),
        monomial,
        seed_used: m.presentation().seed(),
        hilbert: m.hilbert_function().to_vec(),
        stability: stability.class,
        codim: comparison.codim,
        expected: prediction.expected_codimension,
        predicted_codim: prediction.predicted_codimension,
        degree: comparison.degree,
        predicted_degree: prediction.predicted_degree,
        verdict: comparison.verdict,
        checks,
    })
}

pub fn run_survey(spec: &SurveySpec) -> Result<SurveyReport> {
    let f = spec.prime;
    // (degrees, monomial, seed) in fixture order
    let mut fixtures: Vec<(DegreeData, bool, u64)> = Vec::new();
    if matches!(spec.grid, Grid::Ci | Grid::All) {
        for (k, d) in ci_grid().into_iter().enumerate() {
            fixtures.push((d, false, spec.seed.wrapping_add(k as u64 * 1000)));
        }
    }
    if matches!(spec.grid, Grid::N2 | Grid::All) {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let mut drawn: Vec<DegreeData> = Vec::new();
        // repeats are redrawn while fresh sequences remain likely
        for _ in 0..spec.random_sequences * 20 {
            if drawn.len() == spec.random_sequences {
                break;
            }
            let d = random_n2_sequence(&mut rng);
            if !drawn.contains(&d) {
                drawn.push(d);
            }
        }
        for (k, d) in drawn.into_iter().enumerate() {
            fixtures.push((d, false, spec.seed.wrapping_add(500 + k as u64 * 1000)));
        }
    }
    if spec.include_monomial {
        fixtures.push((DegreeData::complete_intersection([3, 4, 4])?, true, spec.seed));
    }
    let rows = fixtures
        .par_iter()
        .map(|(d, monomial, seed)| {
            let m = if *monomial {
                let a = [d.a()[0], d.a()[1], d.a()[2]];
                GradedModule::new(PresentationMatrix::monomial_complete_intersection(f, a)?)?
            } else {
                GradedModule::generic(f, d, *seed)?
            };
            survey_row(&m, *monomial, spec.lines, *seed)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut tally: Vec<ClaimTally> = Vec::new();
    let mut count = |name: &'static str, pass: bool| {
        if let Some(t) = tally.iter_mut().find(|t| t.name == name) {
            if pass {
                t.pass += 1
            } else {
                t.fail += 1
            }
        } else {
            tally.push(ClaimTally {
                name,
                pass: pass as usize,
                fail: (!pass) as usize,
            });
        }
    };
    for row in &rows {
        for c in &row.checks {
            count(c.name, c.pass);
        }
        count("codimension-classification", row.codim == row.predicted_codim);
    }
    let by = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    Ok(SurveyReport {
        tool: TOOL,
        version: VERSION,
        command: "survey",
        prime: f.p(),
        seed: spec.seed,
        grid: spec.grid,
        matches: by(Verdict::Match),
        generality_required: by(Verdict::GeneralityRequired),
        mismatches: by(Verdict::Mismatch),
        rows,
        tally,
    })
}

fn csv<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn render_hilbert(r: &HilbertReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "a = ({})  b = ({})  d = {}  e = {}", csv(&r.header.a), csv(&r.header.b), r.d, r.socle_degree);
    let _ = writeln!(s, "h (from degree {}) = ({})", r.hilbert_start, csv(&r.hilbert));
    let _ = writeln!(s, "socle = ({})  expected ({})", csv(&r.socle), csv(&r.expected_socle));
    for c in &r.checks {
        let _ = writeln!(s, "  {:<28} {}", c.name, mark(c.pass));
    }
    s
}

pub fn render_locus(r: &LocusReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "a = ({})  b = ({})  h = ({})", csv(&r.header.a), csv(&r.header.b), csv(&r.hilbert));
    let _ = writeln!(
        s,
        "stability {}  c1 = {}  c2 = {}",
        r.stability.class.as_str(),
        r.chern.c1,
        r.chern.c2
    );
    let _ = writeln!(
        s,
        "B_{} is {}x{}; {} minors of size {}",
        r.locus.middle_degree, r.locus.rows, r.locus.cols, r.locus.minors, r.locus.minor_size
    );
    let _ = writeln!(s, "{:<28} {:>9} {:>9}  ", "claim", "expected", "measured");
    for c in &r.claims {
        let _ = writeln!(s, "{:<28} {:>9} {:>9}  {}", c.name, c.expected, c.measured, mark(c.pass));
    }
    let _ = writeln!(
        s,
        "jumping lines: {} uniform + {} on the locus, {} exceptions, {} oracle exceptions",
        r.jumping.uniform_lines, r.jumping.locus_lines, r.jumping.exceptions, r.jumping.oracle_exceptions
    );
    let _ = writeln!(s, "verdict: {}", r.verdict.as_str());
    s
}

pub fn render_line(r: &LineReport) -> String {
    format!(
        "line ({})  lefschetz {}  splitting {}  generic {}  jumping {}  oracle {}\n",
        csv(&r.line),
        r.lefschetz,
        r.splitting_type,
        r.generic_splitting_type,
        r.jumping,
        mark(r.oracle_agrees && r.jumping_iff_not_lefschetz)
    )
}

pub fn render_survey(r: &SurveyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<14} {:<8} {:<20} {:>5} {:>5} {:>6} {:>6}  verdict",
        "a", "b", "h", "codim", "exp", "deg", "pred"
    );
    for row in &r.rows {
        let name = if row.monomial {
            format!("{} mono", csv(&row.a))
        } else {
            csv(&row.a)
        };
        let _ = writeln!(
            s,
            "{:<14} {:<8} {:<20} {:>5} {:>5} {:>6} {:>6}  {}",
            name,
            csv(&row.b),
            csv(&row.hilbert),
            row.codim,
            row.expected,
            row.degree,
            row.predicted_degree,
            row.verdict.as_str()
        );
    }
    for t in &r.tally {
        let _ = writeln!(s, "  {:<28} {:>3} pass {:>3} fail", t.name, t.pass, t.fail);
    }
    s
}

/// Parses `l1,l2,l3`.
pub fn parse_line(text: &str) -> Result<[i64; 3]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Error::Parse {
        input: text.to_string(),
        message: "expected three comma-separated integers".into(),
    };
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0i64; 3];
    for (o, p) in out.iter_mut().zip(&parts) {
        *o = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_parsing() {
        assert_eq!(parse_line("1, -2,3").unwrap(), [1, -2, 3]);
        assert!(parse_line("1,2").is_err());
        assert!(parse_line("a,b,c").is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(ci_grid().len(), 10);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..20 {
            let d = random_n2_sequence(&mut rng);
            assert_eq!(d.a().len(), 4);
            assert!(d.a()[0] > d.b()[1]);
        }
    }

    #[test]
    fn hilbert_report_is_deterministic() {
        let spec = JobSpec::new(vec![2, 2, 3], vec![0], 7, PrimeField::default()).unwrap();
        let a = serde_json::to_string(&run_hilbert(&spec).unwrap()).unwrap();
        let b = serde_json::to_string(&run_hilbert(&spec).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"hilbert\":[1,3,4,3,1]"));
    }
}
