//! Closed-form codimension and degree predictions for the non-Lefschetz locus,
//! and the comparison against measured values.

use serde::Serialize;

use crate::bundle::{ChernData, Stability, StabilityReport};
use crate::error::{Error, Result};
use crate::groebner::IdealMeasure;
use crate::presentation::GradedModule;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `h_{i*+1} - h_{i*} + 1` at `i* = floor((d - 4) / 2)`.
pub fn expected_codimension(m: &GradedModule) -> i64 {
    let i = m.degrees().middle_degree();
    m.h(i + 1) as i64 - m.h(i) as i64 + 1
}

/// 1 for unstable bundles and for even `d`, 2 otherwise.
pub fn predicted_codimension(s: &StabilityReport) -> i64 {
    if s.class == Stability::Unstable || s.d % 2 == 0 {
        1
    } else {
        2
    }
}

/// `h_{i*}` for a predicted curve; `C(h_{i*+1}, h_{i*} - 1)` for predicted points,
/// which must agree with `C(c2(E_norm), 2)`.
pub fn predicted_degree(m: &GradedModule, s: &StabilityReport, c: &ChernData) -> Result<u64> {
    let i = m.degrees().middle_degree();
    let (lo, hi) = (m.h(i) as i64, m.h(i + 1) as i64);
    if predicted_codimension(s) == 1 {
        return Ok(lo as u64);
    }
    let by_h = binomial(hi, lo - 1);
    let c2_norm = c.twist(s.t0).c2;
    let by_c2 = binomial(c2_norm, 2);
    if by_h != by_c2 {
        return Err(Error::Inconsistent(format!(
            "C(h_{}, h_{} - 1) = {by_h} but C(c2(E_norm), 2) = {by_c2}",
            i + 1,
            i
        )));
    }
    Ok(by_h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub middle_degree: i64,
    pub expected_codimension: i64,
    pub predicted_codimension: i64,
    pub predicted_degree: u64,
    pub stability: Stability,
}

pub fn predict(m: &GradedModule, s: &StabilityReport, c: &ChernData) -> Result<Prediction> {
    Ok(Prediction {
        middle_degree: m.degrees().middle_degree(),
        expected_codimension: expected_codimension(m),
        predicted_codimension: predicted_codimension(s),
        predicted_degree: predicted_degree(m, s, c)?,
        stability: s.class,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    /// The locus is a proper subset but larger than expected: the predictions need a general `φ`.
    GeneralityRequired,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::GeneralityRequired => "generality-required",
            Verdict::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub statement: &'static str,
    pub expected: i64,
    pub measured: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub prediction: Prediction,
    pub codim: i64,
    pub degree: u64,
    pub claims: Vec<Claim>,
    pub verdict: Verdict,
}

pub fn compare(prediction: &Prediction, measured: &IdealMeasure) -> Comparison {
    let codim = measured.codimension() as i64;
    let degree = measured.degree;
    let claims = vec![
        Claim {
            name: "wlp-floor",
            statement: "a general line is a Lefschetz element, so the locus is a proper closed subset",
            expected: 1,
            measured: codim,
            pass: codim >= 1,
        },
        Claim {
            name: "expected-codimension",
            statement: "codimension of the middle-degree locus equals h_{i*+1} - h_{i*} + 1",
            expected: prediction.expected_codimension,
            measured: codim,
            pass: codim == prediction.expected_codimension,
        },
        Claim {
            name: "codimension-classification",
            statement: "codimension is 1 for unstable bundles or even d, and 2 for stable bundles with odd d",
            expected: prediction.predicted_codimension,
            measured: codim,
            pass: codim == prediction.predicted_codimension,
        },
        Claim {
            name: "degree",
            statement: "degree is h_{i*} for a curve and C(h_{i*+1}, h_{i*} - 1) = C(c2(E_norm), 2) for points",
            expected: prediction.predicted_degree as i64,
            measured: degree as i64,
            pass: degree == prediction.predicted_degree,
        },
    ];
    let verdict = if claims.iter().all(|c| c.pass) {
        Verdict::Match
    } else if claims[0].pass && codim < prediction.expected_codimension {
        Verdict::GeneralityRequired
    } else {
        Verdict::Mismatch
    };
    Comparison {
        prediction: prediction.clone(),
        codim,
        degree,
        claims,
        verdict,
    }
}
