//! Numerical invariants of the rank-2 bundle `E` in
//! `0 -> E -> ⊕ O(-a_i) -> ⊕ O(-b_j) -> 0`.
//!
//! Everything here is read off from the degree data. `E^∨ ≅ E(d)` for a
//! rank-2 bundle with `c1 = -d`, so dualizing the sequence gives
//! `0 -> ⊕ O(b_j - d) -> ⊕ O(a_i - d) -> E -> 0`, from which `h0` is exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::DegreeData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub c1: i64,
    pub c2: i64,
    pub d: i64,
}

impl ChernData {
    /// Chern classes of `E(t)`.
    pub fn twist(&self, t: i64) -> ChernData {
        ChernData {
            c1: self.c1 + 2 * t,
            c2: self.c2 + self.c1 * t + t * t,
            d: self.d - 2 * t,
        }
    }
}

fn e1(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn e2(v: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            s += v[i] * v[j];
        }
    }
    s
}

/// From `c(E) * Π(1 - b_j h) = Π(1 - a_i h)` modulo `h^3`.
pub fn chern(degrees: &DegreeData) -> ChernData {
    let (a, b) = (degrees.a(), degrees.b());
    ChernData {
        c1: e1(b) - e1(a),
        c2: e2(a) - e1(a) * e1(b) + e1(b) * e1(b) - e2(b),
        d: degrees.d(),
    }
}

/// `dim R_k = C(k + 2, 2)`, zero for `k < 0`.
pub fn line_bundle_h0(k: i64) -> i64 {
    if k < 0 {
        0
    } else {
        (k + 1) * (k + 2) / 2
    }
}

/// `chi(O(k)) = (k + 1)(k + 2) / 2` for every `k`.
pub fn line_bundle_chi(k: i64) -> i64 {
    (k + 1) * (k + 2) / 2
}

/// `chi(E(t)) = t^2 + 3t + 2 - dt - 3d/2 + (Σ a_i^2 - Σ b_j^2) / 2`.
pub fn euler_characteristic(degrees: &DegreeData, t: i64) -> i64 {
    let d = degrees.d();
    let sq = |v: &[i64]| v.iter().map(|x| x * x).sum::<i64>();
    let twice = sq(degrees.a()) - sq(degrees.b()) - 3 * d;
    debug_assert_eq!(twice % 2, 0);
    t * t + 3 * t + 2 - d * t + twice / 2
}

/// `Σ chi(O(t - a_i)) - Σ chi(O(t - b_j))`.
pub fn euler_characteristic_by_line_bundles(degrees: &DegreeData, t: i64) -> i64 {
    degrees.a().iter().map(|&a| line_bundle_chi(t - a)).sum::<i64>()
        - degrees.b().iter().map(|&b| line_bundle_chi(t - b)).sum::<i64>()
}

/// Riemann–Roch for a rank-2 bundle: `chi = 2 + 3 c1 / 2 + c1^2 / 2 - c2`, evaluated on `E(t)`.
pub fn euler_characteristic_by_riemann_roch(degrees: &DegreeData, t: i64) -> i64 {
    let c = chern(degrees).twist(t);
    let twice = 4 + 3 * c.c1 + c.c1 * c.c1 - 2 * c.c2;
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// `h0(E(t)) = Σ C(t - d + a_i + 2, 2)_+ - Σ C(t - d + b_j + 2, 2)_+`.
pub fn h0(degrees: &DegreeData, t: i64) -> Result<u64> {
    let d = degrees.d();
    let v = degrees.a().iter().map(|&a| line_bundle_h0(t - d + a)).sum::<i64>()
        - degrees.b().iter().map(|&b| line_bundle_h0(t - d + b)).sum::<i64>();
    if v < 0 {
        return Err(Error::Inconsistent(format!("h0(E({t})) = {v} < 0")));
    }
    Ok(v as u64)
}

/// `h2(E(t)) = h0(E^∨(-t-3)) = h0(E(d - 3 - t))` by Serre duality.
pub fn h2(degrees: &DegreeData, t: i64) -> Result<u64> {
    h0(degrees, degrees.d() - 3 - t)
}

/// `h1(E(t)) = h0 + h2 - chi`, which is `dim M_t`.
pub fn h1(degrees: &DegreeData, t: i64) -> Result<u64> {
    let v = h0(degrees, t)? as i64 + h2(degrees, t)? as i64 - euler_characteristic(degrees, t);
    if v < 0 {
        return Err(Error::Inconsistent(format!("h1(E({t})) = {v} < 0")));
    }
    Ok(v as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stability {
    Stable,
    SemistableStrict,
    Unstable,
}

impl Stability {
    pub fn is_unstable(self) -> bool {
        self == Stability::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::SemistableStrict => "semistable-strict",
            Stability::Unstable => "unstable",
        }
    }
}

/// `E|ℓ ≅ O(alpha) ⊕ O(beta)` with `alpha >= beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingType {
    pub alpha: i64,
    pub beta: i64,
}

impl SplittingType {
    pub fn new(x: i64, y: i64) -> Self {
        SplittingType {
            alpha: x.max(y),
            beta: x.min(y),
        }
    }

    pub fn twist(&self, t: i64) -> Self {
        SplittingType {
            alpha: self.alpha + t,
            beta: self.beta + t,
        }
    }

    pub fn gap(&self) -> i64 {
        self.alpha - self.beta
    }

    pub fn degree(&self) -> i64 {
        self.alpha + self.beta
    }
}

impl std::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub class: Stability,
    pub d: i64,
    /// `E_norm = E(t0)`.
    pub t0: i64,
    /// `c1(E_norm)`, 0 or -1.
    pub c1_norm: i64,
    pub c2_norm: i64,
    /// `k = -min{t : h0(E_norm(t)) > 0}`, present for unstable bundles.
    pub instability_index: Option<i64>,
}

impl StabilityReport {
    /// Splitting type of `E_norm` on a general line: `(0, 0)` or `(0, -1)` when
    /// semistable, `(k, -k)` or `(k, -k-1)` when unstable.
    pub fn generic_splitting(&self) -> SplittingType {
        let k = self.instability_index.unwrap_or(0);
        SplittingType::new(k, self.c1_norm - k)
    }
}

pub fn classify_stability(degrees: &DegreeData) -> Result<StabilityReport> {
    let d = degrees.d();
    let t0 = d.div_euclid(2);
    let c1_norm = 2 * t0 - d;
    let h0n = |s: i64| h0(degrees, t0 + s);
    let class = if c1_norm == 0 {
        if h0n(-1)? > 0 {
            Stability::Unstable
        } else if h0n(0)? > 0 {
            Stability::SemistableStrict
        } else {
            Stability::Stable
        }
    } else if h0n(0)? > 0 {
        Stability::Unstable
    } else {
        Stability::Stable
    };
    let instability_index = if class == Stability::Unstable {
        let mut s = 0;
        while h0n(s - 1)? > 0 {
            s -= 1;
        }
        Some(-s)
    } else {
        None
    };
    Ok(StabilityReport {
        class,
        d,
        t0,
        c1_norm,
        c2_norm: chern(degrees).twist(t0).c2,
        instability_index,
    })
}

/// Lefschetz status of a line from the stability class and the normalized splitting type alone.
///
/// Semistable: Lefschetz iff `alpha - beta <= 1`. Unstable: Lefschetz iff the
/// splitting is the generic `(k, c1 - k)`.
pub fn lefschetz_oracle(stability: &StabilityReport, splitting: &SplittingType) -> Result<bool> {
    if splitting.degree() != stability.c1_norm {
        return Err(Error::Inconsistent(format!(
            "splitting type {splitting} does not have degree c1 = {}",
            stability.c1_norm
        )));
    }
    Ok(match stability.class {
        Stability::Stable | Stability::SemistableStrict => splitting.gap() <= 1,
        Stability::Unstable => *splitting == stability.generic_splitting(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(a: &[i64], b: &[i64]) -> DegreeData {
        DegreeData::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn chern_classes() {
        let c = chern(&dd(&[2, 2, 3], &[0]));
        assert_eq!((c.c1, c.c2), (-7, 16));
        assert_eq!(c.twist(3).c2, 4);
        let c = chern(&dd(&[1, 1, 1, 2], &[0, 0]));
        assert_eq!((c.c1, c.c2), (-5, 9));
        assert_eq!(c.twist(2).c2, 3);
    }

    #[test]
    fn euler_characteristics() {
        let d = dd(&[2, 2, 3], &[0]);
        assert_eq!(euler_characteristic(&d, 0), 0);
        let d = dd(&[1, 1, 1, 2], &[0, 0]);
        assert_eq!(euler_characteristic(&d, 0), -2);
        for t in -5..5 {
            assert_eq!(
                euler_characteristic(&d, t) - euler_characteristic(&d, t - 1),
                2 * t + 2 - d.d()
            );
        }
    }

    #[test]
    fn stability_classes() {
        let s = classify_stability(&dd(&[2, 2, 3], &[0])).unwrap();
        assert_eq!((s.class, s.c1_norm, s.t0), (Stability::Stable, -1, 3));
        let s = classify_stability(&dd(&[2, 2, 2], &[0])).unwrap();
        assert_eq!((s.class, s.c1_norm), (Stability::Stable, -0));
        let s = classify_stability(&dd(&[2, 2, 4], &[0])).unwrap();
        assert_eq!(s.class, Stability::SemistableStrict);
        let s = classify_stability(&dd(&[1, 1, 1, 8], &[0, 0])).unwrap();
        assert_eq!((s.class, s.instability_index), (Stability::Unstable, Some(2)));
        let s = classify_stability(&dd(&[2, 2, 6], &[0])).unwrap();
        assert_eq!((s.class, s.instability_index, s.c1_norm), (Stability::Unstable, Some(1), 0));
        let s = classify_stability(&dd(&[1, 2, 4], &[0])).unwrap();
        assert_eq!((s.class, s.instability_index), (Stability::Unstable, Some(0)));
    }

    #[test]
    fn unstable_h0_closed_form() {
        // a_4 = 8, d = 11: h0(E(t)) = C(t - 1, 2)
        let d = dd(&[1, 1, 1, 8], &[0, 0]);
        for t in -3..9 {
            let expect = if t > 2 { (t - 1) * (t - 2) / 2 } else { 0 };
            assert_eq!(h0(&d, t).unwrap() as i64, expect, "t = {t}");
        }
        assert_eq!(h0(&dd(&[2, 2, 3], &[0]), 3).unwrap(), 0);
    }

    #[test]
    fn oracle_cases() {
        let semi = classify_stability(&dd(&[2, 2, 2], &[0])).unwrap();
        assert!(lefschetz_oracle(&semi, &SplittingType::new(0, 0)).unwrap());
        assert!(!lefschetz_oracle(&semi, &SplittingType::new(1, -1)).unwrap());
        assert!(lefschetz_oracle(&semi, &SplittingType::new(0, -1)).is_err());
        let c1_zero = StabilityReport {
            class: Stability::Unstable,
            d: 10,
            t0: 5,
            c1_norm: 0,
            c2_norm: 0,
            instability_index: Some(2),
        };
        assert!(!lefschetz_oracle(&c1_zero, &SplittingType::new(3, -3)).unwrap());
        assert!(lefschetz_oracle(&c1_zero, &SplittingType::new(2, -2)).unwrap());
        let boundary = classify_stability(&dd(&[1, 2, 4], &[0])).unwrap();
        assert!(lefschetz_oracle(&boundary, &SplittingType::new(0, -1)).unwrap());
        assert!(!lefschetz_oracle(&boundary, &SplittingType::new(1, -2)).unwrap());
    }
}
