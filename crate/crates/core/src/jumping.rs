//! Restriction of `E` to a line and exact splitting types.

use std::collections::HashMap;

use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bundle::SplittingType;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::polyring::{BinaryForm, Polynomial};
use crate::presentation::PresentationMatrix;
use crate::univariate::common_binary_roots;

/// Number of random lines that vote on the generic splitting type.
pub const GENERIC_VOTES: usize = 5;

/// A line `{λ · x = 0}` of the plane together with a parametrization `x = s v + u w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinePoint {
    pub lambda: [FieldElement; 3],
    /// Rows are `x_1, x_2, x_3`; columns are `v, w`.
    pub param: [[FieldElement; 2]; 3],
}

impl LinePoint {
    pub fn new(field: PrimeField, lambda: [FieldElement; 3]) -> Result<Self> {
        if lambda.iter().all(|&c| c == 0) {
            return Err(Error::ZeroLine);
        }
        let row = Matrix::from_rows(field, &[lambda.iter().map(|&c| c as i64).collect()]);
        let kernel = row.kernel_basis();
        debug_assert_eq!(kernel.len(), 2);
        let param = [0, 1, 2].map(|i| [kernel[0][i], kernel[1][i]]);
        Ok(LinePoint { lambda, param })
    }

    pub fn random<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> Self {
        LinePoint::new(field, field.random_point(rng)).expect("random point is nonzero")
    }
}

/// `⊕ O_{P^1}(-a_i) -> ⊕ O_{P^1}(-b_j)`; entry `(j, i)` has degree `a_i - b_j` in `(s, u)`.
#[derive(Clone, Debug)]
pub struct RestrictedBundle {
    field: PrimeField,
    a: Vec<i64>,
    b: Vec<i64>,
    entries: Vec<Vec<Option<BinaryForm>>>,
}

pub fn restrict(p: &PresentationMatrix, line: &LinePoint) -> Result<RestrictedBundle> {
    let entries = p
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    if e.is_zero() {
                        Ok(None)
                    } else {
                        let form = e.substitute_line(&line.param)?;
                        Ok((!form.is_zero()).then_some(form))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RestrictedBundle {
        field: p.field(),
        a: p.degrees().a().to_vec(),
        b: p.degrees().b().to_vec(),
        entries,
    })
}

fn binary_dim(t: i64) -> usize {
    if t < 0 {
        0
    } else {
        t as usize + 1
    }
}

impl RestrictedBundle {
    /// Entry `(j, i)`, `None` when it vanishes.
    pub fn entry(&self, j: usize, i: usize) -> Option<&BinaryForm> {
        self.entries[j][i].as_ref()
    }

    /// Global sections in degree `t`: `⊕ H0(O(t - a_i)) -> ⊕ H0(O(t - b_j))`.
    pub fn global_section_matrix(&self, t: i64) -> Matrix {
        let rows: usize = self.b.iter().map(|&b| binary_dim(t - b)).sum();
        let cols: usize = self.a.iter().map(|&a| binary_dim(t - a)).sum();
        let mut m = Matrix::zeros(self.field, rows, cols);
        let mut r0 = 0;
        for (j, &bj) in self.b.iter().enumerate() {
            let mut c0 = 0;
            for (i, &ai) in self.a.iter().enumerate() {
                let src = binary_dim(t - ai);
                if let Some(form) = &self.entries[j][i] {
                    for c in 0..src {
                        for (k, &v) in form.coeffs().iter().enumerate() {
                            m.set(r0 + c + k, c0 + c, v);
                        }
                    }
                }
                c0 += src;
            }
            r0 += binary_dim(t - bj);
        }
        m
    }

    /// `h0(E(t)|ℓ)`
    pub fn h0(&self, t: i64) -> usize {
        let m = self.global_section_matrix(t);
        m.cols() - m.rank()
    }

    /// `(α, β)` from the first twist with a section; `α + β = -d`.
    pub fn splitting_type(&self, d: i64) -> Result<SplittingType> {
        let a1 = self.a[0];
        let surj = d + 2 + (-a1).max(0);
        let m = self.global_section_matrix(surj);
        if m.rank() != m.rows() {
            return Err(Error::NonExactRestriction(surj));
        }
        let (lo, hi) = (-d - 2, d + 2);
        let first = (lo..=hi).find(|&t| self.h0(t) > 0).ok_or(Error::SplittingWindow { lo, hi })?;
        let alpha = -first;
        let beta = -d - alpha;
        if beta > alpha {
            return Err(Error::Inconsistent(format!(
                "first section at t = {first} gives ({alpha}, {beta})"
            )));
        }
        // h0(O(t+α) ⊕ O(t+β)) must match at a few more twists
        for t in first..=first + 2 {
            let expect = binary_dim(t + alpha) + binary_dim(t + beta);
            if self.h0(t) != expect {
                return Err(Error::Inconsistent(format!(
                    "h0(E({t})|l) = {} but O({alpha}) + O({beta}) gives {expect}",
                    self.h0(t)
                )));
            }
        }
        Ok(SplittingType { alpha, beta })
    }
}

pub fn splitting_type(p: &PresentationMatrix, line: &LinePoint) -> Result<SplittingType> {
    restrict(p, line)?.splitting_type(p.degrees().d())
}

/// Most frequent splitting type over [`GENERIC_VOTES`] seeded random lines.
pub fn generic_splitting_type(p: &PresentationMatrix, seed: u64) -> Result<SplittingType> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut votes: Vec<SplittingType> = Vec::new();
    for _ in 0..GENERIC_VOTES {
        votes.push(splitting_type(p, &LinePoint::random(p.field(), &mut rng))?);
    }
    let mut counts: HashMap<SplittingType, usize> = HashMap::new();
    for v in &votes {
        *counts.entry(*v).or_default() += 1;
    }
    // ties go to the earliest vote
    let best = votes
        .iter()
        .max_by_key(|v| (counts[v], std::cmp::Reverse(votes.iter().position(|w| w == *v))))
        .copied()
        .unwrap();
    Ok(best)
}

/// Jumping-line test against a fixed generic splitting type.
#[derive(Clone, Debug)]
pub struct JumpingLines<'a> {
    presentation: &'a PresentationMatrix,
    generic: SplittingType,
}

impl<'a> JumpingLines<'a> {
    pub fn new(presentation: &'a PresentationMatrix, seed: u64) -> Result<Self> {
        Ok(JumpingLines {
            presentation,
            generic: generic_splitting_type(presentation, seed)?,
        })
    }

    pub fn generic(&self) -> SplittingType {
        self.generic
    }

    pub fn splitting_type(&self, line: &LinePoint) -> Result<SplittingType> {
        splitting_type(self.presentation, line)
    }

    pub fn is_jumping(&self, line: &LinePoint) -> Result<bool> {
        Ok(self.splitting_type(line)? != self.generic)
    }
}

/// Base-field points of the scheme cut out by `gb`, at most `limit` of them.
///
/// Zero-dimensional schemes are solved outright. On a curve, seeded random
/// lines of the dual plane are intersected with it and the rational roots kept.
pub fn sample_locus_points<R: Rng + ?Sized>(
    gb: &GroebnerBasis,
    limit: usize,
    rng: &mut R,
) -> Vec<[FieldElement; 3]> {
    let f = gb.field();
    let measure = gb.measure();
    match measure.projective_dimension {
        0 => {
            let mut pts = gb.rational_points(rng).map(|s| s.points).unwrap_or_default();
            pts.truncate(limit);
            pts
        }
        1 => {
            let gens = gb.basis();
            let mut pts: Vec<[FieldElement; 3]> = Vec::new();
            let mut skipped = 0;
            for _ in 0..limit.max(1) * 4 {
                if pts.len() >= limit {
                    break;
                }
                let p = f.random_point(rng);
                let q = f.random_point(rng);
                let param = [0, 1, 2].map(|i| [p[i], q[i]]);
                let Ok(forms) = gens
                    .iter()
                    .map(|g| g.substitute_line(&param))
                    .collect::<Result<Vec<BinaryForm>>>()
                else {
                    continue;
                };
                let Some(roots) = common_binary_roots(&f, &forms, rng) else {
                    continue;
                };
                skipped += roots.degree.saturating_sub(roots.roots.len());
                for [s, u] in roots.roots {
                    let x = [0, 1, 2].map(|i| f.add(f.mul(s, p[i]), f.mul(u, q[i])));
                    if x.iter().all(|&c| c == 0) {
                        continue;
                    }
                    let x = normalize(&f, x);
                    if gens.iter().all(|g: &Polynomial| g.eval(&x) == 0) && !pts.contains(&x) {
                        pts.push(x);
                    }
                }
            }
            if skipped > 0 {
                debug!("{skipped} intersection points outside F_{}", f.p());
            }
            pts.truncate(limit);
            pts
        }
        _ => Vec::new(),
    }
}

fn normalize(f: &PrimeField, p: [FieldElement; 3]) -> [FieldElement; 3] {
    let lead = p.iter().copied().find(|&v| v != 0).unwrap();
    let inv = f.inv(lead);
    p.map(|v| f.mul(v, inv))
}
