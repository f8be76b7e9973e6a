//! Graded modules `M = coker(phi: ⊕ R(-a_i) -> ⊕ R(-b_j))` of finite length.

use log::warn;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bundle;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::{Cokernel, Matrix};
use crate::polyring::{monomial_basis, multiplication_matrix_with_degree, piece_dim, Polynomial, Ring};

/// How many consecutive seeds [`GradedModule::generic`] tries before giving up.
pub const MAX_RESEEDS: u64 = 16;

/// Degrees `a_1 <= ... <= a_{n+2}` of the source and `b_1 <= ... <= b_n` of the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeData {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl DegreeData {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidDegrees("b must have at least one entry".into()));
        }
        if a.len() != b.len() + 2 {
            return Err(Error::InvalidDegrees(format!(
                "a has {} entries but b has {}; need len(a) = len(b) + 2",
                a.len(),
                b.len()
            )));
        }
        if !a.windows(2).all(|w| w[0] <= w[1]) || !b.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::InvalidDegrees("a and b must be non-decreasing".into()));
        }
        if a.iter().chain(&b).any(|x| x.abs() > 200) {
            return Err(Error::InvalidDegrees("degrees beyond +-200 are not supported".into()));
        }
        Ok(DegreeData { a, b })
    }

    /// Complete intersection `a_1, a_2, a_3` with `b = (0)`.
    pub fn complete_intersection(a: [i64; 3]) -> Result<Self> {
        let mut a = a.to_vec();
        a.sort_unstable();
        Self::new(a, vec![0])
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn d(&self) -> i64 {
        self.a.iter().sum::<i64>() - self.b.iter().sum::<i64>()
    }

    /// `e = d - 3 - b_1`, the top degree of a finite-length cokernel.
    pub fn socle_degree(&self) -> i64 {
        self.d() - 3 - self.b[0]
    }

    /// `i* = floor((d - 4) / 2)`
    pub fn middle_degree(&self) -> i64 {
        (self.d() - 4).div_euclid(2)
    }

    /// `{d - b_j - 3}` in decreasing order.
    pub fn expected_socle(&self) -> Vec<i64> {
        let d = self.d();
        self.b.iter().map(|&b| d - b - 3).collect()
    }
}

/// The matrix of forms `phi`; entry `(j, i)` has degree `a_i - b_j` (zero when negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    field: PrimeField,
    degrees: DegreeData,
    entries: Vec<Vec<Polynomial>>,
    seed: Option<u64>,
}

impl PresentationMatrix {
    /// Uniformly random coefficients from a ChaCha stream seeded with `seed`.
    pub fn random(field: PrimeField, degrees: &DegreeData, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = degrees
            .b
            .iter()
            .map(|&bj| {
                degrees
                    .a
                    .iter()
                    .map(|&ai| {
                        let deg = ai - bj;
                        let terms = monomial_basis(deg)
                            .monomials
                            .into_iter()
                            .map(|m| (m, field.random(&mut rng)))
                            .collect();
                        Polynomial::from_terms(field, Ring::Primal, terms)
                    })
                    .collect()
            })
            .collect();
        PresentationMatrix {
            field,
            degrees: degrees.clone(),
            entries,
            seed: Some(seed),
        }
    }

    pub fn from_entries(field: PrimeField, degrees: &DegreeData, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let (rows, cols) = (degrees.b.len(), degrees.a.len());
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::MatrixShape {
                rows: entries.len(),
                cols: entries.first().map_or(0, |r| r.len()),
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        for (j, row) in entries.iter().enumerate() {
            for (i, entry) in row.iter().enumerate() {
                let expected = degrees.a[i] - degrees.b[j];
                let ok = entry.ring() == Ring::Primal
                    && entry.field() == field
                    && (entry.is_zero() || (entry.is_homogeneous() && entry.degree() == Some(expected as u32) && expected >= 0));
                if !ok {
                    return Err(Error::EntryDegree {
                        row: j,
                        col: i,
                        expected,
                        found: entry.to_string(),
                    });
                }
            }
        }
        Ok(PresentationMatrix {
            field,
            degrees: degrees.clone(),
            entries,
            seed: None,
        })
    }

    /// Parses entries in the polynomial text format, one row per `b_j`.
    pub fn parse(field: PrimeField, degrees: &DegreeData, rows: &[Vec<String>]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Polynomial::parse(field, Ring::Primal, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(field, degrees, entries)
    }

    /// `(x1^a1, x2^a2, x3^a3)`.
    pub fn monomial_complete_intersection(field: PrimeField, a: [i64; 3]) -> Result<Self> {
        let degrees = DegreeData::new(a.to_vec(), vec![0])?;
        let row = (0..3)
            .map(|v| {
                if a[v] < 0 {
                    return Err(Error::InvalidDegrees("negative power".into()));
                }
                Ok(Polynomial::variable(field, Ring::Primal, v).pow(a[v] as u32))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(field, &degrees, vec![row])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degrees(&self) -> &DegreeData {
        &self.degrees
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    /// Seed used by [`Self::random`], if any.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Entries rendered in the polynomial text format.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }

    /// `phi_t : ⊕ R_{t-a_i} -> ⊕ R_{t-b_j}` in monomial bases.
    pub fn graded_piece_matrix(&self, t: i64) -> Matrix {
        let a = &self.degrees.a;
        let b = &self.degrees.b;
        let row_dims: Vec<usize> = b.iter().map(|&bj| piece_dim(t - bj)).collect();
        let col_dims: Vec<usize> = a.iter().map(|&ai| piece_dim(t - ai)).collect();
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut m = Matrix::zeros(self.field, rows, cols);
        let mut r0 = 0;
        for (j, &bj) in b.iter().enumerate() {
            let mut c0 = 0;
            for (i, &ai) in a.iter().enumerate() {
                let entry = &self.entries[j][i];
                if !entry.is_zero() && col_dims[i] > 0 {
                    let block = multiplication_matrix_with_degree(entry, ai - bj, t - ai);
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(r0 + r, c0 + c, block.get(r, c));
                        }
                    }
                }
                c0 += col_dims[i];
            }
            r0 += row_dims[j];
        }
        m
    }
}

/// One graded piece `M_t`: the cokernel of `phi_t` and the maps `x_v : M_t -> M_{t+1}`.
#[derive(Clone, Debug)]
struct Piece {
    cokernel: Cokernel,
    variable_maps: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct GradedModule {
    presentation: PresentationMatrix,
    start: i64,
    top: i64,
    hilbert: Vec<usize>,
    pieces: Vec<Piece>,
}

/// Offsets of the blocks `R_{t-b_j}` inside the target of `phi_t`.
fn target_blocks(b: &[i64], t: i64) -> Vec<(usize, i64)> {
    let mut off = 0;
    b.iter()
        .map(|&bj| {
            let here = (off, t - bj);
            off += piece_dim(t - bj);
            here
        })
        .collect()
}

/// Block index and monomial position of a target coordinate.
fn locate(blocks: &[(usize, i64)], coord: usize) -> (usize, usize) {
    let j = blocks.iter().rposition(|&(off, deg)| off <= coord && deg >= 0).unwrap();
    (j, coord - blocks[j].0)
}

impl GradedModule {
    /// Builds the module and checks that it vanishes in the degrees `e+1 ..= e+3`.
    pub fn new(presentation: PresentationMatrix) -> Result<Self> {
        let degrees = presentation.degrees.clone();
        let start = degrees.b[0];
        let top = degrees.socle_degree();
        let field = presentation.field;

        // cokernels for start ..= top + 3; the last three must vanish
        let last = top.max(start - 1) + 3;
        let cokernels: Vec<Cokernel> = (start..=last)
            .into_par_iter()
            .map(|t| presentation.graded_piece_matrix(t).cokernel())
            .collect();
        for t in (top + 1).max(start)..=last {
            let dim = cokernels[(t - start) as usize].len();
            if dim > 0 {
                return Err(Error::NotFiniteLength {
                    degree: t,
                    dimension: dim,
                    socle_degree: top,
                });
            }
        }
        let top = top.max(start - 1);
        let hilbert: Vec<usize> = (start..=top).map(|t| cokernels[(t - start) as usize].len()).collect();

        let b = degrees.b.clone();
        let pieces: Vec<Piece> = (start..=top)
            .into_par_iter()
            .map(|t| {
                let here = &cokernels[(t - start) as usize];
                let next = &cokernels[(t + 1 - start) as usize];
                let blocks = target_blocks(&b, t);
                let next_blocks = target_blocks(&b, t + 1);
                let variable_maps = (0..3)
                    .map(|v| {
                        let mut m = Matrix::zeros(field, next.len(), here.len());
                        for (c, &coord) in here.basis().iter().enumerate() {
                            let (j, pos) = locate(&blocks, coord);
                            let mono = monomial_basis(blocks[j].1).monomials[pos];
                            let image = mono.mul(&crate::polyring::Monomial::var(v));
                            let target = next_blocks[j].0 + image.basis_index();
                            let col = next.reduce_unit(target);
                            for (r, &val) in col.iter().enumerate() {
                                m.set(r, c, val);
                            }
                        }
                        m
                    })
                    .collect();
                Piece {
                    cokernel: here.clone(),
                    variable_maps,
                }
            })
            .collect();

        Ok(GradedModule {
            presentation,
            start,
            top,
            hilbert,
            pieces,
        })
    }

    /// Seeded generic module. Draws failing the finite-length or Hilbert-function
    /// audit are rejected and the next seed is tried.
    pub fn generic(field: PrimeField, degrees: &DegreeData, seed: u64) -> Result<Self> {
        for s in seed..seed.saturating_add(MAX_RESEEDS) {
            let p = PresentationMatrix::random(field, degrees, s);
            match GradedModule::new(p) {
                Ok(m) if m.hilbert_matches_closed_form() => return Ok(m),
                Ok(_) => warn!("seed {s}: Hilbert function differs from the closed form; reseeding"),
                Err(e) => warn!("seed {s}: {e}; reseeding"),
            }
        }
        Err(Error::GenericDraw {
            first: seed,
            last: seed.saturating_add(MAX_RESEEDS - 1),
        })
    }

    pub fn presentation(&self) -> &PresentationMatrix {
        &self.presentation
    }

    pub fn degrees(&self) -> &DegreeData {
        &self.presentation.degrees
    }

    pub fn field(&self) -> PrimeField {
        self.presentation.field
    }

    /// `h_t = dim M_t`.
    pub fn h(&self, t: i64) -> usize {
        if t < self.start || t > self.top {
            0
        } else {
            self.hilbert[(t - self.start) as usize]
        }
    }

    /// First degree with possibly nonzero `M_t` (`b_1`).
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Socle degree `e`.
    pub fn top(&self) -> i64 {
        self.top
    }

    /// `(h_{b_1}, ..., h_e)`.
    pub fn hilbert_function(&self) -> &[usize] {
        &self.hilbert
    }

    /// `h_t` for `t = 0 ..= e`, padding with zeros below `b_1`.
    pub fn hilbert_from_zero(&self) -> Vec<usize> {
        (0..=self.top.max(-1)).map(|t| self.h(t)).collect()
    }

    pub fn length(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Degrees `i` for which `×ℓ : M_i -> M_{i+1}` has a nonempty source or target.
    pub fn map_degrees(&self) -> std::ops::RangeInclusive<i64> {
        (self.start - 1)..=self.top
    }

    /// Coset basis of `M_t` as target coordinates of `phi_t`.
    pub fn coset_basis(&self, t: i64) -> &[usize] {
        if t < self.start || t > self.top {
            return &[];
        }
        self.pieces[(t - self.start) as usize].cokernel.basis()
    }

    /// Matrix of `×x_v : M_t -> M_{t+1}`.
    pub fn variable_map(&self, v: usize, t: i64) -> Matrix {
        if t < self.start || t > self.top {
            return Matrix::zeros(self.field(), self.h(t + 1), self.h(t));
        }
        self.pieces[(t - self.start) as usize].variable_maps[v].clone()
    }

    /// The `h_{t+1} x h_t` matrix of `×ℓ : M_t -> M_{t+1}`.
    pub fn multiplication_map(&self, ell: &Polynomial, t: i64) -> Result<Matrix> {
        let c = ell.linear_coefficients()?;
        Ok(self.multiplication_map_by(&c, t))
    }

    pub fn multiplication_map_by(&self, ell: &[FieldElement; 3], t: i64) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.h(t + 1), self.h(t));
        if t < self.start || t > self.top {
            return m;
        }
        let piece = &self.pieces[(t - self.start) as usize];
        for (v, &c) in ell.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &piece.variable_maps[v]);
            }
        }
        m
    }

    /// Socle degrees with multiplicity, decreasing.
    pub fn socle(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for t in (self.start..=self.top).rev() {
            let piece = &self.pieces[(t - self.start) as usize];
            let stacked = Matrix::vstack(
                self.field(),
                &[&piece.variable_maps[0], &piece.variable_maps[1], &piece.variable_maps[2]],
            );
            let dim = self.h(t) - stacked.rank();
            out.extend(std::iter::repeat_n(t, dim));
        }
        out
    }

    pub fn is_unimodal(&self) -> bool {
        let h = &self.hilbert;
        let peak = h.iter().enumerate().max_by_key(|&(i, v)| (*v, std::cmp::Reverse(i))).map_or(0, |(i, _)| i);
        h[..=peak.min(h.len().saturating_sub(1))].windows(2).all(|w| w[0] <= w[1])
            && h[peak..].windows(2).all(|w| w[0] >= w[1])
    }

    /// `h_t = h_{d-3-t}` for every `t`.
    pub fn is_symmetric(&self) -> bool {
        let d = self.degrees().d();
        (self.start - 3..=self.top + 3).all(|t| self.h(t) == self.h(d - 3 - t))
    }

    /// Compares with `h_t = h0(E(t)) + h0(E(d-3-t)) - chi(E(t))`, which holds for every finite-length presentation.
    pub fn hilbert_matches_closed_form(&self) -> bool {
        let deg = self.degrees();
        (self.start - 3..=self.top + 3).all(|t| {
            bundle::h1(deg, t).map(|v| v as usize == self.h(t)).unwrap_or(false)
        })
    }

    /// Hilbert function with every rank recomputed over `Q` on the integer lift of `phi_t`.
    pub fn rational_hilbert_function(&self) -> Vec<usize> {
        (self.start..=self.top)
            .map(|t| {
                let m = self.presentation.graded_piece_matrix(t);
                m.rows() - crate::rational::rank_of_lift(&m)
            })
            .collect()
    }
}
