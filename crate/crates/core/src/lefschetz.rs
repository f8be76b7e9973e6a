//! The matrices `B_i` of linear forms in the dual variables, their ideals of
//! maximal minors, and the pointwise Lefschetz test.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::polyring::{Monomial, Polynomial, Ring};
use crate::presentation::GradedModule;

/// `B_i`: entry `(r, c)` is `Σ_v l_v (x_v)_{r,c}`, so that `B_i(ℓ)` is `×ℓ : M_i -> M_{i+1}`.
#[derive(Clone, Debug)]
pub struct DualLinearMatrix {
    degree: i64,
    field: PrimeField,
    coefficients: [Matrix; 3],
}

impl DualLinearMatrix {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.coefficients[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.coefficients[0].cols()
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial {
        Polynomial::linear(
            self.field,
            Ring::Dual,
            [0, 1, 2].map(|v| self.coefficients[v].get(r, c)),
        )
    }

    pub fn entries(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// `B_i` evaluated at `(l1, l2, l3) = ell`.
    pub fn specialize(&self, ell: &[FieldElement; 3]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows(), self.cols());
        for v in 0..3 {
            m.add_scaled(ell[v], &self.coefficients[v]);
        }
        m
    }
}

pub fn dual_matrix(m: &GradedModule, i: i64) -> DualLinearMatrix {
    DualLinearMatrix {
        degree: i,
        field: m.field(),
        coefficients: [0, 1, 2].map(|v| m.variable_map(v, i)),
    }
}

/// Generators of `I(L_{M,i})`: the maximal minors of `B_i`.
#[derive(Clone, Debug, Serialize)]
pub struct LocusIdeal {
    pub degree: i64,
    pub rows: usize,
    pub cols: usize,
    /// `min(h_i, h_{i+1})`; zero means the map always has maximal rank.
    pub minor_size: usize,
    #[serde(skip)]
    pub generators: Vec<Polynomial>,
}

impl LocusIdeal {
    /// The degenerate shapes contribute the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.minor_size == 0
    }

    pub fn groebner(&self, field: PrimeField) -> GroebnerBasis {
        GroebnerBasis::new(field, &self.generators)
    }
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - k + p) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// Coefficients (increasing degree) of the polynomial of degree `<= xs.len() - 1` through the points.
fn interpolate(f: &PrimeField, xs: &[FieldElement], ys: &[FieldElement]) -> Vec<FieldElement> {
    let n = xs.len();
    // Newton divided differences
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            let den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.div(num, den);
        }
    }
    let mut coeffs = vec![0; n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![0; n];
        for k in 0..n {
            if coeffs[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = f.add(next[k + 1], coeffs[k]);
            }
            next[k] = f.sub(next[k], f.mul(coeffs[k], xs[i]));
        }
        next[0] = f.add(next[0], dd[i]);
        coeffs = next;
    }
    coeffs
}

pub fn locus_ideal_at(m: &GradedModule, i: i64) -> LocusIdeal {
    let b = dual_matrix(m, i);
    let f = m.field();
    let (rows, cols) = (b.rows(), b.cols());
    let s = rows.min(cols);
    if s == 0 {
        return LocusIdeal {
            degree: i,
            rows,
            cols,
            minor_size: 0,
            generators: vec![Polynomial::one(f, Ring::Dual)],
        };
    }
    // a minor is a form of degree s; it is determined by its values on (1, y, z), 0 <= y, z <= s
    let grid: Vec<FieldElement> = (0..=s as u32).collect();
    let evaluations: Vec<Matrix> = grid
        .iter()
        .flat_map(|&z| grid.iter().map(move |&y| [1, y, z]))
        .map(|ell| b.specialize(&ell))
        .collect();
    let row_sets = subsets(rows, s);
    let col_sets = subsets(cols, s);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |c| (r, c)))
        .collect();
    let generators = pairs
        .par_iter()
        .map(|(rs, cs)| {
            let n = s + 1;
            let values: Vec<FieldElement> = evaluations
                .iter()
                .map(|e| e.submatrix(rs, cs).determinant())
                .collect();
            // interpolate in y for each z, then in z for each power of y
            let by_z: Vec<Vec<FieldElement>> = (0..n)
                .map(|zi| interpolate(&f, &grid, &values[zi * n..(zi + 1) * n]))
                .collect();
            let mut terms = Vec::new();
            for j in 0..n {
                let column: Vec<FieldElement> = (0..n).map(|zi| by_z[zi][j]).collect();
                let in_z = interpolate(&f, &grid, &column);
                for (k, &c) in in_z.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    assert!(j + k <= s, "minor is not a form of degree {s}");
                    terms.push((Monomial([(s - j - k) as u32, j as u32, k as u32]), c));
                }
            }
            Polynomial::from_terms(f, Ring::Dual, terms)
        })
        .collect();
    LocusIdeal {
        degree: i,
        rows,
        cols,
        minor_size: s,
        generators,
    }
}

/// The middle-degree ideal together with the intersection over all degrees.
#[derive(Clone, Debug)]
pub struct Locus {
    pub middle_degree: i64,
    pub middle: LocusIdeal,
    pub middle_basis: GroebnerBasis,
    pub per_degree: Vec<LocusIdeal>,
    /// `∩_i I(L_{M,i})^sat`, the saturation of `∩_i I(L_{M,i})`.
    pub intersection: GroebnerBasis,
}

impl Locus {
    /// Whether `L_{M,i*}` and `∩_i L_{M,i}` are the same subscheme of the dual plane.
    pub fn middle_equals_intersection(&self) -> bool {
        self.middle_basis.saturate() == self.intersection
    }
}

/// Middle-degree ideal only; this is all the locus pipeline needs.
pub fn middle_locus(m: &GradedModule) -> (LocusIdeal, GroebnerBasis) {
    let i = m.degrees().middle_degree();
    let ideal = locus_ideal_at(m, i);
    let gb = ideal.groebner(m.field());
    (ideal, gb)
}

/// Every per-degree ideal and their intersection. Saturation commutes with
/// finite intersections, so the saturated intersection is formed from the
/// saturated pieces; unit pieces drop out.
pub fn locus_ideal(m: &GradedModule) -> Locus {
    let f = m.field();
    let per_degree: Vec<LocusIdeal> = m
        .map_degrees()
        .filter(|&i| m.h(i) > 0 || m.h(i + 1) > 0)
        .map(|i| locus_ideal_at(m, i))
        .collect();
    let (middle, middle_basis) = middle_locus(m);
    let saturated: Vec<GroebnerBasis> = per_degree
        .par_iter()
        .filter(|l| !l.is_unit())
        .map(|l| {
            if l.degree == middle.degree {
                middle_basis.saturate()
            } else {
                l.groebner(f).saturate()
            }
        })
        .collect();
    let intersection = saturated
        .iter()
        .fold(GroebnerBasis::unit(f), |acc, g| acc.intersect(g));
    Locus {
        middle_degree: middle.degree,
        middle,
        middle_basis,
        per_degree,
        intersection,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzCheck {
    pub lefschetz: bool,
    /// Degrees `i` where `×ℓ : M_i -> M_{i+1}` does not have maximal rank.
    pub failing_degrees: Vec<i64>,
}

/// Direct rank test of `×ℓ` in every degree.
pub fn is_lefschetz(m: &GradedModule, line: &[FieldElement; 3]) -> Result<LefschetzCheck> {
    if line.iter().all(|&c| c == 0) {
        return Err(Error::ZeroLine);
    }
    let failing_degrees: Vec<i64> = m
        .map_degrees()
        .filter(|&i| {
            let full = m.h(i).min(m.h(i + 1));
            full > 0 && m.multiplication_map_by(line, i).rank() < full
        })
        .collect();
    Ok(LefschetzCheck {
        lefschetz: failing_degrees.is_empty(),
        failing_degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{DegreeData, PresentationMatrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn generic(a: &[i64], b: &[i64], seed: u64) -> GradedModule {
        let d = DegreeData::new(a.to_vec(), b.to_vec()).unwrap();
        GradedModule::generic(PrimeField::default(), &d, seed).unwrap()
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = PrimeField::default();
        let xs: Vec<u32> = (0..5).collect();
        let p = [7u32, 0, 65520, 3, 11];
        let ys: Vec<u32> = xs
            .iter()
            .map(|&x| p.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x)))
            .collect();
        assert_eq!(interpolate(&f, &xs, &ys), p.to_vec());
    }

    #[test]
    fn dual_matrix_specializes_to_multiplication() {
        let m = generic(&[2, 2, 3], &[0], 11);
        let b = dual_matrix(&m, 1);
        assert_eq!((b.rows(), b.cols()), (4, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..10 {
            let ell = PrimeField::default().random_point(&mut rng);
            assert_eq!(b.specialize(&ell), m.multiplication_map_by(&ell, 1));
        }
        assert_eq!(b.specialize(&[1, 0, 0]), m.variable_map(0, 1));
        assert_eq!(dual_matrix(&m, -1).rows(), 1);
        assert_eq!(dual_matrix(&m, -1).cols(), 0);
    }

    #[test]
    fn minors_counts_and_degrees() {
        let m = generic(&[2, 2, 3], &[0], 11);
        let l = locus_ideal_at(&m, 1);
        assert_eq!(l.generators.len(), 4);
        assert!(l.generators.iter().all(|g| g.is_zero() || g.degree() == Some(3)));
        let m = generic(&[2, 2, 2], &[0], 11);
        let l = locus_ideal_at(&m, 1);
        assert_eq!(l.generators.len(), 1);
        assert_eq!(l.generators[0].degree(), Some(3));
        assert!(locus_ideal_at(&m, 3).is_unit());
    }

    #[test]
    fn minors_vanish_exactly_at_rank_drops() {
        let m = generic(&[2, 2, 3], &[0], 5);
        let l = locus_ideal_at(&m, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let ell = PrimeField::default().random_point(&mut rng);
            let all_zero = l.generators.iter().all(|g| g.eval(&ell) == 0);
            let drop = m.multiplication_map_by(&ell, 1).rank() < 3;
            assert_eq!(all_zero, drop);
        }
    }

    #[test]
    fn x1_is_not_lefschetz_on_monomial_ci() {
        let f = PrimeField::default();
        let p = PresentationMatrix::monomial_complete_intersection(f, [3, 4, 4]).unwrap();
        let m = GradedModule::new(p).unwrap();
        let check = is_lefschetz(&m, &[1, 0, 0]).unwrap();
        assert!(!check.lefschetz);
        assert!(check.failing_degrees.contains(&3));
        assert!(is_lefschetz(&m, &[1, 1, 1]).unwrap().lefschetz);
        assert!(matches!(is_lefschetz(&m, &[0, 0, 0]), Err(Error::ZeroLine)));
    }

    #[test]
    fn self_dual_pairing_for_odd_d() {
        let m = generic(&[2, 2, 3], &[0], 2);
        let i = m.degrees().middle_degree();
        let f = m.field();
        let a = locus_ideal_at(&m, i).groebner(f);
        let b = locus_ideal_at(&m, i + 1).groebner(f);
        assert!(a.same_scheme(&b));
    }
}
