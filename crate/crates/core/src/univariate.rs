//! Dense univariate polynomials over `F_p`: gcd and root finding.

use rand::Rng;

use crate::field::{FieldElement, PrimeField};
use crate::polyring::BinaryForm;

/// Coefficients in increasing degree, no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, f: &PrimeField, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x))
    }

    fn monic(&self, f: &PrimeField) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = f.inv(lc);
                UniPoly::new(self.coeffs.iter().map(|&c| f.mul(c, inv)).collect())
            }
        }
    }

    fn sub(&self, f: &PrimeField, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    f.sub(
                        self.coeffs.get(i).copied().unwrap_or(0),
                        other.coeffs.get(i).copied().unwrap_or(0),
                    )
                })
                .collect(),
        )
    }

    fn mul(&self, f: &PrimeField, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        UniPoly::new(out)
    }

    /// Remainder of division by a nonzero polynomial.
    fn rem(&self, f: &PrimeField, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let lead = *r.last().unwrap();
            if lead != 0 {
                let q = f.mul(lead, inv);
                let shift = r.len() - 1 - dd;
                for (k, &c) in d.coeffs.iter().enumerate() {
                    r[shift + k] = f.sub(r[shift + k], f.mul(q, c));
                }
            }
            r.pop();
        }
        UniPoly::new(r)
    }

    fn div_exact(&self, f: &PrimeField, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        let mut q = vec![0; r.len().saturating_sub(dd)];
        while r.len() > dd {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dd;
            if lead != 0 {
                let c = f.mul(lead, inv);
                q[shift] = c;
                for (k, &dc) in d.coeffs.iter().enumerate() {
                    r[shift + k] = f.sub(r[shift + k], f.mul(c, dc));
                }
            }
            r.pop();
        }
        debug_assert!(r.iter().all(|&c| c == 0), "inexact division");
        UniPoly::new(q)
    }

    pub fn derivative(&self, f: &PrimeField) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_i64(i as i64)))
                .collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(f: &PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    fn powmod(&self, f: &PrimeField, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(f, m);
        let mut acc = UniPoly::new(vec![1]).rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p`, sorted.
    pub fn roots<R: Rng + ?Sized>(&self, f: &PrimeField, rng: &mut R) -> Vec<FieldElement> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let g = self.monic(f);
        // product of the distinct linear factors: gcd(g, x^p - x)
        let x = UniPoly::new(vec![0, 1]);
        let xp = x.powmod(f, f.p() as u64, &g);
        let linear = UniPoly::gcd(f, &g, &xp.sub(f, &x));
        let mut roots = Vec::new();
        split(f, &linear, rng, &mut roots);
        roots.sort_unstable();
        roots
    }
}

/// The gcd of a family of binary forms, described by its degree and base-field roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRoots {
    pub degree: usize,
    pub squarefree: bool,
    /// Distinct roots `(s : u)`, scaled so that `u = 1` or `(s, u) = (1, 0)`.
    pub roots: Vec<[FieldElement; 2]>,
}

/// Common zeros in `P^1` of binary forms; `None` if every form vanishes identically.
pub fn common_binary_roots<R: Rng + ?Sized>(
    f: &PrimeField,
    forms: &[BinaryForm],
    rng: &mut R,
) -> Option<BinaryRoots> {
    let mut u_power: Option<usize> = None;
    let mut g = UniPoly::new(vec![]);
    for form in forms.iter().filter(|b| !b.is_zero()) {
        let c = form.coeffs();
        let m = c.iter().position(|&x| x != 0).unwrap();
        u_power = Some(u_power.map_or(m, |k| k.min(m)));
        // f(s, 1): coefficient of s^j is c[D - j]
        let affine = UniPoly::new(c.iter().rev().copied().collect());
        g = UniPoly::gcd(f, &g, &affine);
    }
    let k = u_power?;
    let degree = k + g.degree().unwrap_or(0);
    let separable = g.degree().unwrap_or(0) == 0 || UniPoly::gcd(f, &g, &g.derivative(f)).degree() == Some(0);
    let mut roots = Vec::new();
    if k > 0 {
        roots.push([1, 0]);
    }
    roots.extend(g.roots(f, rng).into_iter().map(|x| [x, 1]));
    Some(BinaryRoots {
        degree,
        squarefree: k <= 1 && separable,
        roots,
    })
}

/// Cantor–Zassenhaus splitting of a squarefree product of linear factors.
fn split<R: Rng + ?Sized>(f: &PrimeField, g: &UniPoly, rng: &mut R, out: &mut Vec<FieldElement>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let g = g.monic(f);
            out.push(f.neg(g.coeffs[0]));
        }
        Some(_) => loop {
            let a = f.random(rng);
            let shifted = UniPoly::new(vec![a, 1]);
            let h = shifted
                .powmod(f, (f.p() as u64 - 1) / 2, g)
                .sub(f, &UniPoly::new(vec![1]));
            let d = UniPoly::gcd(f, g, &h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let other = g.div_exact(f, &d);
                split(f, &d, rng, out);
                split(f, &other, rng, out);
                return;
            }
        },
    }
}
