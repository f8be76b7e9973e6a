//! Polynomials in three variables over `F_p`.
//!
//! The same type serves the primal ring `R = k[x1,x2,x3]` and the dual ring
//! `S = k[l1,l2,l3]` whose points are linear forms `l1*x1 + l2*x2 + l3*x3`.
//! Terms are kept sorted in decreasing degree-lexicographic order with
//! `x1 > x2 > x3`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Ring {
    /// `R = k[x1, x2, x3]`
    Primal,
    /// `S = k[l1, l2, l3]`
    Dual,
}

impl Ring {
    pub fn variable_prefix(self) -> char {
        match self {
            Ring::Primal => 'x',
            Ring::Dual => 'l',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// Position of this monomial in [`monomial_basis`] of its degree.
    pub fn basis_index(&self) -> usize {
        let s = (self.0[1] + self.0[2]) as usize;
        s * (s + 1) / 2 + self.0[2] as usize
    }

    pub fn eval(&self, field: &PrimeField, point: &[FieldElement; 3]) -> FieldElement {
        (0..3).fold(1, |acc, i| field.mul(acc, field.pow(point[i], self.0[i] as u64)))
    }
}

impl Ord for Monomial {
    /// Degree first, then lexicographic with `x1 > x2 > x3`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered monomial basis of the degree-`t` piece of a three-variable ring.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub degree: i64,
    pub monomials: Vec<Monomial>,
}

impl GradedPieceBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// `dim_k R_t = C(t+2, 2)`, zero for negative `t`.
pub fn piece_dim(t: i64) -> usize {
    if t < 0 {
        0
    } else {
        let t = t as usize;
        (t + 1) * (t + 2) / 2
    }
}

/// All degree-`t` monomials in decreasing deg-lex order (`x1^t` first).
pub fn monomial_basis(t: i64) -> GradedPieceBasis {
    let mut monomials = Vec::with_capacity(piece_dim(t));
    if t >= 0 {
        let t = t as u32;
        for e1 in (0..=t).rev() {
            for e2 in (0..=t - e1).rev() {
                monomials.push(Monomial([e1, e2, t - e1 - e2]));
            }
        }
    }
    GradedPieceBasis {
        degree: t,
        monomials,
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    ring: Ring,
    /// Decreasing monomial order, no zero coefficients.
    terms: Vec<(Monomial, FieldElement)>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Polynomial {
    pub fn zero(field: PrimeField, ring: Ring) -> Self {
        Polynomial {
            field,
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, ring: Ring, c: FieldElement) -> Self {
        Self::from_terms(field, ring, vec![(Monomial::ONE, c)])
    }

    pub fn one(field: PrimeField, ring: Ring) -> Self {
        Self::constant(field, ring, 1)
    }

    pub fn variable(field: PrimeField, ring: Ring, i: usize) -> Self {
        Self::from_terms(field, ring, vec![(Monomial::var(i), 1)])
    }

    /// `c1*v1 + c2*v2 + c3*v3`
    pub fn linear(field: PrimeField, ring: Ring, coeffs: [FieldElement; 3]) -> Self {
        Self::from_terms(
            field,
            ring,
            (0..3).map(|i| (Monomial::var(i), coeffs[i])).collect(),
        )
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(field: PrimeField, ring: Ring, mut terms: Vec<(Monomial, FieldElement)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % field.p();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            field,
            ring,
            terms: out,
        }
    }

    /// Assumes `terms` is already sorted decreasingly with no zeros or repeats.
    pub(crate) fn from_sorted_terms(field: PrimeField, ring: Ring, terms: Vec<(Monomial, FieldElement)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { field, ring, terms }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, FieldElement)> {
        self.terms.first().copied()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map_or(0, |t| t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    /// Coefficients of `v1, v2, v3` if this is a linear form.
    pub fn linear_coefficients(&self) -> Result<[FieldElement; 3]> {
        if !self.is_zero() && (!self.is_homogeneous() || self.degree() != Some(1)) {
            return Err(Error::NotLinear(self.to_string()));
        }
        Ok([0, 1, 2].map(|i| self.coefficient(&Monomial::var(i))))
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.ring, other.ring, "polynomials in different rings");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(1, other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(self.field.neg(1), other)
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: FieldElement, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let (m, b) = other.terms[j];
                    let v = f.mul(c, b);
                    if v != 0 {
                        out.push((m, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.mul_add(self.terms[i].1, c, other.terms[j].1);
                    if v != 0 {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial::from_sorted_terms(f, self.ring, out)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.field, self.ring);
        }
        let f = self.field;
        Polynomial::from_sorted_terms(
            f,
            self.ring,
            self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        )
    }

    /// Multiplication by a single term preserves the order of the terms.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.field, self.ring);
        }
        let f = self.field;
        Polynomial::from_sorted_terms(
            f,
            self.ring,
            self.terms.iter().map(|&(n, a)| (n.mul(m), f.mul(a, c))).collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let f = self.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m, a) in &self.terms {
            for &(n, b) in &other.terms {
                terms.push((m.mul(&n), f.mul(a, b)));
            }
        }
        Polynomial::from_terms(f, self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[FieldElement; 3]) -> FieldElement {
        let f = self.field;
        self.terms
            .iter()
            .fold(0, |acc, (m, c)| f.mul_add(acc, *c, m.eval(&f, point)))
    }

    /// Same coefficients, other ring tag.
    pub fn retag(&self, ring: Ring) -> Polynomial {
        Polynomial {
            field: self.field,
            ring,
            terms: self.terms.clone(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) if c != 1 => self.scale(self.field.inv(c)),
            _ => self.clone(),
        }
    }

    /// Matrix of `g -> self * g` from `R_t` to `R_{t+e}` in monomial bases.
    ///
    /// Column `j` is the coefficient vector of `self * m_j`. `self` must be
    /// homogeneous; for the zero polynomial pass its intended degree via
    /// [`multiplication_matrix_with_degree`].
    pub fn multiplication_matrix(&self, t: i64) -> Matrix {
        assert!(self.is_homogeneous(), "multiplication matrix of a non-homogeneous form");
        let e = self.degree().unwrap_or(0) as i64;
        multiplication_matrix_with_degree(self, e, t)
    }

    /// Restriction to the line `x = s*v + u*w` where `v, w` are the columns of `param`.
    pub fn substitute_line(&self, param: &[[FieldElement; 2]; 3]) -> Result<BinaryForm> {
        if param_rank(&self.field, param) < 2 {
            return Err(Error::DegenerateLine);
        }
        assert!(self.is_homogeneous(), "substitution of a non-homogeneous form");
        let f = self.field;
        let deg = self.degree().unwrap_or(0);
        let linear: Vec<BinaryForm> = (0..3)
            .map(|i| BinaryForm::new(f, vec![param[i][0], param[i][1]]))
            .collect();
        // powers[i][k] = (linear_i)^k
        let powers: Vec<Vec<BinaryForm>> = linear
            .iter()
            .map(|l| {
                let mut v = vec![BinaryForm::new(f, vec![1])];
                for k in 1..=deg as usize {
                    let next = v[k - 1].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BinaryForm::zero(f, deg);
        for (m, c) in &self.terms {
            let e = m.0;
            let piece = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize]);
            acc.add_scaled(*c, &piece);
        }
        Ok(acc)
    }

    /// Linear change of variables `v_i -> sum_k a[i][k] v_k`.
    pub fn linear_substitution(&self, a: &[[FieldElement; 3]; 3]) -> Polynomial {
        let images: Vec<Polynomial> = (0..3)
            .map(|i| Polynomial::linear(self.field, self.ring, a[i]))
            .collect();
        let mut acc = Polynomial::zero(self.field, self.ring);
        for (m, c) in &self.terms {
            let mut piece = Polynomial::constant(self.field, self.ring, *c);
            for (i, img) in images.iter().enumerate() {
                piece = piece.mul(&img.pow(m.0[i]));
            }
            acc = acc.add(&piece);
        }
        acc
    }

    pub fn parse(field: PrimeField, ring: Ring, input: &str) -> Result<Polynomial> {
        Parser::new(field, ring, input).parse()
    }
}

/// Like [`Polynomial::multiplication_matrix`] with an explicit degree `e`.
pub fn multiplication_matrix_with_degree(f: &Polynomial, e: i64, t: i64) -> Matrix {
    let src = monomial_basis(t);
    let dst_dim = piece_dim(t + e);
    let mut m = Matrix::zeros(f.field, dst_dim, src.len());
    for (j, mono) in src.monomials.iter().enumerate() {
        for (n, c) in &f.terms {
            let prod = n.mul(mono);
            m.set(prod.basis_index(), j, *c);
        }
    }
    m
}

fn param_rank(field: &PrimeField, param: &[[FieldElement; 2]; 3]) -> usize {
    Matrix::from_rows(
        *field,
        &param
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect::<Vec<_>>(),
    )
    .rank()
}

/// Homogeneous form in `(s, u)`; `coeffs[k]` multiplies `s^(deg-k) u^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    field: PrimeField,
    coeffs: Vec<FieldElement>,
}

impl BinaryForm {
    pub fn new(field: PrimeField, coeffs: Vec<FieldElement>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm { field, coeffs }
    }

    pub fn zero(field: PrimeField, degree: u32) -> Self {
        BinaryForm {
            field,
            coeffs: vec![0; degree as usize + 1],
        }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let f = self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        BinaryForm::new(f, out)
    }

    fn add_scaled(&mut self, c: FieldElement, other: &BinaryForm) {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let f = self.field;
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.mul_add(*a, c, b);
        }
    }

    pub fn eval(&self, s: FieldElement, u: FieldElement) -> FieldElement {
        let f = self.field;
        let d = self.degree() as u64;
        self.coeffs.iter().enumerate().fold(0, |acc, (k, &c)| {
            f.mul_add(acc, c, f.mul(f.pow(s, d - k as u64), f.pow(u, k as u64)))
        })
    }

    /// Matrix of `g -> self * g` from binary forms of degree `t` to degree `t + deg`.
    pub fn multiplication_matrix(&self, t: i64) -> Matrix {
        let e = self.degree() as i64;
        let src = if t < 0 { 0 } else { t as usize + 1 };
        let dst = if t + e < 0 { 0 } else { (t + e) as usize + 1 };
        let mut m = Matrix::zeros(self.field, dst, src);
        for j in 0..src {
            for (k, &c) in self.coeffs.iter().enumerate() {
                m.set(j + k, j, c);
            }
        }
        m
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let var = self.ring.variable_prefix();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let signed = self.field.to_signed(*c);
            let (neg, abs) = (signed < 0, signed.unsigned_abs());
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != 1 || *m == Monomial::ONE {
                factors.push(abs.to_string());
            }
            for i in 0..3 {
                match m.0[i] {
                    0 => {}
                    1 => factors.push(format!("{}{}", var, i + 1)),
                    e => factors.push(format!("{}{}^{}", var, i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    field: PrimeField,
    ring: Ring,
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(field: PrimeField, ring: Ring, input: &'a str) -> Self {
        Parser {
            field,
            ring,
            input,
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.chars.is_empty() {
            return Err(self.error("empty input"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.chars.len() {
            let mut negative = false;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    negative = true;
                    self.pos += 1;
                }
                _ if first => {}
                Some(c) => return Err(self.error(format!("expected '+' or '-' at {c:?}"))),
                None => unreachable!(),
            }
            first = false;
            let (m, c) = self.term()?;
            let c = if negative { self.field.neg(c) } else { c };
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(self.field, self.ring, terms))
    }

    fn term(&mut self) -> Result<(Monomial, FieldElement)> {
        let mut coeff = 1u32;
        let mut exps = [0u32; 3];
        let mut expect_factor = true;
        while expect_factor {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number().ok_or_else(|| self.error("bad number"))?;
                    let n = (n % self.field.p() as u64) as u32;
                    coeff = self.field.mul(coeff, n);
                }
                Some(c) if c == self.ring.variable_prefix() => {
                    self.pos += 1;
                    let idx = self.number().ok_or_else(|| self.error("missing variable index"))?;
                    if !(1..=3).contains(&idx) {
                        return Err(self.error(format!("variable index {idx} out of range")));
                    }
                    let mut e = 1;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self.number().ok_or_else(|| self.error("missing exponent"))?;
                    }
                    exps[idx as usize - 1] += e as u32;
                }
                Some(c) => return Err(self.error(format!("unexpected character {c:?}"))),
                None => return Err(self.error("unexpected end of input")),
            }
            expect_factor = self.peek() == Some('*');
            if expect_factor {
                self.pos += 1;
            }
        }
        Ok((Monomial(exps), coeff))
    }
}
