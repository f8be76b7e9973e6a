//! Buchberger's algorithm over `S = k[l1, l2, l3]`, and the measurements built on it:
//! projective dimension and degree, intersection, colon ideals and saturation,
//! and extraction of `F_p`-rational points of zero-dimensional schemes.
//!
//! Internally monomials carry a fourth exponent for the auxiliary variable of
//! the elimination constructions; public results are always three-variable
//! polynomials in the dual ring.

use std::cmp::Ordering;

use log::debug;
use rand::Rng;
use serde::Serialize;

use crate::field::{FieldElement, PrimeField};
use crate::polyring::{BinaryForm, Monomial, Polynomial, Ring};
use crate::univariate::{common_binary_roots, BinaryRoots};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    /// Degree, then lexicographic with `l1 > l2 > l3`.
    DegLex,
    /// Pure lexicographic with `l1 > l2 > l3`.
    Lex,
    /// Degree, then reverse lexicographic; `l3` is the cheapest variable.
    DegRevLex,
    /// The auxiliary variable dominates; ties broken by `DegLex` on `l1, l2, l3`.
    Elimination,
}

const MAX_EXP: u64 = 4095;
const GUARD: u64 = 0x8000_8000_8000_8000;

/// Four 16-bit exponent fields, `l1` in the high bits, the auxiliary variable in the low ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Mono(u64);

impl Mono {
    const ONE: Mono = Mono(0);

    fn from_exps(e: [u32; 4]) -> Mono {
        debug_assert!(e.iter().all(|&x| (x as u64) <= MAX_EXP));
        Mono(((e[0] as u64) << 48) | ((e[1] as u64) << 32) | ((e[2] as u64) << 16) | e[3] as u64)
    }

    fn from_monomial(m: &Monomial) -> Mono {
        let e = m.exponents();
        Mono::from_exps([e[0], e[1], e[2], 0])
    }

    fn to_monomial(self) -> Monomial {
        let e = self.exps();
        debug_assert_eq!(e[3], 0);
        Monomial([e[0], e[1], e[2]])
    }

    #[inline]
    fn exp(self, i: usize) -> u32 {
        ((self.0 >> (48 - 16 * i)) & 0xffff) as u32
    }

    fn exps(self) -> [u32; 4] {
        [self.exp(0), self.exp(1), self.exp(2), self.exp(3)]
    }

    #[inline]
    fn mul(self, o: Mono) -> Mono {
        Mono(self.0 + o.0)
    }

    #[inline]
    fn divides(self, o: Mono) -> bool {
        ((o.0 | GUARD) - self.0) & GUARD == GUARD
    }

    #[inline]
    fn div(self, o: Mono) -> Mono {
        debug_assert!(o.divides(self));
        Mono(self.0 - o.0)
    }

    fn lcm(self, o: Mono) -> Mono {
        let a = self.exps();
        let b = o.exps();
        Mono::from_exps([a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2]), a[3].max(b[3])])
    }

    fn coprime(self, o: Mono) -> bool {
        let a = self.exps();
        let b = o.exps();
        (0..4).all(|i| a[i] == 0 || b[i] == 0)
    }

    fn swap(self, i: usize, j: usize) -> Mono {
        let mut e = self.exps();
        e.swap(i, j);
        Mono::from_exps(e)
    }
}

impl MonomialOrder {
    #[inline]
    fn key(self, m: Mono) -> u64 {
        let [a, b, c, t] = m.exps().map(|x| x as u64);
        debug_assert!(a.max(b).max(c).max(t) <= MAX_EXP);
        match self {
            MonomialOrder::DegLex => ((a + b + c + t) << 48) | (a << 36) | (b << 24) | (c << 12) | t,
            MonomialOrder::Lex => m.0,
            MonomialOrder::DegRevLex => {
                ((a + b + c + t) << 48)
                    | ((MAX_EXP - t) << 36)
                    | ((MAX_EXP - c) << 24)
                    | ((MAX_EXP - b) << 12)
                    | (MAX_EXP - a)
            }
            MonomialOrder::Elimination => (t << 52) | ((a + b + c) << 40) | (a << 28) | (b << 16) | (c << 4),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Term {
    key: u64,
    mono: Mono,
    coeff: FieldElement,
}

/// Polynomial with terms sorted by decreasing order key.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GPoly {
    terms: Vec<Term>,
}

impl GPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> Mono {
        self.terms[0].mono
    }

    fn is_constant(&self) -> bool {
        !self.terms.is_empty() && self.terms[0].mono == Mono::ONE
    }
}

#[derive(Clone, Copy)]
struct Ctx {
    field: PrimeField,
    order: MonomialOrder,
}

impl Ctx {
    fn make(&self, mut terms: Vec<(Mono, FieldElement)>) -> GPoly {
        let f = self.field;
        let mut t: Vec<Term> = terms
            .drain(..)
            .map(|(mono, coeff)| Term {
                key: self.order.key(mono),
                mono,
                coeff: coeff % f.p(),
            })
            .collect();
        t.sort_by(|a, b| b.key.cmp(&a.key));
        let mut out: Vec<Term> = Vec::with_capacity(t.len());
        for term in t {
            match out.last_mut() {
                Some(last) if last.key == term.key => last.coeff = f.add(last.coeff, term.coeff),
                _ => out.push(term),
            }
        }
        out.retain(|t| t.coeff != 0);
        GPoly { terms: out }
    }

    fn from_poly(&self, p: &Polynomial) -> GPoly {
        self.make(
            p.terms()
                .iter()
                .map(|(m, c)| (Mono::from_monomial(m), *c))
                .collect(),
        )
    }

    fn to_poly(&self, g: &GPoly) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            Ring::Dual,
            g.terms.iter().map(|t| (t.mono.to_monomial(), t.coeff)).collect(),
        )
    }

    fn reorder(&self, g: &GPoly) -> GPoly {
        self.make(g.terms.iter().map(|t| (t.mono, t.coeff)).collect())
    }

    fn monic(&self, g: &GPoly) -> GPoly {
        if g.is_zero() || g.terms[0].coeff == 1 {
            return g.clone();
        }
        let inv = self.field.inv(g.terms[0].coeff);
        GPoly {
            terms: g
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, inv),
                    ..*t
                })
                .collect(),
        }
    }

    fn mul_term(&self, g: &GPoly, m: Mono, c: FieldElement) -> GPoly {
        let f = self.field;
        GPoly {
            terms: g
                .terms
                .iter()
                .map(|t| {
                    let mono = t.mono.mul(m);
                    Term {
                        key: self.order.key(mono),
                        mono,
                        coeff: f.mul(t.coeff, c),
                    }
                })
                .collect(),
        }
    }

    /// `a - c * m * g`, where `a` is a sorted term slice.
    fn sub_mul(&self, a: &[Term], c: FieldElement, m: Mono, g: &GPoly) -> Vec<Term> {
        let f = self.field;
        let negc = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let next_b = |j: usize| -> Option<Term> {
            g.terms.get(j).map(|t| {
                let mono = t.mono.mul(m);
                Term {
                    key: self.order.key(mono),
                    mono,
                    coeff: f.mul(t.coeff, negc),
                }
            })
        };
        let mut b = next_b(0);
        loop {
            match (a.get(i), b) {
                (None, None) => break,
                (Some(x), None) => {
                    out.extend_from_slice(&a[i..]);
                    let _ = x;
                    break;
                }
                (None, Some(y)) => {
                    out.push(y);
                    j += 1;
                    b = next_b(j);
                }
                (Some(x), Some(y)) => match x.key.cmp(&y.key) {
                    Ordering::Greater => {
                        out.push(*x);
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(y);
                        j += 1;
                        b = next_b(j);
                    }
                    Ordering::Equal => {
                        let s = f.add(x.coeff, y.coeff);
                        if s != 0 {
                            out.push(Term { coeff: s, ..*x });
                        }
                        i += 1;
                        j += 1;
                        b = next_b(j);
                    }
                },
            }
        }
        out
    }

    fn sub(&self, a: &GPoly, b: &GPoly) -> GPoly {
        GPoly {
            terms: self.sub_mul(&a.terms, 1, Mono::ONE, b),
        }
    }

    /// Full reduction of `p` by monic `basis`.
    fn normal_form(&self, p: &GPoly, basis: &[&GPoly]) -> GPoly {
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = p.terms.clone();
        let mut start = 0;
        while start < cur.len() {
            let lt = cur[start];
            match basis.iter().find(|g| g.lm().divides(lt.mono)) {
                Some(g) => {
                    let m = lt.mono.div(g.lm());
                    cur = self.sub_mul(&cur[start..], lt.coeff, m, g);
                    start = 0;
                    debug_assert!(cur.first().is_none_or(|t| t.key < lt.key));
                }
                None => {
                    rem.push(lt);
                    start += 1;
                }
            }
        }
        GPoly { terms: rem }
    }

    fn spoly(&self, a: &GPoly, b: &GPoly) -> GPoly {
        let l = a.lm().lcm(b.lm());
        let ma = l.div(a.lm());
        let mb = l.div(b.lm());
        let left = self.mul_term(a, ma, 1);
        GPoly {
            terms: self.sub_mul(&left.terms, 1, mb, b),
        }
    }

    /// Reduced Gröbner basis, sorted by decreasing leading monomial.
    fn buchberger(&self, gens: &[GPoly]) -> Vec<GPoly> {
        let mut gens: Vec<GPoly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| self.monic(g))
            .collect();
        if gens.iter().any(|g| g.is_constant()) {
            return vec![self.make(vec![(Mono::ONE, 1)])];
        }
        gens.sort_by_key(|g| g.terms[0].key);
        let mut state = Buchberger {
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        for g in gens {
            let h = {
                let basis: Vec<&GPoly> = state.active.iter().map(|&i| &state.polys[i]).collect();
                self.normal_form(&g, &basis)
            };
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return vec![self.make(vec![(Mono::ONE, 1)])];
            }
            state.update(self, self.monic(&h));
        }
        while let Some(pair) = state.pop_pair() {
            let s = self.spoly(&state.polys[pair.i], &state.polys[pair.j]);
            let h = {
                let basis: Vec<&GPoly> = state.active.iter().map(|&i| &state.polys[i]).collect();
                self.normal_form(&s, &basis)
            };
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return vec![self.make(vec![(Mono::ONE, 1)])];
            }
            state.update(self, self.monic(&h));
        }
        let basis: Vec<GPoly> = state.active.iter().map(|&i| state.polys[i].clone()).collect();
        self.interreduce(basis)
    }

    /// Minimalizes a Gröbner basis and reduces every tail.
    fn interreduce(&self, basis: Vec<GPoly>) -> Vec<GPoly> {
        let mut minimal: Vec<GPoly> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
            });
            if !redundant {
                minimal.push(self.monic(g));
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for (i, g) in minimal.iter().enumerate() {
            let others: Vec<&GPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h)
                .collect();
            let tail = GPoly {
                terms: g.terms[1..].to_vec(),
            };
            let mut r = self.normal_form(&tail, &others);
            r.terms.insert(0, g.terms[0]);
            reduced.push(r);
        }
        reduced.sort_by(|a, b| b.terms[0].key.cmp(&a.terms[0].key));
        reduced
    }

    /// Exact quotient `a / b`; `None` if `b` does not divide `a`.
    fn divide_exact(&self, a: &GPoly, b: &GPoly) -> Option<GPoly> {
        let mut rem = a.clone();
        let mut quot: Vec<(Mono, FieldElement)> = Vec::new();
        let inv = self.field.inv(b.terms[0].coeff);
        while let Some(lt) = rem.terms.first().copied() {
            if !b.lm().divides(lt.mono) {
                return None;
            }
            let m = lt.mono.div(b.lm());
            let c = self.field.mul(lt.coeff, inv);
            quot.push((m, c));
            rem = GPoly {
                terms: self.sub_mul(&rem.terms, c, m, b),
            };
        }
        Some(self.make(quot))
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    key: u64,
}

struct Buchberger {
    polys: Vec<GPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    /// Normal selection strategy: smallest lcm first.
    fn pop_pair(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by_key(|&k| {
            let p = &self.pairs[k];
            (p.key, p.i, p.j)
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, ctx: &Ctx, h: GPoly) {
        let hi = self.polys.len();
        let hlm = h.lm();
        self.polys.push(h);

        let mut pending: Vec<(usize, Mono, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let glm = self.polys[g].lm();
                (g, hlm.lcm(glm), hlm.coprime(glm))
            })
            .collect();
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        while !pending.is_empty() {
            let cur = pending.remove(0);
            let dominated = |o: &(usize, Mono, bool)| o.1.divides(cur.1);
            if cur.2 || (!pending.iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push(cur);
            }
        }
        let fresh = kept.into_iter().filter(|p| !p.2).map(|(g, lcm, _)| Pair {
            i: g,
            j: hi,
            lcm,
            key: ctx.order.key(lcm),
        });

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i].lm().lcm(hlm);
            let lj = polys[p.j].lm().lcm(hlm);
            !(hlm.divides(p.lcm) && li != p.lcm && lj != p.lcm)
        });
        self.pairs.extend(fresh);

        self.active.retain(|&g| !hlm.divides(polys[g].lm()));
        self.active.push(hi);
    }
}

/// Projective dimension and degree of the subscheme of the dual plane cut out by an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealMeasure {
    /// `-1` for the empty scheme.
    pub projective_dimension: i32,
    /// Zero for the empty scheme.
    pub degree: u64,
    /// Numerator `N(z)` of the Hilbert series `N(z) / (1 - z)^3` of `S / I`.
    pub hilbert_numerator: Vec<i64>,
}

impl IdealMeasure {
    /// Codimension in the plane; 3 for the empty scheme.
    pub fn codimension(&self) -> i32 {
        2 - self.projective_dimension
    }

    pub fn is_empty(&self) -> bool {
        self.projective_dimension < 0
    }
}

/// Rational points of a zero-dimensional scheme.
#[derive(Clone, Debug, Serialize)]
pub struct PointSearch {
    /// Projective points, first nonzero coordinate scaled to 1.
    pub points: Vec<[FieldElement; 3]>,
    /// Degree of the eliminant binary form, i.e. the number of points with multiplicity.
    pub eliminant_degree: usize,
    pub eliminant_squarefree: bool,
    /// Roots of the eliminant not defined over the base field.
    pub skipped: usize,
}

/// A reduced Gröbner basis of a homogeneous ideal of `S`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    basis: Vec<GPoly>,
}

impl PartialEq for GroebnerBasis {
    /// Equality of ideals (reduced bases are unique).
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order && self.basis == other.basis
    }
}

impl Eq for GroebnerBasis {}

/// Reduced deg-lex Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(field: PrimeField, gens: &[Polynomial]) -> GroebnerBasis {
    GroebnerBasis::with_order(field, gens, MonomialOrder::DegLex)
}

pub fn measure(gb: &GroebnerBasis) -> IdealMeasure {
    gb.measure()
}

pub fn intersect(a: &GroebnerBasis, b: &GroebnerBasis) -> GroebnerBasis {
    a.intersect(b)
}

/// `I : (l1, l2, l3)^inf`
pub fn saturate(i: &GroebnerBasis) -> GroebnerBasis {
    i.saturate()
}

impl GroebnerBasis {
    pub fn new(field: PrimeField, gens: &[Polynomial]) -> Self {
        Self::with_order(field, gens, MonomialOrder::DegLex)
    }

    pub fn with_order(field: PrimeField, gens: &[Polynomial], order: MonomialOrder) -> Self {
        for g in gens {
            assert_eq!(g.field(), field, "generator over a different field");
            assert!(g.is_homogeneous(), "non-homogeneous generator {g}");
        }
        let ctx = Ctx { field, order };
        let input: Vec<GPoly> = gens.iter().map(|g| ctx.from_poly(g)).collect();
        let basis = ctx.buchberger(&input);
        GroebnerBasis {
            field,
            order,
            generators: gens.to_vec(),
            basis,
        }
    }

    fn from_basis(field: PrimeField, order: MonomialOrder, basis: Vec<GPoly>) -> Self {
        let ctx = Ctx { field, order };
        let generators = basis.iter().map(|g| ctx.to_poly(g)).collect();
        GroebnerBasis {
            field,
            order,
            generators,
            basis,
        }
    }

    pub fn unit(field: PrimeField) -> Self {
        Self::new(field, &[Polynomial::one(field, Ring::Dual)])
    }

    pub fn zero_ideal(field: PrimeField) -> Self {
        Self::new(field, &[])
    }

    fn ctx(&self) -> Ctx {
        Ctx {
            field: self.field,
            order: self.order,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Basis elements as dual-ring polynomials, in basis order.
    pub fn basis(&self) -> Vec<Polynomial> {
        let ctx = self.ctx();
        self.basis.iter().map(|g| ctx.to_poly(g)).collect()
    }

    /// Leading monomials with respect to [`Self::order`].
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().to_monomial()).collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let ctx = self.ctx();
        let refs: Vec<&GPoly> = self.basis.iter().collect();
        ctx.to_poly(&ctx.normal_form(&ctx.from_poly(f), &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &GroebnerBasis) -> bool {
        other.basis().iter().all(|g| self.contains(g))
    }

    /// Same ideal under another monomial order.
    pub fn to_order(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == self.order {
            return self.clone();
        }
        let mut gb = GroebnerBasis::with_order(self.field, &self.basis(), order);
        gb.generators = self.generators.clone();
        gb
    }

    /// True if every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ctx = self.ctx();
        let refs: Vec<&GPoly> = self.basis.iter().collect();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = ctx.spoly(&self.basis[i], &self.basis[j]);
                if !ctx.normal_form(&s, &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic, no leading monomial divides another term of the basis.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.terms[0].coeff == 1
                && self.basis.iter().enumerate().all(|(j, h)| {
                    i == j || g.terms.iter().all(|t| !h.lm().divides(t.mono))
                })
        })
    }

    pub fn measure(&self) -> IdealMeasure {
        let leading: Vec<Monomial> = self.leading_monomials();
        measure_monomial_ideal(&leading)
    }

    /// `self ∩ other`, by eliminating `t` from `t*self + (1-t)*other`.
    pub fn intersect(&self, other: &GroebnerBasis) -> GroebnerBasis {
        assert_eq!(self.field, other.field);
        if self.is_unit() {
            return other.to_order(MonomialOrder::DegLex);
        }
        if other.is_unit() {
            return self.to_order(MonomialOrder::DegLex);
        }
        if self.is_empty() || other.is_empty() {
            return GroebnerBasis::zero_ideal(self.field);
        }
        let field = self.field;
        let elim = Ctx {
            field,
            order: MonomialOrder::Elimination,
        };
        let t = Mono::from_exps([0, 0, 0, 1]);
        let mut gens = Vec::new();
        for g in &self.basis {
            let g = elim.reorder(g);
            gens.push(elim.mul_term(&g, t, 1));
        }
        for g in &other.basis {
            let g = elim.reorder(g);
            let tg = elim.mul_term(&g, t, 1);
            gens.push(elim.sub(&g, &tg));
        }
        let gb = elim.buchberger(&gens);
        let deglex = Ctx {
            field,
            order: MonomialOrder::DegLex,
        };
        let kept: Vec<GPoly> = gb
            .iter()
            .filter(|g| g.terms.iter().all(|t| t.mono.exp(3) == 0))
            .map(|g| deglex.reorder(g))
            .collect();
        GroebnerBasis::from_basis(field, MonomialOrder::DegLex, deglex.interreduce(kept))
    }

    /// `self : (f)`, computed as `(self ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> GroebnerBasis {
        assert!(!f.is_zero(), "colon by zero");
        let principal = GroebnerBasis::new(self.field, std::slice::from_ref(f));
        let meet = self.intersect(&principal);
        let ctx = Ctx {
            field: self.field,
            order: MonomialOrder::DegLex,
        };
        let fg = ctx.from_poly(f);
        let quotients: Vec<Polynomial> = meet
            .basis
            .iter()
            .map(|g| {
                let q = ctx
                    .divide_exact(g, &fg)
                    .expect("element of (f) not divisible by f");
                ctx.to_poly(&q)
            })
            .collect();
        GroebnerBasis::new(self.field, &quotients)
    }

    /// `self : (l1, l2, l3)`
    pub fn colon_maximal(&self) -> GroebnerBasis {
        let vars: Vec<GroebnerBasis> = (0..3)
            .map(|i| self.colon(&Polynomial::variable(self.field, Ring::Dual, i)))
            .collect();
        vars[0].intersect(&vars[1]).intersect(&vars[2])
    }

    /// `self : (l1, l2, l3)^inf` by iterating [`Self::colon_maximal`] until it stabilizes.
    pub fn saturate_by_iterated_colon(&self) -> GroebnerBasis {
        let mut cur = self.to_order(MonomialOrder::DegLex);
        loop {
            let next = cur.colon_maximal();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `self : l_var^inf`. With `l_var` placed last in degree-reverse-lex order,
    /// dividing each basis element by its largest power of `l_var` gives a basis
    /// of the saturation.
    pub fn saturate_by_variable(&self, var: usize) -> GroebnerBasis {
        let field = self.field;
        let grevlex = Ctx {
            field,
            order: MonomialOrder::DegRevLex,
        };
        let swapped: Vec<GPoly> = self
            .basis
            .iter()
            .map(|g| grevlex.make(g.terms.iter().map(|t| (t.mono.swap(var, 2), t.coeff)).collect()))
            .collect();
        let gb = grevlex.buchberger(&swapped);
        let deglex = Ctx {
            field,
            order: MonomialOrder::DegLex,
        };
        let divided: Vec<GPoly> = gb
            .iter()
            .map(|g| {
                let k = g.terms.iter().map(|t| t.mono.exp(2)).min().unwrap_or(0);
                let shift = Mono::from_exps([0, 0, k, 0]);
                deglex.make(
                    g.terms
                        .iter()
                        .map(|t| (t.mono.div(shift).swap(var, 2), t.coeff))
                        .collect(),
                )
            })
            .collect();
        GroebnerBasis::from_basis(field, MonomialOrder::DegLex, deglex.buchberger(&divided))
    }

    /// `self : (l1, l2, l3)^inf = ∩_v (self : l_v^inf)`.
    pub fn saturate(&self) -> GroebnerBasis {
        if self.is_unit() || self.is_empty() {
            return self.to_order(MonomialOrder::DegLex);
        }
        let parts: Vec<GroebnerBasis> = (0..3).map(|v| self.saturate_by_variable(v)).collect();
        parts[0].intersect(&parts[1]).intersect(&parts[2])
    }

    /// Equality of the projective schemes (equal saturations).
    pub fn same_scheme(&self, other: &GroebnerBasis) -> bool {
        self.saturate() == other.saturate()
    }

    /// Base-field points of a zero-dimensional scheme.
    ///
    /// A seeded random change of coordinates puts the scheme in general
    /// position; the lex basis then yields a binary eliminant whose roots are
    /// the projections of the points, and each root is lifted back through the
    /// remaining basis elements.
    pub fn rational_points<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<PointSearch> {
        let measure = self.measure();
        if measure.projective_dimension != 0 {
            return None;
        }
        let field = self.field;
        let f = field;
        // zeros y of g(A y) correspond to zeros l = A y of g
        let change = random_invertible(&f, rng);
        let moved: Vec<Polynomial> = self
            .basis()
            .iter()
            .map(|g| g.linear_substitution(&change))
            .collect();
        let lex = GroebnerBasis::with_order(field, &moved, MonomialOrder::Lex);
        let eliminants: Vec<BinaryForm> = lex
            .basis()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(binary_form_in_last_two)
            .collect();
        let BinaryRoots {
            degree,
            squarefree,
            roots,
        } = common_binary_roots(&f, &eliminants, rng)?;
        let mut points = Vec::new();
        for &[y2, y3] in &roots {
            // the remaining basis elements restricted to this fibre, as polynomials in y1
            let fibre: Vec<crate::univariate::UniPoly> = lex
                .basis()
                .iter()
                .map(|g| {
                    let mut coeffs = vec![0u32; g.degree().unwrap_or(0) as usize + 1];
                    for (m, c) in g.terms() {
                        let e = m.exponents();
                        let v = f.mul(*c, f.mul(f.pow(y2, e[1] as u64), f.pow(y3, e[2] as u64)));
                        coeffs[e[0] as usize] = f.add(coeffs[e[0] as usize], v);
                    }
                    crate::univariate::UniPoly::new(coeffs)
                })
                .collect();
            let g = fibre
                .iter()
                .fold(crate::univariate::UniPoly::new(vec![]), |acc, p| {
                    crate::univariate::UniPoly::gcd(&f, &acc, p)
                });
            let ys: Vec<FieldElement> = if g.is_zero() {
                // whole fibre inside the scheme: not zero-dimensional
                Vec::new()
            } else {
                g.roots(&f, rng)
            };
            for y1 in ys {
                let y = [y1, y2, y3];
                let alpha = apply(&f, &change, &y);
                points.push(normalize_point(&f, alpha));
            }
        }
        points.sort_unstable();
        points.dedup();
        let gens = self.basis();
        points.retain(|p| gens.iter().all(|g| g.eval(p) == 0));
        let skipped = degree.saturating_sub(roots.len());
        if skipped > 0 {
            debug!("{skipped} eliminant roots lie outside F_{}", f.p());
        }
        Some(PointSearch {
            points,
            eliminant_degree: degree,
            eliminant_squarefree: squarefree,
            skipped,
        })
    }
}

/// `g(y2, y3)` as a binary form in `(s, u) = (y2, y3)`.
fn binary_form_in_last_two(g: &Polynomial) -> BinaryForm {
    let d = g.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![0; d + 1];
    for (m, c) in g.terms() {
        coeffs[m.exponents()[2] as usize] = *c;
    }
    BinaryForm::new(g.field(), coeffs)
}

/// Seeded invertible matrix.
fn random_invertible<R: Rng + ?Sized>(f: &PrimeField, rng: &mut R) -> [[FieldElement; 3]; 3] {
    use crate::linalg::Matrix;
    loop {
        let a = [0; 3].map(|_| [0; 3].map(|_| f.random(rng)));
        let m = Matrix::from_rows(
            *f,
            &a.iter()
                .map(|r| r.iter().map(|&v| v as i64).collect())
                .collect::<Vec<_>>(),
        );
        if m.determinant() != 0 {
            return a;
        }
    }
}

/// `a * y`
fn apply(f: &PrimeField, a: &[[FieldElement; 3]; 3], y: &[FieldElement; 3]) -> [FieldElement; 3] {
    [0, 1, 2].map(|i| (0..3).fold(0, |acc, k| f.mul_add(acc, a[i][k], y[k])))
}

fn normalize_point(f: &PrimeField, p: [FieldElement; 3]) -> [FieldElement; 3] {
    let lead = p.iter().copied().find(|&v| v != 0).expect("zero point");
    let inv = f.inv(lead);
    p.map(|v| f.mul(v, inv))
}

/// Hilbert series data of `S / (leading monomials)`.
pub fn measure_monomial_ideal(leading: &[Monomial]) -> IdealMeasure {
    if leading.iter().any(|m| m.degree() == 0) {
        return IdealMeasure {
            projective_dimension: -1,
            degree: 0,
            hilbert_numerator: vec![],
        };
    }
    let max_deg = leading.iter().map(|m| m.degree()).max().unwrap_or(0) as usize;
    // deg N <= deg lcm(all generators) <= 3 * max_deg
    let top = 3 * max_deg + 3;
    let hf: Vec<i64> = (0..=top)
        .map(|t| {
            crate::polyring::monomial_basis(t as i64)
                .monomials
                .iter()
                .filter(|m| !leading.iter().any(|l| l.divides(m)))
                .count() as i64
        })
        .collect();
    // N(z) = (1 - z)^3 * sum hf(t) z^t
    let binom3 = [1i64, -3, 3, -1];
    let mut numerator: Vec<i64> = (0..=top)
        .map(|k| {
            (0..4)
                .filter(|&j| j <= k)
                .map(|j| binom3[j] * hf[k - j])
                .sum()
        })
        .collect();
    debug_assert!(numerator[3 * max_deg + 1..].iter().all(|&c| c == 0));
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    let hilbert_numerator = numerator.clone();
    // strip factors (1 - z)
    let mut affine_dim = 3i32;
    while !numerator.is_empty() && numerator.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - z): q_k = sum_{j<=k} n_j
        let mut q = Vec::with_capacity(numerator.len() - 1);
        let mut acc = 0;
        for &c in &numerator[..numerator.len() - 1] {
            acc += c;
            q.push(acc);
        }
        numerator = q;
        affine_dim -= 1;
    }
    let degree: i64 = numerator.iter().sum();
    debug_assert_eq!(affine_dim, combinatorial_dimension(leading));
    if affine_dim <= 0 {
        return IdealMeasure {
            projective_dimension: -1,
            degree: 0,
            hilbert_numerator,
        };
    }
    IdealMeasure {
        projective_dimension: affine_dim - 1,
        degree: degree as u64,
        hilbert_numerator,
    }
}

/// Largest set of variables containing the support of no leading monomial.
pub fn combinatorial_dimension(leading: &[Monomial]) -> i32 {
    let mut best = 0;
    for mask in 0u32..8 {
        let free = |m: &Monomial| (0..3).all(|i| m.exponents()[i] == 0 || mask & (1 << i) != 0);
        if !leading.iter().any(free) {
            best = best.max(mask.count_ones() as i32);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn s(x: &str) -> Polynomial {
        Polynomial::parse(f(), Ring::Dual, x).unwrap()
    }

    fn gb(xs: &[&str]) -> GroebnerBasis {
        GroebnerBasis::new(f(), &xs.iter().map(|x| s(x)).collect::<Vec<_>>())
    }

    #[test]
    fn trivial_bases() {
        assert_eq!(gb(&["l1"]).basis(), vec![s("l1")]);
        assert!(gb(&["1"]).is_unit());
        assert!(gb(&["3*l1^2", "1"]).is_unit());
        assert!(GroebnerBasis::zero_ideal(f()).is_empty());
    }

    #[test]
    fn two_generator_case() {
        let g = gb(&["l1*l2", "l1*l3"]);
        // S(l1 l2, l1 l3) = 0 already: both generators form the reduced basis
        assert_eq!(g.basis(), vec![s("l1*l2"), s("l1*l3")]);
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.is_reduced());
    }

    #[test]
    fn nontrivial_basis_is_reduced() {
        let g = gb(&["l1^2 - l2*l3", "l1*l2 - l3^2", "l2^3 + l1*l3^2"]);
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.is_reduced());
        for x in g.generators() {
            assert!(g.contains(x));
        }
    }

    #[test]
    fn measures() {
        let m = gb(&["l1"]).measure();
        assert_eq!((m.projective_dimension, m.degree), (1, 1));
        let m = gb(&["l1", "l2"]).measure();
        assert_eq!((m.projective_dimension, m.degree), (0, 1));
        let m = gb(&["l1", "l2", "l3"]).measure();
        assert!(m.is_empty());
        let m = gb(&["1"]).measure();
        assert!(m.is_empty());
        let m = GroebnerBasis::zero_ideal(f()).measure();
        assert_eq!((m.projective_dimension, m.degree), (2, 1));
        // a conic and a cubic meet in 6 points
        let m = gb(&["l1^2 + l2^2 - l3^2", "l1^3 - 2*l2^3 + l1*l2*l3"]).measure();
        assert_eq!((m.projective_dimension, m.degree), (0, 6));
        // embedded point does not change the degree of the line
        let m = gb(&["l1^2", "l1*l2"]).measure();
        assert_eq!((m.projective_dimension, m.degree), (1, 1));
    }

    #[test]
    fn intersections() {
        let i = gb(&["l1^2 - l2*l3", "l3^3"]);
        assert_eq!(i.intersect(&GroebnerBasis::unit(f())), i);
        assert_eq!(i.intersect(&i), i);
        assert_eq!(gb(&["l1"]).intersect(&gb(&["l2"])), gb(&["l1*l2"]));
        let meet = gb(&["l1", "l2"]).intersect(&gb(&["l2", "l3"]));
        assert_eq!(meet, gb(&["l2", "l1*l3"]));
    }

    #[test]
    fn saturations() {
        let i = gb(&["l1^2", "l1*l2", "l1*l3"]);
        assert_eq!(i.saturate(), gb(&["l1"]));
        assert_eq!(i.saturate_by_iterated_colon(), gb(&["l1"]));
        assert!(GroebnerBasis::unit(f()).saturate().is_unit());
        let sat = gb(&["l1*l2 - l3^2", "l1^3"]);
        assert_eq!(sat.saturate(), sat);
        // irrelevant ideal saturates to the unit ideal
        assert!(gb(&["l1", "l2", "l3"]).saturate().is_unit());
        assert!(gb(&["l1^2", "l2^3", "l3"]).saturate_by_iterated_colon().is_unit());
    }

    #[test]
    fn colon_by_variable() {
        let i = gb(&["l1*l2", "l2^2"]);
        assert_eq!(i.colon(&s("l2")), gb(&["l1", "l2"]));
        assert_eq!(i.colon(&s("l3")), i);
    }

    #[test]
    fn order_independent_measure() {
        let gens = ["l1^2 + 3*l2*l3 - l3^2", "l1*l2*l3 - l2^3 + 5*l1^3"];
        let polys: Vec<Polynomial> = gens.iter().map(|x| s(x)).collect();
        let a = GroebnerBasis::with_order(f(), &polys, MonomialOrder::DegLex).measure();
        let b = GroebnerBasis::with_order(f(), &polys, MonomialOrder::Lex).measure();
        let c = GroebnerBasis::with_order(f(), &polys, MonomialOrder::DegRevLex).measure();
        assert_eq!(a.projective_dimension, b.projective_dimension);
        assert_eq!(a.degree, b.degree);
        assert_eq!(a.hilbert_numerator, c.hilbert_numerator);
        assert_eq!((a.projective_dimension, a.degree), (0, 6));
    }

    #[test]
    fn points_of_a_reduced_scheme() {
        use rand::SeedableRng;
        // four points: (1:0:0), (0:1:0), (0:0:1), (1:1:1)
        let pts = [[1u32, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
        let g = gb(&["l1*l2 - l1*l3", "l1*l3 - l2*l3"]);
        // verify the ideal vanishes on them first
        for p in &pts {
            assert!(g.basis().iter().all(|q| q.eval(p) == 0));
        }
        let m = g.measure();
        assert_eq!((m.projective_dimension, m.degree), (0, 4));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let found = g.rational_points(&mut rng).unwrap();
        assert_eq!(found.eliminant_degree, 4);
        assert!(found.eliminant_squarefree);
        let mut expect = pts.to_vec();
        expect.sort_unstable();
        assert_eq!(found.points, expect);
    }
}
