//! Exact computations around the weak Lefschetz property of finite-length
//! graded modules over `k[x1, x2, x3]` and the rank-2 bundles behind them.
//!
//! A module `M = coker(phi)` with `phi : ⊕ R(-a_i) -> ⊕ R(-b_j)` of rank
//! `n` is the first cohomology module of the bundle `E = ker(phi)`. The crate
//! builds `M` over a prime field, computes its non-Lefschetz locus as a
//! determinantal scheme in the dual plane, measures it with a Gröbner basis
//! engine, and cross-checks it against jumping lines of `E`.
//!
//! ```
//! use lefschetz_locus::{DegreeData, GradedModule, PrimeField};
//!
//! let degrees = DegreeData::new(vec![2, 2, 3], vec![0]).unwrap();
//! let m = GradedModule::generic(PrimeField::default(), &degrees, 7).unwrap();
//! assert_eq!(m.hilbert_function(), &[1, 3, 4, 3, 1]);
//! ```

pub mod bundle;
pub mod cli;
pub mod error;
pub mod field;
pub mod groebner;
pub mod jumping;
pub mod lefschetz;
pub mod linalg;
pub mod polyring;
pub mod predictor;
pub mod presentation;
pub mod rational;
pub mod univariate;

pub use bundle::{ChernData, SplittingType, Stability, StabilityReport};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use groebner::{GroebnerBasis, IdealMeasure, MonomialOrder};
pub use jumping::LinePoint;
pub use linalg::Matrix;
pub use polyring::{BinaryForm, Monomial, Polynomial, Ring};
pub use predictor::Verdict;
pub use presentation::{DegreeData, GradedModule, PresentationMatrix};
