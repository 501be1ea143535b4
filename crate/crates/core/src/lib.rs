//! Gabidulin codes and their key equation.
//!
//! Building blocks, bottom up:
//!
//! - [`field`]: `F_q` and `F_{q^m}` arithmetic, Frobenius powers, rank over `F_q`;
//! - [`matrix`]: dense Gaussian elimination over any [`Field`];
//! - [`linpoly`]: linearized polynomials under the symbolic product;
//! - [`seea`]: the symbolic extended Euclidean algorithm;
//! - [`gabidulin`]: code construction, encoding and syndromes;
//! - [`keyeq`]: the unique solution up to half the minimum distance, and a
//!   basis of all solutions for larger radii;
//! - [`decoder`]: error recovery, unique and list decoding.
//!
//! ```
//! use rankdec::{decoder, Field, FieldCtx, GabidulinCode};
//!
//! let f = FieldCtx::with_default_modulus(2, 4)?;
//! let code = GabidulinCode::with_default_h(&f, 4, 1)?;
//! let c = code.encode(&[f.z()])?;
//! let mut r = c.clone();
//! r[0] = f.add(r[0], f.one());
//! let out = decoder::decode_bmd(&code, &r)?;
//! assert_eq!(out.codewords, vec![c]);
//! # Ok::<(), rankdec::Error>(())
//! ```

pub mod decoder;
pub mod error;
pub mod field;
pub mod gabidulin;
pub mod io;
pub mod keyeq;
pub mod linpoly;
pub mod matrix;
pub mod seea;

pub use decoder::{decode_beyond, decode_bmd, recover_error, DecodeOutcome, OutcomeKind};
pub use error::{Error, Result};
pub use field::{count_muls, mul_count, reset_mul_count, Field, FieldCtx, FieldElement, PrimeField};
pub use gabidulin::{GabidulinCode, Syndrome, Word};
pub use keyeq::{solution_basis, solve_unique, KeyEqBasis, KeyEqPair};
pub use linpoly::LinPoly;
pub use matrix::Matrix;
pub use seea::{seea, seea_until_degree, SeeaTrace};

/// Matrix over the base field.
pub type MatrixFq = Matrix<u32>;
/// Matrix over the extension field.
pub type MatrixFqm = Matrix<FieldElement>;
