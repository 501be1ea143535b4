//! Gabidulin codes: construction from an `F_q`-independent vector `h`,
//! encoding, syndromes and rank-`t` error sampling.
//!
//! The parity-check matrix has rows `h^[0], h^[1], ..., h^[n-k-1]` and the
//! minimum rank distance is `d = n - k + 1`.

use std::sync::Arc;

use rand::Rng;

use crate::error::{invalid, Result};
use crate::field::{Field, FieldCtx, FieldElement, PrimeField};
use crate::linpoly::LinPoly;
use crate::matrix::{self, Matrix};

/// A vector of `n` elements of `F_{q^m}`: codeword, received word or error.
pub type Word = Vec<FieldElement>;

#[derive(Debug, Clone)]
pub struct GabidulinCode {
    ctx: Arc<FieldCtx>,
    n: usize,
    k: usize,
    h: Vec<FieldElement>,
    generator: Matrix<FieldElement>,
}

impl GabidulinCode {
    pub fn new(ctx: &Arc<FieldCtx>, n: usize, k: usize, h: Vec<FieldElement>) -> Result<Self> {
        if k == 0 || k >= n {
            return invalid(format!("need 0 < k < n, got n = {n}, k = {k}"));
        }
        if n > ctx.m() {
            return invalid(format!("need n <= m, got n = {n}, m = {}", ctx.m()));
        }
        if h.len() != n {
            return invalid(format!("h has {} entries, expected {n}", h.len()));
        }
        if ctx.rank_over_fq(&h)? != n {
            return invalid("h is not linearly independent over F_q");
        }
        let mut code = Self {
            ctx: ctx.clone(),
            n,
            k,
            h,
            generator: Matrix::filled(0, n, ctx.zero()),
        };
        let rows = matrix::kernel(&**ctx, &code.parity_check_matrix());
        debug_assert_eq!(rows.len(), k);
        code.generator = Matrix::from_rows(rows);
        Ok(code)
    }

    /// Uses `h = (1, z, z^2, ..., z^{n-1})`.
    pub fn with_default_h(ctx: &Arc<FieldCtx>, n: usize, k: usize) -> Result<Self> {
        let h = (0..n as u64).map(|i| ctx.pow(ctx.z(), i)).collect();
        Self::new(ctx, n, k, h)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn h(&self) -> &[FieldElement] {
        &self.h
    }

    /// Minimum rank distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    /// Unique decoding radius `floor((d - 1) / 2)`.
    pub fn half_distance(&self) -> usize {
        (self.d() - 1) / 2
    }

    /// `(n - k) x n`, entry `(i, j) = h_j^[i]`.
    pub fn parity_check_matrix(&self) -> Matrix<FieldElement> {
        Matrix::from_fn(self.n - self.k, self.n, |i, j| self.ctx.frobenius(self.h[j], i as i64))
    }

    /// `k x n`, a basis of the right kernel of the parity-check matrix.
    pub fn generator_matrix(&self) -> &Matrix<FieldElement> {
        &self.generator
    }

    fn check_word(&self, w: &[FieldElement], len: usize) -> Result<()> {
        if w.len() != len {
            return invalid(format!("expected {len} symbols, got {}", w.len()));
        }
        w.iter().try_for_each(|&x| self.ctx.check(x))
    }

    /// `message * G`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Word> {
        self.check_word(message, self.k)?;
        let f = &*self.ctx;
        Ok((0..self.n)
            .map(|j| {
                message
                    .iter()
                    .enumerate()
                    .fold(f.zero(), |acc, (i, &m)| f.add(acc, f.mul(m, self.generator[(i, j)])))
            })
            .collect())
    }

    /// `S_i = sum_j r_j h_j^[i]` for `i = 0..d-2`, as a linearized polynomial.
    pub fn syndrome(&self, received: &[FieldElement]) -> Result<Syndrome> {
        self.check_word(received, self.n)?;
        let f = &*self.ctx;
        let coeffs = (0..self.d() - 1)
            .map(|i| {
                received
                    .iter()
                    .zip(&self.h)
                    .fold(f.zero(), |acc, (&r, &h)| f.add(acc, f.mul(r, f.frobenius(h, i as i64))))
            })
            .collect();
        Syndrome::new(LinPoly::new(&self.ctx, coeffs)?, self.d())
    }

    pub fn is_codeword(&self, word: &[FieldElement]) -> Result<bool> {
        Ok(self.syndrome(word)?.is_zero())
    }

    /// Rank of `word` over `F_q`.
    pub fn rank_weight(&self, word: &[FieldElement]) -> Result<usize> {
        self.ctx.rank_over_fq(word)
    }

    pub fn random_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Word {
        (0..self.k).map(|_| self.ctx.random(rng)).collect()
    }

    /// An error `e = E * Y` of rank exactly `t`.
    pub fn random_error<R: Rng + ?Sized>(&self, t: usize, rng: &mut R) -> Result<Word> {
        Ok(self.random_error_parts(t, rng)?.error)
    }

    /// Samples `F_q`-independent `E_1..E_t` and a full-rank `t x n` matrix `Y`
    /// over `F_q` by rejection, and returns them with `e = E * Y`.
    pub fn random_error_parts<R: Rng + ?Sized>(&self, t: usize, rng: &mut R) -> Result<ErrorParts> {
        if t > self.n.min(self.ctx.m()) {
            return invalid(format!("rank {t} exceeds min(m, n) = {}", self.n.min(self.ctx.m())));
        }
        let f = &*self.ctx;
        let fq = f.prime_field();
        let values = loop {
            let e: Vec<_> = (0..t).map(|_| f.random(rng)).collect();
            if f.rank_over_fq(&e)? == t {
                break e;
            }
        };
        let y = loop {
            let y = Matrix::from_fn(t, self.n, |_, _| rng.gen_range(0..fq.q()));
            if matrix::rank(&fq, &y) == t {
                break y;
            }
        };
        let error = combine_over_fq(f, &values, &y);
        debug_assert_eq!(f.rank_over_fq(&error)?, t);
        Ok(ErrorParts { values, y, error })
    }
}

/// `E * Y` with `E` over `F_{q^m}` and `Y` over `F_q`.
pub fn combine_over_fq(f: &FieldCtx, values: &[FieldElement], y: &Matrix<u32>) -> Word {
    (0..y.cols())
        .map(|j| {
            values
                .iter()
                .enumerate()
                .fold(f.zero(), |acc, (i, &e)| f.add(acc, f.scale_fq(y[(i, j)], e)))
        })
        .collect()
}

/// The factorization `e = E * Y` behind a sampled error.
#[derive(Debug, Clone)]
pub struct ErrorParts {
    pub values: Vec<FieldElement>,
    pub y: Matrix<u32>,
    pub error: Word,
}

/// Syndrome polynomial `S(x) = sum_{i < d-1} S_i x^[i]` together with the
/// code distance it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    poly: LinPoly,
    d: usize,
}

impl Syndrome {
    pub fn new(poly: LinPoly, d: usize) -> Result<Self> {
        if d < 2 {
            return invalid("minimum distance must be at least 2");
        }
        if poly.q_degree() > Some(d - 2) {
            return invalid(format!("syndrome q-degree exceeds d - 2 = {}", d - 2));
        }
        Ok(Self { poly, d })
    }

    pub fn poly(&self) -> &LinPoly {
        &self.poly
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.poly.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `S_i`.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.poly.coeff(i)
    }
}

/// Solves `x = sum_l y_l h_l` for `y` over `F_q`; `None` if `x` is outside
/// the `F_q`-span of `h`.
pub(crate) fn coordinates_in(f: &FieldCtx, h: &[FieldElement], x: FieldElement) -> Option<Vec<u32>> {
    let fq: PrimeField = f.prime_field();
    matrix::solve(&fq, &f.coordinate_matrix(h), &f.expand(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn code_a() -> GabidulinCode {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        GabidulinCode::with_default_h(&f, 4, 1).unwrap()
    }

    #[test]
    fn parity_check_layout() {
        let c = code_a();
        let f = c.ctx().clone();
        let h = c.parity_check_matrix();
        assert_eq!((h.rows(), h.cols()), (3, 4));
        assert_eq!(h.row(0), c.h());
        for i in 1..3 {
            for j in 0..4 {
                assert_eq!(h[(i, j)], f.frobenius(h[(i - 1, j)], 1));
            }
        }
        assert_eq!(h[(1, 1)], f.mul(f.z(), f.z()));
    }

    #[test]
    fn generator_is_orthogonal_and_full_rank() {
        for (m, n, k) in [(4, 4, 1), (6, 6, 1), (6, 6, 3), (6, 5, 2)] {
            let f = FieldCtx::with_default_modulus(2, m).unwrap();
            let c = GabidulinCode::with_default_h(&f, n, k).unwrap();
            let g = c.generator_matrix();
            let prod = matrix::mul(&*f, g, &c.parity_check_matrix().transpose());
            assert!(prod.to_rows().iter().flatten().all(|&x| f.is_zero(x)));
            assert_eq!(matrix::rank(&*f, g), k);
        }
    }

    #[test]
    fn minimum_distance_by_enumeration() {
        let c = code_a();
        let f = c.ctx().clone();
        let min = f
            .elements()
            .skip(1)
            .map(|m| c.rank_weight(&c.encode(&[m]).unwrap()).unwrap())
            .min()
            .unwrap();
        assert_eq!(min, 4);
        assert_eq!(c.d(), 4);
        for r in 0..c.k() {
            assert!(c.rank_weight(c.generator_matrix().row(r)).unwrap() >= c.d());
        }
    }

    #[test]
    fn encoding_basics() {
        let c = code_a();
        let f = c.ctx().clone();
        assert!(c.encode(&[f.zero()]).unwrap().iter().all(|&x| f.is_zero(x)));
        assert_eq!(c.encode(&[f.one()]).unwrap(), c.generator_matrix().row(0));
        assert!(c.encode(&[]).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f6 = FieldCtx::with_default_modulus(2, 6).unwrap();
        let c6 = GabidulinCode::with_default_h(&f6, 6, 3).unwrap();
        for _ in 0..50 {
            let msg = c6.random_message(&mut rng);
            assert!(c6.syndrome(&c6.encode(&msg).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_one_syndrome() {
        let c = code_a();
        let f = c.ctx().clone();
        let z = f.z();
        let e = vec![z, f.zero(), f.zero(), f.zero()];
        let s = c.syndrome(&e).unwrap();
        for i in 0..3 {
            assert_eq!(s.coeff(i), z);
        }
        let cw = c.encode(&[f.z()]).unwrap();
        let r: Vec<_> = cw.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
        assert_eq!(c.syndrome(&r).unwrap(), s);
    }

    #[test]
    fn invalid_parameters() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        assert!(GabidulinCode::with_default_h(&f, 5, 1).is_err());
        assert!(GabidulinCode::with_default_h(&f, 4, 4).is_err());
        assert!(GabidulinCode::with_default_h(&f, 4, 0).is_err());
        assert!(GabidulinCode::new(&f, 2, 1, vec![f.one(), f.one()]).is_err());
    }

    #[test]
    fn sampled_errors_have_requested_rank() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let c = GabidulinCode::with_default_h(&f, 6, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(c.random_error(0, &mut rng).unwrap().iter().all(|&x| f.is_zero(x)));
        for t in 0..=6 {
            for _ in 0..100 {
                let e = c.random_error(t, &mut rng).unwrap();
                assert_eq!(c.rank_weight(&e).unwrap(), t);
            }
        }
        assert!(c.random_error(7, &mut rng).is_err());
    }

    #[test]
    fn syndrome_is_linear() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let c = GabidulinCode::with_default_h(&f, 6, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a: Vec<_> = (0..6).map(|_| f.random(&mut rng)).collect();
            let b: Vec<_> = (0..6).map(|_| f.random(&mut rng)).collect();
            let (x, y) = (f.random(&mut rng), f.random(&mut rng));
            let comb: Vec<_> = a
                .iter()
                .zip(&b)
                .map(|(&p, &q)| f.add(f.mul(x, p), f.mul(y, q)))
                .collect();
            let lhs = c.syndrome(&comb).unwrap();
            let rhs = &c.syndrome(&a).unwrap().poly().scale(x) + &c.syndrome(&b).unwrap().poly().scale(y);
            assert_eq!(lhs.poly(), &rhs);
        }
    }
}
