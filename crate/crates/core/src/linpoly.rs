//! Linearized polynomials `L(x) = sum_i l_i x^[i]` over `F_{q^m}`, where
//! `x^[i] = x^(q^i)`.
//!
//! Under addition and the symbolic product `F (x) G = F(G(x))` they form a
//! non-commutative ring with identity `x^[0]`. The product's coefficients are
//! a Frobenius-twisted convolution:
//!
//! ```text
//! (F (x) G)_k = sum_{i + j = k} f_i * g_j^[i]
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{invalid, Error, Result};
use crate::field::{Field, FieldCtx, FieldElement};
use crate::matrix::{self, Matrix};

/// A linearized polynomial in normal form (no trailing zero coefficients).
#[derive(Clone)]
pub struct LinPoly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for LinPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id() == other.ctx.id() && self.coeffs == other.coeffs
    }
}

impl Eq for LinPoly {}

impl fmt::Debug for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ctx.is_zero(**c))
            .map(|(i, c)| format!("[{}]x^[{i}]", self.ctx.format_element(*c)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl LinPoly {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(ctx: &Arc<FieldCtx>, coeffs: Vec<FieldElement>) -> Result<Self> {
        for &c in &coeffs {
            ctx.check(c)?;
        }
        Ok(Self::from_raw(ctx.clone(), coeffs))
    }

    fn from_raw(ctx: Arc<FieldCtx>, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|&c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        Self { ctx, coeffs }
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        Self {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    /// `x^[0] = x`, the identity of the symbolic product.
    pub fn one(ctx: &Arc<FieldCtx>) -> Self {
        Self::monomial(ctx, ctx.one(), 0)
    }

    /// `x^[i]`.
    pub fn x_pow(ctx: &Arc<FieldCtx>, i: usize) -> Self {
        Self::monomial(ctx, ctx.one(), i)
    }

    /// `c * x^[i]`.
    pub fn monomial(ctx: &Arc<FieldCtx>, c: FieldElement, i: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); i + 1];
        coeffs[i] = c;
        Self::from_raw(ctx.clone(), coeffs)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^[i]`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The q-degree; `None` stands for minus infinity (the zero polynomial)
    /// and orders below every `Some(_)`.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.ctx.one())
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.ctx.id(),
            other.ctx.id(),
            "linearized polynomials over different fields"
        );
    }

    /// `L(a) = sum_i l_i a^[i]`.
    pub fn evaluate(&self, a: FieldElement) -> Result<FieldElement> {
        self.ctx.check(a)?;
        let f = &*self.ctx;
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .fold(f.zero(), |acc, (i, &c)| f.add(acc, f.mul(c, f.frobenius(a, i as i64)))))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = &*self.ctx;
        Self::from_raw(self.ctx.clone(), self.coeffs.iter().map(|&l| f.mul(c, l)).collect())
    }

    /// Scaled to leading coefficient one; the zero polynomial is returned unchanged.
    pub fn to_monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(self.ctx.inv(lead).expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// `x^[k] (x) self`: shifts coefficients up by `k` and applies the
    /// `k`-th Frobenius power to each. Costs no field multiplications.
    pub fn frobenius_shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let f = &*self.ctx;
        let mut coeffs = vec![f.zero(); k];
        coeffs.extend(self.coeffs.iter().map(|&c| f.frobenius(c, k as i64)));
        Self::from_raw(self.ctx.clone(), coeffs)
    }

    pub fn symbolic_product(&self, other: &Self) -> Self {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let f = &*self.ctx;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if f.is_zero(fi) {
                continue;
            }
            for (j, &gj) in other.coeffs.iter().enumerate() {
                if f.is_zero(gj) {
                    continue;
                }
                out[i + j] = f.add(out[i + j], f.mul(fi, f.frobenius(gj, i as i64)));
            }
        }
        Self::from_raw(self.ctx.clone(), out)
    }

    /// Right division: `(Q, R)` with `self = Q (x) divisor + R` and
    /// `deg_q R < deg_q divisor`.
    pub fn right_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor);
        let Some(db) = divisor.q_degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &*self.ctx;
        let lead_inv = f.inv(divisor.coeffs[db]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len().saturating_sub(db)];
        while rem.len() > db {
            let da = rem.len() - 1;
            let s = da - db;
            // c * lead(B)^[s] = lead(A'), and (1/b)^[s] = 1/(b^[s])
            let c = f.mul(rem[da], f.frobenius(lead_inv, s as i64));
            quot[s] = c;
            for (j, &bj) in divisor.coeffs.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let t = f.mul(c, f.frobenius(bj, s as i64));
                rem[j + s] = f.sub(rem[j + s], t);
            }
            debug_assert!(f.is_zero(rem[da]));
            while rem.last().is_some_and(|&c| f.is_zero(c)) {
                rem.pop();
            }
        }
        Ok((
            Self::from_raw(self.ctx.clone(), quot),
            Self::from_raw(self.ctx.clone(), rem),
        ))
    }

    /// Remainder modulo `x^[n]`: drops every coefficient of index `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(n);
        Self::from_raw(self.ctx.clone(), coeffs)
    }

    /// `F_q`-basis of `{a in F_{q^m} : L(a) = 0}`.
    ///
    /// Errors with [`Error::ZeroPolynomial`] for `L = 0`, whose root space is
    /// the whole field.
    pub fn root_space(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &*self.ctx;
        let basis: Vec<FieldElement> = (0..f.m()).map(|j| f.pow(f.z(), j as u64)).collect();
        let images = basis.iter().map(|&b| self.evaluate(b)).collect::<Result<Vec<_>>>()?;
        let linear_map = f.coordinate_matrix(&images);
        let fq = f.prime_field();
        Ok(matrix::kernel(&fq, &linear_map)
            .into_iter()
            .map(|v| f.from_coords(&v).expect("kernel vector has m residues"))
            .collect())
    }

    /// The monic polynomial of q-degree `|E|` whose roots are exactly the
    /// `F_q`-span of `E`. Built one element at a time:
    /// `L_j = (x^[1] - L_{j-1}(E_j)^(q-1) x^[0]) (x) L_{j-1}`.
    pub fn min_subspace_poly(ctx: &Arc<FieldCtx>, elements: &[FieldElement]) -> Result<Self> {
        if elements.is_empty() {
            return invalid("min_subspace_poly needs at least one element");
        }
        if ctx.rank_over_fq(elements)? != elements.len() {
            return invalid("elements are linearly dependent over F_q");
        }
        let q = ctx.q() as u64;
        let mut acc = Self::one(ctx);
        for (j, &e) in elements.iter().enumerate() {
            let v = acc.evaluate(e)?;
            let factor = Self::new(ctx, vec![ctx.neg(ctx.pow(v, q - 1)), ctx.one()])?;
            acc = factor.symbolic_product(&acc);
            debug_assert!(elements[..=j].iter().all(|&x| ctx.is_zero(acc.evaluate(x).unwrap())));
        }
        Ok(acc)
    }

    /// Comma-separated coefficient strings (see [`FieldCtx::format_element`]);
    /// the zero polynomial is the empty string.
    pub fn to_text(&self) -> String {
        self.to_strings().join(",")
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|&c| self.ctx.format_element(c)).collect()
    }

    /// Inverse of [`LinPoly::to_text`]: residues are grouped `m` at a time.
    pub fn parse_text(ctx: &Arc<FieldCtx>, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero(ctx));
        }
        let digits: Vec<&str> = s.split(',').collect();
        if !digits.len().is_multiple_of(ctx.m()) {
            return Err(Error::Parse(format!(
                "{} residues is not a multiple of m = {}",
                digits.len(),
                ctx.m()
            )));
        }
        let coeffs = digits
            .chunks(ctx.m())
            .map(|chunk| ctx.parse_element(&chunk.join(",")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    pub fn from_strings<S: AsRef<str>>(ctx: &Arc<FieldCtx>, items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| ctx.parse_element(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    /// Coefficient vector `(l_top, ..., l_0)` of length `width`, the layout
    /// used by the syndrome matrix.
    pub fn descending_coeffs(&self, width: usize) -> Vec<FieldElement> {
        (0..width).rev().map(|i| self.coeff(i)).collect()
    }

    /// Stacks ascending coefficient vectors of length `width` as matrix rows.
    pub fn coefficient_matrix(polys: &[LinPoly], width: usize) -> Matrix<FieldElement> {
        Matrix::from_fn(polys.len(), width, |r, c| polys[r].coeff(c))
    }
}

impl Add for &LinPoly {
    type Output = LinPoly;

    fn add(self, other: &LinPoly) -> LinPoly {
        self.same_field(other);
        let f = &*self.ctx;
        let n = self.coeffs.len().max(other.coeffs.len());
        LinPoly::from_raw(
            self.ctx.clone(),
            (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect(),
        )
    }
}

impl Sub for &LinPoly {
    type Output = LinPoly;

    fn sub(self, other: &LinPoly) -> LinPoly {
        self + &(-other)
    }
}

impl Neg for &LinPoly {
    type Output = LinPoly;

    fn neg(self) -> LinPoly {
        let f = &*self.ctx;
        LinPoly::from_raw(self.ctx.clone(), self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Symbolic product.
impl Mul for &LinPoly {
    type Output = LinPoly;

    fn mul(self, other: &LinPoly) -> LinPoly {
        self.symbolic_product(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_poly(ctx: &Arc<FieldCtx>, rng: &mut ChaCha8Rng, deg: usize) -> LinPoly {
        let mut coeffs: Vec<_> = (0..=deg).map(|_| ctx.random(rng)).collect();
        while ctx.is_zero(coeffs[deg]) {
            coeffs[deg] = ctx.random(rng);
        }
        LinPoly::new(ctx, coeffs).unwrap()
    }

    #[test]
    fn degree_conventions() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        assert_eq!(LinPoly::zero(&f).q_degree(), None);
        assert_eq!(LinPoly::one(&f).q_degree(), Some(0));
        assert!(None < Some(0usize));
        let p = LinPoly::new(&f, vec![f.one(), f.zero(), f.zero()]).unwrap();
        assert_eq!(p.q_degree(), Some(0));
    }

    #[test]
    fn noncommutative_in_f4() {
        let f = FieldCtx::new(2, 2, vec![1, 1, 1]).unwrap();
        let z = f.z();
        let x1 = LinPoly::x_pow(&f, 1);
        let zx = LinPoly::monomial(&f, z, 0);
        let left = x1.symbolic_product(&zx);
        let right = zx.symbolic_product(&x1);
        // z^2 = z + 1
        assert_eq!(left, LinPoly::monomial(&f, f.add(z, f.one()), 1));
        assert_eq!(right, LinPoly::monomial(&f, z, 1));
        assert_ne!(left, right);
    }

    #[test]
    fn identity_and_scaling() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = random_poly(&f, &mut rng, 3);
        let one = LinPoly::one(&f);
        assert_eq!(&one * &p, p);
        assert_eq!(&p * &one, p);
        assert_eq!(p.scale(f.one()), p);
        assert!(p.scale(f.zero()).is_zero());
        assert!((&p + &p.scale(f.neg(f.one()))).is_zero());
    }

    #[test]
    fn evaluate_basics() {
        let f = FieldCtx::with_default_modulus(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = random_poly(&f, &mut rng, 2);
        assert_eq!(p.evaluate(f.zero()).unwrap(), f.zero());
        let a = f.random(&mut rng);
        assert_eq!(LinPoly::one(&f).evaluate(a).unwrap(), a);
        let other = FieldCtx::with_default_modulus(3, 3).unwrap();
        assert_eq!(p.evaluate(other.one()), Err(Error::ContextMismatch));
    }

    #[test]
    fn division_edge_cases() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let b = random_poly(&f, &mut rng, 2);
        let (q, r) = b.right_divide(&b).unwrap();
        assert_eq!(q, LinPoly::one(&f));
        assert!(r.is_zero());
        let (q, r) = b.right_divide(&LinPoly::one(&f)).unwrap();
        assert_eq!((q, r.is_zero()), (b.clone(), true));
        assert_eq!(b.right_divide(&LinPoly::zero(&f)).unwrap_err(), Error::DivisionByZero);
        let (q, r) = LinPoly::one(&f).right_divide(&b).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, LinPoly::one(&f));
    }

    #[test]
    fn truncate_is_division_by_monomial() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let a = random_poly(&f, &mut rng, 7);
            for n in 0..10 {
                let (_, r) = a.right_divide(&LinPoly::x_pow(&f, n)).unwrap();
                assert_eq!(a.truncate(n), r);
            }
        }
        let x3 = LinPoly::x_pow(&f, 3);
        assert!(x3.truncate(3).is_zero());
        assert_eq!(x3.truncate(4), x3);
    }

    #[test]
    fn root_space_examples() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        assert!(LinPoly::one(&f).root_space().unwrap().is_empty());
        // x^[1] - x has roots F_q
        let fermat = &LinPoly::x_pow(&f, 1) - &LinPoly::one(&f);
        assert_eq!(fermat.root_space().unwrap(), vec![f.one()]);
        assert_eq!(LinPoly::zero(&f).root_space(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn min_subspace_poly_of_one_is_x1_plus_x() {
        for m in [3, 4, 6] {
            let f = FieldCtx::with_default_modulus(2, m).unwrap();
            let p = LinPoly::min_subspace_poly(&f, &[f.one()]).unwrap();
            assert_eq!(p, LinPoly::new(&f, vec![f.one(), f.one()]).unwrap());
        }
    }

    #[test]
    fn min_subspace_poly_properties() {
        for (q, m) in [(2u32, 6usize), (3, 3), (5, 2)] {
            let f = FieldCtx::with_default_modulus(q, m).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(12);
            for t in 1..=m {
                let mut es = Vec::new();
                while es.len() < t {
                    let e = f.random(&mut rng);
                    es.push(e);
                    if f.rank_over_fq(&es).unwrap() < es.len() {
                        es.pop();
                    }
                }
                let p = LinPoly::min_subspace_poly(&f, &es).unwrap();
                assert_eq!(p.q_degree(), Some(t));
                assert!(p.is_monic());
                let roots = p.root_space().unwrap();
                assert_eq!(roots.len(), t);
                let mut joint = roots.clone();
                joint.extend(&es);
                assert_eq!(f.rank_over_fq(&joint).unwrap(), t);
                // random F_q-combination of E is a root
                let comb = es.iter().fold(f.zero(), |acc, &e| {
                    use rand::Rng;
                    f.add(acc, f.scale_fq(rng.gen_range(0..q), e))
                });
                assert!(f.is_zero(p.evaluate(comb).unwrap()));
            }
        }
    }

    #[test]
    fn min_subspace_poly_rejects_dependent_input() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let z = f.z();
        assert!(matches!(
            LinPoly::min_subspace_poly(&f, &[z, z]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            LinPoly::min_subspace_poly(&f, &[]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn text_roundtrip() {
        let f = FieldCtx::with_default_modulus(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = random_poly(&f, &mut rng, 3);
        assert_eq!(LinPoly::parse_text(&f, &p.to_text()).unwrap(), p);
        assert!(LinPoly::parse_text(&f, "").unwrap().is_zero());
        assert!(LinPoly::parse_text(&f, "1,2,0").is_err());
    }
}
