//! Solvers for the Gabidulin key equation
//!
//! ```text
//! Omega(x) = Lambda(x) (x) S(x)  mod x^[d-1],   deg_q Omega < deg_q Lambda
//! ```
//!
//! [`solve_unique`] runs the SEEA on `(x^[d-1], S)` until the remainder degree
//! drops below `floor((d-1)/2)` and returns the unique (up to scaling)
//! solution. [`solution_basis`] handles radii `tau` beyond half the distance:
//! it keeps every SEEA pair `(U_i, R_i)`, fills degree gaps with
//! `x^[1] (x) (U, R)` so that one `Delta` exists for every q-degree, and keeps
//! the pairs with `deg_q Delta <= tau` and `deg_q P < tau`. Every solution of
//! degree at most `tau` is an `F_{q^m}`-combination of the kept `Delta`s.
//!
//! [`oracle_solutions`] solves the same problem independently by Gaussian
//! elimination on the syndrome matrix.
//!
//! Pairs are oriented as `P = Delta (x) S mod x^[d-1]`: `Delta` plays the role
//! of `Lambda`, `P` the role of `Omega`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::field::{Field, FieldElement};
use crate::gabidulin::Syndrome;
use crate::linpoly::LinPoly;
use crate::matrix::{self, Matrix};
use crate::seea::{seea_until_degree, Seea};

/// Where a `(Delta, P)` pair came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairOrigin {
    /// `(x^[0], S)`.
    Initial,
    /// `(U_i, R_i)` from SEEA step `i`.
    Seea(usize),
    /// `x^[1] (x)` the previous pair, filling a degree gap between SEEA steps.
    GapFill,
    /// Filler appended after the SEEA terminated with a positive-degree gcd.
    TailFill,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyEqPair {
    pub delta: LinPoly,
    pub p: LinPoly,
    pub origin: PairOrigin,
}

/// `true` when `truncate(lambda (x) S, d - 1) = omega`.
pub fn satisfies_key_equation(lambda: &LinPoly, omega: &LinPoly, s: &Syndrome) -> bool {
    lambda.symbolic_product(s.poly()).truncate(s.d() - 1) == *omega
}

/// A solution `(Lambda, Omega)` with monic `Lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueSolution {
    pub lambda: LinPoly,
    pub omega: LinPoly,
    /// SEEA step at which the degree condition was met (0 for a zero syndrome).
    pub step: usize,
}

/// Solves the key equation up to half the minimum distance.
///
/// Fails with [`Error::DecodingFailure`] when the resulting `Lambda` is
/// improper: q-degree above `floor((d-1)/2)`, `deg_q Omega >= deg_q Lambda`,
/// or fewer than `deg_q Lambda` independent roots.
pub fn solve_unique(s: &Syndrome) -> Result<UniqueSolution> {
    let ctx = s.ctx();
    if s.is_zero() {
        return Ok(UniqueSolution {
            lambda: LinPoly::one(ctx),
            omega: LinPoly::zero(ctx),
            step: 0,
        });
    }
    let d = s.d();
    let bound = (d - 1) / 2;
    let (i, trace) = seea_until_degree(&LinPoly::x_pow(ctx, d - 1), s.poly(), bound)?;
    let u = trace.u(i as isize);
    let lead = u.leading().expect("U_i is nonzero");
    let a = ctx.inv(lead).expect("nonzero leading coefficient");
    let lambda = u.scale(a);
    let omega = trace.remainder(i as isize).scale(a);
    let deg = lambda.q_degree().expect("monic");
    if deg > bound {
        return Err(Error::DecodingFailure(format!(
            "error span polynomial has q-degree {deg} > {bound}"
        )));
    }
    if omega.q_degree() >= lambda.q_degree() {
        return Err(Error::DecodingFailure("deg_q Omega >= deg_q Lambda".into()));
    }
    let roots = lambda.root_space()?.len();
    if roots != deg {
        return Err(Error::DecodingFailure(format!(
            "error span polynomial of q-degree {deg} has a root space of dimension {roots}"
        )));
    }
    Ok(UniqueSolution { lambda, omega, step: i })
}

/// The full `(Delta_j, P_j)` sequence built while running the SEEA on
/// `(x^[d-1], S)`; `Delta_j` has q-degree `j` for `j = 0..=d-2`.
#[derive(Debug, Clone)]
pub struct SolutionSequence {
    pairs: Vec<KeyEqPair>,
    tail_filled: bool,
}

impl SolutionSequence {
    pub fn pairs(&self) -> &[KeyEqPair] {
        &self.pairs
    }

    /// Whether the SEEA ended on a positive-degree gcd and the sequence was
    /// completed with tail fillers.
    pub fn tail_filled(&self) -> bool {
        self.tail_filled
    }
}

/// Builds the gap-filled `(Delta, P)` sequence for a nonzero syndrome.
pub fn solution_sequence(s: &Syndrome) -> Result<SolutionSequence> {
    if s.is_zero() {
        return Err(Error::ZeroSyndrome);
    }
    let ctx = s.ctx();
    let d = s.d();
    let mut pairs = vec![KeyEqPair {
        delta: LinPoly::one(ctx),
        p: s.poly().clone(),
        origin: PairOrigin::Initial,
    }];
    let fill = |pairs: &mut Vec<KeyEqPair>, origin: PairOrigin| {
        let last = pairs.last().expect("sequence starts with the initial pair");
        let next = KeyEqPair {
            delta: last.delta.frobenius_shift(1),
            p: last.p.frobenius_shift(1),
            origin,
        };
        pairs.push(next);
    };
    for step in Seea::new(&LinPoly::x_pow(ctx, d - 1), s.poly())? {
        let target = step.u.q_degree().expect("U_i is nonzero");
        if target > d - 2 {
            break;
        }
        while target - pairs.last().unwrap().delta.q_degree().unwrap() > 1 {
            fill(&mut pairs, PairOrigin::GapFill);
        }
        pairs.push(KeyEqPair {
            delta: step.u,
            p: step.remainder,
            origin: PairOrigin::Seea(step.index),
        });
    }
    let mut tail_filled = false;
    while pairs.last().unwrap().delta.q_degree().unwrap() < d - 2 {
        fill(&mut pairs, PairOrigin::TailFill);
        tail_filled = true;
    }
    Ok(SolutionSequence { pairs, tail_filled })
}

/// Basis of all key-equation solutions at radius `tau`.
#[derive(Debug, Clone)]
pub struct KeyEqBasis {
    tau: usize,
    tau0: usize,
    d: usize,
    pairs: Vec<KeyEqPair>,
    tail_filled: bool,
}

impl KeyEqBasis {
    pub fn tau(&self) -> usize {
        self.tau
    }

    /// Excess of `tau` over `floor((d-1)/2)`.
    pub fn tau0(&self) -> usize {
        self.tau0
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Selected pairs in increasing q-degree of `Delta`.
    pub fn pairs(&self) -> &[KeyEqPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn deltas(&self) -> impl Iterator<Item = &LinPoly> {
        self.pairs.iter().map(|p| &p.delta)
    }

    pub fn ps(&self) -> impl Iterator<Item = &LinPoly> {
        self.pairs.iter().map(|p| &p.p)
    }

    pub fn tail_filled(&self) -> bool {
        self.tail_filled
    }

    /// Number of free coefficients of a degree-`tau` solution when the
    /// syndrome matrix has full row rank: `(tau + 1) - (d - 1 - tau)`.
    /// Equals `2 tau0 + 1` for odd `d` and `2 tau0` for even `d`.
    pub fn expected_dimension(&self) -> usize {
        solution_space_dimension(self.d, self.tau)
    }
}

/// `(tau + 1) - (d - 1 - tau)`.
pub fn solution_space_dimension(d: usize, tau: usize) -> usize {
    (2 * tau + 2).saturating_sub(d)
}

fn check_radius(d: usize, tau: usize) -> Result<()> {
    let half = (d - 1) / 2;
    if tau <= half || tau + 1 >= d {
        return invalid(format!("radius must satisfy {half} < tau < {}, got {tau}", d - 1));
    }
    Ok(())
}

/// Runs the gap-filling SEEA and keeps the pairs with
/// `deg_q Delta <= tau` and `deg_q P < tau`.
pub fn solution_basis(s: &Syndrome, tau: usize) -> Result<KeyEqBasis> {
    let d = s.d();
    check_radius(d, tau)?;
    let seq = solution_sequence(s)?;
    let pairs = seq
        .pairs
        .into_iter()
        .filter(|pair| pair.delta.q_degree() <= Some(tau) && pair.p.q_degree() < Some(tau))
        .collect();
    Ok(KeyEqBasis {
        tau,
        tau0: tau - (d - 1) / 2,
        d,
        pairs,
        tail_filled: seq.tail_filled,
    })
}

/// `(sum_i beta_i Delta_i, sum_i beta_i P_i)`.
pub fn combine(basis: &KeyEqBasis, betas: &[FieldElement]) -> Result<(LinPoly, LinPoly)> {
    if betas.len() != basis.len() {
        return invalid(format!("expected {} coefficients, got {}", basis.len(), betas.len()));
    }
    let Some(first) = basis.pairs.first() else {
        return invalid("empty basis");
    };
    let ctx = first.delta.ctx();
    let mut lambda = LinPoly::zero(ctx);
    let mut omega = LinPoly::zero(ctx);
    for (pair, &beta) in basis.pairs.iter().zip(betas) {
        ctx.check(beta)?;
        if ctx.is_zero(beta) {
            continue;
        }
        lambda = &lambda + &pair.delta.scale(beta);
        omega = &omega + &pair.p.scale(beta);
    }
    Ok((lambda, omega))
}

/// The `(d - tau - 1) x (tau + 1)` matrix with entry `(r, c) = S_{r+c}^[tau-c]`.
///
/// Its right kernel holds the coefficient vectors `(Lambda_tau, ..., Lambda_0)`
/// for which `Lambda (x) S` vanishes on `x^[tau] .. x^[d-2]`.
pub fn syndrome_matrix(s: &Syndrome, tau: usize) -> Result<Matrix<FieldElement>> {
    let d = s.d();
    if tau + 1 >= d {
        return invalid(format!("tau must be below d - 1 = {}", d - 1));
    }
    let ctx = s.ctx();
    Ok(Matrix::from_fn(d - tau - 1, tau + 1, |r, c| {
        ctx.frobenius(s.coeff(r + c), (tau - c) as i64)
    }))
}

/// All `Lambda` of q-degree at most `tau` with `deg_q (Lambda (x) S mod x^[d-1]) < tau`,
/// as a basis from Gaussian elimination on [`syndrome_matrix`].
pub fn oracle_solutions(s: &Syndrome, tau: usize) -> Result<Vec<LinPoly>> {
    let m = syndrome_matrix(s, tau)?;
    let ctx = s.ctx();
    matrix::kernel(&**ctx, &m)
        .into_iter()
        .map(|v| LinPoly::new(ctx, v.into_iter().rev().collect()))
        .collect()
}

/// Whether two families of polynomials of q-degree below `width` span the
/// same `F_{q^m}`-space.
pub fn spans_equal(a: &[LinPoly], b: &[LinPoly], width: usize) -> bool {
    let Some(ctx) = a.first().or(b.first()).map(|p| p.ctx().clone()) else {
        return true;
    };
    matrix::same_row_space(
        &*ctx,
        &LinPoly::coefficient_matrix(a, width),
        &LinPoly::coefficient_matrix(b, width),
    )
}

/// Whether `p` lies in the span of `family`.
pub fn in_span(p: &LinPoly, family: &[LinPoly], width: usize) -> bool {
    let ctx = p.ctx();
    let base = matrix::rank(&**ctx, &LinPoly::coefficient_matrix(family, width));
    let mut with = family.to_vec();
    with.push(p.clone());
    matrix::rank(&**ctx, &LinPoly::coefficient_matrix(&with, width)) == base
}
