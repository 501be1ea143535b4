//! End-to-end decoding on top of the key-equation solvers.
//!
//! Error recovery from an error span polynomial `Lambda`:
//!
//! 1. `E_1..E_t` := an `F_q`-basis of the roots of `Lambda`;
//! 2. solve `S_l = sum_j E_j x_j^[l]` (`l = 0..d-2`) for `x_1..x_t`, a linear
//!    system over `F_q` once every unknown is expanded in coordinates;
//! 3. write each `x_j = sum_i Y_{j,i} h_i` with `Y` over `F_q`;
//! 4. `e = E * Y`, checked against the syndrome.
//!
//! For `t <= d - 1` step 2 has at most one solution, so a root space that
//! contains the true error span always recovers the true error.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::field::{Field, FieldCtx, FieldElement};
use crate::gabidulin::{combine_over_fq, coordinates_in, GabidulinCode, Syndrome, Word};
use crate::keyeq::{self, solution_basis, solve_unique};
use crate::linpoly::LinPoly;
use crate::matrix::{self, Matrix};

/// Enumeration budget used when the caller has no preference.
pub const DEFAULT_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeKind {
    Codeword,
    List,
    Failure,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub syndrome_zero: bool,
    /// Rank of the error removed for each returned codeword.
    pub error_ranks: Vec<usize>,
    pub lambda_degree: Option<usize>,
    pub basis_size: Option<usize>,
    pub combinations: Option<u128>,
    pub recovered: usize,
    pub tail_filled: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub kind: OutcomeKind,
    pub codewords: Vec<Word>,
    pub diagnostics: Diagnostics,
}

impl DecodeOutcome {
    fn failure(mut diagnostics: Diagnostics, note: impl Into<String>) -> Self {
        diagnostics.note = Some(note.into());
        Self {
            kind: OutcomeKind::Failure,
            codewords: Vec::new(),
            diagnostics,
        }
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        self.codewords.iter().any(|c| c == word)
    }
}

/// Recovers the error from a proper error span polynomial: monic, q-degree
/// `t >= 1`, with a `t`-dimensional root space.
pub fn recover_error(code: &GabidulinCode, lambda: &LinPoly, s: &Syndrome) -> Result<Word> {
    let Some(t) = lambda.q_degree().filter(|&t| t >= 1) else {
        return invalid("error span polynomial must have q-degree at least 1");
    };
    if !lambda.is_monic() {
        return invalid("error span polynomial must be monic");
    }
    let roots = lambda.root_space()?;
    if roots.len() != t {
        return Err(Error::DecodingFailure(format!(
            "improper error span polynomial: q-degree {t}, root space dimension {}",
            roots.len()
        )));
    }
    recover_from_roots(code, &roots, s)
}

/// Recovers the unique error whose column span lies in the `F_q`-span of
/// `roots` and whose syndrome is `s`.
pub fn recover_from_roots(code: &GabidulinCode, roots: &[FieldElement], s: &Syndrome) -> Result<Word> {
    let f = &**code.ctx();
    let fq = f.prime_field();
    let (m, t, rows) = (f.m(), roots.len(), s.d() - 1);
    if t == 0 {
        return if s.is_zero() {
            Ok(vec![f.zero(); code.n()])
        } else {
            Err(Error::DecodingFailure("empty root space for a nonzero syndrome".into()))
        };
    }
    // column (j, b): coordinates of E_j * (z^b)^[l], stacked over l
    let basis: Vec<FieldElement> = (0..m).map(|b| f.pow(f.z(), b as u64)).collect();
    let mut system = Matrix::filled(rows * m, t * m, 0u32);
    for (j, &e) in roots.iter().enumerate() {
        for (b, &zb) in basis.iter().enumerate() {
            for l in 0..rows {
                let coords = f.expand(f.mul(e, f.frobenius(zb, l as i64)));
                for (r, c) in coords.into_iter().enumerate() {
                    system[(l * m + r, j * m + b)] = c;
                }
            }
        }
    }
    let rhs: Vec<u32> = (0..rows).flat_map(|l| f.expand(s.coeff(l))).collect();
    let Some(sol) = matrix::solve(&fq, &system, &rhs) else {
        return Err(Error::DecodingFailure(
            "no error with this span matches the syndrome".into(),
        ));
    };
    let mut y = Matrix::filled(t, code.n(), 0u32);
    for j in 0..t {
        let xj = f.from_coords(&sol[j * m..(j + 1) * m])?;
        let Some(coords) = coordinates_in(f, code.h(), xj) else {
            return Err(Error::DecodingFailure("recovered x is outside the span of h".into()));
        };
        for (i, c) in coords.into_iter().enumerate() {
            y[(j, i)] = c;
        }
    }
    let e = combine_over_fq(f, roots, &y);
    if code.syndrome(&e)? != *s {
        return Err(Error::DecodingFailure(
            "recovered error does not reproduce the syndrome".into(),
        ));
    }
    Ok(e)
}

fn subtract(code: &GabidulinCode, r: &[FieldElement], e: &[FieldElement]) -> Word {
    let f = &**code.ctx();
    r.iter().zip(e).map(|(&a, &b)| f.sub(a, b)).collect()
}

/// Bounded-minimum-distance decoding up to `floor((d-1)/2)`.
pub fn decode_bmd(code: &GabidulinCode, received: &[FieldElement]) -> Result<DecodeOutcome> {
    let s = code.syndrome(received)?;
    let mut diag = Diagnostics::default();
    if s.is_zero() {
        diag.syndrome_zero = true;
        diag.error_ranks.push(0);
        return Ok(DecodeOutcome {
            kind: OutcomeKind::Codeword,
            codewords: vec![received.to_vec()],
            diagnostics: diag,
        });
    }
    let sol = match solve_unique(&s) {
        Ok(sol) => sol,
        Err(Error::DecodingFailure(why)) => return Ok(DecodeOutcome::failure(diag, why)),
        Err(e) => return Err(e),
    };
    diag.lambda_degree = sol.lambda.q_degree();
    match recover_error(code, &sol.lambda, &s) {
        Ok(e) => {
            diag.error_ranks.push(code.rank_weight(&e)?);
            diag.recovered = 1;
            Ok(DecodeOutcome {
                kind: OutcomeKind::Codeword,
                codewords: vec![subtract(code, received, &e)],
                diagnostics: diag,
            })
        }
        Err(Error::DecodingFailure(why)) => Ok(DecodeOutcome::failure(diag, why)),
        Err(e) => Err(e),
    }
}

/// All codewords within rank distance `tau` of `received`, for
/// `floor((d-1)/2) < tau < d - 1`.
///
/// Enumerates every combination of the key-equation basis whose top
/// (q-degree `tau`) coefficient is one; scaling does not change the root
/// space, so this covers every solution of exact degree `tau`. Each `Lambda`
/// with a `tau`-dimensional root space is tried for error recovery, and the
/// half-distance solution is added separately. An error of rank `t < tau` is
/// still reached: `G (x) Lambda_e` with `G` vanishing on a
/// `(tau - t)`-dimensional subspace of the image of `Lambda_e` is such a
/// solution. Refuses with [`Error::BudgetExceeded`] when
/// more than `limit` combinations would be needed.
pub fn decode_beyond(
    code: &GabidulinCode,
    received: &[FieldElement],
    tau: usize,
    limit: u128,
) -> Result<DecodeOutcome> {
    let f = code.ctx().clone();
    let d = code.d();
    if tau <= code.half_distance() || tau + 1 >= d {
        return invalid(format!(
            "radius must satisfy {} < tau < {}, got {tau}",
            code.half_distance(),
            d - 1
        ));
    }
    let s = code.syndrome(received)?;
    let mut diag = Diagnostics::default();
    if s.is_zero() {
        diag.syndrome_zero = true;
        diag.error_ranks.push(0);
        return Ok(DecodeOutcome {
            kind: OutcomeKind::List,
            codewords: vec![received.to_vec()],
            diagnostics: diag,
        });
    }
    let basis = solution_basis(&s, tau)?;
    diag.basis_size = Some(basis.len());
    diag.tail_filled = basis.tail_filled();

    let mut found: BTreeMap<Vec<String>, (Word, usize)> = BTreeMap::new();
    let accept = |e: Word, found: &mut BTreeMap<Vec<String>, (Word, usize)>| -> Result<()> {
        let rank = code.rank_weight(&e)?;
        if rank <= tau {
            let c = subtract(code, received, &e);
            let key = c.iter().map(|&x| f.format_element(x)).collect();
            found.entry(key).or_insert((c, rank));
        }
        Ok(())
    };

    if let Ok(sol) = solve_unique(&s) {
        if let Ok(e) = recover_error(code, &sol.lambda, &s) {
            accept(e, &mut found)?;
        }
    }

    let top = basis.pairs().iter().position(|p| p.delta.q_degree() == Some(tau));
    if let Some(top) = top {
        let free = basis.len() - 1;
        let order = f.order() as u128;
        let needed = u32::try_from(free)
            .ok()
            .and_then(|e| order.checked_pow(e))
            .unwrap_or(u128::MAX);
        if needed > limit {
            return Err(Error::BudgetExceeded { needed, limit });
        }
        diag.combinations = Some(needed);

        // Lambda(z^j) is linear in beta, so precompute every basis image once.
        let zs: Vec<FieldElement> = (0..f.m()).map(|j| f.pow(f.z(), j as u64)).collect();
        let images: Vec<Vec<FieldElement>> = basis
            .deltas()
            .map(|delta| zs.iter().map(|&z| delta.evaluate(z)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let others: Vec<usize> = (0..basis.len()).filter(|&i| i != top).collect();
        let fq = f.prime_field();
        let mut betas = vec![0u64; free];
        for step in 0..needed {
            if step > 0 {
                advance(&mut betas, f.order());
            }
            let mut lambda_images = images[top].clone();
            for (slot, &i) in others.iter().enumerate() {
                if betas[slot] == 0 {
                    continue;
                }
                let beta = f.element(betas[slot])?;
                for (acc, &img) in lambda_images.iter_mut().zip(&images[i]) {
                    *acc = f.add(*acc, f.mul(beta, img));
                }
            }
            if f.m() - image_rank(&f, &lambda_images) != tau {
                continue;
            }
            let roots: Vec<FieldElement> = matrix::kernel(&fq, &f.coordinate_matrix(&lambda_images))
                .into_iter()
                .map(|v| f.from_coords(&v))
                .collect::<Result<_>>()?;
            if let Ok(e) = recover_from_roots(code, &roots, &s) {
                accept(e, &mut found)?;
            }
        }
    }

    diag.recovered = found.len();
    let (codewords, ranks): (Vec<Word>, Vec<usize>) = found.into_values().unzip();
    diag.error_ranks = ranks;
    if codewords.is_empty() {
        return Ok(DecodeOutcome::failure(
            diag,
            format!("no codeword within rank distance {tau}"),
        ));
    }
    Ok(DecodeOutcome {
        kind: OutcomeKind::List,
        codewords,
        diagnostics: diag,
    })
}

/// Little-endian counter in base `q^m`.
fn advance(betas: &mut [u64], order: u64) {
    for b in betas.iter_mut() {
        *b += 1;
        if *b < order {
            return;
        }
        *b = 0;
    }
}

/// `F_q`-rank of `images`; the root space of the map has dimension
/// `m - rank`. Over `F_2` packed values are bit vectors.
fn image_rank(f: &FieldCtx, images: &[FieldElement]) -> usize {
    if f.q() != 2 {
        return matrix::rank(&f.prime_field(), &f.coordinate_matrix(images));
    }
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for img in images {
        let mut v = img.value();
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// Every `(Lambda, Omega)` of the basis span, for exhaustive checks on tiny
/// instances. Refuses above `limit` combinations.
pub fn enumerate_span(basis: &keyeq::KeyEqBasis, limit: u128) -> Result<Vec<(LinPoly, LinPoly)>> {
    let Some(first) = basis.pairs().first() else {
        return Ok(Vec::new());
    };
    let f = first.delta.ctx().clone();
    let order = f.order() as u128;
    let needed = u32::try_from(basis.len())
        .ok()
        .and_then(|e| order.checked_pow(e))
        .unwrap_or(u128::MAX);
    if needed > limit {
        return Err(Error::BudgetExceeded { needed, limit });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut betas = vec![0u64; basis.len()];
    for step in 0..needed {
        if step > 0 {
            advance(&mut betas, f.order());
        }
        let elems = betas.iter().map(|&b| f.element(b)).collect::<Result<Vec<_>>>()?;
        out.push(keyeq::combine(basis, &elems)?);
    }
    Ok(out)
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
    fn rank_one_worked_example_is_recovered() {
        let c = code_a();
        let f = c.ctx().clone();
        let e = vec![f.z(), f.zero(), f.zero(), f.zero()];
        let s = c.syndrome(&e).unwrap();
        let lambda = LinPoly::min_subspace_poly(&f, &[f.z()]).unwrap();
        assert_eq!(recover_error(&c, &lambda, &s).unwrap(), e);
    }

    #[test]
    fn identity_lambda_is_rejected() {
        let c = code_a();
        let f = c.ctx().clone();
        let s = c.syndrome(&[f.zero(); 4]).unwrap();
        assert!(matches!(
            recover_error(&c, &LinPoly::one(&f), &s),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn codeword_decodes_to_itself() {
        let c = code_a();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cw = c.encode(&c.random_message(&mut rng)).unwrap();
        let out = decode_bmd(&c, &cw).unwrap();
        assert_eq!(out.kind, OutcomeKind::Codeword);
        assert_eq!(out.codewords, vec![cw.clone()]);
        let out = decode_beyond(&c, &cw, 2, DEFAULT_LIMIT).unwrap();
        assert_eq!(out.codewords, vec![cw]);
    }

    #[test]
    fn construct_recover_roundtrip() {
        for (m, n, k) in [(4, 4, 1), (6, 6, 1), (6, 6, 2), (6, 5, 1)] {
            let f = FieldCtx::with_default_modulus(2, m).unwrap();
            let c = GabidulinCode::with_default_h(&f, n, k).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64 * 10 + k as u64);
            for t in 1..c.d() {
                for _ in 0..20 {
                    let parts = c.random_error_parts(t, &mut rng).unwrap();
                    let s = c.syndrome(&parts.error).unwrap();
                    let lambda = LinPoly::min_subspace_poly(&f, &parts.values).unwrap();
                    assert_eq!(recover_error(&c, &lambda, &s).unwrap(), parts.error);
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let c = GabidulinCode::with_default_h(&f, 6, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let cw = c.encode(&c.random_message(&mut rng)).unwrap();
        let e = c.random_error(4, &mut rng).unwrap();
        let r: Vec<_> = cw.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
        assert!(matches!(
            decode_beyond(&c, &r, 4, 10),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(decode_beyond(&c, &r, 2, DEFAULT_LIMIT).is_err());
    }
}
