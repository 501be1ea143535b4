//! The symbolic extended Euclidean algorithm on linearized polynomials.
//!
//! Starting from `R_{-1} = B`, `R_0 = A` with `deg_q B > deg_q A`, each step
//! right-divides `R_{i-2} = Q_i (x) R_{i-1} + R_i` and updates the cofactors
//!
//! ```text
//! U_i = -Q_i (x) U_{i-1} + U_{i-2},   U_{-1} = 0,     U_0 = x^[0]
//! V_i = -Q_i (x) V_{i-1} + V_{i-2},   V_{-1} = x^[0], V_0 = 0
//! ```
//!
//! so that `R_i = U_i (x) A + V_i (x) B` and
//! `deg_q U_i + deg_q R_{i-1} = deg_q B` at every step. The last nonzero
//! remainder is the right symbolic gcd.

use crate::error::{invalid, Result};
use crate::linpoly::LinPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeeaStep {
    /// Step number `i >= 1`.
    pub index: usize,
    pub quotient: LinPoly,
    pub remainder: LinPoly,
    pub u: LinPoly,
    /// Only tracked when requested; the key-equation solvers never read it.
    pub v: Option<LinPoly>,
}

/// Step-by-step SEEA. Yields one [`SeeaStep`] per division and stops after
/// the step whose remainder is zero.
#[derive(Debug, Clone)]
pub struct Seea {
    r: [LinPoly; 2],
    u: [LinPoly; 2],
    v: Option<[LinPoly; 2]>,
    index: usize,
}

fn validate(b: &LinPoly, a: &LinPoly) -> Result<()> {
    if b.ctx().id() != a.ctx().id() {
        return Err(crate::Error::ContextMismatch);
    }
    if b.is_zero() {
        return invalid("SEEA needs a nonzero first input");
    }
    if !a.is_zero() && a.q_degree() >= b.q_degree() {
        return invalid("SEEA needs deg_q B > deg_q A");
    }
    Ok(())
}

impl Seea {
    pub fn new(b: &LinPoly, a: &LinPoly) -> Result<Self> {
        validate(b, a)?;
        let ctx = b.ctx();
        Ok(Self {
            r: [b.clone(), a.clone()],
            u: [LinPoly::zero(ctx), LinPoly::one(ctx)],
            v: None,
            index: 0,
        })
    }

    /// Also carry the `V_i` cofactors.
    pub fn with_v(mut self) -> Self {
        let ctx = self.r[0].ctx().clone();
        self.v = Some([LinPoly::one(&ctx), LinPoly::zero(&ctx)]);
        self
    }
}

impl Iterator for Seea {
    type Item = SeeaStep;

    fn next(&mut self) -> Option<SeeaStep> {
        if self.r[1].is_zero() {
            return None;
        }
        self.index += 1;
        let (quotient, remainder) = self.r[0].right_divide(&self.r[1]).expect("divisor is nonzero");
        let next_cofactor = |pair: &[LinPoly; 2]| &pair[0] - &quotient.symbolic_product(&pair[1]);
        let u = next_cofactor(&self.u);
        let v = self.v.as_ref().map(next_cofactor);
        let r_prev = std::mem::replace(&mut self.r[1], remainder.clone());
        self.r[0] = r_prev;
        let u_prev = std::mem::replace(&mut self.u[1], u.clone());
        self.u[0] = u_prev;
        if let (Some(pair), Some(v)) = (self.v.as_mut(), v.as_ref()) {
            let v_prev = std::mem::replace(&mut pair[1], v.clone());
            pair[0] = v_prev;
        }
        Some(SeeaStep {
            index: self.index,
            quotient,
            remainder,
            u,
            v,
        })
    }
}

/// Full or partial transcript of a SEEA run.
#[derive(Debug, Clone)]
pub struct SeeaTrace {
    b: LinPoly,
    a: LinPoly,
    steps: Vec<SeeaStep>,
    rsgcd: Option<LinPoly>,
}

impl SeeaTrace {
    pub fn b(&self) -> &LinPoly {
        &self.b
    }

    pub fn a(&self) -> &LinPoly {
        &self.a
    }

    pub fn steps(&self) -> &[SeeaStep] {
        &self.steps
    }

    /// Monic right symbolic gcd; `None` for a prefix trace that stopped early.
    pub fn rsgcd(&self) -> Option<&LinPoly> {
        self.rsgcd.as_ref()
    }

    /// `R_i` for `i >= -1`.
    pub fn remainder(&self, i: isize) -> &LinPoly {
        match i {
            -1 => &self.b,
            0 => &self.a,
            _ => &self.steps[i as usize - 1].remainder,
        }
    }

    /// `U_i` for `i >= -1`.
    pub fn u(&self, i: isize) -> LinPoly {
        match i {
            -1 => LinPoly::zero(self.b.ctx()),
            0 => LinPoly::one(self.b.ctx()),
            _ => self.steps[i as usize - 1].u.clone(),
        }
    }

    /// `V_i` for `i >= -1`.
    pub fn v(&self, i: isize) -> LinPoly {
        match i {
            -1 => LinPoly::one(self.b.ctx()),
            0 => LinPoly::zero(self.b.ctx()),
            _ => self.steps[i as usize - 1].v.clone().expect("trace carries V"),
        }
    }
}

/// Runs the SEEA to completion on `(B, A)`.
///
/// `A = 0` yields an empty trace with `rsgcd = B` (made monic).
pub fn seea(b: &LinPoly, a: &LinPoly) -> Result<SeeaTrace> {
    let steps: Vec<SeeaStep> = Seea::new(b, a)?.with_v().collect();
    let last_nonzero = steps
        .iter()
        .rev()
        .map(|s| &s.remainder)
        .find(|r| !r.is_zero())
        .unwrap_or(if a.is_zero() { b } else { a });
    let rsgcd = Some(last_nonzero.to_monic());
    Ok(SeeaTrace {
        b: b.clone(),
        a: a.clone(),
        steps,
        rsgcd,
    })
}

/// Runs the SEEA until the first `i >= 0` with
/// `deg_q R_{i-1} >= bound > deg_q R_i` and returns `i` with the prefix trace
/// (`i = 0` means no division was needed).
///
/// Such an `i` exists and is unique whenever `bound <= deg_q B`, because the
/// remainder degrees fall strictly from `deg_q B` down to minus infinity.
pub fn seea_until_degree(b: &LinPoly, a: &LinPoly, bound: usize) -> Result<(usize, SeeaTrace)> {
    validate(b, a)?;
    if b.q_degree() < Some(bound) {
        return invalid(format!("bound {bound} exceeds deg_q B"));
    }
    let mut trace = SeeaTrace {
        b: b.clone(),
        a: a.clone(),
        steps: Vec::new(),
        rsgcd: None,
    };
    if a.q_degree() < Some(bound) {
        return Ok((0, trace));
    }
    for step in Seea::new(b, a)?.with_v() {
        let prev_deg = trace.remainder(step.index as isize - 1).q_degree();
        let straddles = prev_deg >= Some(bound) && step.remainder.q_degree() < Some(bound);
        let finished = step.remainder.is_zero();
        trace.steps.push(step);
        if finished {
            trace.rsgcd = Some(trace.remainder(trace.steps.len() as isize - 1).to_monic());
        }
        if straddles {
            return Ok((trace.steps.len(), trace));
        }
    }
    unreachable!("remainder degrees reach minus infinity below any bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldCtx};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn random_poly(ctx: &Arc<FieldCtx>, rng: &mut ChaCha8Rng, deg: usize) -> LinPoly {
        let mut coeffs: Vec<_> = (0..=deg).map(|_| ctx.random(rng)).collect();
        while ctx.is_zero(coeffs[deg]) {
            coeffs[deg] = ctx.random(rng);
        }
        LinPoly::new(ctx, coeffs).unwrap()
    }

    #[test]
    fn monomial_divisibility() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let t = seea(&LinPoly::x_pow(&f, 3), &LinPoly::x_pow(&f, 1)).unwrap();
        assert_eq!(t.rsgcd(), Some(&LinPoly::x_pow(&f, 1)));
        assert_eq!(t.steps().len(), 1);
    }

    #[test]
    fn zero_second_input_gives_trivial_trace() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let b = LinPoly::x_pow(&f, 2).scale(f.z());
        let t = seea(&b, &LinPoly::zero(&f)).unwrap();
        assert!(t.steps().is_empty());
        assert_eq!(t.rsgcd(), Some(&LinPoly::x_pow(&f, 2)));
    }

    #[test]
    fn degree_order_is_enforced() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let x2 = LinPoly::x_pow(&f, 2);
        assert!(seea(&x2, &x2).is_err());
        assert!(seea(&LinPoly::one(&f), &x2).is_err());
        assert!(seea(&LinPoly::zero(&f), &LinPoly::zero(&f)).is_err());
    }

    #[test]
    fn recovers_planted_right_factor() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let g = random_poly(&f, &mut rng, 2);
            let fac = random_poly(&f, &mut rng, 3);
            let t = seea(&(&fac * &g), &g).unwrap();
            assert_eq!(t.rsgcd(), Some(&g.to_monic()));
        }
    }

    #[test]
    fn rsgcd_divides_both_inputs() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..200 {
            let common = random_poly(&f, &mut rng, 1);
            let b = &random_poly(&f, &mut rng, 4) * &common;
            let a = &random_poly(&f, &mut rng, 2) * &common;
            let t = seea(&b, &a).unwrap();
            let g = t.rsgcd().unwrap();
            assert!(b.right_divide(g).unwrap().1.is_zero());
            assert!(a.right_divide(g).unwrap().1.is_zero());
            // a common right divisor right-divides the gcd
            assert!(g.right_divide(&common).unwrap().1.is_zero());
        }
    }

    #[test]
    fn straddle_search() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let b = LinPoly::x_pow(&f, 6);
            let a = random_poly(&f, &mut rng, 5);
            let full = seea(&b, &a).unwrap();
            for bound in 0..=6 {
                let (i, prefix) = seea_until_degree(&b, &a, bound).unwrap();
                let prev = full.remainder(i as isize - 1).q_degree();
                let cur = full.remainder(i as isize).q_degree();
                assert!(prev >= Some(bound) && cur < Some(bound));
                assert_eq!(prefix.steps(), &full.steps()[..i]);
                if bound == 6 {
                    assert_eq!(i, 0);
                }
            }
            // bound 0 stops at the step producing the zero remainder
            let (i, _) = seea_until_degree(&b, &a, 0).unwrap();
            assert_eq!(i, full.steps().len());
            assert!(seea_until_degree(&b, &a, 7).is_err());
        }
    }
}
