//! Serde data-transfer types for the JSON schemas.
//!
//! Elements travel in their text form (`"c0,c1,..."`), polynomials and words
//! as arrays of element strings, and q-degrees as integers with `null` for
//! the zero polynomial.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decoder::{DecodeOutcome, Diagnostics, OutcomeKind};
use crate::error::Result;
use crate::field::{FieldCtx, FieldElement};
use crate::gabidulin::{GabidulinCode, Syndrome};
use crate::keyeq::{KeyEqBasis, PairOrigin, UniqueSolution};
use crate::linpoly::LinPoly;
use crate::seea::SeeaTrace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub q: u32,
    pub m: usize,
    pub modulus: Vec<u32>,
}

impl FieldJson {
    pub fn from_ctx(ctx: &FieldCtx) -> Self {
        Self {
            q: ctx.q(),
            m: ctx.m(),
            modulus: ctx.modulus().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Arc<FieldCtx>> {
        FieldCtx::new(self.q, self.m, self.modulus.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub n: usize,
    pub k: usize,
    pub h: Vec<String>,
}

impl CodeJson {
    pub fn from_code(code: &GabidulinCode) -> Self {
        Self {
            field: FieldJson::from_ctx(code.ctx()),
            n: code.n(),
            k: code.k(),
            h: word_to_strings(code.ctx(), code.h()),
        }
    }

    pub fn build(&self) -> Result<GabidulinCode> {
        let ctx = self.field.build()?;
        let h = parse_word(&ctx, &self.h)?;
        GabidulinCode::new(&ctx, self.n, self.k, h)
    }
}

pub fn word_to_strings(ctx: &FieldCtx, word: &[FieldElement]) -> Vec<String> {
    word.iter().map(|&a| ctx.format_element(a)).collect()
}

pub fn parse_word<S: AsRef<str>>(ctx: &FieldCtx, items: &[S]) -> Result<Vec<FieldElement>> {
    items.iter().map(|s| ctx.parse_element(s.as_ref())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyndromeJson {
    pub d: usize,
    pub s: Vec<String>,
}

impl SyndromeJson {
    pub fn from_syndrome(s: &Syndrome) -> Self {
        Self {
            d: s.d(),
            s: s.poly().to_strings(),
        }
    }

    pub fn build(&self, ctx: &Arc<FieldCtx>) -> Result<Syndrome> {
        Syndrome::new(LinPoly::from_strings(ctx, &self.s)?, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniqueJson {
    pub lambda: Vec<String>,
    pub omega: Vec<String>,
    pub step: usize,
}

impl UniqueJson {
    pub fn from_solution(sol: &UniqueSolution) -> Self {
        Self {
            lambda: sol.lambda.to_strings(),
            omega: sol.omega.to_strings(),
            step: sol.step,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub delta: Vec<String>,
    pub p: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<PairOrigin>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub tau: usize,
    pub tau0: usize,
    pub pairs: Vec<PairJson>,
}

impl BasisJson {
    pub fn from_basis(basis: &KeyEqBasis) -> Self {
        Self {
            tau: basis.tau(),
            tau0: basis.tau0(),
            pairs: basis
                .pairs()
                .iter()
                .map(|p| PairJson {
                    delta: p.delta.to_strings(),
                    p: p.p.to_strings(),
                    origin: Some(p.origin),
                })
                .collect(),
        }
    }

    /// Parsed `(Delta, P)` pairs.
    pub fn parse_pairs(&self, ctx: &Arc<FieldCtx>) -> Result<Vec<(LinPoly, LinPoly)>> {
        self.pairs
            .iter()
            .map(|p| Ok((LinPoly::from_strings(ctx, &p.delta)?, LinPoly::from_strings(ctx, &p.p)?)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub kind: OutcomeKind,
    pub codewords: Vec<Vec<String>>,
    pub diagnostics: Diagnostics,
}

impl OutcomeJson {
    pub fn from_outcome(ctx: &FieldCtx, out: &DecodeOutcome) -> Self {
        Self {
            kind: out.kind,
            codewords: out.codewords.iter().map(|c| word_to_strings(ctx, c)).collect(),
            diagnostics: out.diagnostics.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct TraceStepJson {
    pub i: usize,
    pub Q: Vec<String>,
    pub R: Vec<String>,
    pub U: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub V: Option<Vec<String>>,
    pub degR: Option<usize>,
    pub degU: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub b: Vec<String>,
    pub a: Vec<String>,
    pub steps: Vec<TraceStepJson>,
    pub rsgcd: Option<Vec<String>>,
}

impl TraceJson {
    pub fn from_trace(t: &SeeaTrace) -> Self {
        Self {
            b: t.b().to_strings(),
            a: t.a().to_strings(),
            steps: t
                .steps()
                .iter()
                .map(|s| TraceStepJson {
                    i: s.index,
                    Q: s.quotient.to_strings(),
                    R: s.remainder.to_strings(),
                    U: s.u.to_strings(),
                    V: s.v.as_ref().map(LinPoly::to_strings),
                    degR: s.remainder.q_degree(),
                    degU: s.u.q_degree(),
                })
                .collect(),
            rsgcd: t.rsgcd().map(LinPoly::to_strings),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_json_roundtrip() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let code = GabidulinCode::with_default_h(&f, 4, 2).unwrap();
        let dto = CodeJson::from_code(&code);
        let back = dto.build().unwrap();
        assert_eq!(
            back.h().iter().map(|x| x.value()).collect::<Vec<_>>(),
            code.h().iter().map(|x| x.value()).collect::<Vec<_>>()
        );
        assert_eq!((back.n(), back.k()), (4, 2));
        assert_eq!(dto.field.modulus, vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn bad_code_json_is_rejected() {
        let dto = CodeJson {
            field: FieldJson {
                q: 2,
                m: 4,
                modulus: vec![1, 1, 0, 0, 1],
            },
            n: 5,
            k: 1,
            h: vec!["1,0,0,0".into(); 5],
        };
        assert!(dto.build().is_err());
    }
}
