//! Almost split sequences: the structural construction for right 4-Nakayama
//! algebras, the string-combinatorial oracle, verification and the AR quiver.

mod generic;
mod oracle;
mod quiver;
mod t4;
mod verify;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::repmod::{Morphism, Rep, RepJson};

pub use generic::almost_split_sequence_oracle;
pub use oracle::{ar_translate, oracle_sequence, radical_summands, OracleSequence, OracleTerm};
pub use quiver::{ar_quiver, export_dot, ArQuiver};
pub use t4::{almost_split_sequence_t4, t4_candidates, Candidate, T4Context};
pub use verify::{almost_split_verify, VerificationReport};

/// `0 -> left -> ⊕ middle -> right -> 0` with components `f[k]: left -> middle[k]` and `g[k]: middle[k] -> right`.
#[derive(Debug, Clone)]
pub struct ARSequence {
    pub left: Rep,
    pub middle: Vec<Rep>,
    pub right: Rep,
    pub f: Vec<Morphism>,
    pub g: Vec<Morphism>,
    pub case_tag: String,
    pub ambient: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ARSequenceJson {
    pub case: String,
    pub ambient: String,
    pub left: RepJson,
    pub middle: Vec<RepJson>,
    pub right: RepJson,
    pub f: Vec<BTreeMap<String, Vec<Vec<u32>>>>,
    pub g: Vec<BTreeMap<String, Vec<Vec<u32>>>>,
}

impl ARSequence {
    pub fn to_json(&self) -> ARSequenceJson {
        let q = self.left.quiver();
        let maps = |fs: &[Morphism]| {
            fs.iter()
                .map(|f| {
                    f.iter()
                        .enumerate()
                        .map(|(v, m)| (q.vertex_name(v).to_string(), m.to_rows()))
                        .collect()
                })
                .collect()
        };
        ARSequenceJson {
            case: self.case_tag.clone(),
            ambient: self.ambient.clone(),
            left: self.left.to_json(),
            middle: self.middle.iter().map(Rep::to_json).collect(),
            right: self.right.to_json(),
            f: maps(&self.f),
            g: maps(&self.g),
        }
    }
}

/// The structural construction on right 4-Nakayama algebras, the oracle route otherwise.
pub fn almost_split_sequence(p: &Presentation, m: &Rep) -> Result<ARSequence> {
    match T4Context::new(p) {
        Ok(ctx) => ctx.sequence(m),
        Err(Error::NotRight4(_)) => almost_split_sequence_oracle(p, m),
        Err(e) => Err(e),
    }
}
