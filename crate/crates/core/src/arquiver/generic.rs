//! Almost split sequences for any representation-finite special biserial algebra:
//! terms from string combinatorics, maps from a seeded search in the hom spaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::oracle_sequence;
use super::verify::verify_in;
use super::ARSequence;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::nakayama::{indecomposables_in, Indecomposable};
use crate::presentation::Presentation;
use crate::repmod::{hom, isomorphic_unbounded, Morphism, Rep, Subspace};
use crate::stringcomb::StringAlgebra;

const TRIES: usize = 64;

fn random_map(basis: &[Morphism], rng: &mut ChaCha8Rng, p: u32) -> Morphism {
    let mut acc: Morphism = basis[0].iter().map(|m| Matrix::zeros(m.rows(), m.cols(), p)).collect();
    for f in basis {
        let c = rng.gen_range(0..p);
        for (x, y) in acc.iter_mut().zip(f) {
            *x = x.add(&y.scale(c));
        }
    }
    acc
}

pub(crate) fn oracle_route(sa: &StringAlgebra, mods: &[Indecomposable], m: &Rep) -> Result<ARSequence> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let entry = mods
        .iter()
        .find(|x| isomorphic_unbounded(&x.rep, m))
        .ok_or_else(|| Error::NotApplicable("module is not an indecomposable of this algebra".into()))?;
    if entry.projective {
        return Err(Error::ProjectiveModule(entry.label.clone()));
    }
    let w = entry.string.as_ref().expect("non-projective indecomposables are string modules");
    let o = oracle_sequence(sa, w).ok_or_else(|| Error::ProjectiveModule(entry.label.clone()))?;
    let right = entry.rep.clone();
    let middle: Vec<Rep> = o.middle.iter().map(|t| t.rep(sa)).collect::<Result<_>>()?;
    let p = right.p();
    let q = right.quiver_arc().clone();
    let bases: Vec<Vec<Morphism>> = middle.iter().map(|x| hom(x, &right)).collect();
    if bases.iter().any(Vec::is_empty) {
        return Err(Error::ConstructionMismatch("a middle term has no map to the right term".into()));
    }
    let sum = Rep::direct_sum_all(p, &q, &middle);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..TRIES {
        let g: Vec<Morphism> = bases.iter().map(|b| random_map(b, &mut rng, p)).collect();
        let nv = q.vertex_count();
        let stacked: Vec<Matrix> = (0..nv)
            .map(|v| {
                g.iter()
                    .fold(Matrix::zeros(0, right.dim(v), p), |acc, gk| acc.vstack(&gk[v]))
            })
            .collect();
        if (0..nv).any(|v| stacked[v].rank() != right.dim(v)) {
            continue;
        }
        let kernel = Subspace::from_parts(stacked.iter().map(Matrix::left_kernel).collect());
        let (left, incl) = sum.sub(&kernel)?;
        let mut f = Vec::with_capacity(middle.len());
        let mut off = vec![0usize; nv];
        for x in &middle {
            let fk: Morphism = (0..nv)
                .map(|v| {
                    let cols: Vec<usize> = (off[v]..off[v] + x.dim(v)).collect();
                    incl[v].select_cols(&cols)
                })
                .collect();
            for v in 0..nv {
                off[v] += x.dim(v);
            }
            f.push(fk);
        }
        let seq = ARSequence {
            left,
            middle: middle.clone(),
            right: right.clone(),
            f,
            g,
            case_tag: "oracle".into(),
            ambient: entry.label.clone(),
        };
        if verify_in(sa, mods, &seq).passed() {
            return Ok(seq);
        }
    }
    Err(Error::ConstructionMismatch(format!("no almost split maps found for {}", entry.label)))
}

/// The almost split sequence ending at `m` with terms from string combinatorics.
pub fn almost_split_sequence_oracle(p: &Presentation, m: &Rep) -> Result<ARSequence> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Err(Error::BandExists(b.display(sa.quiver())));
    }
    let mods = indecomposables_in(&sa)?;
    oracle_route(&sa, &mods, m)
}
