use serde::Serialize;

use super::oracle::oracle_sequence;
use super::ARSequence;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::nakayama::{indecomposables_in, Indecomposable};
use crate::presentation::Presentation;
use crate::repmod::{
    compose, global, hom, is_homomorphism, is_indecomposable_capped, isomorphic_unbounded, same_multiset,
    string_module_in, Rep,
};
use crate::stringcomb::StringAlgebra;

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub exact: bool,
    pub non_split: bool,
    /// The left term is the translate of the right term given by string combinatorics.
    pub tau_matches: bool,
    /// The middle terms agree with string combinatorics.
    pub oracle_middle: bool,
    pub right_almost_split: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.exact && self.non_split && self.tau_matches && self.right_almost_split
    }
}

fn exact(seq: &ARSequence, notes: &mut Vec<String>) -> bool {
    let (l, r) = (&seq.left, &seq.right);
    if seq.middle.is_empty() || seq.f.len() != seq.middle.len() || seq.g.len() != seq.middle.len() {
        notes.push("sequence has no middle term or mismatched maps".into());
        return false;
    }
    for (k, x) in seq.middle.iter().enumerate() {
        if !is_homomorphism(l, x, &seq.f[k]) || !is_homomorphism(x, r, &seq.g[k]) {
            notes.push(format!("component {k} is not a homomorphism"));
            return false;
        }
    }
    let p = l.p();
    for v in 0..l.dims().len() {
        let mid: usize = seq.middle.iter().map(|x| x.dim(v)).sum();
        if mid != l.dim(v) + r.dim(v) {
            notes.push(format!("dimensions do not add up at vertex {}", l.quiver().vertex_name(v)));
            return false;
        }
        let mut fv = Matrix::zeros(l.dim(v), 0, p);
        let mut gv = Matrix::zeros(0, r.dim(v), p);
        for k in 0..seq.middle.len() {
            fv = fv.hstack(&seq.f[k][v]);
            gv = gv.vstack(&seq.g[k][v]);
        }
        if fv.rank() != l.dim(v) || gv.rank() != r.dim(v) || !fv.mul(&gv).is_zero() {
            notes.push(format!("not exact at vertex {}", l.quiver().vertex_name(v)));
            return false;
        }
    }
    true
}

fn non_split(seq: &ARSequence) -> bool {
    let ends = [seq.left.clone(), seq.right.clone()];
    let all_indec = seq
        .middle
        .iter()
        .all(|x| is_indecomposable_capped(x, usize::MAX).unwrap_or(false));
    if all_indec {
        !same_multiset(&seq.middle, &ends)
    } else {
        let p = seq.left.p();
        let q = seq.left.quiver_arc();
        let mid = Rep::direct_sum_all(p, q, &seq.middle);
        !isomorphic_unbounded(&mid, &seq.left.direct_sum(&seq.right))
    }
}

/// Every non-split-epi map from an indecomposable to the right term factors through the middle.
fn right_almost_split(seq: &ARSequence, mods: &[Indecomposable], notes: &mut Vec<String>) -> bool {
    let p = seq.right.p();
    for v in mods {
        let target = hom(&v.rep, &seq.right).len();
        if target == 0 {
            continue;
        }
        let mut rows = Vec::new();
        for (k, x) in seq.middle.iter().enumerate() {
            for phi in hom(&v.rep, x) {
                let c = global(&compose(&phi, &seq.g[k]), p);
                rows.push((0..c.rows()).flat_map(|i| c.row(i).to_vec()).collect::<Vec<u32>>());
            }
        }
        let width = rows.first().map_or(0, Vec::len);
        let reached = if rows.is_empty() { 0 } else { Matrix::from_rows(&rows, width, p).rank() };
        let expected = if isomorphic_unbounded(&v.rep, &seq.right) { target - 1 } else { target };
        if reached != expected {
            notes.push(format!("maps from {} reach {reached} of {expected} dimensions", v.label));
            return false;
        }
    }
    true
}

pub(crate) fn verify_in(sa: &StringAlgebra, mods: &[Indecomposable], seq: &ARSequence) -> VerificationReport {
    let mut r = VerificationReport::default();
    r.exact = exact(seq, &mut r.notes);
    if !r.exact {
        return r;
    }
    r.non_split = non_split(seq);
    let right = mods.iter().find(|m| isomorphic_unbounded(&m.rep, &seq.right));
    match right.and_then(|m| m.string.as_ref()).and_then(|w| oracle_sequence(sa, w)) {
        Some(o) => {
            r.tau_matches = string_module_in(sa, &o.tau).is_ok_and(|t| isomorphic_unbounded(&t, &seq.left));
            let mids: Vec<Rep> = o.middle.iter().filter_map(|t| t.rep(sa).ok()).collect();
            r.oracle_middle = mids.len() == o.middle.len() && same_multiset(&mids, &seq.middle);
            if !r.tau_matches {
                r.notes.push(format!("left term is not the translate {}", o.tau.display(sa.quiver())));
            }
        }
        None => r.notes.push("right term is not a non-projective string module".into()),
    }
    r.right_almost_split = right_almost_split(seq, mods, &mut r.notes);
    r
}

/// Exactness, non-splitness, the translate and the lifting property of a candidate sequence.
pub fn almost_split_verify(p: &Presentation, seq: &ARSequence) -> Result<VerificationReport> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Err(Error::BandExists(b.display(sa.quiver())));
    }
    let mods = indecomposables_in(&sa)?;
    Ok(verify_in(&sa, &mods, seq))
}
