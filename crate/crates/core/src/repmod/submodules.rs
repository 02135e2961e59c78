use std::collections::{HashSet, VecDeque};

use super::{Rep, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{contains, Matrix};

pub const DEFAULT_SUB_CAP: usize = 8;

/// Nonzero vectors of `F_p^n` with leading nonzero entry 1.
fn projective_points(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let total = (p as usize).pow(free as u32);
        for mut code in 0..total {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (code % p as usize) as u32;
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

/// The full submodule lattice, sorted by dimension.
pub fn enumerate_submodules(m: &Rep, cap: usize) -> Result<Vec<Subspace>> {
    let n = m.length();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "submodule enumeration",
            size: n,
            cap,
        });
    }
    let p = m.p();
    let points: Vec<Vec<Vec<u32>>> = m.dims().iter().map(|&d| projective_points(d, p)).collect();
    let start = m.zero_subspace();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut out = vec![start.clone()];
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for (v, pts) in points.iter().enumerate() {
            for x in pts {
                let row = Matrix::from_rows(std::slice::from_ref(x), m.dim(v), p);
                if contains(&u.parts[v], &row) {
                    continue;
                }
                let mut parts = u.parts.clone();
                parts[v] = parts[v].vstack(&row);
                let w = m.closure(&Subspace::from_parts(parts));
                if seen.insert(w.clone()) {
                    out.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
    }
    out.sort_by_key(|s| {
        (
            s.total(),
            s.dims(),
            s.parts.iter().map(Matrix::to_rows).collect::<Vec<_>>(),
        )
    });
    Ok(out)
}
