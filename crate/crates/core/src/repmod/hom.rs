use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{block_diag, Provenance, Rep, DEFAULT_END_CAP};
use crate::error::{Error, Result};
use crate::linalg::{contains, scalar_plus_nilpotent, Matrix};

/// One matrix per vertex, acting on row vectors.
pub type Morphism = Vec<Matrix>;

const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const RANDOM_TRIES: usize = 4000;

pub fn is_homomorphism(a: &Rep, b: &Rep, f: &Morphism) -> bool {
    if f.len() != a.dims.len() {
        return false;
    }
    for v in 0..a.dims.len() {
        if f[v].rows() != a.dims[v] || f[v].cols() != b.dims[v] {
            return false;
        }
    }
    (0..a.maps.len()).all(|al| {
        let arr = a.quiver.arrow(al);
        a.maps[al].mul(&f[arr.target]) == f[arr.source].mul(&b.maps[al])
    })
}

/// `x ↦ g(f(x))`.
pub fn compose(f: &Morphism, g: &Morphism) -> Morphism {
    f.iter().zip(g).map(|(x, y)| x.mul(y)).collect()
}

fn offsets(a: &Rep, b: &Rep) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(a.dims.len());
    let mut n = 0;
    for v in 0..a.dims.len() {
        off.push(n);
        n += a.dims[v] * b.dims[v];
    }
    (off, n)
}

/// A basis of `Hom(a, b)`.
pub fn hom(a: &Rep, b: &Rep) -> Vec<Morphism> {
    let p = a.p;
    let (off, nvars) = offsets(a, b);
    let idx = |v: usize, i: usize, j: usize| off[v] + i * b.dims[v] + j;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for al in 0..a.maps.len() {
        let arr = a.quiver.arrow(al);
        let (s, t) = (arr.source, arr.target);
        let (ma, mb) = (&a.maps[al], &b.maps[al]);
        for i in 0..a.dims[s] {
            for j in 0..b.dims[t] {
                let mut row = vec![0u32; nvars];
                // (A X_t)[i,j] - (X_s B)[i,j]
                for k in 0..a.dims[t] {
                    let c = ma.get(i, k);
                    if c != 0 {
                        let x = idx(t, k, j);
                        row[x] = (row[x] + c) % p;
                    }
                }
                for k in 0..b.dims[s] {
                    let c = mb.get(k, j);
                    if c != 0 {
                        let x = idx(s, i, k);
                        row[x] = (row[x] + p - c) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(nvars, p)
    } else {
        Matrix::from_rows(&rows, nvars, p).right_kernel()
    };
    (0..kernel.rows())
        .map(|r| {
            let sol = kernel.row(r);
            (0..a.dims.len())
                .map(|v| {
                    let mut m = Matrix::zeros(a.dims[v], b.dims[v], p);
                    for i in 0..a.dims[v] {
                        for j in 0..b.dims[v] {
                            m.set(i, j, sol[idx(v, i, j)]);
                        }
                    }
                    m
                })
                .collect()
        })
        .collect()
}

pub fn end_algebra(m: &Rep) -> Vec<Morphism> {
    hom(m, m)
}

pub(crate) fn global(f: &Morphism, p: u32) -> Matrix {
    let mut acc = Matrix::zeros(0, 0, p);
    for x in f {
        acc = block_diag(&acc, x);
    }
    acc
}

fn flatten(m: &Matrix) -> Vec<u32> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    is_indecomposable_capped(m, DEFAULT_END_CAP)
}

/// End-local test: `End(m)` is `F_p·1` plus a nilpotent ideal.
pub fn is_indecomposable_capped(m: &Rep, cap: usize) -> Result<bool> {
    let n = m.length();
    if n == 0 {
        return Ok(false);
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "endomorphism check",
            size: n,
            cap,
        });
    }
    Ok(end_is_local(m))
}

fn end_is_local(m: &Rep) -> bool {
    let p = m.p;
    let n = m.length();
    let ends: Vec<Matrix> = end_algebra(m).iter().map(|f| global(f, p)).collect();
    let d = ends.len();
    let mut nil = Vec::with_capacity(d);
    for e in &ends {
        let Some(lambda) = scalar_plus_nilpotent(e) else {
            return false;
        };
        nil.push(e.sub(&Matrix::identity(n, p).scale(lambda)));
    }
    let flat: Vec<Vec<u32>> = nil.iter().map(flatten).collect();
    let span = Matrix::from_rows(&flat, n * n, p).row_space();
    if span.rows() + 1 != d {
        return false;
    }
    let basis: Vec<Matrix> = (0..span.rows())
        .map(|r| Matrix::from_rows(&span.row(r).chunks(n).map(<[u32]>::to_vec).collect::<Vec<_>>(), n, p))
        .collect();
    for x in &basis {
        for y in &basis {
            let prod = Matrix::from_rows(&[flatten(&x.mul(y))], n * n, p);
            if !contains(&span, &prod) {
                return false;
            }
        }
    }
    // The ideal is nilpotent iff its powers reach zero.
    let mut power = basis.clone();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let mut rows = Vec::new();
        for x in &power {
            for y in &basis {
                rows.push(flatten(&x.mul(y)));
            }
        }
        let sp = Matrix::from_rows(&rows, n * n, p).row_space();
        power = (0..sp.rows())
            .map(|r| Matrix::from_rows(&sp.row(r).chunks(n).map(<[u32]>::to_vec).collect::<Vec<_>>(), n, p))
            .collect();
    }
    power.is_empty()
}

pub fn are_isomorphic(a: &Rep, b: &Rep) -> Result<bool> {
    are_isomorphic_capped(a, b, DEFAULT_END_CAP)
}

pub fn are_isomorphic_capped(a: &Rep, b: &Rep, cap: usize) -> Result<bool> {
    if *a.quiver != *b.quiver {
        return Ok(false);
    }
    if a.dims != b.dims {
        return Ok(false);
    }
    if let (Provenance::String(x), Provenance::String(y)) = (&a.provenance, &b.provenance) {
        return Ok(x == y);
    }
    let n = a.length();
    if n == 0 {
        return Ok(true);
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "isomorphism check",
            size: n,
            cap,
        });
    }
    Ok(isomorphic_unbounded(a, b))
}

pub(crate) fn isomorphic_unbounded(a: &Rep, b: &Rep) -> bool {
    if a.dims != b.dims {
        return false;
    }
    if let (Provenance::String(x), Provenance::String(y)) = (&a.provenance, &b.provenance) {
        return x == y;
    }
    if a.is_zero() {
        return true;
    }
    let p = a.p;
    let fs = hom(a, b);
    if fs.is_empty() {
        return false;
    }
    let gs = hom(b, a);
    if gs.is_empty() {
        return false;
    }
    // With a local endomorphism ring, the non-units form a subspace, so basis products decide.
    for (x, ys, xs) in [(a, &gs, &fs), (b, &fs, &gs)] {
        if end_is_local(x) {
            return xs.iter().any(|f| {
                ys.iter()
                    .any(|g| global(&compose(f, g), p).inverse().is_some())
            });
        }
    }
    let d = fs.len() as u32;
    let invertible = |coef: &[u32]| {
        let mut acc: Morphism = fs[0].iter().map(|m| Matrix::zeros(m.rows(), m.cols(), p)).collect();
        for (c, f) in coef.iter().zip(&fs) {
            if *c == 0 {
                continue;
            }
            for (x, y) in acc.iter_mut().zip(f) {
                *x = x.add(&y.scale(*c));
            }
        }
        global(&acc, p).inverse().is_some()
    };
    let exhaustive = (p as u64).checked_pow(d).is_some_and(|t| t <= EXHAUSTIVE_LIMIT);
    if exhaustive {
        let mut coef = vec![0u32; d as usize];
        loop {
            if invertible(&coef) {
                return true;
            }
            let mut k = 0;
            while k < coef.len() {
                coef[k] += 1;
                if coef[k] < p {
                    break;
                }
                coef[k] = 0;
                k += 1;
            }
            if k == coef.len() {
                return false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..RANDOM_TRIES).any(|_| {
        let coef: Vec<u32> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        invertible(&coef)
    })
}

/// Krull-Schmidt comparison of two lists of indecomposables.
pub(crate) fn same_multiset(xs: &[Rep], ys: &[Rep]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut used = vec![false; ys.len()];
    for x in xs {
        let hit = ys
            .iter()
            .enumerate()
            .position(|(j, y)| !used[j] && isomorphic_unbounded(x, y));
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}
