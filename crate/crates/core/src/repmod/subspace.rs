use crate::error::{Error, Result};
use crate::linalg::{complement, contains, intersection, span_sum, Matrix};

use super::{Morphism, Provenance, Rep};

/// Vertex-wise subspace of a representation, each part a row-reduced basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub parts: Vec<Matrix>,
}

impl Subspace {
    pub fn from_parts(parts: Vec<Matrix>) -> Self {
        Subspace {
            parts: parts.iter().map(Matrix::row_space).collect(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Matrix::rows).collect()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(Matrix::rows).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| contains(a, b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| span_sum(a, b)).collect(),
        }
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        Subspace {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| intersection(a, b).row_space())
                .collect(),
        }
    }
}

impl Rep {
    pub fn whole(&self) -> Subspace {
        Subspace {
            parts: self.dims.iter().map(|&d| Matrix::identity(d, self.p)).collect(),
        }
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace {
            parts: self.dims.iter().map(|&d| Matrix::zeros(0, d, self.p)).collect(),
        }
    }

    /// `U·J`: the sum of the arrow images of `u`.
    pub fn arrow_image(&self, u: &Subspace) -> Subspace {
        let mut parts: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::zeros(0, d, self.p)).collect();
        for (a, m) in self.maps.iter().enumerate() {
            let arr = self.quiver.arrow(a);
            if u.parts[arr.source].rows() == 0 {
                continue;
            }
            let img = u.parts[arr.source].mul(m);
            parts[arr.target] = parts[arr.target].vstack(&img);
        }
        Subspace::from_parts(parts)
    }

    pub fn radical(&self) -> Subspace {
        self.arrow_image(&self.whole())
    }

    pub fn radical_power(&self, i: usize) -> Subspace {
        let mut s = self.whole();
        for _ in 0..i {
            if s.is_zero() {
                break;
            }
            s = self.arrow_image(&s);
        }
        s
    }

    pub fn socle(&self) -> Subspace {
        let parts = (0..self.dims.len())
            .map(|v| {
                let mut k = Matrix::identity(self.dims[v], self.p);
                for &a in self.quiver.out_arrows(v) {
                    k = intersection(&k, &self.maps[a].left_kernel());
                }
                k
            })
            .collect();
        Subspace::from_parts(parts)
    }

    /// Dimensions of the radical layers `rad^i / rad^{i+1}`.
    pub fn radical_layers(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = self.whole();
        while !s.is_zero() {
            let next = self.arrow_image(&s);
            out.push(s.total() - next.total());
            s = next;
        }
        out
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_layers().len()
    }

    pub fn top_length(&self) -> usize {
        self.length() - self.radical().total()
    }

    pub fn socle_length(&self) -> usize {
        self.socle().total()
    }

    pub fn is_local(&self) -> bool {
        self.top_length() == 1
    }

    pub fn is_colocal(&self) -> bool {
        self.socle_length() == 1
    }

    pub fn is_closed(&self, u: &Subspace) -> bool {
        u.contains(&self.arrow_image(u))
    }

    /// Smallest submodule containing `u`.
    pub fn closure(&self, u: &Subspace) -> Subspace {
        let mut s = Subspace::from_parts(u.parts.clone());
        loop {
            let next = s.sum(&self.arrow_image(&s));
            if next.total() == s.total() {
                return s;
            }
            s = next;
        }
    }

    /// The submodule `u` as a module, with its inclusion into `self`.
    pub fn sub(&self, u: &Subspace) -> Result<(Rep, Morphism)> {
        if !self.is_closed(u) {
            return Err(Error::NotClosed);
        }
        let dims = u.dims();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let arr = self.quiver.arrow(a);
                let src = &u.parts[arr.source];
                let tgt = &u.parts[arr.target];
                let mut out = Matrix::zeros(src.rows(), tgt.rows(), self.p);
                let img = src.mul(m);
                for i in 0..src.rows() {
                    let c = crate::linalg::coordinates(tgt, img.row(i)).expect("closed subspace");
                    for (j, x) in c.into_iter().enumerate() {
                        out.set(i, j, x);
                    }
                }
                out
            })
            .collect();
        let rep = Rep::new(
            self.p,
            self.quiver.clone(),
            dims,
            maps,
            Provenance::Derived("submodule".into()),
        );
        Ok((rep, u.parts.clone()))
    }

    /// The quotient `self / u` with the canonical projection.
    pub fn quotient(&self, u: &Subspace) -> Result<(Rep, Morphism)> {
        if !self.is_closed(u) {
            return Err(Error::NotClosed);
        }
        let nv = self.dims.len();
        let mut comps = Vec::with_capacity(nv);
        let mut projs = Vec::with_capacity(nv);
        for v in 0..nv {
            let n = self.dims[v];
            let c = complement(&u.parts[v], n, self.p);
            let b = u.parts[v].vstack(&c);
            let binv = b.inverse().expect("basis extension is invertible");
            let idx: Vec<usize> = (u.parts[v].rows()..n).collect();
            projs.push(binv.select_cols(&idx));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::rows).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let arr = self.quiver.arrow(a);
                comps[arr.source].mul(m).mul(&projs[arr.target])
            })
            .collect();
        let rep = Rep::new(
            self.p,
            self.quiver.clone(),
            dims,
            maps,
            Provenance::Derived("quotient".into()),
        );
        Ok((rep, projs))
    }

    pub fn quotient_rep(&self, u: &Subspace) -> Result<Rep> {
        Ok(self.quotient(u)?.0)
    }

    /// `self / rad^i(self)`.
    pub fn top_quotient(&self, i: usize) -> Rep {
        self.quotient_rep(&self.radical_power(i)).expect("radical powers are submodules")
    }
}

#[cfg(test)]
mod tests {
    use crate::presentation::Presentation;
    use crate::repmod::{projective, string_module};
    use crate::stringcomb::StringWord;

    #[test]
    fn radical_series_of_a3() {
        let a3 = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
        let p1 = projective(&a3, 0).unwrap();
        assert_eq!(p1.radical().dims(), vec![0, 1, 1]);
        assert_eq!(p1.radical_power(2).dims(), vec![0, 0, 1]);
        assert!(p1.radical_power(3).is_zero());
        assert_eq!(p1.socle().dims(), vec![0, 0, 1]);
        let q = p1.quotient_rep(&p1.radical_power(2)).unwrap();
        assert_eq!(q.dims(), &[1, 1, 0]);
        assert!(q.satisfies(&a3));
        assert!(p1.quotient_rep(&p1.whole()).unwrap().is_zero());
        assert_eq!(p1.quotient_rep(&p1.zero_subspace()).unwrap().dims(), p1.dims());
    }

    #[test]
    fn socle_of_sink_string() {
        let d = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[]).unwrap();
        let m = string_module(&d, &StringWord::parse(d.quiver(), "a b^-1").unwrap()).unwrap();
        assert_eq!(m.socle().dims(), vec![0, 1, 0]);
        assert_eq!(m.top_length(), 2);
        let s = Presentation::from_spec(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")], &[]).unwrap();
        let m = string_module(&s, &StringWord::parse(s.quiver(), "a^-1 b").unwrap()).unwrap();
        assert_eq!(m.radical().dims(), vec![1, 0, 1]);
        assert_eq!(m.socle().dims(), vec![1, 0, 1]);
        assert!(m.is_local());
    }
}
