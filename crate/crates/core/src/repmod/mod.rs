//! Explicit representations over `F_p` and their structure.

mod hom;
mod structure;
mod submodules;
mod subspace;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentation::{BiserialPair, Presentation, Quiver, Relation};
use crate::stringcomb::{rho_canonical, StringAlgebra, StringWord};

pub use hom::{
    are_isomorphic, are_isomorphic_capped, compose, end_algebra, hom, is_homomorphism, is_indecomposable,
    is_indecomposable_capped, Morphism,
};
pub(crate) use hom::{global, isomorphic_unbounded, same_multiset};
pub use structure::{factor_serial_degree, is_uniserial, DegreeReport};
pub use submodules::{enumerate_submodules, DEFAULT_SUB_CAP};
pub use subspace::Subspace;

pub const DEFAULT_END_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Canonical string serialization.
    String(String),
    Projective(String),
    Injective(String),
    ProjectiveInjective(String),
    Derived(String),
}

impl Provenance {
    pub fn label(&self) -> String {
        match self {
            Provenance::String(s) => format!("string:{s}"),
            Provenance::Projective(v) => format!("projective:{v}"),
            Provenance::Injective(v) => format!("injective:{v}"),
            Provenance::ProjectiveInjective(s) => format!("pi:{s}"),
            Provenance::Derived(s) => format!("derived:{s}"),
        }
    }
}

/// A right module: one vector space per vertex, one matrix per arrow acting on row vectors.
#[derive(Debug, Clone)]
pub struct Rep {
    p: u32,
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    provenance: Provenance,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepJson {
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<u32>>>,
    pub provenance: String,
}

impl Rep {
    pub fn new(p: u32, quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix>, provenance: Provenance) -> Self {
        assert_eq!(dims.len(), quiver.vertex_count(), "one dimension per vertex");
        assert_eq!(maps.len(), quiver.arrow_count(), "one matrix per arrow");
        for (a, m) in maps.iter().enumerate() {
            let arr = quiver.arrow(a);
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[arr.source], dims[arr.target]),
                "map shape for arrow {}",
                arr.name
            );
        }
        Rep {
            p,
            quiver,
            dims,
            maps,
            provenance,
        }
    }

    pub fn zero(p: u32, quiver: Arc<Quiver>) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = (0..quiver.arrow_count()).map(|_| Matrix::zeros(0, 0, p)).collect();
        Rep::new(p, quiver, dims, maps, Provenance::Derived("zero".into()))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, prov: Provenance) -> Self {
        self.provenance = prov;
        self
    }

    /// Composition length; all simples are one-dimensional.
    pub fn length(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.length() == 0
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Matrix of the product of arrow maps along a path.
    pub fn path_map(&self, arrows: &[usize], start: usize) -> Matrix {
        let mut m = Matrix::identity(self.dims[start], self.p);
        for &a in arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Every relation acts as it should: monomials vanish, binomial sides agree.
    pub fn satisfies(&self, pres: &Presentation) -> bool {
        pres.relations().iter().all(|r| match r {
            Relation::Monomial(m) => self.path_map(&m.arrows, m.start).is_zero(),
            Relation::Binomial(a, b) => self.path_map(&a.arrows, a.start) == self.path_map(&b.arrows, b.start),
        })
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| block_diag(a, b))
            .collect();
        Rep::new(
            self.p,
            self.quiver.clone(),
            dims,
            maps,
            Provenance::Derived("direct sum".into()),
        )
    }

    pub fn direct_sum_all(p: u32, quiver: &Arc<Quiver>, parts: &[Rep]) -> Rep {
        let mut acc = Rep::zero(p, quiver.clone());
        for r in parts {
            acc = acc.direct_sum(r);
        }
        acc
    }

    pub fn to_json(&self) -> RepJson {
        let q = &self.quiver;
        RepJson {
            dims: (0..q.vertex_count())
                .map(|v| (q.vertex_name(v).to_string(), self.dims[v]))
                .collect(),
            maps: (0..q.arrow_count())
                .map(|a| (q.arrow_name(a).to_string(), self.maps[a].to_rows()))
                .collect(),
            provenance: self.provenance.label(),
        }
    }
}

pub(crate) fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j));
        }
    }
    m
}

/// Module whose basis vectors are sent by each arrow to a basis vector or to zero.
#[derive(Debug, Clone)]
pub struct MonomialModule {
    pub vertex_of: Vec<usize>,
    /// `action[b][a]`: image of basis vector `b` under arrow `a`.
    pub action: Vec<Vec<Option<usize>>>,
    pub labels: Vec<String>,
}

impl MonomialModule {
    pub fn len(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_of.is_empty()
    }

    /// Local index of each basis vector within its vertex space.
    pub fn local_index(&self) -> Vec<usize> {
        let mut count = BTreeMap::new();
        self.vertex_of
            .iter()
            .map(|&v| {
                let c = count.entry(v).or_insert(0usize);
                *c += 1;
                *c - 1
            })
            .collect()
    }

    /// Representation of the subquotient spanned by `keep`; images outside `keep` become zero.
    pub fn subquotient_rep(&self, p: u32, quiver: &Arc<Quiver>, keep: &[bool], prov: Provenance) -> Rep {
        let nv = quiver.vertex_count();
        let mut dims = vec![0usize; nv];
        let mut local = vec![usize::MAX; self.len()];
        for b in 0..self.len() {
            if keep[b] {
                local[b] = dims[self.vertex_of[b]];
                dims[self.vertex_of[b]] += 1;
            }
        }
        let mut maps: Vec<Matrix> = (0..quiver.arrow_count())
            .map(|a| {
                let arr = quiver.arrow(a);
                Matrix::zeros(dims[arr.source], dims[arr.target], p)
            })
            .collect();
        for b in 0..self.len() {
            if !keep[b] {
                continue;
            }
            for (a, img) in self.action[b].iter().enumerate() {
                if let Some(c) = *img {
                    if keep[c] {
                        maps[a].set(local[b], local[c], 1);
                    }
                }
            }
        }
        Rep::new(p, quiver.clone(), dims, maps, prov)
    }

    pub fn to_rep(&self, p: u32, quiver: &Arc<Quiver>, prov: Provenance) -> Rep {
        self.subquotient_rep(p, quiver, &vec![true; self.len()], prov)
    }
}

/// Position basis of the string module `M(w)`.
pub fn string_monomial(q: &Quiver, w: &StringWord) -> MonomialModule {
    let verts = w.walk.vertices(q);
    let n = verts.len();
    let mut action = vec![vec![None; q.arrow_count()]; n];
    for (k, l) in w.walk.letters.iter().enumerate() {
        // letter k+1 joins positions k and k+1
        if l.inverse {
            action[k + 1][l.arrow] = Some(k);
        } else {
            action[k][l.arrow] = Some(k + 1);
        }
    }
    MonomialModule {
        vertex_of: verts,
        action,
        labels: (0..n).map(|k| format!("x{k}")).collect(),
    }
}

/// The string module `M(w)`.
pub fn string_module(p: &Presentation, w: &StringWord) -> Result<Rep> {
    let sa = StringAlgebra::new(p)?;
    string_module_in(&sa, w)
}

pub(crate) fn string_module_in(sa: &StringAlgebra, w: &StringWord) -> Result<Rep> {
    let q = sa.quiver();
    if !sa.is_string(&w.walk) {
        return Err(Error::NotAString(w.display(q)));
    }
    let canon = rho_canonical(q, w).display(q);
    let pres = sa.original();
    Ok(string_monomial(q, w).to_rep(
        pres.characteristic(),
        pres.quiver_arc(),
        Provenance::String(canon),
    ))
}

/// Path-class basis of the indecomposable projective at `v`.
pub fn projective_monomial(pres: &Presentation, v: usize) -> Result<MonomialModule> {
    let basis = pres.basis()?;
    let q = pres.quiver();
    let ids = basis.starting_at(v);
    let mut pos = BTreeMap::new();
    for (i, &c) in ids.iter().enumerate() {
        pos.insert(c, i);
    }
    let mut action = vec![vec![None; q.arrow_count()]; ids.len()];
    for (i, &c) in ids.iter().enumerate() {
        for a in 0..q.arrow_count() {
            if let Some(d) = basis.act(c, a) {
                action[i][a] = Some(pos[&d]);
            }
        }
    }
    Ok(MonomialModule {
        vertex_of: ids.iter().map(|&c| basis.class(c).target).collect(),
        action,
        labels: ids.iter().map(|&c| basis.class(c).rep.display(q)).collect(),
    })
}

pub fn projective(pres: &Presentation, v: usize) -> Result<Rep> {
    let m = projective_monomial(pres, v)?;
    Ok(m.to_rep(
        pres.characteristic(),
        pres.quiver_arc(),
        Provenance::Projective(pres.quiver().vertex_name(v).to_string()),
    ))
}

/// Dual of the left projective at `v`: basis `u*` for classes `u` ending at `v`, placed at `s(u)`.
pub fn injective(pres: &Presentation, v: usize) -> Result<Rep> {
    let basis = pres.basis()?;
    let q = pres.quiver();
    let p = pres.characteristic();
    let ids = basis.ending_at(v);
    let mut dims = vec![0usize; q.vertex_count()];
    let mut local = BTreeMap::new();
    for &u in &ids {
        let s = basis.class(u).source;
        local.insert(u, dims[s]);
        dims[s] += 1;
    }
    let mut maps: Vec<Matrix> = (0..q.arrow_count())
        .map(|a| Matrix::zeros(dims[q.arrow(a).source], dims[q.arrow(a).target], p))
        .collect();
    // (u*·α)(x) = u*(α x)
    for &x in &ids {
        let sx = basis.class(x).source;
        for &a in q.in_arrows(sx) {
            let ax = crate::presentation::Path {
                start: q.arrow(a).source,
                arrows: std::iter::once(a).chain(basis.class(x).rep.arrows.iter().copied()).collect(),
            };
            if let Some(u) = basis.class_of(&ax) {
                maps[a].set(local[&u], local[&x], 1);
            }
        }
    }
    Ok(Rep::new(
        p,
        pres.quiver_arc().clone(),
        dims,
        maps,
        Provenance::Injective(q.vertex_name(v).to_string()),
    ))
}

/// The non-uniserial projective-injective module of a binomial pair.
pub fn biserial_pi(pres: &Presentation, pair: &BiserialPair) -> Result<Rep> {
    Ok(projective(pres, pair.p.start)?.with_provenance(Provenance::ProjectiveInjective(pair.display(pres.quiver()))))
}
