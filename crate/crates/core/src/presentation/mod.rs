//! Quivers with monomial and binomial relations.

mod ideal;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::is_prime;

pub use ideal::{PathBasis, ValidationReport};
pub use parse::parse_presentation;
pub(crate) use parse::parse_relation_text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Arrows are kept sorted by name, vertices in declaration order.
#[derive(Debug, Clone)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    out_arrows: Vec<Vec<usize>>,
    in_arrows: Vec<Vec<usize>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}
impl Eq for Quiver {}

impl Quiver {
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidParameters("quiver needs at least one vertex".into()));
        }
        let mut vertex_index = HashMap::new();
        let mut vs = Vec::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if vertex_index.insert(v.clone(), vs.len()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
            vs.push(v);
        }
        let mut raw = Vec::new();
        for (name, s, t) in arrows {
            let s = *vertex_index
                .get(s.as_ref())
                .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))?;
            let t = *vertex_index
                .get(t.as_ref())
                .ok_or_else(|| Error::UnknownVertex(t.as_ref().to_string()))?;
            raw.push(Arrow {
                name: name.as_ref().to_string(),
                source: s,
                target: t,
            });
        }
        raw.sort_by(|a, b| a.name.cmp(&b.name));
        let mut arrow_index = HashMap::new();
        for (i, a) in raw.iter().enumerate() {
            if arrow_index.insert(a.name.clone(), i).is_some() {
                return Err(Error::DuplicateArrowName(a.name.clone()));
            }
        }
        let mut out_arrows = vec![Vec::new(); vs.len()];
        let mut in_arrows = vec![Vec::new(); vs.len()];
        for (i, a) in raw.iter().enumerate() {
            out_arrows[a.source].push(i);
            in_arrows[a.target].push(i);
        }
        Ok(Quiver {
            vertices: vs,
            arrows: raw,
            vertex_index,
            arrow_index,
            out_arrows,
            in_arrows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.in_arrows[v]
    }
}

/// A path: a start vertex and a composable arrow sequence. Empty means the trivial path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::NonComposablePath(String::new()));
        };
        let p = Path {
            start: q.arrow(first).source,
            arrows,
        };
        for w in p.arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::NonComposablePath(p.display(q)));
            }
        }
        Ok(p)
    }

    /// Parses `a*b*c` against the quiver.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let mut ids = Vec::new();
        for name in text.split('*') {
            let name = name.trim();
            ids.push(q.arrow_id(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?);
        }
        Path::new(q, ids).map_err(|_| Error::NonComposablePath(text.trim().to_string()))
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrow(a).target)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e({})", q.vertex_name(self.start));
        }
        self.arrows
            .iter()
            .map(|&a| q.arrow_name(a))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn then(&self, a: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            arrows,
        }
    }

    /// Drops the first `k` arrows; the start moves forward.
    pub fn drop_front(&self, q: &Quiver, k: usize) -> Path {
        if k == 0 {
            return self.clone();
        }
        let start = q.arrow(self.arrows[k - 1]).target;
        Path {
            start,
            arrows: self.arrows[k..].to_vec(),
        }
    }

    pub fn drop_back(&self, k: usize) -> Path {
        Path {
            start: self.start,
            arrows: self.arrows[..self.arrows.len() - k].to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Monomial(Path),
    Binomial(Path, Path),
}

impl Relation {
    pub fn display(&self, q: &Quiver) -> String {
        match self {
            Relation::Monomial(p) => p.display(q),
            Relation::Binomial(p, r) => format!("{} - {}", p.display(q), r.display(q)),
        }
    }

    fn validate(&self, q: &Quiver) -> Result<()> {
        match self {
            Relation::Monomial(p) => {
                if p.len() < 2 {
                    return Err(Error::InadmissibleRelation(
                        self.display(q),
                        "relations must have length at least 2".into(),
                    ));
                }
            }
            Relation::Binomial(p, r) => {
                if p.len() < 2 || r.len() < 2 {
                    return Err(Error::InadmissibleRelation(
                        self.display(q),
                        "relations must have length at least 2".into(),
                    ));
                }
                if p == r {
                    return Err(Error::InadmissibleRelation(
                        self.display(q),
                        "binomial sides must differ".into(),
                    ));
                }
                if p.start != r.start || p.end(q) != r.end(q) {
                    return Err(Error::InadmissibleRelation(
                        self.display(q),
                        "binomial sides must share source and target".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The pair `(p, q)` of a binomial relation `p - q`; it determines a
/// non-uniserial projective-injective module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiserialPair {
    pub p: Path,
    pub q: Path,
}

impl BiserialPair {
    pub fn display(&self, q: &Quiver) -> String {
        format!("PI({},{})", self.p.display(q), self.q.display(q))
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BiserialReport {
    pub special_biserial: bool,
    pub witness: Option<String>,
}

pub struct Presentation {
    quiver: Arc<Quiver>,
    relations: Vec<Relation>,
    characteristic: u32,
    path_cap: Option<usize>,
    basis: OnceLock<Result<Arc<PathBasis>>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            characteristic: self.characteristic,
            path_cap: self.path_cap,
            basis: self.basis.clone(),
        }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({:?})", self.serialize())
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.relations == other.relations
            && self.characteristic == other.characteristic
    }
}
impl Eq for Presentation {}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, characteristic: u32) -> Result<Self> {
        Self::with_arc(Arc::new(quiver), relations, characteristic)
    }

    pub fn with_arc(quiver: Arc<Quiver>, relations: Vec<Relation>, characteristic: u32) -> Result<Self> {
        if !is_prime(characteristic) || characteristic >= 1 << 16 {
            return Err(Error::InvalidCharacteristic(characteristic));
        }
        for r in &relations {
            r.validate(&quiver)?;
        }
        Ok(Presentation {
            quiver,
            relations,
            characteristic,
            path_cap: None,
            basis: OnceLock::new(),
        })
    }

    /// Builds a presentation from names, e.g. `from_spec(&["1","2"], &[("a","1","2")], &["a*a"])`.
    pub fn from_spec(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&str]) -> Result<Self> {
        let q = Quiver::new(vertices, arrows)?;
        let mut rels = Vec::new();
        for r in relations {
            rels.push(parse::parse_relation_text(&q, r)?);
        }
        Presentation::new(q, rels, 2)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn with_characteristic(&self, p: u32) -> Result<Self> {
        let mut out = Presentation::with_arc(self.quiver.clone(), self.relations.clone(), p)?;
        out.path_cap = self.path_cap;
        Ok(out)
    }

    pub fn with_path_cap(&self, cap: usize) -> Self {
        Presentation {
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            characteristic: self.characteristic,
            path_cap: Some(cap),
            basis: OnceLock::new(),
        }
    }

    /// Path-length cap used by admissibility search and rewriting.
    pub fn path_cap(&self) -> usize {
        self.path_cap
            .unwrap_or(2 * self.quiver.arrow_count() * (self.relations.len() + 1) + 2)
    }

    pub fn has_binomials(&self) -> bool {
        self.relations.iter().any(|r| matches!(r, Relation::Binomial(..)))
    }

    /// Nonzero path classes of `KQ/I`; fails if the ideal is not admissible.
    pub fn basis(&self) -> Result<Arc<PathBasis>> {
        self.basis
            .get_or_init(|| PathBasis::build(self).map(Arc::new))
            .clone()
    }

    pub fn validate_admissible(&self) -> Result<ValidationReport> {
        let b = self.basis()?;
        Ok(ValidationReport {
            nilpotency_bound: b.max_len() + 1,
            dimension: b.len(),
        })
    }

    pub fn path_is_zero(&self, path: &Path) -> Result<bool> {
        for w in path.arrows.windows(2) {
            if self.quiver.arrow(w[0]).target != self.quiver.arrow(w[1]).source {
                return Err(Error::NonComposablePath(path.display(&self.quiver)));
            }
        }
        if !self.has_binomials() {
            return Ok(ideal::contains_monomial(self, &path.arrows));
        }
        ideal::path_is_zero_by_rewriting(self, path, self.path_cap().max(path.len() * 2))
    }

    pub fn is_special_biserial(&self) -> Result<BiserialReport> {
        let q = &self.quiver;
        for v in 0..q.vertex_count() {
            let n_out = q.out_arrows(v).len();
            let n_in = q.in_arrows(v).len();
            if n_out > 2 {
                return Ok(BiserialReport {
                    special_biserial: false,
                    witness: Some(format!("vertex {} has {} outgoing arrows", q.vertex_name(v), n_out)),
                });
            }
            if n_in > 2 {
                return Ok(BiserialReport {
                    special_biserial: false,
                    witness: Some(format!("vertex {} has {} incoming arrows", q.vertex_name(v), n_in)),
                });
            }
        }
        for a in 0..q.arrow_count() {
            let t = q.arrow(a).target;
            let mut succ = Vec::new();
            for &b in q.out_arrows(t) {
                if !self.path_is_zero(&Path { start: q.arrow(a).source, arrows: vec![a, b] })? {
                    succ.push(q.arrow_name(b).to_string());
                }
            }
            if succ.len() > 1 {
                return Ok(BiserialReport {
                    special_biserial: false,
                    witness: Some(format!(
                        "arrow {} has nonzero successors {}",
                        q.arrow_name(a),
                        succ.join(", ")
                    )),
                });
            }
            let s = q.arrow(a).source;
            let mut pred = Vec::new();
            for &c in q.in_arrows(s) {
                if !self.path_is_zero(&Path { start: q.arrow(c).source, arrows: vec![c, a] })? {
                    pred.push(q.arrow_name(c).to_string());
                }
            }
            if pred.len() > 1 {
                return Ok(BiserialReport {
                    special_biserial: false,
                    witness: Some(format!(
                        "arrow {} has nonzero predecessors {}",
                        q.arrow_name(a),
                        pred.join(", ")
                    )),
                });
            }
        }
        Ok(BiserialReport {
            special_biserial: true,
            witness: None,
        })
    }

    /// Replaces each binomial `p - q` by the monomials `p` and `q` and records the pair.
    /// Pairs whose sides are already zero are not recorded.
    pub fn string_algebra_reduction(&self) -> Result<(Presentation, Vec<BiserialPair>)> {
        let mut rels = Vec::new();
        let mut pairs = Vec::new();
        for r in &self.relations {
            match r {
                Relation::Monomial(_) => rels.push(r.clone()),
                Relation::Binomial(p, q) => {
                    if !self.path_is_zero(p)? {
                        pairs.push(BiserialPair { p: p.clone(), q: q.clone() });
                    }
                    rels.push(Relation::Monomial(p.clone()));
                    rels.push(Relation::Monomial(q.clone()));
                }
            }
        }
        let mut red = Presentation::with_arc(self.quiver.clone(), rels, self.characteristic)?;
        red.path_cap = self.path_cap;
        Ok((red, pairs))
    }

    /// Byte-stable text form; `parse_presentation` inverts it.
    pub fn serialize(&self) -> String {
        let q = &self.quiver;
        let mut out = String::new();
        out.push_str("vertices: ");
        out.push_str(&q.vertices.join(" "));
        out.push('\n');
        out.push_str("arrows:");
        let arrows: Vec<String> = q
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
            .collect();
        if !arrows.is_empty() {
            out.push(' ');
            out.push_str(&arrows.join(", "));
        }
        out.push('\n');
        out.push_str("relations:");
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(q)).collect();
        if !rels.is_empty() {
            out.push(' ');
            out.push_str(&rels.join(", "));
        }
        out.push('\n');
        if self.characteristic != 2 {
            out.push_str(&format!("characteristic: {}\n", self.characteristic));
        }
        out
    }

    /// Same presentation with vertices and arrows renamed through the given maps.
    pub fn renamed(&self, vertex: impl Fn(&str) -> String, arrow: impl Fn(&str) -> String) -> Result<Self> {
        let q = &self.quiver;
        let vs: Vec<String> = q.vertices.iter().map(|v| vertex(v)).collect();
        let arrows: Vec<(String, String, String)> = q
            .arrows
            .iter()
            .map(|a| (arrow(&a.name), vs[a.source].clone(), vs[a.target].clone()))
            .collect();
        let nq = Quiver::new(&vs, &arrows)?;
        let map_path = |p: &Path| -> Path {
            if p.arrows.is_empty() {
                return p.clone();
            }
            let ids: Vec<usize> = p
                .arrows
                .iter()
                .map(|&a| nq.arrow_id(&arrow(q.arrow_name(a))).expect("renamed arrow"))
                .collect();
            Path { start: p.start, arrows: ids }
        };
        let rels = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monomial(p) => Relation::Monomial(map_path(p)),
                Relation::Binomial(p, r) => Relation::Binomial(map_path(p), map_path(r)),
            })
            .collect();
        Presentation::new(nq, rels, self.characteristic)
    }
}
