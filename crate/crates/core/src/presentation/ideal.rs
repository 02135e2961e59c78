use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::{Path, Presentation, Relation};
use crate::error::{Error, Result};

// Hard stop against exponential path growth on non-special-biserial input.
const MAX_NONZERO_PATHS: usize = 200_000;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ValidationReport {
    /// `1 +` length of the longest nonzero path.
    pub nilpotency_bound: usize,
    /// Number of nonzero path classes, i.e. `dim KQ/I`.
    pub dimension: usize,
}

pub(crate) fn contains_monomial(p: &Presentation, arrows: &[usize]) -> bool {
    p.relations.iter().any(|r| match r {
        Relation::Monomial(m) => contains_sub(arrows, &m.arrows),
        Relation::Binomial(..) => false,
    })
}

fn contains_sub(hay: &[usize], needle: &[usize]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Closure of `path` under `p <-> q` rewriting. Returns the class members and
/// whether some member contains a monomial relation.
fn rewrite_class(pres: &Presentation, path: &Path, cap: usize) -> Result<(BTreeSet<Vec<usize>>, bool)> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(path.arrows.clone());
    queue.push_back(path.arrows.clone());
    let sides: Vec<(&[usize], &[usize])> = pres
        .relations
        .iter()
        .filter_map(|r| match r {
            Relation::Binomial(p, q) => Some((p.arrows.as_slice(), q.arrows.as_slice())),
            Relation::Monomial(_) => None,
        })
        .collect();
    while let Some(w) = queue.pop_front() {
        if contains_monomial(pres, &w) {
            return Ok((seen, true));
        }
        for &(p, q) in &sides {
            for (from, to) in [(p, q), (q, p)] {
                if from.len() > w.len() {
                    continue;
                }
                for i in 0..=w.len() - from.len() {
                    if &w[i..i + from.len()] != from {
                        continue;
                    }
                    let mut nw = Vec::with_capacity(w.len() - from.len() + to.len());
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(to);
                    nw.extend_from_slice(&w[i + from.len()..]);
                    if nw.len() > cap {
                        return Err(Error::SearchCapExceeded(cap));
                    }
                    if seen.insert(nw.clone()) {
                        queue.push_back(nw);
                    }
                }
            }
        }
    }
    Ok((seen, false))
}

pub(crate) fn path_is_zero_by_rewriting(pres: &Presentation, path: &Path, cap: usize) -> Result<bool> {
    Ok(rewrite_class(pres, path, cap)?.1)
}

#[derive(Debug, Clone)]
pub struct PathClass {
    /// Shortest, then lexicographically least member.
    pub rep: Path,
    pub source: usize,
    pub target: usize,
}

/// Basis of `KQ/I` by classes of nonzero paths, with the right action of arrows.
#[derive(Debug, Clone)]
pub struct PathBasis {
    classes: Vec<PathClass>,
    index: HashMap<Path, usize>,
    succ: Vec<Vec<Option<usize>>>,
    max_len: usize,
}

impl PathBasis {
    pub(crate) fn build(pres: &Presentation) -> Result<Self> {
        let q = pres.quiver();
        let cap = pres.path_cap();
        let mut classes: Vec<PathClass> = Vec::new();
        let mut index: HashMap<Path, usize> = HashMap::new();
        let mut level: Vec<Path> = Vec::new();
        for v in 0..q.vertex_count() {
            let p = Path::trivial(v);
            index.insert(p.clone(), classes.len());
            classes.push(PathClass {
                rep: p.clone(),
                source: v,
                target: v,
            });
            level.push(p);
        }
        let mut len = 0usize;
        let mut max_len = 0usize;
        while !level.is_empty() {
            if len > cap {
                return Err(inadmissible_witness(pres, &level[0], cap));
            }
            let mut next = Vec::new();
            for p in &level {
                let end = p.end(q);
                for &a in q.out_arrows(end) {
                    let np = p.then(a);
                    if index.contains_key(&np) {
                        next.push(np);
                        continue;
                    }
                    let (members, zero) = rewrite_class(pres, &np, cap.max(2 * np.len()))?;
                    if zero {
                        continue;
                    }
                    let id = classes.len();
                    let mut best: Option<&Vec<usize>> = None;
                    for m in &members {
                        if best.is_none_or(|b| (m.len(), m) < (b.len(), b)) {
                            best = Some(m);
                        }
                    }
                    classes.push(PathClass {
                        rep: Path {
                            start: np.start,
                            arrows: best.expect("nonempty class").clone(),
                        },
                        source: np.start,
                        target: q.arrow(a).target,
                    });
                    for m in members {
                        index.insert(
                            Path {
                                start: np.start,
                                arrows: m,
                            },
                            id,
                        );
                    }
                    next.push(np);
                }
            }
            if !next.is_empty() {
                max_len = len + 1;
            }
            if index.len() > MAX_NONZERO_PATHS {
                return Err(Error::SearchCapExceeded(cap));
            }
            level = next;
            len += 1;
        }
        let mut succ = vec![vec![None; q.arrow_count()]; classes.len()];
        for (id, c) in classes.iter().enumerate() {
            for &a in q.out_arrows(c.target) {
                succ[id][a] = index.get(&c.rep.then(a)).copied();
            }
        }
        Ok(PathBasis {
            classes,
            index,
            succ,
            max_len,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn class(&self, id: usize) -> &PathClass {
        &self.classes[id]
    }

    pub fn classes(&self) -> &[PathClass] {
        &self.classes
    }

    /// Class of a nonzero path, `None` when the path is zero.
    pub fn class_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Class of `c·a`, `None` if zero or not composable.
    pub fn act(&self, c: usize, a: usize) -> Option<usize> {
        self.succ[c][a]
    }

    pub fn starting_at(&self, v: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].source == v).collect()
    }

    pub fn ending_at(&self, v: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].target == v).collect()
    }
}

fn inadmissible_witness(pres: &Presentation, long: &Path, cap: usize) -> Error {
    let q = pres.quiver();
    let mut verts = vec![long.start];
    for &a in &long.arrows {
        verts.push(q.arrow(a).target);
    }
    // Shortest cycle inside the long path whose high powers survive.
    let mut best: Option<Path> = None;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if verts[i] != verts[j] {
                continue;
            }
            let cyc = Path {
                start: verts[i],
                arrows: long.arrows[i..j].to_vec(),
            };
            let reps = cap / cyc.len() + 2;
            let mut power = Vec::new();
            for _ in 0..reps {
                power.extend_from_slice(&cyc.arrows);
            }
            let pw = Path {
                start: cyc.start,
                arrows: power,
            };
            let zero = match rewrite_class(pres, &pw, 2 * pw.len() + cap) {
                Ok((_, z)) => z,
                Err(_) => continue,
            };
            if !zero && best.as_ref().is_none_or(|b| (cyc.len(), &cyc.arrows) < (b.len(), &b.arrows)) {
                best = Some(cyc);
            }
        }
    }
    match best {
        Some(c) => Error::NotAdmissible {
            witness: c.display(q),
        },
        None => Error::SearchCapExceeded(cap),
    }
}
