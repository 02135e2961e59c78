//! Strings and bands of special biserial algebras.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{BiserialPair, Path, Presentation, Quiver, Relation};

/// A signed arrow. Ordered by arrow (name order), direct before inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: usize) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn flip(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn display(self, q: &Quiver) -> String {
        if self.inverse {
            format!("{}^-1", q.arrow_name(self.arrow))
        } else {
            q.arrow_name(self.arrow).to_string()
        }
    }
}

/// A walk `c_1 ... c_n` starting at `start`. With no letters it is the trivial walk at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl Walk {
    pub fn trivial(v: usize) -> Self {
        Walk {
            start: v,
            letters: Vec::new(),
        }
    }

    /// Builds a walk from letters, checking that consecutive letters connect.
    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<Self> {
        let Some(first) = letters.first() else {
            return Err(Error::BadWalk(String::new(), "empty walk needs a base vertex".into()));
        };
        let w = Walk {
            start: first.source(q),
            letters,
        };
        for pair in w.letters.windows(2) {
            if pair[0].target(q) != pair[1].source(q) {
                return Err(Error::BadWalk(w.display(q), "letters do not connect".into()));
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.letters.last().map_or(self.start, |l| l.target(q))
    }

    /// Vertex of each position `0..=n`.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        for l in &self.letters {
            out.push(l.target(q));
        }
        out
    }

    pub fn inverse(&self, q: &Quiver) -> Walk {
        Walk {
            start: self.end(q),
            letters: self.letters.iter().rev().map(|l| l.flip()).collect(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].flip())
    }

    pub fn has_direct(&self) -> bool {
        self.letters.iter().any(|l| !l.inverse)
    }

    pub fn has_inverse(&self) -> bool {
        self.letters.iter().any(|l| l.inverse)
    }

    pub fn concat(&self, other: &Walk) -> Walk {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Walk {
            start: self.start,
            letters,
        }
    }

    pub fn sub(&self, q: &Quiver, from: usize, to: usize) -> Walk {
        let start = if from == 0 {
            self.start
        } else {
            self.letters[from - 1].target(q)
        };
        Walk {
            start,
            letters: self.letters[from..to].to_vec(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.letters.is_empty() {
            return format!("e({},+1)", q.vertex_name(self.start));
        }
        self.letters.iter().map(|l| l.display(q)).collect::<Vec<_>>().join(" ")
    }

    /// Parses `a^-1 b c`, or `e(v,+1)` / `e(v,-1)` / `e(v)` for trivial walks.
    /// The returned sign is only meaningful for trivial walks.
    pub fn parse(q: &Quiver, text: &str) -> Result<(Walk, i8)> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("e(").and_then(|s| s.strip_suffix(')')) {
            let mut parts = inner.split(',');
            let v = parts.next().unwrap_or("").trim();
            let sign = match parts.next().map(str::trim) {
                None | Some("+1") | Some("1") => 1,
                Some("-1") => -1,
                Some(other) => return Err(Error::BadWalk(t.to_string(), format!("bad sign `{other}`"))),
            };
            let vid = q.vertex_id(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            return Ok((Walk::trivial(vid), sign));
        }
        let mut letters = Vec::new();
        for tok in t.split_whitespace() {
            let (name, inverse) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let a = q.arrow_id(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
            letters.push(Letter { arrow: a, inverse });
        }
        if letters.is_empty() {
            return Err(Error::BadWalk(t.to_string(), "empty walk".into()));
        }
        Ok((Walk::new(q, letters).map_err(|_| Error::BadWalk(t.to_string(), "letters do not connect".into()))?, 1))
    }

    fn cmp_letters(&self, other: &Walk) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

/// A string (or band) word together with the sign of a trivial string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringWord {
    pub walk: Walk,
    pub sign: i8,
}

impl StringWord {
    pub fn new(walk: Walk) -> Self {
        StringWord { walk, sign: 1 }
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.walk.letters.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            let s = if self.sign < 0 { "-1" } else { "+1" };
            return format!("e({},{})", q.vertex_name(self.walk.start), s);
        }
        self.walk.display(q)
    }

    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let (walk, sign) = Walk::parse(q, text)?;
        Ok(StringWord { walk, sign })
    }

    /// Canonical order: length, then letters; trivial strings by vertex.
    pub fn canonical_cmp(&self, other: &StringWord) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.walk.cmp_letters(&other.walk))
            .then_with(|| self.walk.start.cmp(&other.walk.start))
            .then_with(|| other.sign.cmp(&self.sign))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}{}", self.arrow, if self.inverse { "^-1" } else { "" })
    }
}

/// The smaller of `w` and `w^-1`; trivial strings get sign `+1`.
pub fn rho_canonical(q: &Quiver, w: &StringWord) -> StringWord {
    if w.is_trivial() {
        return StringWord::new(w.walk.clone());
    }
    let inv = w.walk.inverse(q);
    if inv.cmp_letters(&w.walk) == Ordering::Less {
        StringWord::new(inv)
    } else {
        StringWord::new(w.walk.clone())
    }
}

/// Least rotation of `b` or of `b^-1`.
pub fn sigma_canonical(q: &Quiver, b: &StringWord) -> StringWord {
    if b.is_trivial() {
        return StringWord::new(b.walk.clone());
    }
    let mut best: Option<Walk> = None;
    for base in [b.walk.clone(), b.walk.inverse(q)] {
        let n = base.len();
        for r in 0..n {
            let mut letters = base.letters[r..].to_vec();
            letters.extend_from_slice(&base.letters[..r]);
            let cand = Walk {
                start: letters[0].source(q),
                letters,
            };
            if best.as_ref().is_none_or(|x| cand.cmp_letters(x) == Ordering::Less) {
                best = Some(cand);
            }
        }
    }
    StringWord::new(best.expect("nonempty band"))
}

/// Special biserial algebra in string form: the monomial reduction plus the binomial pairs.
#[derive(Debug, Clone)]
pub struct StringAlgebra {
    original: Presentation,
    reduced: Presentation,
    pairs: Vec<BiserialPair>,
    monomials: Vec<Vec<usize>>,
}

impl StringAlgebra {
    pub fn new(p: &Presentation) -> Result<Self> {
        let (reduced, pairs) = p.string_algebra_reduction()?;
        let monomials = reduced
            .relations()
            .iter()
            .map(|r| match r {
                Relation::Monomial(m) => m.arrows.clone(),
                Relation::Binomial(..) => unreachable!("reduction leaves monomials only"),
            })
            .collect();
        Ok(StringAlgebra {
            original: p.clone(),
            reduced,
            pairs,
            monomials,
        })
    }

    /// Like `new`, but rejects presentations that are not special biserial.
    pub fn special_biserial(p: &Presentation) -> Result<Self> {
        let rep = p.is_special_biserial()?;
        if !rep.special_biserial {
            return Err(Error::NotSpecialBiserial(rep.witness.unwrap_or_default()));
        }
        Self::new(p)
    }

    pub fn quiver(&self) -> &Quiver {
        self.original.quiver()
    }

    pub fn original(&self) -> &Presentation {
        &self.original
    }

    pub fn reduced(&self) -> &Presentation {
        &self.reduced
    }

    pub fn pairs(&self) -> &[BiserialPair] {
        &self.pairs
    }

    fn path_nonzero(&self, arrows: &[usize]) -> bool {
        !self
            .monomials
            .iter()
            .any(|m| m.len() <= arrows.len() && arrows.windows(m.len()).any(|w| w == m.as_slice()))
    }

    /// Nonzero in the reduced algebra.
    pub fn path_is_nonzero(&self, p: &Path) -> bool {
        self.path_nonzero(&p.arrows)
    }

    /// Trailing run of same-direction letters of `letters`, as a direct path (arrow ids in path order).
    fn run_ok(&self, letters: &[Letter]) -> bool {
        let Some(last) = letters.last() else { return true };
        let dir = last.inverse;
        let mut k = letters.len();
        while k > 0 && letters[k - 1].inverse == dir {
            k -= 1;
        }
        let mut run: Vec<usize> = letters[k..].iter().map(|l| l.arrow).collect();
        if dir {
            run.reverse();
        }
        self.path_nonzero(&run)
    }

    /// Whether appending `l` to the string `w` keeps it a string.
    fn can_extend(&self, q: &Quiver, w: &Walk, l: Letter) -> bool {
        if l.source(q) != w.end(q) {
            return false;
        }
        if let Some(&last) = w.letters.last() {
            if last == l.flip() {
                return false;
            }
            if last.inverse != l.inverse {
                return true;
            }
        } else {
            return true;
        }
        let mut letters = w.letters.clone();
        letters.push(l);
        self.run_ok(&letters)
    }

    pub fn is_string(&self, w: &Walk) -> bool {
        let q = self.quiver();
        for pair in w.letters.windows(2) {
            if pair[0].target(q) != pair[1].source(q) {
                return false;
            }
        }
        if !w.is_reduced() {
            return false;
        }
        let mut i = 0;
        while i < w.letters.len() {
            let dir = w.letters[i].inverse;
            let mut j = i;
            while j < w.letters.len() && w.letters[j].inverse == dir {
                j += 1;
            }
            let mut run: Vec<usize> = w.letters[i..j].iter().map(|l| l.arrow).collect();
            if dir {
                run.reverse();
            }
            if !self.path_nonzero(&run) {
                return false;
            }
            i = j;
        }
        true
    }

    /// All letters that may follow `w` (or start a walk at `v` when `w` is trivial).
    pub fn extensions(&self, w: &Walk) -> Vec<Letter> {
        let q = self.quiver();
        let v = w.end(q);
        let mut out = Vec::new();
        for &a in q.out_arrows(v) {
            out.push(Letter::direct(a));
        }
        for &a in q.in_arrows(v) {
            out.push(Letter::inv(a));
        }
        out.sort();
        out.dedup();
        out.into_iter().filter(|&l| self.can_extend(q, w, l)).collect()
    }

    /// Some band in canonical form, preferring the shortest.
    pub fn find_band(&self) -> Option<StringWord> {
        let q = self.quiver();
        let max_len = 2 * q.arrow_count();
        let mut best: Option<StringWord> = None;
        let mut limit = max_len;
        let mut stack: Vec<Walk> = Vec::new();
        for a in 0..q.arrow_count() {
            for l in [Letter::direct(a), Letter::inv(a)] {
                stack.push(Walk {
                    start: l.source(q),
                    letters: vec![l],
                });
            }
        }
        while let Some(w) = stack.pop() {
            if w.len() > limit {
                continue;
            }
            if w.end(q) == w.start && w.has_direct() && w.has_inverse() && self.is_band(&w) {
                let cand = sigma_canonical(q, &StringWord::new(primitive_root(&w)));
                let better = match &best {
                    None => true,
                    Some(b) => cand.canonical_cmp(b) == Ordering::Less,
                };
                if better {
                    limit = cand.len();
                    best = Some(cand);
                }
            }
            if w.len() < limit {
                for l in self.extensions(&w) {
                    let mut nw = w.clone();
                    nw.letters.push(l);
                    stack.push(nw);
                }
            }
        }
        best
    }

    /// `w` closed with both letter signs, and `w w` a string.
    pub fn is_band(&self, w: &Walk) -> bool {
        let q = self.quiver();
        !w.is_empty()
            && w.end(q) == w.start
            && w.has_direct()
            && w.has_inverse()
            && self.is_string(&w.concat(w))
    }

    /// All strings up to `rho`, in canonical order.
    pub fn enumerate(&self) -> Result<Vec<StringWord>> {
        if let Some(b) = self.find_band() {
            return Err(Error::BandExists(b.display(self.quiver())));
        }
        Ok(self.enumerate_unchecked())
    }

    pub(crate) fn enumerate_unchecked(&self) -> Vec<StringWord> {
        let q = self.quiver();
        let mut found: BTreeSet<(usize, Vec<Letter>, usize)> = BTreeSet::new();
        let mut out = Vec::new();
        for v in 0..q.vertex_count() {
            out.push(StringWord::new(Walk::trivial(v)));
        }
        let mut stack: Vec<Walk> = Vec::new();
        for v in 0..q.vertex_count() {
            for l in self.extensions(&Walk::trivial(v)) {
                if l.source(q) == v {
                    stack.push(Walk {
                        start: v,
                        letters: vec![l],
                    });
                }
            }
        }
        while let Some(w) = stack.pop() {
            let c = rho_canonical(q, &StringWord::new(w.clone()));
            if found.insert((c.len(), c.walk.letters.clone(), c.walk.start)) {
                out.push(c);
            }
            for l in self.extensions(&w) {
                let mut nw = w.clone();
                nw.letters.push(l);
                stack.push(nw);
            }
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }
}

fn primitive_root(w: &Walk) -> Walk {
    let n = w.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (0..n).all(|i| w.letters[i] == w.letters[i % d]) {
            return Walk {
                start: w.start,
                letters: w.letters[..d].to_vec(),
            };
        }
    }
    w.clone()
}

pub fn is_string(p: &Presentation, w: &Walk) -> Result<bool> {
    Ok(StringAlgebra::new(p)?.is_string(w))
}

pub fn has_band(p: &Presentation) -> Result<Option<StringWord>> {
    Ok(StringAlgebra::special_biserial(p)?.find_band())
}

pub fn enumerate_strings(p: &Presentation) -> Result<Vec<StringWord>> {
    StringAlgebra::special_biserial(p)?.enumerate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron() -> Presentation {
        Presentation::from_spec(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]).unwrap()
    }

    fn names(p: &Presentation) -> Vec<String> {
        enumerate_strings(p)
            .unwrap()
            .iter()
            .map(|s| s.display(p.quiver()))
            .collect()
    }

    #[test]
    fn a2_and_a3_counts() {
        let a2 = Presentation::from_spec(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert_eq!(names(&a2), vec!["e(1,+1)", "e(2,+1)", "a"]);
        let a3 = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
        assert_eq!(names(&a3).len(), 6);
    }

    #[test]
    fn strings_and_non_strings() {
        let a3 = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &["a*b"]).unwrap();
        let q = a3.quiver();
        let (ab, _) = Walk::parse(q, "a b").unwrap();
        assert!(!is_string(&a3, &ab).unwrap());
        let back = Walk {
            start: 0,
            letters: vec![Letter::direct(0), Letter::inv(0)],
        };
        assert!(!is_string(&a3, &back).unwrap());
        let src = Presentation::from_spec(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")], &[]).unwrap();
        let (w, _) = Walk::parse(src.quiver(), "a^-1 b").unwrap();
        assert!(is_string(&src, &w).unwrap());
    }

    #[test]
    fn bands() {
        let k = kron();
        let b = has_band(&k).unwrap().unwrap();
        assert_eq!(b.display(k.quiver()), "a b^-1");
        assert!(matches!(enumerate_strings(&k), Err(Error::BandExists(_))));
        let lp = Presentation::from_spec(&["1"], &[("a", "1", "1")], &["a*a"]).unwrap();
        assert!(has_band(&lp).unwrap().is_none());
    }

    #[test]
    fn canonical_forms() {
        let k = kron();
        let q = k.quiver();
        let w = StringWord::parse(q, "b^-1 a").unwrap();
        let s = sigma_canonical(q, &w);
        assert_eq!(s.display(q), "a b^-1");
        assert_eq!(sigma_canonical(q, &s), s);
        let src = Presentation::from_spec(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")], &[]).unwrap();
        let q = src.quiver();
        let w = StringWord::parse(q, "b^-1 a").unwrap();
        assert_eq!(rho_canonical(q, &w).display(q), "a^-1 b");
        let t = StringWord::parse(q, "e(1,-1)").unwrap();
        assert_eq!(rho_canonical(q, &t).display(q), "e(1,+1)");
    }
}
