//! Hook and cohook calculus on strings: the AR translate and middle terms without linear algebra.

use crate::error::{Error, Result};
use crate::nakayama::projective_strings;
use crate::presentation::{BiserialPair, Path, Presentation};
use crate::repmod::{biserial_pi, string_module_in, Rep};
use crate::stringcomb::{rho_canonical, Letter, StringAlgebra, StringWord, Walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleTerm {
    String(StringWord),
    Pi(BiserialPair),
}

impl OracleTerm {
    pub fn label(&self, sa: &StringAlgebra) -> String {
        match self {
            OracleTerm::String(w) => w.display(sa.quiver()),
            OracleTerm::Pi(p) => p.display(sa.quiver()),
        }
    }

    pub fn rep(&self, sa: &StringAlgebra) -> Result<Rep> {
        match self {
            OracleTerm::String(w) => string_module_in(sa, w),
            OracleTerm::Pi(p) => biserial_pi(sa.original(), p),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleSequence {
    pub tau: StringWord,
    pub middle: Vec<OracleTerm>,
}

fn canon(sa: &StringAlgebra, w: Walk) -> StringWord {
    rho_canonical(sa.quiver(), &StringWord::new(w))
}

fn invert(sa: &StringAlgebra, w: &Walk) -> Walk {
    w.inverse(sa.quiver())
}

/// `w β γ1^-1 ... γk^-1` with the inverse run maximal.
fn cohook(sa: &StringAlgebra, w: &Walk, beta: Option<usize>) -> Option<Walk> {
    let l = sa
        .extensions(w)
        .into_iter()
        .find(|l| !l.inverse && beta.is_none_or(|b| b == l.arrow))?;
    let mut x = w.clone();
    x.letters.push(l);
    let bound = 4 * sa.quiver().arrow_count() + 4;
    while x.len() < w.len() + bound {
        match sa.extensions(&x).into_iter().find(|l| l.inverse) {
            Some(l) => x.letters.push(l),
            None => break,
        }
    }
    Some(x)
}

/// Strips the trailing direct run and one inverse letter; `None` when no inverse letter is left.
fn delete_hook(w: &Walk) -> Option<Walk> {
    let mut k = w.letters.len();
    while k > 0 && !w.letters[k - 1].inverse {
        k -= 1;
    }
    if k == 0 {
        return None;
    }
    Some(Walk {
        start: w.start,
        letters: w.letters[..k - 1].to_vec(),
    })
}

fn left_cohook(sa: &StringAlgebra, w: &Walk, beta: Option<usize>) -> Option<Walk> {
    cohook(sa, &invert(sa, w), beta).map(|x| invert(sa, &x))
}

fn left_delete(sa: &StringAlgebra, w: &Walk) -> Option<Walk> {
    delete_hook(&invert(sa, w)).map(|x| invert(sa, &x))
}

/// Direct letters usable at each end: for trivial strings the two sides take different arrows.
fn side_arrows(sa: &StringAlgebra, w: &Walk) -> (Option<usize>, Option<usize>) {
    if !w.is_empty() {
        return (None, None);
    }
    let mut outs: Vec<usize> = sa
        .extensions(w)
        .into_iter()
        .filter(|l| !l.inverse)
        .map(|l| l.arrow)
        .collect();
    outs.sort();
    (outs.first().copied(), outs.get(1).copied())
}

/// `P/soc P` of a binomial pair, as a string.
fn pi_top_string(sa: &StringAlgebra, pair: &BiserialPair) -> StringWord {
    let q = sa.quiver();
    let mut letters: Vec<Letter> = pair.p.arrows[..pair.p.len() - 1].iter().map(|&a| Letter::inv(a)).collect();
    letters.reverse();
    letters.extend(pair.q.arrows[..pair.q.len() - 1].iter().map(|&a| Letter::direct(a)));
    let start = letters.first().map_or(pair.p.start, |l| l.source(q));
    canon(sa, Walk { start, letters })
}

fn path_walk(sa: &StringAlgebra, p: &Path, from: usize, to: usize) -> Walk {
    let q = sa.quiver();
    let start = if from == 0 {
        p.start
    } else {
        q.arrow(p.arrows[from - 1]).target
    };
    Walk {
        start,
        letters: p.arrows[from..to].iter().map(|&a| Letter::direct(a)).collect(),
    }
}

/// Almost split sequence ending at `M(w)` by string combinatorics; `None` for projectives.
pub fn oracle_sequence(sa: &StringAlgebra, w: &StringWord) -> Option<OracleSequence> {
    let w = canon(sa, w.walk.clone());
    if projective_strings(sa).contains(&w) {
        return None;
    }
    for pair in sa.pairs() {
        if pi_top_string(sa, pair) == w {
            let (p, q) = (&pair.p, &pair.q);
            let pp = path_walk(sa, p, 1, p.len());
            let qq = path_walk(sa, q, 1, q.len());
            let tau = canon(sa, pp.concat(&invert(sa, &qq)));
            let middle = vec![
                OracleTerm::Pi(pair.clone()),
                OracleTerm::String(canon(sa, path_walk(sa, p, 1, p.len() - 1))),
                OracleTerm::String(canon(sa, path_walk(sa, q, 1, q.len() - 1))),
            ];
            return Some(OracleSequence { tau, middle });
        }
    }
    let walk = &w.walk;
    let (rb, lb) = side_arrows(sa, walk);
    let trivial = walk.is_empty();
    let right_add = cohook(sa, walk, rb).is_some();
    let left_add = if trivial {
        lb.is_some()
    } else {
        left_cohook(sa, walk, None).is_some()
    };

    let mut x = walk.clone();
    if right_add {
        x = cohook(sa, &x, rb)?;
    }
    if left_add {
        x = left_cohook(sa, &x, if x.is_empty() { lb } else { None })?;
    }
    if !right_add {
        x = delete_hook(&x)?;
    }
    if !left_add {
        x = left_delete(sa, &x)?;
    }
    let tau = canon(sa, x);

    let mut middle = Vec::new();
    let right_alone = if right_add {
        cohook(sa, walk, rb)
    } else {
        delete_hook(walk)
    };
    let left_alone = if left_add {
        left_cohook(sa, walk, if trivial { lb } else { None })
    } else {
        left_delete(sa, walk)
    };
    for t in [right_alone, left_alone].into_iter().flatten() {
        middle.push(OracleTerm::String(canon(sa, t)));
    }
    Some(OracleSequence { tau, middle })
}

/// `τ M(w)` as a string, `None` when `M(w)` is projective.
pub fn ar_translate(p: &Presentation, w: &StringWord) -> Result<Option<StringWord>> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Err(Error::BandExists(b.display(sa.quiver())));
    }
    if !sa.is_string(&w.walk) {
        return Err(Error::NotAString(w.display(sa.quiver())));
    }
    Ok(oracle_sequence(&sa, w).map(|s| s.tau))
}

/// Indecomposable summands of the radical of the projective at `v`.
pub fn radical_summands(sa: &StringAlgebra, v: usize) -> Vec<OracleTerm> {
    if let Some(pair) = sa.pairs().iter().find(|pr| pr.p.start == v) {
        let pp = path_walk(sa, &pair.p, 1, pair.p.len());
        let qq = path_walk(sa, &pair.q, 1, pair.q.len());
        return vec![OracleTerm::String(canon(sa, pp.concat(&invert(sa, &qq))))];
    }
    let q = sa.quiver();
    q.out_arrows(v)
        .iter()
        .map(|&a| {
            let path = crate::nakayama::maximal_path(sa, a);
            let p = Path { start: v, arrows: path };
            OracleTerm::String(canon(sa, path_walk(sa, &p, 1, p.len())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(p: &Presentation, w: &str) -> Option<String> {
        ar_translate(p, &StringWord::parse(p.quiver(), w).unwrap())
            .unwrap()
            .map(|t| t.display(p.quiver()))
    }

    #[test]
    fn classical_translates() {
        let a2 = Presentation::from_spec(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert_eq!(tau(&a2, "e(1,+1)").as_deref(), Some("e(2,+1)"));
        assert_eq!(tau(&a2, "a"), None);
        let a3 = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
        assert_eq!(tau(&a3, "a").as_deref(), Some("b"));
        let d = Presentation::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[]).unwrap();
        assert_eq!(tau(&d, "a b^-1").as_deref(), Some("e(2,+1)"));
        let s = Presentation::from_spec(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")], &[]).unwrap();
        assert_eq!(tau(&s, "a").as_deref(), Some("e(3,+1)"));
        assert_eq!(tau(&s, "e(2,+1)").as_deref(), Some("a^-1 b"));
    }

    #[test]
    fn pi_top_sequence() {
        let pent = Presentation::from_spec(
            &["1", "2", "3", "4", "5"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "5"), ("d", "1", "4"), ("e", "4", "5")],
            &["a*b*c - d*e"],
        )
        .unwrap();
        let sa = StringAlgebra::special_biserial(&pent).unwrap();
        let w = StringWord::parse(pent.quiver(), "b^-1 a^-1 d").unwrap();
        let s = oracle_sequence(&sa, &w).unwrap();
        assert_eq!(s.tau.display(pent.quiver()), "b c e^-1");
        assert_eq!(s.middle.len(), 3);
    }
}
