#![allow(dead_code)]

use nakayama::corpus::{random_special_biserial, CorpusSpec};
use nakayama::presentation::Path;
use nakayama::stringcomb::{has_band, Letter, Walk};
use nakayama::Presentation;

pub const BOUNDS: (usize, usize, usize) = (6, 8, 4);

/// Generated presentations for the given seeds; seeds where generation fails are skipped.
pub fn generated(seeds: std::ops::Range<u64>, bounds: (usize, usize, usize)) -> Vec<(u64, Presentation)> {
    seeds
        .filter_map(|s| random_special_biserial(&CorpusSpec::new(s, bounds)).ok().map(|p| (s, p)))
        .collect()
}

pub fn rep_finite(p: &Presentation) -> bool {
    matches!(has_band(p), Ok(None))
}

/// Walk vertices visited, in order.
pub fn visits(p: &Presentation, w: &Walk) -> Vec<usize> {
    let q = p.quiver();
    let mut v = vec![w.start];
    for l in &w.letters {
        let a = q.arrow(l.arrow);
        v.push(if l.inverse { a.source } else { a.target });
    }
    v
}

fn run_is_nonzero(red: &Presentation, run: &[Letter]) -> bool {
    let q = red.quiver();
    let mut arrows: Vec<usize> = run.iter().map(|l| l.arrow).collect();
    if run[0].inverse {
        arrows.reverse();
    }
    let start = q.arrow(arrows[0]).source;
    !red.path_is_zero(&Path { start, arrows }).unwrap()
}

/// Reduced, and every maximal run of one direction is a nonzero path once the
/// binomial relations are replaced by their two monomials.
pub fn brute_is_string(red: &Presentation, w: &Walk) -> bool {
    if w.letters.windows(2).any(|x| x[1] == x[0].flip()) {
        return false;
    }
    let mut i = 0;
    while i < w.letters.len() {
        let mut j = i + 1;
        while j < w.letters.len() && w.letters[j].inverse == w.letters[i].inverse {
            j += 1;
        }
        if !run_is_nonzero(red, &w.letters[i..j]) {
            return false;
        }
        i = j;
    }
    true
}

/// All nonzero-length strings by depth-first extension, or `None` past `max_len`.
pub fn brute_strings(p: &Presentation, max_len: usize) -> Option<Vec<Walk>> {
    let (red, _) = p.string_algebra_reduction().unwrap();
    let q = red.quiver();
    let mut out = Vec::new();
    let mut stack: Vec<Walk> = (0..q.vertex_count()).map(Walk::trivial).collect();
    while let Some(w) = stack.pop() {
        let end = *visits(&red, &w).last().unwrap();
        let mut next: Vec<Letter> = q.out_arrows(end).iter().map(|&a| Letter::direct(a)).collect();
        next.extend(q.in_arrows(end).iter().map(|&a| Letter::inv(a)));
        next.dedup();
        for l in next {
            let mut nw = w.clone();
            nw.letters.push(l);
            if brute_is_string(&red, &nw) {
                if nw.letters.len() > max_len {
                    return None;
                }
                out.push(nw.clone());
                stack.push(nw);
            }
        }
    }
    Some(out)
}

/// Number of string classes up to inversion, trivial strings included.
pub fn brute_string_count(p: &Presentation, max_len: usize) -> Option<usize> {
    brute_strings(p, max_len).map(|s| s.len() / 2 + p.quiver().vertex_count())
}
