//! Preset algebras and a seeded generator of special biserial presentations.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Path, Presentation, Quiver, Relation};

const MAX_ATTEMPTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relation_length: usize,
    pub allow_binomials: bool,
}

impl CorpusSpec {
    /// Bounds are `(max_vertices, max_arrows, max_relation_length)`.
    pub fn new(seed: u64, bounds: (usize, usize, usize)) -> Self {
        CorpusSpec {
            seed,
            max_vertices: bounds.0,
            max_arrows: bounds.1,
            max_relation_length: bounds.2,
            allow_binomials: true,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_relation_length < 2 {
            return Err(Error::InvalidParameters(format!(
                "need max_vertices >= 1 and max_relation_length >= 2, got {:?}",
                (self.max_vertices, self.max_arrows, self.max_relation_length)
            )));
        }
        Ok(())
    }
}

fn arrow_name(k: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if k < LETTERS.len() {
        (LETTERS[k] as char).to_string()
    } else {
        format!("x{k}")
    }
}

fn build(vertices: &[String], arrows: &[(String, String, String)], relations: &[&str]) -> Result<Presentation> {
    let q = Quiver::new(vertices, arrows)?;
    let rels = relations
        .iter()
        .map(|r| crate::presentation::parse_relation_text(&q, r))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(q, rels, 2)
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn a_n_linear(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::InvalidParameters("A_n needs n >= 1".into()));
    }
    let vs = numbered(n);
    let arrows: Vec<_> = (1..n).map(|i| (arrow_name(i - 1), vs[i - 1].clone(), vs[i].clone())).collect();
    build(&vs, &arrows, &[])
}

/// `1 <- 2 -> 3 -> ... -> n`.
fn a_n_source_at_2(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidParameters("source at 2 needs n >= 2".into()));
    }
    let vs = numbered(n);
    let mut arrows = vec![(arrow_name(0), vs[1].clone(), vs[0].clone())];
    for i in 2..n {
        arrows.push((arrow_name(i - 1), vs[i - 1].clone(), vs[i].clone()));
    }
    build(&vs, &arrows, &[])
}

fn fixed(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&str]) -> Result<Presentation> {
    let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let ar: Vec<_> = arrows
        .iter()
        .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
        .collect();
    build(&vs, &ar, relations)
}

/// Self-injective right 4-Nakayama candidates: a cycle of `s` segments, each an
/// α-path of length `m` and a β-path of length `n` from `x_i` to `x_{i+1}`.
///
/// Vertices are `(segment, side, position)` flattened row-major to `1, 2, ...`:
/// segment `i` lists `x_i`, then the `m - 1` inner α vertices, then the `n - 1`
/// inner β vertices. Arrows are `a{i}_{k}` and `b{i}_{k}`.
pub fn self_injective_preset(s: usize, m: usize, n: usize) -> Result<Presentation> {
    if s < 1 || m < 2 || n < 2 {
        return Err(Error::InvalidParameters(format!("need s >= 1, m >= 2, n >= 2; got ({s},{m},{n})")));
    }
    let block = m + n - 1;
    let x = |i: usize| (i % s) * block + 1;
    let alpha_v = |i: usize, k: usize| if k == 0 { x(i) } else if k == m { x(i + 1) } else { x(i) + k };
    let beta_v = |i: usize, k: usize| if k == 0 { x(i) } else if k == n { x(i + 1) } else { x(i) + m - 1 + k };
    let vs = numbered(s * block);
    let mut arrows = Vec::new();
    for i in 0..s {
        for k in 1..=m {
            arrows.push((format!("a{i}_{k}"), alpha_v(i, k - 1).to_string(), alpha_v(i, k).to_string()));
        }
        for k in 1..=n {
            arrows.push((format!("b{i}_{k}"), beta_v(i, k - 1).to_string(), beta_v(i, k).to_string()));
        }
    }
    let chain = |side: char, i: usize, from: usize, len: usize, period: usize| -> String {
        (0..len)
            .map(|j| {
                let k = from + j;
                format!("{side}{}_{}", (i + (k - 1) / period) % s, (k - 1) % period + 1)
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    let mut rels = Vec::new();
    for i in 0..s {
        rels.push(format!("{} - {}", chain('a', i, 1, m, m), chain('b', i, 1, n, n)));
        rels.push(format!("b{i}_{n}*a{}_1", (i + 1) % s));
        rels.push(format!("a{i}_{m}*b{}_1", (i + 1) % s));
    }
    // α-paths of length m+1 starting at a{i}_1 already vanish by the first two families
    for i in 0..s {
        for k in 2..=m {
            rels.push(chain('a', i, k, m + 1, m));
        }
        for k in 2..=n {
            rels.push(chain('b', i, k, n + 1, n));
        }
    }
    let refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    build(&vs, &arrows, &refs)
}

fn parse_ints(s: &str) -> Option<Vec<usize>> {
    s.split([',', '_'])
        .map(|x| x.trim().parse().ok())
        .collect()
}

/// Named example algebras.
pub fn preset(name: &str) -> Result<Presentation> {
    let unknown = || Error::UnknownPreset(name.to_string());
    match name {
        "kronecker" => return fixed(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]),
        "loop_sq_zero" => return fixed(&["1"], &[("a", "1", "1")], &["a*a"]),
        "commutative_square" => {
            return fixed(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
                &["a*b - c*d"],
            )
        }
        "pentagon" => {
            return fixed(
                &["1", "2", "3", "4", "5"],
                &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "5"), ("d", "1", "4"), ("e", "4", "5")],
                &["a*b*c - d*e"],
            )
        }
        "d_sink" => return fixed(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[]),
        "zigzag_4" => {
            return fixed(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "3", "2"), ("c", "3", "4")],
                &[],
            )
        }
        _ => {}
    }
    if let Some(args) = name
        .strip_prefix("self_injective(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| name.strip_prefix("self_injective_"))
    {
        return match parse_ints(args).as_deref() {
            Some(&[s, m, n]) => self_injective_preset(s, m, n),
            _ => Err(unknown()),
        };
    }
    let rest = name.strip_prefix("a_").ok_or_else(unknown)?;
    let (num, kind) = rest.split_once('_').unwrap_or((rest, "linear"));
    let n: usize = num.parse().map_err(|_| unknown())?;
    match kind {
        "linear" => a_n_linear(n),
        "source_at_2" => a_n_source_at_2(n),
        _ => Err(unknown()),
    }
}

/// The named presets exercised by tests and corpus commands.
pub fn preset_names() -> Vec<String> {
    let mut out: Vec<String> = (2..=6).map(|n| format!("a_{n}_linear")).collect();
    out.extend(["a_5_source_at_2", "a_6_source_at_2"].map(String::from));
    out.extend(
        ["kronecker", "loop_sq_zero", "commutative_square", "pentagon", "d_sink", "zigzag_4"].map(String::from),
    );
    out.extend(["self_injective(1,2,2)", "self_injective(1,2,3)", "self_injective(2,3,2)"].map(String::from));
    out
}

/// A path is zero in the monomial ideal when it contains a relation.
fn contains_monomial(path: &[usize], zeros: &[Vec<usize>]) -> bool {
    zeros
        .iter()
        .any(|z| z.len() <= path.len() && path.windows(z.len()).any(|w| w == z.as_slice()))
}

/// Nonzero paths of length exactly `len`, in deterministic order.
fn nonzero_paths(arrows: &[(usize, usize)], zeros: &[Vec<usize>], len: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut layer: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for p in &layer {
            let end = arrows[*p.last().expect("nonempty")].1;
            for (b, &(s, _)) in arrows.iter().enumerate() {
                if s == end {
                    let mut e = p.clone();
                    e.push(b);
                    if !contains_monomial(&e, zeros) {
                        next.push(e);
                    }
                }
            }
            if next.len() > limit {
                break;
            }
        }
        layer = next;
    }
    layer.retain(|p| !contains_monomial(p, zeros));
    layer
}

fn generate_once(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> Option<Presentation> {
    let nv = rng.gen_range(1..=spec.max_vertices.min(spec.max_arrows + 1));
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let mut outd = vec![0usize; nv];
    let mut ind = vec![0usize; nv];
    let mut add = |s: usize, t: usize, arrows: &mut Vec<(usize, usize)>| {
        if outd[s] < 2 && ind[t] < 2 {
            outd[s] += 1;
            ind[t] += 1;
            arrows.push((s, t));
            true
        } else {
            false
        }
    };
    for k in 1..nv {
        let attached = (0..20).any(|_| {
            let j = rng.gen_range(0..k);
            if rng.gen_bool(0.5) {
                add(j, k, &mut arrows)
            } else {
                add(k, j, &mut arrows)
            }
        });
        if !attached {
            return None;
        }
    }
    let target = rng.gen_range(arrows.len()..=spec.max_arrows.max(arrows.len()));
    for _ in 0..50 {
        if arrows.len() >= target {
            break;
        }
        let (s, t) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        if s == t && !rng.gen_bool(0.3) {
            continue;
        }
        add(s, t, &mut arrows);
    }

    // Each arrow keeps at most one nonzero predecessor and one nonzero successor.
    let mut zeros: Vec<Vec<usize>> = Vec::new();
    let na = arrows.len();
    let composable = |a: usize, b: usize| arrows[a].1 == arrows[b].0;
    for b in 0..na {
        let mut preds: Vec<usize> = (0..na).filter(|&a| composable(a, b) && !zeros.contains(&vec![a, b])).collect();
        while preds.len() > 1 {
            let i = rng.gen_range(0..preds.len());
            zeros.push(vec![preds.remove(i), b]);
        }
    }
    for a in 0..na {
        let mut succs: Vec<usize> = (0..na).filter(|&b| composable(a, b) && !zeros.contains(&vec![a, b])).collect();
        while succs.len() > 1 {
            let i = rng.gen_range(0..succs.len());
            zeros.push(vec![a, succs.remove(i)]);
        }
    }
    for a in 0..na {
        for b in 0..na {
            if composable(a, b) && !zeros.contains(&vec![a, b]) && rng.gen_bool(0.15) {
                zeros.push(vec![a, b]);
            }
        }
    }
    // Bound the nilpotency index by cutting every long path.
    let l = spec.max_relation_length;
    for _ in 0..200 {
        let long = nonzero_paths(&arrows, &zeros, l, 10_000);
        let Some(p) = long.choose(rng) else { break };
        let len = rng.gen_range(2..=l);
        let off = rng.gen_range(0..=l - len);
        zeros.push(p[off..off + len].to_vec());
    }
    if !nonzero_paths(&arrows, &zeros, l, 10_000).is_empty() {
        return None;
    }

    let mut binomials: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    if spec.allow_binomials && rng.gen_bool(0.5) {
        let mut all: Vec<Vec<usize>> = Vec::new();
        for len in 2..l {
            all.extend(nonzero_paths(&arrows, &zeros, len, 10_000));
        }
        let mut options = Vec::new();
        for p in &all {
            for q in &all {
                let (pl, ql) = (*p.last().expect("nonempty"), *q.last().expect("nonempty"));
                if arrows[p[0]].0 == arrows[q[0]].0
                    && p[0] < q[0]
                    && arrows[pl].1 == arrows[ql].1
                    && pl != ql
                    && p.len() + q.len() <= l + 3
                {
                    options.push((p.clone(), q.clone()));
                }
            }
        }
        if let Some(pq) = options.choose(rng) {
            binomials.push(pq.clone());
        }
    }

    let vs = numbered(nv);
    let named: Vec<(String, String, String)> = arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| (arrow_name(k), vs[s].clone(), vs[t].clone()))
        .collect();
    let q = Quiver::new(&vs, &named).ok()?;
    let path = |a: &[usize]| Path {
        start: arrows[a[0]].0,
        arrows: a.to_vec(),
    };
    let mut rels: Vec<Relation> = Vec::new();
    let mut seen = BTreeSet::new();
    for z in &zeros {
        if seen.insert(z.clone()) {
            rels.push(Relation::Monomial(path(z)));
        }
    }
    for (p, r) in &binomials {
        rels.push(Relation::Binomial(path(p), path(r)));
    }
    let pres = Presentation::new(q, rels, 2).ok()?;
    pres.validate_admissible().ok()?;
    if !pres.is_special_biserial().ok()?.special_biserial {
        return None;
    }
    Some(pres)
}

/// A seeded special biserial presentation within the given bounds.
pub fn random_special_biserial(spec: &CorpusSpec) -> Result<Presentation> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(p) = generate_once(&mut rng, spec) {
            return Ok(p);
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}
