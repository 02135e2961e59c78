use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use super::oracle::{oracle_sequence, radical_summands, OracleTerm};
use crate::error::{Error, Result};
use crate::nakayama::indecomposables_in;
use crate::presentation::Presentation;
use crate::stringcomb::StringAlgebra;

/// Irreducible maps between indecomposables, and the translate on non-projectives.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ArQuiver {
    pub nodes: Vec<String>,
    pub projective: BTreeSet<String>,
    pub arrows: BTreeSet<(String, String)>,
    /// `(M, τM)` for every non-projective `M`.
    pub translates: BTreeSet<(String, String)>,
}

pub fn ar_quiver(p: &Presentation) -> Result<ArQuiver> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Err(Error::BandExists(b.display(sa.quiver())));
    }
    let mods = indecomposables_in(&sa)?;
    let q = sa.quiver();
    let mut out = ArQuiver::default();
    for m in &mods {
        out.nodes.push(m.label.clone());
        if m.projective {
            out.projective.insert(m.label.clone());
        }
        let Some(w) = &m.string else { continue };
        if let Some(seq) = oracle_sequence(&sa, w) {
            for x in &seq.middle {
                out.arrows.insert((x.label(&sa), m.label.clone()));
            }
            out.translates.insert((m.label.clone(), seq.tau.display(q)));
        }
    }
    for v in 0..q.vertex_count() {
        let label = match sa.pairs().iter().find(|pr| pr.p.start == v) {
            Some(pr) => OracleTerm::Pi(pr.clone()).label(&sa),
            None => OracleTerm::String(crate::nakayama::projective_string(&sa, v)).label(&sa),
        };
        for x in radical_summands(&sa, v) {
            out.arrows.insert((x.label(&sa), label.clone()));
        }
    }
    out.nodes.sort();
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Graphviz rendering with sorted nodes and edges; translates are dashed.
pub fn export_dot(g: &ArQuiver) -> String {
    let mut s = String::from("digraph ar {\n  rankdir=LR;\n");
    for n in &g.nodes {
        let shape = if g.projective.contains(n) { "box" } else { "ellipse" };
        let _ = writeln!(s, "  {} [shape={shape}];", quote(n));
    }
    for (a, b) in &g.arrows {
        let _ = writeln!(s, "  {} -> {};", quote(a), quote(b));
    }
    for (m, t) in &g.translates {
        let _ = writeln!(s, "  {} -> {} [style=dashed, constraint=false];", quote(m), quote(t));
    }
    s.push_str("}\n");
    s
}
