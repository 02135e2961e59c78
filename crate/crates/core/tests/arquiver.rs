mod common;

use std::collections::BTreeSet;

use nakayama::arquiver::{
    almost_split_sequence, almost_split_verify, ar_quiver, ar_translate, export_dot, oracle_sequence, ARSequence,
    OracleTerm, T4Context,
};
use nakayama::corpus::preset;
use nakayama::linalg::Matrix;
use nakayama::nakayama::indecomposables;
use nakayama::repmod::{are_isomorphic, are_isomorphic_capped, hom, injective, string_module, Morphism, Rep, Subspace};
use nakayama::stringcomb::StringAlgebra;
use nakayama::{Presentation, StringWord};
use proptest::prelude::*;

fn module(p: &Presentation, text: &str) -> Rep {
    string_module(p, &StringWord::parse(p.quiver(), text).unwrap()).unwrap()
}

fn dims_of(p: &Presentation, w: &StringWord) -> Vec<usize> {
    let mut d = vec![0; p.quiver().vertex_count()];
    for v in common::visits(p, &w.walk) {
        d[v] += 1;
    }
    d
}

fn term_dims(p: &Presentation, sa: &StringAlgebra, t: &OracleTerm) -> Vec<usize> {
    match t {
        OracleTerm::String(w) => dims_of(p, w),
        OracleTerm::Pi(_) => t.rep(sa).unwrap().dims().to_vec(),
    }
}

#[test]
fn a2_simple_top() {
    let p = preset("a_2").unwrap();
    let s1 = module(&p, "e(1)");
    let seq = almost_split_sequence(&p, &s1).unwrap();
    assert_eq!(seq.left.dims(), &[0, 1]);
    assert_eq!(seq.middle.len(), 1);
    assert_eq!(seq.middle[0].dims(), &[1, 1]);
    assert!(almost_split_verify(&p, &seq).unwrap().passed());
    let w = StringWord::parse(p.quiver(), "e(1)").unwrap();
    assert_eq!(ar_translate(&p, &w).unwrap().unwrap().display(p.quiver()), "e(2,+1)");
    let pa = StringWord::parse(p.quiver(), "a").unwrap();
    assert_eq!(ar_translate(&p, &pa).unwrap(), None);
}

#[test]
fn sink_string() {
    let p = preset("d_sink").unwrap();
    let m = module(&p, "a b^-1");
    let seq = almost_split_sequence(&p, &m).unwrap();
    assert!(are_isomorphic(&seq.left, &module(&p, "e(2)")).unwrap());
    let mids: BTreeSet<Vec<usize>> = seq.middle.iter().map(|x| x.dims().to_vec()).collect();
    assert_eq!(mids, BTreeSet::from([vec![1, 1, 0], vec![0, 1, 1]]));
    let r = almost_split_verify(&p, &seq).unwrap();
    assert!(r.passed() && r.oracle_middle);
}

#[test]
fn right4_presets_through_the_construction() {
    for name in ["a_5_source_at_2", "pentagon", "zigzag_4"] {
        let p = preset(name).unwrap();
        let ctx = T4Context::new(&p).unwrap();
        for m in ctx.indecomposables().iter().filter(|m| !m.projective) {
            let seq = ctx.sequence(&m.rep).unwrap();
            assert_ne!(seq.case_tag, "oracle");
            let r = ctx.verify(&seq);
            assert!(r.passed() && r.oracle_middle, "{name} {}: {:?}", m.label, r.notes);
        }
    }
    assert!(T4Context::new(&preset("commutative_square").unwrap()).is_err());
}

#[test]
fn projective_is_rejected() {
    let p = preset("a_2").unwrap();
    assert!(matches!(
        almost_split_sequence(&p, &module(&p, "a")),
        Err(nakayama::Error::ProjectiveModule(_))
    ));
}

fn zero_map(a: &Rep, b: &Rep) -> Morphism {
    (0..a.dims().len()).map(|v| Matrix::zeros(a.dim(v), b.dim(v), a.p())).collect()
}

fn identity(a: &Rep) -> Morphism {
    (0..a.dims().len()).map(|v| Matrix::identity(a.dim(v), a.p())).collect()
}

#[test]
fn split_sequence_is_rejected() {
    let p = preset("a_3_linear").unwrap();
    let s1 = module(&p, "e(1)");
    let s2 = module(&p, "e(2)");
    let seq = ARSequence {
        left: s2.clone(),
        middle: vec![s2.clone(), s1.clone()],
        right: s1.clone(),
        f: vec![identity(&s2), zero_map(&s2, &s1)],
        g: vec![zero_map(&s2, &s1), identity(&s1)],
        case_tag: "control".into(),
        ambient: "none".into(),
    };
    let r = almost_split_verify(&p, &seq).unwrap();
    assert!(r.exact);
    assert!(!r.non_split);
    assert!(!r.passed());
}

#[test]
fn wrong_left_term_is_rejected() {
    // the projective cover 0 -> M(b) -> P(1) -> S(1) -> 0 is exact and non-split
    let p = preset("a_3_linear").unwrap();
    let s1 = module(&p, "e(1)");
    let p1 = module(&p, "a b");
    let g = hom(&p1, &s1).pop().unwrap();
    let ker = Subspace::from_parts(g.iter().map(Matrix::left_kernel).collect());
    let (k, incl) = p1.sub(&ker).unwrap();
    assert!(are_isomorphic(&k, &module(&p, "b")).unwrap());
    let seq = ARSequence {
        left: k,
        middle: vec![p1],
        right: s1,
        f: vec![incl],
        g: vec![g],
        case_tag: "control".into(),
        ambient: "none".into(),
    };
    let r = almost_split_verify(&p, &seq).unwrap();
    assert!(r.exact && r.non_split);
    assert!(!r.tau_matches);
    assert!(!r.passed());
}

#[test]
fn broken_map_is_rejected() {
    let p = preset("a_5_source_at_2").unwrap();
    let m = module(&p, "a^-1 b c");
    let mut seq = almost_split_sequence(&p, &m).unwrap();
    assert!(almost_split_verify(&p, &seq).unwrap().passed());
    let last = seq.g.len() - 1;
    seq.g[last] = zero_map(&seq.middle[last], &seq.right);
    assert!(!almost_split_verify(&p, &seq).unwrap().exact);
}

#[test]
fn ar_quiver_shapes() {
    let g = ar_quiver(&preset("a_2").unwrap()).unwrap();
    assert_eq!(g.nodes.len(), 3);
    assert_eq!(g.arrows.len(), 2);
    let a3 = preset("a_3_linear").unwrap();
    let dot = export_dot(&ar_quiver(&a3).unwrap());
    assert_eq!(dot.matches("shape=").count(), 6);
    assert_eq!(dot, export_dot(&ar_quiver(&a3).unwrap()));
    assert!(ar_quiver(&preset("kronecker").unwrap()).is_err());
}

fn check_translate_bijection(p: &Presentation) -> Result<(), TestCaseError> {
    let q = p.quiver();
    let mods = indecomposables(p).unwrap();
    let injectives: Vec<Rep> = (0..q.vertex_count()).map(|v| injective(p, v).unwrap()).collect();
    let is_inj = |r: &Rep| injectives.iter().any(|i| i.dims() == r.dims() && are_isomorphic_capped(i, r, usize::MAX).unwrap());
    let mut images = BTreeSet::new();
    let mut non_projective = 0;
    for m in &mods {
        let Some(w) = &m.string else { continue };
        let Some(t) = ar_translate(p, w).unwrap() else {
            prop_assert!(m.projective, "{} has no translate", m.label);
            continue;
        };
        prop_assert!(!m.projective);
        non_projective += 1;
        let tr = string_module(p, &t).unwrap();
        prop_assert!(!is_inj(&tr), "translate of {} is injective", m.label);
        prop_assert!(images.insert(t.display(q)), "translate {} repeats", t.display(q));
    }
    let non_injective = mods.iter().filter(|m| !is_inj(&m.rep)).count();
    prop_assert_eq!(non_projective, non_injective);
    prop_assert_eq!(images.len(), non_injective);
    Ok(())
}

fn check_middle_terms(p: &Presentation) -> Result<(), TestCaseError> {
    let sa = StringAlgebra::special_biserial(p).unwrap();
    for w in sa.enumerate().unwrap() {
        let Some(o) = oracle_sequence(&sa, &w) else { continue };
        let has_pi = o.middle.iter().any(|t| matches!(t, OracleTerm::Pi(_)));
        prop_assert!(!o.middle.is_empty());
        let bound = if has_pi { 3 } else { 2 };
        prop_assert!(o.middle.len() <= bound);
        let mut lhs = dims_of(p, &o.tau);
        for (x, y) in lhs.iter_mut().zip(dims_of(p, &w)) {
            *x += y;
        }
        let mut rhs = vec![0; lhs.len()];
        for t in &o.middle {
            for (x, y) in rhs.iter_mut().zip(term_dims(p, &sa, t)) {
                *x += y;
            }
        }
        prop_assert_eq!(lhs, rhs);
    }
    Ok(())
}

#[test]
fn pi_top_sequences_have_three_terms() {
    for name in ["pentagon", "commutative_square", "self_injective(1,2,3)", "self_injective(2,3,2)"] {
        let p = preset(name).unwrap();
        let q = p.quiver();
        let sa = StringAlgebra::special_biserial(&p).unwrap();
        for pair in sa.pairs() {
            // P/soc P for P = PI(p, q) is the string  p'^-1 q'  with the last arrows dropped
            let pb = pair.p.drop_back(1);
            let qb = pair.q.drop_back(1);
            let mut letters: Vec<nakayama::Letter> = pb.arrows.iter().rev().map(|&a| nakayama::Letter::inv(a)).collect();
            letters.extend(qb.arrows.iter().map(|&a| nakayama::Letter::direct(a)));
            let start = pb.end(q);
            let w = nakayama::stringcomb::rho_canonical(q, &StringWord::new(nakayama::Walk { start, letters }));
            let o = oracle_sequence(&sa, &w).unwrap();
            assert_eq!(o.middle.len(), 3, "{name} {}", w.display(q));
            assert!(o.middle.iter().any(|t| matches!(t, OracleTerm::Pi(_))));
            let seq = almost_split_sequence(&p, &string_module(&p, &w).unwrap()).unwrap();
            assert_eq!(seq.middle.len(), 3);
            let r = almost_split_verify(&p, &seq).unwrap();
            assert!(r.passed() && r.oracle_middle, "{name} {}", w.display(q));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn translate_is_a_bijection(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        prop_assume!(common::rep_finite(&p));
        check_translate_bijection(&p)?;
    }

    #[test]
    fn middle_terms_are_few_and_add_up(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        prop_assume!(common::rep_finite(&p));
        check_middle_terms(&p)?;
    }
}

#[test]
fn presets_translate_and_middle_terms() {
    for name in nakayama::corpus::preset_names() {
        let p = preset(&name).unwrap();
        if common::rep_finite(&p) {
            check_translate_bijection(&p).unwrap();
            check_middle_terms(&p).unwrap();
        }
    }
}
