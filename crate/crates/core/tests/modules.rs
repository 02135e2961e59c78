mod common;

use nakayama::corpus::{preset, preset_names};
use nakayama::nakayama::{completeness_check, indecomposables, lattice_is_chain, nakayama_index};
use nakayama::presentation::{Path, Relation};
use nakayama::repmod::{
    are_isomorphic, factor_serial_degree, injective, is_indecomposable, is_indecomposable_capped, is_uniserial, projective, string_module,
};
use nakayama::{Presentation, StringWord};
use proptest::prelude::*;

/// All nonzero paths, listed by brute-force extension.
fn nonzero_paths(p: &Presentation) -> Vec<Path> {
    let q = p.quiver();
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in &frontier {
            for &a in q.out_arrows(path.end(q)) {
                let ext = path.then(a);
                if !p.path_is_zero(&ext).unwrap() {
                    next.push(ext);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `dim e_v Λ e_w` by counting paths and merging each binomial pair.
fn projective_dims_oracle(p: &Presentation, v: usize) -> Vec<usize> {
    let q = p.quiver();
    let mut dims = vec![0; q.vertex_count()];
    for path in nonzero_paths(p).iter().filter(|x| x.start == v) {
        dims[path.end(q)] += 1;
    }
    for r in p.relations() {
        if let Relation::Binomial(a, _) = r {
            if a.start == v {
                dims[a.end(q)] -= 1;
            }
        }
    }
    dims
}

fn injective_dims_oracle(p: &Presentation, v: usize) -> Vec<usize> {
    let q = p.quiver();
    let mut dims = vec![0; q.vertex_count()];
    for path in nonzero_paths(p).iter().filter(|x| x.end(q) == v) {
        dims[path.start] += 1;
    }
    for r in p.relations() {
        if let Relation::Binomial(a, _) = r {
            if a.end(q) == v {
                dims[a.start] -= 1;
            }
        }
    }
    dims
}

#[test]
fn projective_and_injective_dimensions() {
    let mut all: Vec<(String, Presentation)> = preset_names().into_iter().map(|n| (n.clone(), preset(&n).unwrap())).collect();
    all.extend(common::generated(0..150, common::BOUNDS).into_iter().map(|(s, p)| (format!("seed {s}"), p)));
    for (name, p) in all {
        for v in 0..p.quiver().vertex_count() {
            assert_eq!(projective(&p, v).unwrap().dims(), &projective_dims_oracle(&p, v)[..], "{name} P({v})");
            assert_eq!(injective(&p, v).unwrap().dims(), &injective_dims_oracle(&p, v)[..], "{name} I({v})");
        }
    }
}

#[test]
fn commutative_square_projective() {
    let p = preset("commutative_square").unwrap();
    let p1 = projective(&p, p.quiver().vertex_id("1").unwrap()).unwrap();
    assert_eq!(p1.dims(), &[1, 1, 1, 1]);
    assert!(!is_uniserial(&p1));
    assert!(is_indecomposable(&p1).unwrap());
}

#[test]
fn quotient_of_a3_projective() {
    let p = preset("a_3_linear").unwrap();
    let p1 = projective(&p, 0).unwrap();
    let q = p1.quotient_rep(&p1.radical_power(2)).unwrap();
    assert_eq!(q.dims(), &[1, 1, 0]);
    assert!(is_uniserial(&q));
    assert_eq!(p1.sub(&p1.radical()).unwrap().0.dims(), &[0, 1, 1]);
    assert_eq!(p1.radical_power(3).total(), 0);
}

#[test]
fn non_isomorphic_with_equal_dimensions() {
    let p = preset("a_3_linear").unwrap();
    let q = p.quiver();
    let ab = string_module(&p, &StringWord::parse(q, "a b").unwrap()).unwrap();
    let a = string_module(&p, &StringWord::parse(q, "a").unwrap()).unwrap();
    let s3 = string_module(&p, &StringWord::parse(q, "e(3)").unwrap()).unwrap();
    let sum = a.direct_sum(&s3);
    assert_eq!(ab.dims(), sum.dims());
    assert!(!are_isomorphic(&ab, &sum).unwrap());
    assert!(!is_indecomposable(&sum).unwrap());
}

#[test]
fn factor_serial_degrees() {
    let sink = preset("d_sink").unwrap();
    let m = string_module(&sink, &StringWord::parse(sink.quiver(), "a b^-1").unwrap()).unwrap();
    let r = factor_serial_degree(&m).unwrap();
    assert_eq!((r.degree, r.length, r.is_local), (3, 3, false));
    let src = preset("a_5_source_at_2").unwrap();
    let m = string_module(&src, &StringWord::parse(src.quiver(), "a^-1 b c d").unwrap()).unwrap();
    let r = factor_serial_degree(&m).unwrap();
    assert_eq!((r.degree, r.length, r.is_local), (4, 5, true));
}

#[test]
fn catalogue_is_complete_on_presets() {
    for name in preset_names() {
        let p = preset(&name).unwrap();
        if !common::rep_finite(&p) {
            continue;
        }
        assert!(completeness_check(&p).unwrap().is_empty(), "{name}");
        for m in indecomposables(&p).unwrap() {
            assert!(is_indecomposable_capped(&m.rep, usize::MAX).unwrap(), "{name}: {}", m.label);
        }
    }
}

#[test]
fn index_does_not_depend_on_the_field() {
    for name in preset_names() {
        let p = preset(&name).unwrap();
        if !common::rep_finite(&p) {
            continue;
        }
        let base = nakayama_index(&p).unwrap().index;
        for ch in [3, 5, 7] {
            let pc = p.with_characteristic(ch).unwrap();
            assert_eq!(nakayama_index(&pc).unwrap().index, base, "{name} over F_{ch}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn uniserial_iff_chain(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        prop_assume!(common::rep_finite(&p));
        for m in indecomposables(&p).unwrap() {
            if m.rep.length() > 8 {
                continue;
            }
            prop_assert_eq!(is_uniserial(&m.rep), lattice_is_chain(&m.rep, 8).unwrap(), "{}", m.label);
        }
    }

    #[test]
    fn indecomposables_are_local_endomorphism_rings(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        prop_assume!(common::rep_finite(&p));
        let mods = indecomposables(&p).unwrap();
        for m in &mods {
            prop_assert!(is_indecomposable_capped(&m.rep, usize::MAX).unwrap(), "{}", m.label);
        }
        prop_assert!(completeness_check(&p).unwrap().is_empty());
    }
}
