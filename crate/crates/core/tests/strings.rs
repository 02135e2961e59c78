mod common;

use nakayama::corpus::{preset, preset_names};
use nakayama::repmod::string_module;
use nakayama::stringcomb::{enumerate_strings, has_band, is_string, rho_canonical, sigma_canonical};
use nakayama::{StringWord, Walk};
use proptest::prelude::*;

const MAX_LEN: usize = 40;

#[test]
fn linear_counts() {
    for n in 2..=6 {
        let p = preset(&format!("a_{n}_linear")).unwrap();
        assert_eq!(enumerate_strings(&p).unwrap().len(), n * (n + 1) / 2, "A_{n}");
    }
    let a2: Vec<String> = enumerate_strings(&preset("a_2").unwrap())
        .unwrap()
        .iter()
        .map(|w| w.display(preset("a_2").unwrap().quiver()))
        .collect();
    assert_eq!(a2, ["e(1,+1)", "e(2,+1)", "a"]);
}

#[test]
fn brute_force_counts_on_presets() {
    for name in preset_names() {
        let p = preset(&name).unwrap();
        if !common::rep_finite(&p) {
            assert_eq!(common::brute_string_count(&p, MAX_LEN), None, "{name}");
            continue;
        }
        let want = common::brute_string_count(&p, MAX_LEN).unwrap();
        assert_eq!(enumerate_strings(&p).unwrap().len(), want, "{name}");
    }
}

#[test]
fn brute_force_counts_on_generated() {
    let mut finite = 0;
    for (seed, p) in common::generated(0..300, common::BOUNDS) {
        if !common::rep_finite(&p) {
            continue;
        }
        finite += 1;
        let want = common::brute_string_count(&p, MAX_LEN).expect("no band, so strings are short");
        assert_eq!(enumerate_strings(&p).unwrap().len(), want, "seed {seed}");
    }
    assert!(finite > 50);
}

#[test]
fn string_membership_matches_brute_force() {
    for (seed, p) in common::generated(0..60, common::BOUNDS) {
        if !common::rep_finite(&p) {
            continue;
        }
        let (red, _) = p.string_algebra_reduction().unwrap();
        let q = p.quiver();
        // every walk of length <= 3
        let mut walks: Vec<Walk> = (0..q.vertex_count()).map(Walk::trivial).collect();
        for _ in 0..3 {
            let mut next = Vec::new();
            for w in &walks {
                let end = *common::visits(&p, w).last().unwrap();
                let mut ls: Vec<_> = q.out_arrows(end).iter().map(|&a| nakayama::Letter::direct(a)).collect();
                ls.extend(q.in_arrows(end).iter().map(|&a| nakayama::Letter::inv(a)));
                for l in ls {
                    let mut nw = w.clone();
                    nw.letters.push(l);
                    next.push(nw);
                }
            }
            for w in &next {
                assert_eq!(is_string(&p, w).unwrap(), common::brute_is_string(&red, w), "seed {seed}: {}", w.display(q));
            }
            walks = next;
        }
    }
}

#[test]
fn string_module_dimensions() {
    for (seed, p) in common::generated(0..200, common::BOUNDS) {
        if !common::rep_finite(&p) {
            continue;
        }
        for w in enumerate_strings(&p).unwrap() {
            let m = string_module(&p, &w).unwrap();
            let mut dims = vec![0; p.quiver().vertex_count()];
            for v in common::visits(&p, &w.walk) {
                dims[v] += 1;
            }
            assert_eq!(m.dims(), &dims[..], "seed {seed}");
        }
    }
}

#[test]
fn bands() {
    let k = preset("kronecker").unwrap();
    assert_eq!(has_band(&k).unwrap().unwrap().display(k.quiver()), "a b^-1");
    assert!(has_band(&preset("loop_sq_zero").unwrap()).unwrap().is_none());
    for n in 2..=6 {
        assert!(has_band(&preset(&format!("a_{n}")).unwrap()).unwrap().is_none());
    }
}

#[test]
fn canonical_representatives() {
    let p = preset("a_5_source_at_2").unwrap();
    let q = p.quiver();
    let w = StringWord::parse(q, "d^-1 c^-1 b^-1 a").unwrap();
    assert_eq!(rho_canonical(q, &w).display(q), "a^-1 b c d");
    let k = preset("kronecker").unwrap();
    let kq = k.quiver();
    for text in ["a b^-1", "b^-1 a", "a^-1 b", "b a^-1"] {
        let b = StringWord::parse(kq, text).unwrap();
        assert_eq!(sigma_canonical(kq, &b).display(kq), "a b^-1", "{text}");
    }
}

fn inverse(q: &nakayama::Quiver, w: &StringWord) -> StringWord {
    StringWord { walk: w.walk.inverse(q), sign: -w.sign }
}

fn rotate(q: &nakayama::Quiver, w: &StringWord, k: usize) -> StringWord {
    let n = w.walk.letters.len();
    let letters: Vec<_> = (0..n).map(|i| w.walk.letters[(i + k) % n]).collect();
    let start = letters[0].source(q);
    StringWord::new(Walk { start, letters })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rho_is_idempotent_and_inversion_invariant(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        prop_assume!(common::rep_finite(&p));
        let q = p.quiver();
        for w in enumerate_strings(&p).unwrap() {
            let c = rho_canonical(q, &w);
            prop_assert_eq!(&rho_canonical(q, &c), &c);
            if !w.is_trivial() {
                prop_assert_eq!(&rho_canonical(q, &inverse(q, &w)), &c);
            }
        }
    }

    #[test]
    fn sigma_is_idempotent_and_rotation_invariant(seed in 0u64..50_000) {
        let p = nakayama::corpus::random_special_biserial(
            &nakayama::corpus::CorpusSpec::new(seed, common::BOUNDS)).unwrap();
        let Some(b) = has_band(&p).unwrap() else { return Ok(()) };
        let q = p.quiver();
        let c = sigma_canonical(q, &b);
        prop_assert_eq!(&sigma_canonical(q, &c), &c);
        for k in 0..b.len() {
            let r = rotate(q, &b, k);
            prop_assert_eq!(&sigma_canonical(q, &r), &c);
            prop_assert_eq!(&sigma_canonical(q, &inverse(q, &r)), &c);
        }
    }
}
