mod common;

use std::collections::BTreeMap;

use nakayama::corpus::{preset, preset_names, self_injective_preset};
use nakayama::nakayama::{check_t5, cross_validate, nakayama_index, verify_structure_theorems, NakayamaIndex, WalkReading};
use nakayama::Error;

fn index(name: &str) -> NakayamaIndex {
    nakayama_index(&preset(name).unwrap()).unwrap().index
}

#[test]
fn preset_indices() {
    use NakayamaIndex::*;
    let table = [
        ("a_2", Finite(1)),
        ("a_6_linear", Finite(1)),
        ("a_5_source_at_2", Finite(4)),
        ("a_6_source_at_2", Finite(5)),
        ("kronecker", Infinite),
        ("loop_sq_zero", Finite(1)),
        ("commutative_square", Finite(3)),
        ("pentagon", Finite(4)),
        ("d_sink", Finite(3)),
        ("zigzag_4", Finite(4)),
        ("self_injective(1,2,2)", Finite(3)),
        ("self_injective(1,2,3)", Finite(4)),
        ("self_injective(2,3,2)", Finite(4)),
    ];
    for (name, want) in table {
        assert_eq!(index(name), want, "{name}");
    }
    let v = nakayama_index(&preset("a_5_source_at_2").unwrap()).unwrap();
    assert_eq!(v.witnesses, ["a^-1 b c d"]);
    let v = nakayama_index(&preset("d_sink").unwrap()).unwrap();
    assert_eq!(v.witnesses, ["a b^-1"]);
}

#[test]
fn walk_conditions() {
    let t = check_t5(&preset("a_5_source_at_2").unwrap(), WalkReading::StringsOnly).unwrap();
    assert!(t.i.holds && t.ii.holds && t.iii.holds && t.iv_b.holds && t.verdict);
    let t = check_t5(&preset("a_6_source_at_2").unwrap(), WalkReading::StringsOnly).unwrap();
    assert!(!t.ii.holds && !t.verdict);
    assert_eq!(t.ii.witness.as_deref(), Some("a^-1 b c d e"));
    let t = check_t5(&preset("pentagon").unwrap(), WalkReading::StringsOnly).unwrap();
    assert!(t.iii.holds && t.iv_c.holds && t.verdict);
    let t = check_t5(&preset("commutative_square").unwrap(), WalkReading::StringsOnly).unwrap();
    assert!(!t.iv_a.holds && !t.iv_b.holds && !t.iv_c.holds && !t.verdict);
    assert!(matches!(
        check_t5(&preset("kronecker").unwrap(), WalkReading::StringsOnly),
        Err(Error::BandExists(_))
    ));
}

#[test]
fn self_injective_family() {
    for (s, m, n) in [(1, 2, 2), (1, 2, 3), (1, 3, 2), (2, 2, 3), (2, 3, 2), (1, 4, 2), (1, 3, 3), (2, 2, 2), (3, 2, 3)] {
        let p = self_injective_preset(s, m, n).unwrap();
        let cv = cross_validate(&p).unwrap();
        assert!(cv.agree, "({s},{m},{n})");
        assert_eq!(cv.module_right4, m + n == 5, "({s},{m},{n})");
    }
}

#[test]
fn presets_agree() {
    for name in preset_names() {
        let p = preset(&name).unwrap();
        if !common::rep_finite(&p) {
            continue;
        }
        assert!(cross_validate(&p).unwrap().agree, "{name}");
    }
}

#[test]
fn structure_suite_preconditions() {
    assert!(verify_structure_theorems(&preset("pentagon").unwrap()).unwrap().passed);
    let r = verify_structure_theorems(&preset("a_5_source_at_2").unwrap()).unwrap();
    assert!(r.passed);
    assert_eq!(r.modules, 15);
    assert!(matches!(
        verify_structure_theorems(&preset("commutative_square").unwrap()),
        Err(Error::PreconditionNotRight4(_))
    ));
    assert!(matches!(
        verify_structure_theorems(&preset("kronecker").unwrap()),
        Err(Error::PreconditionNotRight4(_))
    ));
}

#[test]
fn generator_covers_every_index() {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for (seed, p) in common::generated(0..1000, (5, 6, 4)) {
        let v = nakayama_index(&p).unwrap();
        *seen.entry(v.index.to_string()).or_default() += 1;
        if v.index != NakayamaIndex::Infinite {
            assert!(cross_validate(&p).unwrap().agree, "seed {seed}");
        }
    }
    for k in ["1", "2", "3", "4", "infinite"] {
        assert!(seen.get(k).copied().unwrap_or(0) > 0, "no algebra of index {k}: {seen:?}");
    }
}

#[test]
fn reduced_reading_runs() {
    for name in ["a_5_source_at_2", "pentagon", "commutative_square", "zigzag_4"] {
        let p = preset(name).unwrap();
        let strings = check_t5(&p, WalkReading::StringsOnly).unwrap();
        let reduced = check_t5(&p, WalkReading::AllReduced).unwrap();
        assert_eq!(reduced.walk_reading, WalkReading::AllReduced);
        // reduced walks include every string, so they can only find more violations
        assert!(!reduced.verdict || strings.i.holds && strings.ii.holds, "{name}");
    }
}
