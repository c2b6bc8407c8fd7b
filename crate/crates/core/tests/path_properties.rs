//! Structural invariants of the enumerated path families.

use std::collections::BTreeMap;

use deltasq::paths::{
    enumerate, family_genpoly, generating_polynomial, pull_zeros, push_zeros, AreaWord,
    DecoratedPath, DecorationKind, Family, FamilySpec,
};
use proptest::prelude::*;

const FAMILIES: [Family; 3] = [Family::Lsq, Family::Ld, Family::LsqPrime];

fn specs(max_size: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for m in 0..size {
            let n = size - m;
            for k in 0..size {
                for family in FAMILIES {
                    out.push(FamilySpec::valley(family, m, n, k));
                    if family != Family::LsqPrime {
                        out.push(FamilySpec::rise(family, m, n, k));
                    }
                }
            }
        }
    }
    out
}

fn all(spec: &FamilySpec) -> Vec<DecoratedPath> {
    enumerate(spec).unwrap().collect()
}

#[test]
fn dinv_is_non_negative() {
    for spec in specs(6) {
        if spec.size() == 6 && spec.family == Family::Lsq && spec.kind == DecorationKind::Rise {
            continue; // covered by the valley sweep and the smaller sizes
        }
        for p in enumerate(&spec).unwrap() {
            assert!(p.dinv() >= 0, "{}", p.to_line());
        }
    }
}

#[test]
fn lsq_prime_with_positive_shift_has_positive_dinv() {
    for spec in specs(6).into_iter().filter(|s| s.family == Family::LsqPrime) {
        for p in enumerate(&spec).unwrap() {
            if p.shift() > 0 {
                assert!(p.dinv() > 0, "{}", p.to_line());
            }
        }
    }
}

#[test]
fn area_equals_maj_of_diagonal_word() {
    for spec in specs(6).into_iter().filter(|s| s.kind == DecorationKind::Valley) {
        for p in enumerate(&spec).unwrap() {
            assert_eq!(p.area(), p.diagonal_word().maj(), "{}", p.to_line());
        }
    }
}

#[test]
fn genpoly_does_not_depend_on_alphabet() {
    for spec in specs(5) {
        let n = spec.n;
        let small = generating_polynomial(enumerate(&spec.clone().with_alphabet(n)).unwrap());
        let big = generating_polynomial(enumerate(&spec.clone().with_alphabet(n + 1)).unwrap());
        assert_eq!(small.unwrap(), big.unwrap(), "{spec:?}");
    }
}

#[test]
fn fast_genpoly_matches_enumeration() {
    for spec in specs(5) {
        let slow = generating_polynomial(enumerate(&spec).unwrap()).unwrap();
        assert_eq!(family_genpoly(&spec).unwrap(), slow, "{spec:?}");
    }
}

#[test]
fn families_nest() {
    for spec in specs(5).into_iter().filter(|s| s.family == Family::Lsq) {
        let lsq = all(&spec);
        let mut sub = spec.clone();
        sub.family = Family::Ld;
        for p in all(&sub) {
            assert!(lsq.binary_search(&p).is_ok(), "{}", p.to_line());
            assert_eq!(p.shift(), 0);
        }
        if spec.kind == DecorationKind::Valley {
            sub.family = Family::LsqPrime;
            let prime = all(&sub);
            for p in &prime {
                assert!(lsq.binary_search(p).is_ok(), "{}", p.to_line());
            }
            // LSQ' is exactly the part of LSQ with a touching label
            let expected: Vec<_> = lsq.iter().filter(|p| p.touching() > 0).cloned().collect();
            assert_eq!(prime, expected);
        }
    }
}

#[test]
fn touching_classes_partition_each_family() {
    for spec in specs(5) {
        if spec.family == Family::LsqPrime && spec.kind == DecorationKind::Rise {
            continue;
        }
        let whole = all(&spec);
        let mut pieces = Vec::new();
        for r in 0..=spec.size() as u32 {
            let part = all(&spec.clone().with_touching(r));
            assert!(part.iter().all(|p| p.touching() == r));
            pieces.extend(part);
        }
        pieces.sort();
        assert_eq!(pieces, whole, "{spec:?}");
    }
}

#[test]
fn streams_are_sorted_without_repeats() {
    for spec in specs(4) {
        let v = all(&spec);
        assert!(v.windows(2).all(|w| w[0] < w[1]), "{spec:?}");
    }
}

#[test]
fn pushing_zeros_keeps_dinv_and_lowers_area() {
    let mut seen = 0;
    for size in 1..=4 {
        for m in 0..size {
            for k in 0..size {
                for p in enumerate(&FamilySpec::valley(Family::Lsq, m, size - m, k)).unwrap() {
                    let inf = pull_zeros(&p).unwrap();
                    assert_eq!(inf.dinv(), p.dinv(), "{}", p.to_line());
                    assert_eq!(inf.area(), p.area() + m, "{}", p.to_line());
                    assert_eq!(push_zeros(&inf).unwrap(), p);
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 1000);
}

#[test]
fn decorated_rows_are_counted_exactly() {
    let by_k = |k| {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for p in all(&FamilySpec::valley(Family::Lsq, 1, 3, k)) {
            *m.entry(p.decorations().len()).or_default() += 1;
        }
        m
    };
    for k in 0..4 {
        let m = by_k(k);
        assert!(m.keys().all(|&d| d == k as usize), "{m:?}");
    }
}

fn path_strategy() -> impl Strategy<Value = (AreaWord, Vec<u32>, u64)> {
    (1usize..=7).prop_flat_map(|n| {
        let words = AreaWord::all(n);
        let count = words.len();
        (0..count, prop::collection::vec(0u32..=4, n), any::<u64>())
            .prop_map(move |(i, labels, mask)| (words[i].clone(), labels, mask))
    })
}

proptest! {
    #[test]
    fn random_paths_satisfy_invariants((aw, labels, mask) in path_strategy()) {
        let Ok(plain) = DecoratedPath::undecorated(aw.clone(), labels.clone()) else {
            return Ok(());
        };
        let dec: Vec<usize> = plain
            .contractible_valleys()
            .into_iter()
            .filter(|v| mask >> v & 1 == 1)
            .collect();
        let p = DecoratedPath::new(aw.clone(), labels.clone(), DecorationKind::Valley, dec).unwrap();
        prop_assert!(p.dinv() >= 0);
        prop_assert_eq!(p.area(), p.diagonal_word().maj());
        prop_assert_eq!(p.to_line().parse::<DecoratedPath>().unwrap(), p.clone());
        prop_assert_eq!(push_zeros(&pull_zeros(&p).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(AreaWord::from_steps(&aw.to_steps()).unwrap(), aw.clone());

        let rises: Vec<usize> = p.area_word().rises().into_iter().filter(|v| mask >> v & 1 == 1).collect();
        let r = DecoratedPath::new(aw, labels, DecorationKind::Rise, rises.clone()).unwrap();
        prop_assert!(r.dinv() >= 0);
        prop_assert!(r.area() <= plain.area());
    }
}
