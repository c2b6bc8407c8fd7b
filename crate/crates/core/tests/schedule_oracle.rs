//! Brute-force oracles for the schedule formula and its consequences.

use std::collections::{BTreeMap, HashMap};

use deltasq::paths::{class_paths, enumerate, family_genpoly, DecoratedPath, Family, FamilySpec};
use deltasq::qt::{q_analogue, QTPoly};
use deltasq::schedule::{
    b_exponent, insertion_generate, run_multiplicities, schedule_product, MarkedWord,
};

type Classes = BTreeMap<(String, u32), (MarkedWord, Vec<DecoratedPath>)>;

/// Valley-decorated square paths of size `m + n`, grouped by (diagonal word, shift).
fn classes(m: u32, n: u32, k: u32) -> Classes {
    let mut out = Classes::new();
    for p in enumerate(&FamilySpec::valley(Family::Lsq, m, n, k)).unwrap() {
        let z = p.diagonal_word();
        out.entry((z.to_string(), p.shift()))
            .or_insert_with(|| (z, Vec::new()))
            .1
            .push(p);
    }
    out
}

fn qt_sum(paths: &[DecoratedPath]) -> QTPoly {
    let mut tally: HashMap<(u32, u32), i64> = HashMap::new();
    for p in paths {
        let d = u32::try_from(p.dinv()).expect("dinv is non-negative");
        *tally.entry((d, p.area())).or_insert(0) += 1;
    }
    QTPoly::from_counts(tally)
}

fn ranges() -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for size in 1..=5u32 {
        for m in 0..size {
            for k in 0..=2.min(size - 1) {
                out.push((m, size - m, k));
            }
        }
    }
    out
}

#[test]
fn product_formula_matches_enumeration() {
    let mut checked = 0;
    for (m, n, k) in ranges() {
        for ((_, s), (z, paths)) in classes(m, n, k) {
            let (product, content) = schedule_product(&z, s);
            assert_eq!(product, qt_sum(&paths), "word {z} shift {s}");
            assert_eq!(content, paths[0].content());
            checked += 1;
        }
    }
    assert!(checked > 500, "only {checked} classes");
}

#[test]
fn product_formula_at_size_six() {
    for m in 0..6 {
        for k in 0..=2 {
            for ((_, s), (z, paths)) in classes(m, 6 - m, k) {
                assert_eq!(schedule_product(&z, s).0, qt_sum(&paths), "word {z} shift {s}");
            }
        }
    }
}

#[test]
fn insertion_reproduces_each_class() {
    for (m, n, k) in ranges() {
        for ((_, s), (z, mut paths)) in classes(m, n, k) {
            paths.sort();
            assert_eq!(insertion_generate(&z, s).unwrap(), paths, "word {z} shift {s}");
        }
    }
}

#[test]
fn class_paths_agree_with_enumeration() {
    for (m, n, k) in ranges().into_iter().filter(|&(m, n, _)| m + n <= 4) {
        for ((_, s), (z, mut paths)) in classes(m, n, k) {
            paths.sort();
            assert_eq!(class_paths(&z, s), paths);
        }
    }
}

#[test]
fn decorated_sample_word_is_unrealizable() {
    // its decorated row 5 follows a higher row, so it is not a valley
    let z: MarkedWord = "1 2 4 | 3 | 1* 4 | 1 1*".parse().unwrap();
    for s in 0..=3 {
        assert!(class_paths(&z, s).is_empty());
        assert!(schedule_product(&z, s).0.is_zero());
        assert!(insertion_generate(&z, s).is_err());
    }
    // dropping that decoration gives a realizable word
    let z: MarkedWord = "1 2 4 | 3 | 1 4 | 1 1*".parse().unwrap();
    let paths = class_paths(&z, 3);
    assert!(!paths.is_empty());
    assert_eq!(insertion_generate(&z, 3).unwrap(), paths);
    assert_eq!(schedule_product(&z, 3).0, qt_sum(&paths));
}

fn ratio_term(z: &MarkedWord, i: usize) -> i64 {
    // #rho'_i - z^•_{i-1}(0)
    let runs = run_multiplicities(z);
    let prime = runs.get(i).map_or(0, |r| r.prime_size()) as i64;
    let dec0 = if i == 0 { 0 } else { runs.get(i - 1).map_or(0, |r| r.z_dec(0)) as i64 };
    prime - dec0
}

fn q_int(n: i64) -> QTPoly {
    q_analogue(u32::try_from(n).expect("non-negative"))
}

#[test]
fn shift_recursion() {
    let mut checked = 0;
    for (m, n, k) in ranges() {
        let cls = classes(m, n, k);
        let lookup = |z: &MarkedWord, s: u32| {
            cls.get(&(z.to_string(), s)).map_or_else(QTPoly::zero, |(_, p)| qt_sum(p))
        };
        for ((_, s), (z, paths)) in &cls {
            let s = *s;
            if s == 0 {
                continue;
            }
            let lower = ratio_term(z, s as usize - 1);
            let upper = ratio_term(z, s as usize);
            let lhs = &qt_sum(paths) * &q_int(lower);
            let rhs = (&q_int(upper) * &lookup(z, s - 1)).shift(lower as u32, 0);
            assert_eq!(lhs, rhs, "word {z} shift {s}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn flattening_to_dyck_paths() {
    for (m, n, k) in ranges() {
        let cls = classes(m, n, k);
        for ((_, s), (z, paths)) in &cls {
            let rho0 = ratio_term(z, 0);
            if rho0 == 0 {
                continue;
            }
            let dyck = cls.get(&(z.to_string(), 0)).map_or_else(QTPoly::zero, |(_, p)| qt_sum(p));
            let b = b_exponent(z, *s) as u32;
            let top = ratio_term(z, *s as usize);
            let lhs = &qt_sum(paths) * &q_int(rho0);
            let rhs = (&q_int(top) * &dyck).shift(b, 0);
            assert_eq!(lhs, rhs, "word {z} shift {s}");
        }
    }
}

#[test]
fn square_to_dyck_by_touching() {
    for n in 1..=5u32 {
        for k in 0..n {
            for r in 1..=n - k {
                let sq = family_genpoly(&FamilySpec::valley(Family::LsqPrime, 0, n, k).with_touching(r))
                    .unwrap();
                let ld = family_genpoly(&FamilySpec::valley(Family::Ld, 0, n, k).with_touching(r))
                    .unwrap();
                assert_eq!(
                    sq.scale(&q_analogue(r)),
                    ld.scale(&q_analogue(n - k)),
                    "n={n} k={k} r={r}"
                );
            }
        }
    }
}
