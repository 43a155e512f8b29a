use std::collections::BTreeSet;

use ajs::dualtilt::{box_alcoves, reduced_words_w0};
use ajs::suites::{run, words, Suite, SuiteConfig};
use ajs::{Fp, RootDatum, RootType};

#[test]
fn word_counts_are_geometric_sums() {
    for (t, n) in [(RootType::A1, 6u32), (RootType::A2, 4)] {
        let k = RootDatum::get(t).rank as u64 + 1;
        let want: u64 = (0..=n).map(|i| k.pow(i)).sum();
        assert_eq!(words(RootDatum::get(t), n as usize).len() as u64, want);
    }
}

// Alcoves of A2 are the triangles cut out by x, y, x + y ∈ Z in the
// coordinates x = <α1,·>, y = <α2,·>; sampling the unit box (-1, 0)^2
// counts the pieces without the alcove code.
#[test]
fn anti_box_of_a2_matches_a_sampled_count() {
    let n = 60;
    let mut cells = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = ((2 * i + 1) as f64 / (2 * n) as f64 - 1.0, (2 * j + 1) as f64 / (2 * n) as f64 - 1.0);
            if (x + y).fract().abs() < 1e-9 {
                continue;
            }
            cells.insert((x + y).floor() as i64);
        }
    }
    assert_eq!(box_alcoves(RootDatum::get(RootType::A2), 8).len(), cells.len());
    assert_eq!(box_alcoves(RootDatum::get(RootType::A1), 8).len(), 1);
}

// reduced words of the longest element: 1, 2 and 2 for A1, A2 and B2
// (the braid relation is the only move in rank two)
#[test]
fn reduced_words_of_w0() {
    let counts: Vec<usize> = [RootType::A1, RootType::A2, RootType::B2]
        .into_iter()
        .map(|t| reduced_words_w0(RootDatum::get(t)).len())
        .collect();
    assert_eq!(counts, vec![1, 2, 2]);
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::EACH.into_iter().chain([Suite::All]) {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("everything".parse::<Suite>().is_err());
}

#[test]
fn all_runs_every_suite_and_tilt_by_e_fails() {
    let cfg = SuiteConfig { max_word: Some(1), window: Some(3), ..SuiteConfig::new(RootType::A2) };
    let rs = run::<Fp<101>>(Suite::All, &cfg).unwrap();
    assert_eq!(rs.len(), Suite::EACH.len());
    assert!(rs.iter().all(|r| r.passed() && r.report.checked() > 0), "{:?}", rs.iter().find(|r| !r.passed()));
    let bad = SuiteConfig { tilt_by: Some(ajs::WeylElt::E), ..cfg };
    let k = run::<Fp<101>>(Suite::Kipptrans, &bad).unwrap();
    assert!(!k[0].passed());
}

#[test]
fn density_seed_is_reported_and_deterministic() {
    let cfg = SuiteConfig { max_word: Some(2), seed: 99, ..SuiteConfig::new(RootType::A2) };
    let a = run::<Fp<7>>(Suite::Density, &cfg).unwrap().remove(0);
    let b = run::<Fp<7>>(Suite::Density, &cfg).unwrap().remove(0);
    assert!(a.notes.iter().any(|n| n.contains("seed 99")));
    assert_eq!(a.report.clauses, b.report.clauses);
}
