//! Enumeration counts, implication checks and census tables.

mod oracle;

use std::collections::BTreeSet;

use biequi_core::census::{
    self, canonical_classes, canonical_form, enumerate_posets, find_minimal, verify_implications, CensusConfig,
};
use biequi_core::report::{emit_census, Format};
use biequi_core::{catalog, CensusError, Property, SpectralPoset};
use oracle::{brute_canonical_key, brute_labeled_orders, order_matrix, Naive};

fn config(jobs: usize) -> CensusConfig {
    CensusConfig { jobs, ..CensusConfig::default() }
}

#[test]
fn class_counts_match_brute_force() {
    for n in 1..=4 {
        let labeled = brute_labeled_orders(n);
        let classes: BTreeSet<Vec<bool>> = labeled.iter().map(|lt| brute_canonical_key(lt)).collect();
        let found = canonical_classes(n, &config(0)).unwrap();
        assert_eq!(found.len(), classes.len(), "n = {n}");
        let keys: BTreeSet<Vec<bool>> = found.iter().map(|f| brute_canonical_key(&order_matrix(&f.to_poset()))).collect();
        assert_eq!(keys, classes, "n = {n}");
        let all = enumerate_posets(n, false, &config(0)).unwrap();
        assert_eq!(all.len(), labeled.len(), "labeled n = {n}");
    }
}

#[test]
fn known_class_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| canonical_classes(n, &config(0)).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 5, 16, 63, 318, 2045]);
}

#[test]
fn canonical_classes_are_distinct_and_canonical() {
    let classes = canonical_classes(5, &config(0)).unwrap();
    let set: BTreeSet<_> = classes.iter().cloned().collect();
    assert_eq!(set.len(), classes.len());
    for form in &classes {
        assert_eq!(&canonical_form(&form.to_poset()), form);
    }
}

#[test]
fn implications_hold_up_to_six_points() {
    for n in 1..=6 {
        let report = verify_implications(n, &config(0)).unwrap();
        assert!(report.posets_checked > 0);
        for s in &report.statements {
            assert!(s.passed(), "n = {n}: {} has {} violations", s.name, s.violations);
        }
    }
}

#[test]
fn census_rows_match_naive_classification() {
    for n in 1..=5 {
        let rows = census::census(n, &config(0)).unwrap();
        let mut expected = std::collections::BTreeMap::new();
        for form in canonical_classes(n, &config(0)).unwrap() {
            let naive = Naive::new(&form.to_poset());
            let all = naive.property_vector();
            let vector: Vec<bool> = Property::CENSUS
                .iter()
                .map(|p| all[Property::ALL.iter().position(|q| q == p).unwrap()])
                .collect();
            *expected.entry((naive.dim_space(), vector)).or_insert(0usize) += 1;
        }
        let got: Vec<_> = rows.iter().map(|r| ((r.dimension, r.property_vector.clone()), r.count)).collect();
        let expected: Vec<_> = expected.into_iter().collect();
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn census_of_three_points() {
    let rows = census::census(3, &config(0)).unwrap();
    assert_eq!(rows.iter().map(|r| r.count).sum::<usize>(), 5);
    assert!(emit_census(3, &rows, Format::Text).contains("total: 5 isomorphism classes"));
}

#[test]
fn census_of_six_points_contains_weak_but_not_biequidimensional() {
    let rows = census::census(6, &config(0)).unwrap();
    let weakly = Property::CENSUS.iter().position(|&p| p == Property::WeaklyBiequidimensional).unwrap();
    let bieq = Property::CENSUS.iter().position(|&p| p == Property::Biequidimensional).unwrap();
    let count: usize = rows
        .iter()
        .filter(|r| r.property_vector[weakly] && !r.property_vector[bieq])
        .map(|r| r.count)
        .sum();
    assert!(count >= 1);
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let reference = emit_census(6, &census::census(6, &config(1)).unwrap(), Format::Structured);
    for jobs in [2, 3, 8] {
        assert_eq!(emit_census(6, &census::census(6, &config(jobs)).unwrap(), Format::Structured), reference);
    }
    assert_eq!(canonical_classes(6, &config(1)).unwrap(), canonical_classes(6, &config(4)).unwrap());
}

#[test]
fn minimal_weak_non_biequidimensional_space_has_six_points() {
    let result = find_minimal(&[Property::WeaklyBiequidimensional], &[Property::Biequidimensional], &config(0))
        .unwrap()
        .expect("a witness exists");
    assert_eq!(result.n, 6);
    let butterfly = canonical_form(&catalog::get("BUTTERFLY").unwrap().poset);
    assert!(result.all_witnesses.iter().any(|w| canonical_form(w) == butterfly));
    for w in &result.all_witnesses {
        let naive = Naive::new(w);
        assert!(naive.weakly_biequidimensional() && !naive.biequidimensional());
    }
}

#[test]
fn minimal_dimension_formula_without_codimension_function() {
    let result = find_minimal(&[Property::DimensionFormula], &[Property::CodimFunctionExists], &config(0))
        .unwrap()
        .expect("a witness exists");
    assert!(result.n <= 6);
    let butterfly = canonical_form(&catalog::get("BUTTERFLY").unwrap().poset);
    assert!(result.all_witnesses.iter().any(|w| canonical_form(w) == butterfly));
}

#[test]
fn biequidimensional_never_fails_weak() {
    let cfg = CensusConfig { cap: 6, jobs: 0 };
    let result = find_minimal(&[Property::Biequidimensional], &[Property::WeaklyBiequidimensional], &cfg).unwrap();
    assert!(result.is_none());
}

#[test]
fn caps_are_enforced() {
    let cfg = CensusConfig { cap: 4, jobs: 0 };
    assert_eq!(census::census(5, &cfg).unwrap_err(), CensusError::CapExceeded { n: 5, cap: 4 });
    assert_eq!(census::census(0, &cfg).unwrap_err(), CensusError::ZeroPoints);
    let huge = CensusConfig { cap: 100, jobs: 0 };
    assert!(matches!(canonical_classes(11, &huge), Err(CensusError::CapExceeded { cap: 10, .. })));
    assert!(enumerate_posets(7, false, &CensusConfig { cap: 7, jobs: 0 }).is_err());
}

fn relabeled(points: Vec<String>, covers: Vec<(String, String)>, shift: usize) -> SpectralPoset {
    let n = points.len();
    let mut rotated = points.clone();
    rotated.rotate_left(shift % n);
    SpectralPoset::build(rotated, covers, Vec::<String>::new()).unwrap()
}

fn symmetric_families() -> Vec<(&'static str, Vec<String>, Vec<(String, String)>)> {
    let name = |p: &str, i: usize| format!("{p}{i}");
    let crown_points: Vec<String> = (0..16).map(|i| name("a", i)).chain((0..16).map(|i| name("b", i))).collect();
    let crown: Vec<(String, String)> =
        (0..16).flat_map(|i| [(name("a", i), name("b", i)), (name("a", i), name("b", (i + 1) % 16))]).collect();
    let complete: Vec<(String, String)> =
        (0..16).flat_map(|i| (0..16).map(move |j| (format!("a{i}"), format!("b{j}")))).collect();
    let pairs_points: Vec<String> = (0..16).flat_map(|i| [name("a", i), name("b", i)]).collect();
    let pairs: Vec<(String, String)> = (0..16).map(|i| (name("a", i), name("b", i))).collect();
    let cube_points: Vec<String> = (0..32).map(|s| name("s", s)).collect();
    let cube: Vec<(String, String)> = (0u32..32)
        .flat_map(|s| (0..5).filter(move |b| s >> b & 1 == 0).map(move |b| (format!("s{s}"), format!("s{}", s | 1 << b))))
        .collect();
    vec![
        ("antichain", (0..32).map(|i| name("p", i)).collect(), Vec::new()),
        ("crown", crown_points.clone(), crown),
        ("complete bipartite", crown_points, complete),
        ("disjoint pairs", pairs_points, pairs),
        ("boolean lattice", cube_points, cube),
    ]
}

#[test]
fn canonical_form_handles_large_symmetric_posets() {
    for (label, points, covers) in symmetric_families() {
        let start = std::time::Instant::now();
        let a = canonical_form(&relabeled(points.clone(), covers.clone(), 0));
        let b = canonical_form(&relabeled(points, covers, 7));
        assert_eq!(a, b, "{label}");
        assert!(start.elapsed() < std::time::Duration::from_secs(5), "{label} took {:?}", start.elapsed());
    }
}
