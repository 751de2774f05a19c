//! The library against the naive oracles on random posets.

mod oracle;

use biequi_core::analysis::{classify, noetherian_obstructions};
use biequi_core::{codim, Property, SpectralPoset};
use oracle::{random_poset, Naive};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_agrees(p: &SpectralPoset) -> bool {
    let naive = Naive::new(p);
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            let expected = if naive.le(x, y) { naive.saturated_lengths(x, y) } else { None };
            assert_eq!(p.path_lengths(x, y), expected, "path lengths {} -> {} in {p:?}", p.name(x), p.name(y));
            if let Some(lengths) = expected {
                assert_eq!(p.saturated_lengths(p.name(x), p.name(y)).unwrap(), lengths);
            }
        }
        assert_eq!(p.dim_at(x), naive.dim(x));
        assert_eq!(p.codim_in_space_at(x), naive.codim_in_space(x));
    }
    assert_eq!(p.dim_space(), naive.dim_space());
    assert_eq!(p.maximal_chain_lengths(), naive.maximal_chain_lengths());

    let report = classify(p).expect("classification is consistent");
    let expected = naive.property_vector();
    for (k, property) in Property::ALL.into_iter().enumerate() {
        assert_eq!(report.get(property), expected[k], "{property} on {p:?}");
        assert_eq!(property.holds(p), expected[k], "{property} (direct) on {p:?}");
    }

    let mut obstructions = noetherian_obstructions(p);
    let mut naive_obstructions: Vec<(String, String)> = naive
        .noetherian_obstructions()
        .into_iter()
        .map(|(a, b)| (p.name(a).to_string(), p.name(b).to_string()))
        .collect();
    obstructions.sort();
    naive_obstructions.sort();
    assert_eq!(obstructions, naive_obstructions);

    match (codim::solve(p), naive.codim_labeling()) {
        (codim::CodimResult::Assignment(found), Some(values)) => {
            for (x, v) in values.iter().enumerate() {
                assert_eq!(found[p.name(x)], *v, "label of {} in {p:?}", p.name(x));
            }
            assert_eq!(codim::is_codim_function(p, &found), Ok(true));
            true
        }
        (codim::CodimResult::Certificate(cert), None) => {
            assert!(cert.verify(p), "certificate {cert} does not verify on {p:?}");
            false
        }
        (result, naive) => panic!("solver {result:?} vs oracle {naive:?} on {p:?}"),
    }
}

#[test]
fn thousand_seeded_posets_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut with_function = 0;
    for _ in 0..1000 {
        with_function += usize::from(assert_agrees(&random_poset(&mut rng, 8)));
    }
    assert!(with_function >= 20 && with_function <= 980, "{with_function} of 1000 admit a codimension function");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_posets_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        assert_agrees(&random_poset(&mut rng, 7));
    }
}
