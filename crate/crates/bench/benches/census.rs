use biequi_core::analysis::classify;
use biequi_core::census::{canonical_classes, canonical_form, census, CensusConfig};
use biequi_core::{catalog, codim};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn catalog_entries() -> Vec<catalog::CatalogEntry> {
    ["BUTTERFLY", "GLUE", "GLUE2", "WX", "CHAIN_32", "ANTICHAIN_32"]
        .iter()
        .map(|name| catalog::get(name).unwrap())
        .collect()
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for entry in catalog_entries() {
        group.bench_with_input(BenchmarkId::from_parameter(&entry.name), &entry.poset, |b, p| {
            b.iter(|| classify(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn bench_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("codim_solve");
    for entry in catalog_entries() {
        group.bench_with_input(BenchmarkId::from_parameter(&entry.name), &entry.poset, |b, p| {
            b.iter(|| codim::solve(black_box(p)))
        });
    }
    group.finish();
}

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for entry in catalog_entries() {
        group.bench_with_input(BenchmarkId::from_parameter(&entry.name), &entry.poset, |b, p| {
            b.iter(|| canonical_form(black_box(p)))
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for jobs in [1, 0] {
        let cfg = CensusConfig { jobs, ..CensusConfig::default() };
        group.bench_with_input(BenchmarkId::new("canonical_classes_6", jobs), &cfg, |b, cfg| {
            b.iter(|| canonical_classes(6, cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("census_6", jobs), &cfg, |b, cfg| b.iter(|| census(6, cfg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_solve, bench_canonical_form, bench_enumeration);
criterion_main!(benches);
