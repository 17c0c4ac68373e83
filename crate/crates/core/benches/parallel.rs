//! Sequential vs. data-parallel timings for the invariant computations,
//! the two κ_g solvers, and sampled diagnosability. Run with
//! `cargo bench -p xconn-core`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use xconn_core::extra::{kappa_g_oracle, kappa_g_search, OracleConfig, SearchConfig};
use xconn_core::graph::cycle;
use xconn_core::invariants::{girth_with, vertex_connectivity_with};
use xconn_core::named::{mcgee, petersen};
use xconn_core::pmc::{is_t_diagnosable_sampled, SampleConfig};
use xconn_core::product::strong_product;

fn bench_invariants(c: &mut Criterion) {
    let torus = strong_product(&cycle(12).unwrap(), &mcgee());
    let medium = strong_product(&petersen(), &cycle(5).unwrap());
    let mut group = c.benchmark_group("invariants");
    for parallel in [false, true] {
        let label = if parallel { "par" } else { "seq" };
        group.bench_with_input(BenchmarkId::new("girth", label), &parallel, |b, &p| {
            b.iter(|| girth_with(torus.graph(), p));
        });
        group.bench_with_input(
            BenchmarkId::new("connectivity", label),
            &parallel,
            |b, &p| {
                b.iter(|| vertex_connectivity_with(medium.graph(), p));
            },
        );
    }
    group.finish();
}

fn bench_solvers(c: &mut Criterion) {
    let small = strong_product(&cycle(4).unwrap(), &cycle(4).unwrap());
    let desk = strong_product(&cycle(5).unwrap(), &cycle(5).unwrap());
    let mut group = c.benchmark_group("solvers");
    group.sample_size(10);
    for parallel in [false, true] {
        let label = if parallel { "par" } else { "seq" };
        group.bench_with_input(
            BenchmarkId::new("oracle_c4c4_g1", label),
            &parallel,
            |b, &p| {
                let config = OracleConfig {
                    parallel: p,
                    ..OracleConfig::default()
                };
                b.iter(|| kappa_g_oracle(small.graph(), 1, &config).unwrap());
            },
        );
        group.bench_with_input(
            BenchmarkId::new("search_c5c5_g1", label),
            &parallel,
            |b, &p| {
                let config = SearchConfig {
                    parallel: p,
                    ..SearchConfig::default()
                };
                b.iter(|| kappa_g_search(desk.graph(), 1, &config).unwrap());
            },
        );
    }
    group.finish();
}

fn bench_pmc(c: &mut Criterion) {
    let desk = strong_product(&cycle(5).unwrap(), &cycle(5).unwrap());
    let mut group = c.benchmark_group("pmc");
    group.sample_size(10);
    for parallel in [false, true] {
        let label = if parallel { "par" } else { "seq" };
        group.bench_with_input(
            BenchmarkId::new("sampled_t11", label),
            &parallel,
            |b, &p| {
                let config = SampleConfig {
                    samples: 20_000,
                    seed: 7,
                    parallel: p,
                    ..SampleConfig::default()
                };
                b.iter(|| is_t_diagnosable_sampled(desk.graph(), 1, 11, &config).unwrap());
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_invariants, bench_solvers, bench_pmc);
criterion_main!(benches);
