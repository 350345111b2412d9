//! Rayon backend against a single worker, on the heaviest exact computations.
//!
//! With the default `parallel` feature each workload runs twice: on the global
//! rayon pool and inside a one-thread pool. Building with
//! `--no-default-features` compiles the plain-loop fallback and benches it
//! under the `sequential` label, so the three numbers can be compared directly.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use curralg::catalog;
use curralg::current::{cycle_report, h2_sequence, homology_count, CurrentAlgebra};
use curralg::lie::{cohomology_table, KModule};
use std::hint::black_box;

fn run<F: Fn() + Sync + Send>(c: &mut Criterion, group: &str, input: &str, f: F) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    #[cfg(feature = "parallel")]
    {
        g.bench_function(BenchmarkId::new("rayon", input), |b| b.iter(&f));
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        g.bench_function(BenchmarkId::new("one_thread", input), |b| one.install(|| b.iter(&f)));
    }
    #[cfg(not(feature = "parallel"))]
    g.bench_function(BenchmarkId::new("sequential", input), |b| b.iter(&f));
    g.finish();
}

fn current(a: &str, k: &str) -> CurrentAlgebra {
    let a = catalog::lookup_comm(a).unwrap();
    let k = catalog::lookup_lie(k).unwrap().algebra;
    CurrentAlgebra::new(&a, &k).unwrap()
}

fn benches(c: &mut Criterion) {
    run(c, "build_current", "trunc_poly:4 x pelc:6", || {
        black_box(current("trunc_poly:4", "pelc:6"));
    });

    let cur = current("trunc_poly:3", "pelc:6");
    run(c, "cycle_report", "trunc_poly:3 x pelc:6", || {
        black_box(cycle_report(&cur).unwrap());
    });
    run(c, "h2_sequence", "trunc_poly:3 x pelc:6", || {
        black_box(h2_sequence(&cur).unwrap());
    });
    run(c, "homology_count", "trunc_poly:3 x pelc:6", || {
        black_box(homology_count(&cur).unwrap());
    });

    let g = current("dual_numbers", "pelc:6").g;
    run(c, "cohomology_table", "dual_numbers x pelc:6 trivial", || {
        black_box(cohomology_table(&g, &KModule::trivial(&g, 1)));
    });
}

criterion_group!(parallel, benches);
criterion_main!(parallel);
