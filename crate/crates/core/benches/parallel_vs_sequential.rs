//! The same workloads on the global rayon pool and on a one-thread pool.
//! Built without `parallel`, only the sequential path exists.

use criterion::{criterion_group, criterion_main, Criterion};
use infhecke::groups::{Group, GroupParams};
use infhecke::lie::verify::{verify, VerifyOptions};
use infhecke::reps::irreducibles;

type Workload = (&'static str, Box<dyn Fn() + Sync + Send>);

fn workloads() -> Vec<Workload> {
    let g333 = Group::construct(GroupParams::new(1, 3, 3).unwrap()).unwrap();
    let g115 = Group::construct(GroupParams::new(1, 1, 5).unwrap()).unwrap();
    vec![
        (
            "irreducibles G(2,1,4)",
            Box::new(|| {
                let w = Group::construct(GroupParams::new(2, 1, 4).unwrap()).unwrap();
                irreducibles(&w).unwrap();
            }),
        ),
        (
            "verify G(3,3,3)",
            Box::new(move || {
                verify(&g333, &VerifyOptions::default()).unwrap();
            }),
        ),
        (
            "verify G(1,1,5) exact",
            Box::new(move || {
                verify(
                    &g115,
                    &VerifyOptions {
                        exact: true,
                        ..VerifyOptions::default()
                    },
                )
                .unwrap();
            }),
        ),
    ]
}

fn bench(c: &mut Criterion) {
    #[cfg(feature = "parallel")]
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    for (name, work) in workloads() {
        let mut group = c.benchmark_group(name);
        group.sample_size(10);
        #[cfg(feature = "parallel")]
        {
            group.bench_function("parallel", |b| b.iter(&work));
            group.bench_function("sequential", |b| b.iter(|| single.install(&work)));
        }
        #[cfg(not(feature = "parallel"))]
        group.bench_function("sequential", |b| b.iter(&work));
        group.finish();
    }
}

criterion_group!(benches, bench);
criterion_main!(benches);
