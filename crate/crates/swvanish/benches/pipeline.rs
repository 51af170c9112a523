//! Parallel vs sequential index-table construction on the largest built-in
//! example (81 Jacobian components), plus the feasibility sweep that the
//! acceptance suite runs exhaustively.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use swvanish::index_engine::{build_index_table, build_index_table_seq, IndexTable};
use swvanish::oracles::{build_example, ExampleName};
use swvanish::vanishing::{b_constant, e_vector, partition_search};

fn bench_index_table(c: &mut Criterion) {
    let (spec, _) = build_example(ExampleName::T1Sigma2Z3).unwrap();
    let mut g = c.benchmark_group("index_table_81_rows");
    g.bench_function("parallel", |b| {
        b.iter(|| build_index_table(black_box(&spec)).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| build_index_table_seq(black_box(&spec)).unwrap())
    });
    g.finish();
}

fn bench_feasibility(c: &mut Criterion) {
    let mut tables = Vec::new();
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            for x in -3..=3i64 {
                tables.push(IndexTable {
                    p: 3,
                    odd_type: false,
                    labels: vec!["l0".into(), "l1".into()],
                    rows: vec![vec![a, b, x], vec![x, a, b]],
                });
            }
        }
    }
    c.bench_function("feasibility_sweep", |b| {
        b.iter(|| {
            let mut hits = 0u32;
            for t in &tables {
                for m in 0..4i64 {
                    for target in 0..4i64 {
                        let closed: i64 = e_vector(t, b_constant(m)).iter().sum();
                        if (closed <= target) == partition_search(t, m, target).is_some() {
                            hits += 1;
                        }
                    }
                }
            }
            black_box(hits)
        })
    });
}

criterion_group!(benches, bench_index_table, bench_feasibility);
criterion_main!(benches);
