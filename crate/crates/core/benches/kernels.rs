use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mechlie::dims::{assemble_order_table, Variant};
use mechlie::entropy::{scan_grid, scan_grid_sequential, Window, DEFAULT_MAX_ITER, DEFAULT_TOL};

fn grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_grid");
    group.sample_size(10);
    for n in [64usize, 128] {
        let w = Window::square(1.5);
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| scan_grid(black_box(w), n, n, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| {
                scan_grid_sequential(black_box(w), n, n, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap()
            })
        });
    }
    group.finish();
}

fn dims(c: &mut Criterion) {
    c.bench_function("order_table_40", |b| {
        b.iter(|| assemble_order_table(black_box(40), Variant::General).unwrap())
    });
}

criterion_group!(benches, grid, dims);
criterion_main!(benches);
