use affroots::par;
use affroots::rootsys::checks::reflection_closure;
use affroots::rootsys::enumerate;
use affroots::shadow::{check_axioms, synth_labeling, SynthKind};
use affroots::{AlgebraType, Family, Window};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

/// A one-thread pool against the full pool (at least two workers).
fn threads() -> Vec<usize> {
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    vec![1, max.max(2)]
}

fn bench_enumerate(c: &mut Criterion) {
    let ty = AlgebraType::new(Family::D, 2, 2).unwrap();
    let mut g = c.benchmark_group("enumerate D(3,2) N=16");
    for n in threads() {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| par::with_threads(n, || enumerate(&ty, Window::new(16)).len()))
        });
    }
    g.finish();
}

fn bench_reflection(c: &mut Criterion) {
    let ty = AlgebraType::new(Family::AEvenOdd, 2, 1).unwrap();
    let view = enumerate(&ty, Window::new(8));
    let mut g = c.benchmark_group("reflection closure A(4,1) N=8");
    g.sample_size(10);
    for n in threads() {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| par::with_threads(n, || reflection_closure(&view).checked))
        });
    }
    g.finish();
}

fn bench_axioms(c: &mut Criterion) {
    let ty = AlgebraType::new(Family::AEvenEven, 1, 1).unwrap();
    let l = synth_labeling(&ty, 0, SynthKind::AllUp);
    let mut g = c.benchmark_group("shadow axioms A(2,2) N=6");
    g.sample_size(10);
    for n in threads() {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| par::with_threads(n, || check_axioms(&l, Window::new(6)).checked))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_enumerate, bench_reflection, bench_axioms);
criterion_main!(benches);
