use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fcgf_core::catalog::{Catalog, Family, FamilyType};
use fcgf_core::exec::{set_exec, Exec};
use fcgf_core::oracle::{fc_counts, graph};
use fcgf_core::series::TruncationContext;
use fcgf_core::verify::{faultable_families, run_fault_sweep};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn series_product(c: &mut Criterion) {
    let ctx = TruncationContext::new(12, 120, -120).unwrap();
    let a = Catalog::new(ctx).gf(Family::all(FamilyType::A)).unwrap();
    let d = Catalog::new(ctx).gf(Family::all(FamilyType::D)).unwrap();
    let mut g = c.benchmark_group("series_product");
    for (name, mode) in MODES {
        set_exec(mode);
        g.bench_function(name, |b| b.iter(|| &*a * &*d));
    }
    g.finish();
}

fn closed_forms(c: &mut Criterion) {
    let ctx = TruncationContext::new(8, 40, -45).unwrap();
    let mut g = c.benchmark_group("closed_forms");
    g.sample_size(10);
    for (name, mode) in MODES {
        set_exec(mode);
        g.bench_function(name, |b| b.iter(|| Catalog::new(ctx).gf(Family::inv(FamilyType::Dtilde)).unwrap()));
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for (ty, k) in [(FamilyType::Atilde, 5), (FamilyType::Dtilde, 5)] {
        let gr = graph(ty, k).unwrap();
        for (name, mode) in MODES {
            set_exec(mode);
            g.bench_with_input(BenchmarkId::new(name, gr.name()), &gr, |b, gr| b.iter(|| fc_counts(gr, 11).unwrap()));
        }
    }
    g.finish();
}

fn fault_sweep(c: &mut Criterion) {
    let families = faultable_families();
    let mut g = c.benchmark_group("fault_sweep");
    g.sample_size(10);
    for (name, mode) in MODES {
        set_exec(mode);
        g.bench_function(name, |b| b.iter(|| run_fault_sweep(&families)));
    }
    g.finish();
}

criterion_group!(benches, series_product, closed_forms, enumeration, fault_sweep);
criterion_main!(benches);
