use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mobpos_core::graph::{family, FamilySpec};
use mobpos_core::mobility::{completely_mobile_number, mobile_number, verify_certificate, SearchOptions};
use mobpos_core::position::{Geometry, PiKind};
use mobpos_core::strategies::ScheduleSpec;
use mobpos_core::Graph;

fn graph(spec: &str) -> Graph {
    family(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions { budget: 50_000_000 }
}

fn max_sets(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_pi_set");
    for spec in ["hypercube:4", "cartesian_grid:6,5", "line_complete:7"] {
        let g = graph(spec);
        let geo = Geometry::new(&g).unwrap();
        group.bench_function(format!("{spec} gp"), |b| b.iter(|| geo.max_pi_set(black_box(PiKind::GP))));
        group.bench_function(format!("{spec} mv"), |b| b.iter(|| geo.max_pi_set(black_box(PiKind::MV))));
    }
    group.finish();
}

fn mobility(c: &mut Criterion) {
    let mut group = c.benchmark_group("mobility");
    group.sample_size(10);
    for spec in ["hypercube:4", "cartesian_grid:5,3", "strong_grid:4,4"] {
        let geo = Geometry::new(&graph(spec)).unwrap();
        group.bench_function(format!("{spec} mobmv"), |b| b.iter(|| mobile_number(&geo, PiKind::MV, opts()).unwrap()));
    }
    for spec in ["cartesian_grid:4,3", "half_graph:4"] {
        let geo = Geometry::new(&graph(spec)).unwrap();
        group.bench_function(format!("{spec} cmobmv"), |b| {
            b.iter(|| completely_mobile_number(&geo, PiKind::MV, opts()).unwrap())
        });
    }
    group.finish();
}

fn schedules(c: &mut Criterion) {
    let mut group = c.benchmark_group("schedules");
    for (name, args) in [("lkn", vec!["8"]), ("cart_grid_mv", vec!["7", "6"])] {
        let args: Vec<String> = args.into_iter().map(String::from).collect();
        let spec = ScheduleSpec::parse(name, &args).unwrap();
        let label = format!("{name} {}", args.join(" "));
        group.bench_function(format!("{label} generate"), |b| b.iter(|| spec.generate().unwrap()));
        let cert = spec.generate().unwrap();
        group.bench_function(format!("{label} verify"), |b| b.iter(|| verify_certificate(black_box(&cert))));
    }
    group.finish();
}

criterion_group!(benches, max_sets, mobility, schedules);
criterion_main!(benches);
