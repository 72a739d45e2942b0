use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dqe_core::edsr::{edsr_rotating_rates, EdsrParams};
use dqe_core::frames::rotating_frame_rates;
use dqe_core::labframe::lab_rates;
use dqe_core::{AxisStrengths, DriveGeometry, EnvelopeConfig, EnvelopeMode, NoiseSpectrum, SidebandArgument};

fn rates(c: &mut Criterion) {
    let geom = DriveGeometry::new(10.0, 0.5, 10.2, 0.0).unwrap();
    let noise = NoiseSpectrum::lorentzian(1.0, 0.5, 9.0, AxisStrengths::new(0.02, 0.01, 0.03)).unwrap();

    c.bench_function("rotating_frame_rates", |b| {
        b.iter(|| rotating_frame_rates(black_box(&geom), black_box(&noise)).unwrap())
    });

    let env = EnvelopeConfig::from_noise(geom, &noise, SidebandArgument::default()).unwrap();
    let mut g = c.benchmark_group("lab_rates");
    for mode in [EnvelopeMode::FixedAsymptote, EnvelopeMode::General] {
        g.bench_function(format!("{mode:?}"), |b| b.iter(|| lab_rates(black_box(&env), mode).unwrap()));
    }
    g.finish();

    let p = EdsrParams::dimensionless(0.9, 0.7, 0.01, 0.05);
    c.bench_function("edsr_rotating_rates", |b| b.iter(|| edsr_rotating_rates(black_box(&p)).unwrap()));

    c.bench_function("figure_fig6", |b| b.iter(|| dqe_core::figures::figure("fig6").unwrap()));
}

criterion_group!(benches, rates);
criterion_main!(benches);
