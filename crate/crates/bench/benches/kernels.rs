use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use hopfkern::central::theorem_harness;
use hopfkern::corpus::builtin;
use hopfkern::kernels::hopf_kernel;
use hopfkern::rep::{irr_characters, CharacterData};
use hopfkern_bench::{character_data, quotient_map};

fn hker(c: &mut Criterion) {
    let a4 = character_data("A4");
    // the degree-3 block gives B = H, the widest system (12 * 12 * 12 columns)
    let widest = (0..a4.irr.len()).max_by_key(|&i| a4.irr.blocks[i].degree).unwrap();
    let pi = quotient_map(&a4, widest);
    c.bench_function("hker_a4_full_quotient", |b| b.iter(|| hopf_kernel(&pi)));
}

fn irr(c: &mut Criterion) {
    let mut group = c.benchmark_group("irr_characters");
    for name in ["S3", "H8", "A4"] {
        let h = builtin(name).unwrap().build().unwrap();
        group.bench_function(name, |b| b.iter(|| irr_characters(&h).unwrap()));
    }
    group.finish();
}

fn harness(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_harness");
    group.sample_size(10);
    for name in ["S3", "H8"] {
        let h = Arc::new(builtin(name).unwrap().build().unwrap());
        group.bench_function(name, |b| {
            b.iter(|| theorem_harness(&CharacterData::new(h.clone()).unwrap()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, hker, irr, harness);
criterion_main!(benches);
