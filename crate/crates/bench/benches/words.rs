use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dser_bench::{conjugation_pairs, diagonal_form, localized_words};
use dser_core::localglobal::dilate;
use dser_core::rewrite::{conjugate_word, oe_to_dser, RuleTable};
use dser_core::AmbientForm;

fn word_matrices(c: &mut Criterion) {
    for (ring, n, m) in [("Q", 2, 2), ("Zmod:7", 3, 3), ("Zmod:7", 6, 4)] {
        let form = diagonal_form(ring, n, m);
        let pairs = conjugation_pairs(&form, 32, 1);
        c.bench_function(&format!("word_matrix/{ring}/n{n}m{m}"), |b| {
            b.iter(|| {
                for (_, e) in &pairs {
                    black_box(e.matrix(&form).unwrap());
                }
            })
        });
    }
}

fn conjugation(c: &mut Criterion) {
    let form = diagonal_form("Zmod:7", 2, 2);
    let pairs = conjugation_pairs(&form, 32, 2);
    c.bench_function("conjugate_word/Zmod:7/n2m2", |b| {
        b.iter(|| {
            for (g, e) in &pairs {
                black_box(conjugate_word(g, e, &form, RuleTable::standard()).unwrap());
            }
        })
    });
}

fn eo_equality(c: &mut Criterion) {
    let r = dser_core::parse_ring("Zmod:7").unwrap();
    let form = AmbientForm::hyperbolic(&r, 4, 3).unwrap();
    let a = r.from_i64(3);
    c.bench_function("oe_to_dser/all/n4m3", |b| {
        b.iter(|| {
            for k in 1..=10 {
                for l in k + 1..=10 {
                    if let Ok(w) = oe_to_dser(k, l, &a, &form) {
                        black_box(w);
                    }
                }
            }
        })
    });
}

fn dilation(c: &mut Criterion) {
    let words = localized_words(6, 16, 3);
    c.bench_function("dilate/Z_6", |b| {
        b.iter(|| {
            for w in &words {
                black_box(dilate(w).unwrap());
            }
        })
    });
}

criterion_group!(benches, word_matrices, conjugation, eo_equality, dilation);
criterion_main!(benches);
