//! Shared fixtures for benchmarks.

use dser_core::suites::{random_conjugator, random_dser_word, random_localized_word};
use dser_core::localglobal::LocalizedWord;
use dser_core::{parse_ring, AmbientForm, QuadraticSpace, Ring, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `diag(1, 2, …, n) ⊥ ψ̃_m` over `ring`.
pub fn diagonal_form(ring: &str, n: usize, m: usize) -> AmbientForm {
    let r = parse_ring(ring).expect("ring descriptor");
    let entries: Vec<_> = (1..=n as i64).map(|j| r.from_i64(j)).collect();
    let q = QuadraticSpace::diagonal(&r, &entries).expect("invertible diagonal");
    AmbientForm::new(q, m, Default::default()).expect("form")
}

/// `count` seeded (conjugator, DSER word) pairs.
pub fn conjugation_pairs(form: &AmbientForm, count: usize, seed: u64) -> Vec<(Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = random_conjugator(form, &mut rng).expect("sampler");
            (g, random_dser_word(form, &mut rng))
        })
        .collect()
}

/// `count` seeded localized words over `Z_s`.
pub fn localized_words(s: i64, count: usize, seed: u64) -> Vec<LocalizedWord> {
    let z = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_localized_word(&z, &z.from_i64(s), 2, 2, &mut rng).expect("sampler"))
        .collect()
}
