use dser_core::certificate;
use dser_core::quadform::shuffle_matrix;
use dser_core::rewrite::{conjugate_letter, RuleTable};
use dser_core::suites::{random_conjugator, random_dser_word, random_orthogonal};
use dser_core::{parse_ring, AmbientForm, Letter, Matrix, Ordering, QuadraticSpace, Ring, Word};
use dser_core::rings::{random_element, random_unit};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RINGS: &[&str] = &["Q", "Zmod:7", "Zmod:9", "Zmod:15", "laurent:Q:[u]:inv=[u]", "loc:Z:s=2"];

fn setup(seed: u64, ring_index: usize, ordering: Ordering) -> (ChaCha8Rng, AmbientForm) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = parse_ring(RINGS[ring_index % RINGS.len()]).unwrap();
    let n = rng.random_range(1..=3);
    let m = rng.random_range(1..=3);
    let entries: Vec<_> = (0..n).map(|_| random_unit(&ring, &mut rng)).collect();
    let q = QuadraticSpace::diagonal(&ring, &entries).unwrap();
    (rng, AmbientForm::new(q, m, ordering).unwrap())
}

fn ordering(grouped: bool) -> Ordering {
    if grouped {
        Ordering::Grouped
    } else {
        Ordering::Interleaved
    }
}

fn random_single(form: &AmbientForm, rng: &mut ChaCha8Rng) -> Letter {
    let (i, j) = (rng.random_range(1..=form.m()), rng.random_range(1..=form.n()));
    let x = random_element(form.ring(), rng);
    if rng.random_bool(0.5) {
        Letter::ealpha(i, j, x)
    } else {
        Letter::ebeta(i, j, x)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dser_words_are_orthogonal(seed in any::<u64>(), ri in 0usize..6, grouped in any::<bool>()) {
        let (mut rng, form) = setup(seed, ri, ordering(grouped));
        let w = random_dser_word(&form, &mut rng);
        let mat = w.matrix(&form).unwrap();
        prop_assert!(form.is_orthogonal(&mat));
        prop_assert!(form.ring().is_one(&mat.det().unwrap()));
    }

    #[test]
    fn single_letters_add(seed in any::<u64>(), ri in 0usize..6) {
        let (mut rng, form) = setup(seed, ri, Ordering::Interleaved);
        let r = form.ring().clone();
        let (i, j) = (rng.random_range(1..=form.m()), rng.random_range(1..=form.n()));
        let x = random_element(&r, &mut rng);
        let y = random_element(&r, &mut rng);
        for make in [Letter::ealpha, Letter::ebeta] {
            let lhs = make(i, j, x.clone()).matrix(&form).unwrap().mul(&make(i, j, y.clone()).matrix(&form).unwrap()).unwrap();
            prop_assert_eq!(lhs, make(i, j, r.add(&x, &y)).matrix(&form).unwrap());
        }
    }

    #[test]
    fn inverse_letters_invert(seed in any::<u64>(), ri in 0usize..6, grouped in any::<bool>()) {
        let (mut rng, form) = setup(seed, ri, ordering(grouped));
        let w = random_conjugator(&form, &mut rng).unwrap();
        for letter in &w.letters {
            let inv = letter.inverse_letter(&form).unwrap();
            let prod = letter.matrix(&form).unwrap().mul(&inv.matrix(&form).unwrap()).unwrap();
            prop_assert!(prod.is_identity());
        }
        let prod = w.matrix(&form).unwrap().mul(&w.inverse().matrix(&form).unwrap()).unwrap();
        prop_assert!(prod.is_identity());
    }

    #[test]
    fn orderings_are_shuffle_conjugate(seed in any::<u64>(), ri in 0usize..6) {
        let (mut rng, form) = setup(seed, ri, Ordering::Interleaved);
        let grouped = form.reordered(Ordering::Grouped);
        let s = shuffle_matrix(form.ring(), form.n(), form.m());
        let w = random_dser_word(&form, &mut rng);
        let via = s.mul(&w.matrix(&grouped).unwrap()).unwrap().mul(&s.transpose()).unwrap();
        prop_assert_eq!(via, w.matrix(&form).unwrap());
        let g = s.mul(grouped.gram()).unwrap().mul(&s.transpose()).unwrap();
        prop_assert_eq!(&g, form.gram());
    }

    #[test]
    fn reflections_are_orthogonal_involutions(seed in any::<u64>(), ri in 0usize..6) {
        let (mut rng, form) = setup(seed, ri, Ordering::Interleaved);
        let a = random_orthogonal(form.q(), 1, &mut rng).unwrap();
        prop_assert!(a.mul(&a).unwrap().is_identity());
        prop_assert!(form.q().is_orthogonal(&a));
        let det = a.det().unwrap();
        prop_assert!(form.ring().is_one(&form.ring().mul(&det, &det)));
    }

    #[test]
    fn conjugate_letter_matches_multiplication(seed in any::<u64>(), ri in 0usize..6, grouped in any::<bool>()) {
        let (mut rng, form) = setup(seed, ri, ordering(grouped));
        let g = random_conjugator(&form, &mut rng).unwrap().letters[0].clone();
        let e = random_single(&form, &mut rng);
        let out = conjugate_letter(&g, &e, &form, RuleTable::standard()).unwrap();
        prop_assert!(out.is_dser());
        let mg = g.matrix(&form).unwrap();
        let lhs = mg.mul(&e.matrix(&form).unwrap()).unwrap().mul(&mg.inverse().unwrap()).unwrap();
        prop_assert_eq!(lhs, out.matrix(&form).unwrap());
    }

    #[test]
    fn conjugate_certificates_self_verify(seed in any::<u64>(), ri in 0usize..6) {
        let (mut rng, form) = setup(seed, ri, Ordering::Interleaved);
        let g = random_conjugator(&form, &mut rng).unwrap();
        let e = random_dser_word(&form, &mut rng);
        let cert = certificate::conjugate_certificate(&g, &e, &form, RuleTable::standard()).unwrap();
        prop_assert_eq!(&cert["matrices_equal"], &serde_json::json!(true));
        let text = serde_json::to_string(&cert).unwrap();
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert!(certificate::check(&back).unwrap().ok());
    }
}

#[test]
fn words_round_trip_through_json() {
    let r = Ring::rationals();
    let w = Word::parse_short("ealpha:1:2:1/2,inv:tau:3:1,sigma:-1:2,oe:3:5:4", &r).unwrap();
    assert_eq!(Word::from_json(&w.to_json(&r), &r).unwrap(), w);
    let m = Matrix::from_i64(&r, &[&[1, 2], &[3, 4]]).unwrap();
    let full = Letter::EAlpha(m);
    assert_eq!(Letter::from_json(&full.to_json(&r), &r).unwrap(), full);
}

#[test]
fn factorization_checks() {
    use dser_core::generators::verify_rao_factorization;
    let r = parse_ring("Zmod:7").unwrap();
    let form = AmbientForm::new(
        QuadraticSpace::diagonal(&r, &[r.from_i64(3), r.from_i64(5)]).unwrap(),
        2,
        Ordering::Interleaved,
    )
    .unwrap();
    let w1 = Word::parse_short("ealpha:1:2:4,ebeta:2:1:6", &r).unwrap();
    let w2 = Word::parse_short("tau:3:1,sigma:2:2,oe:3:5:1", &r).unwrap();
    let eta = w1.matrix(&form).unwrap().mul(&w2.matrix(&form).unwrap()).unwrap();
    assert!(verify_rao_factorization(&eta, &w1, &w2, &form));
    // factors in the wrong order, or a second factor touching Q
    assert!(!verify_rao_factorization(&eta, &w2, &w1, &form));
    let touches_q = Word::parse_short("ealpha:1:1:1", &r).unwrap();
    assert!(!verify_rao_factorization(&eta, &w1, &touches_q, &form));
    let other = Word::parse_short("tau:2:1", &r).unwrap();
    assert!(!verify_rao_factorization(&eta, &w1, &other, &form));
}
