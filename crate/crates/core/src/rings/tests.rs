use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

const KINDS: &[&str] = &[
    "Z",
    "Q",
    "Zmod:9",
    "Zmod:15",
    "laurent:Q:[a,u]:inv=[u]",
    "laurent:Zmod:7:[u]:inv=[u]",
    "loc:Z:s=6",
    "loc:Zmod:15:s=3",
    "loc:Q:s=5",
    "poly:Q:X",
    "poly:loc:Z:s=2:X",
];

fn ring(text: &str) -> Ring {
    parse_ring(text).unwrap()
}

fn el(r: &Ring, text: &str) -> Elem {
    r.parse(text).unwrap()
}

/// Rational value of an element of `Z_s`, computed from the payload alone.
fn rational_value(r: &Ring, x: &Elem) -> BigRational {
    let (RingKind::Localized { s: Elem::Int(s), .. }, Elem::Frac { num, k }) = (r.kind(), x) else {
        panic!("expected an element of a localization of Z");
    };
    let Elem::Int(n) = &**num else { panic!() };
    BigRational::new(n.clone(), num_traits::pow(s.clone(), *k as usize))
}

#[test]
fn modular_addition() {
    let r = ring("Zmod:9");
    assert_eq!(r.add(&el(&r, "5"), &el(&r, "7")), r.from_i64((5 + 7) % 9));
}

#[test]
fn inverse_examples() {
    let q = Ring::rationals();
    assert_eq!(q.inv(&el(&q, "2")).unwrap(), el(&q, "1/2"));
    let r = ring("Zmod:9");
    let inv = r.inv(&el(&r, "2")).unwrap();
    assert_eq!(inv, r.from_i64(5));
    assert_eq!((2 * 5) % 9, 1);
    let l = ring("laurent:Q:[u]:inv=[u]");
    assert_eq!(l.inv(&el(&l, "3*u^2")).unwrap(), el(&l, "1/3*u^-2"));
    assert!(l.is_one(&l.mul(&el(&l, "u"), &el(&l, "u^-1"))));
}

#[test]
fn non_units_carry_witnesses() {
    let r = ring("Zmod:9");
    let err = r.inv(&el(&r, "3")).unwrap_err();
    assert_eq!(err.kind(), "NotAUnit");
    let l = ring("laurent:Q:[a,u]:inv=[u]");
    assert!(l.inv(&el(&l, "1 + u")).is_err());
    assert!(l.inv(&el(&l, "a")).is_err());
}

#[test]
fn localization_examples() {
    let z = Ring::integers();
    let z2 = ring("loc:Z:s=2");
    let six = z2.localize(&el(&z, "6")).unwrap();
    assert_eq!(z2.format(&six), "6");
    let q = z2.div(&six, &z2.localize(&el(&z, "4")).unwrap()).unwrap();
    assert_eq!(q, Elem::Frac { num: Box::new(el(&z, "3")), k: 1 });
    assert_eq!(z2.format(&q), "3/2");
    let z3 = ring("loc:Z:s=3");
    assert!(z3.is_zero(&z3.localize(&z.zero()).unwrap()));
}

#[test]
fn clear_denominator_examples() {
    let z2 = ring("loc:Z:s=2");
    let z = Ring::integers();
    assert_eq!(z2.clear_denominator_power(&el(&z2, "3/4")).unwrap(), (2, el(&z, "3")));
    assert_eq!(z2.clear_denominator_power(&el(&z2, "5")).unwrap(), (0, el(&z, "5")));
    assert_eq!(z2.clear_denominator_power(&z2.zero()).unwrap(), (0, z.zero()));
    // brute force over k = 0, 1, 2
    let x = rational_value(&z2, &el(&z2, "3/4"));
    let first = (0..3).find(|&k| (&x * BigRational::from_integer(BigInt::from(1 << k))).is_integer());
    assert_eq!(first, Some(2));
}

#[test]
fn substitution_examples() {
    let zx = ring("poly:Z:X");
    let z = Ring::integers();
    assert_eq!(zx.poly_substitute(&el(&zx, "X^2"), &el(&zx, "2*X"), &zx).unwrap(), el(&zx, "4*X^2"));
    assert_eq!(zx.poly_substitute(&el(&zx, "3*X + 1"), &z.zero(), &z).unwrap(), el(&z, "1"));
    let x = 3i64;
    assert_eq!(zx.poly_substitute(&el(&zx, "X^2 + X"), &el(&z, "3"), &z).unwrap(), z.from_i64(x * x + x));
}

#[test]
fn descriptor_round_trip() {
    for text in KINDS {
        let r = ring(text);
        assert_eq!(r.to_string(), *text);
        assert_eq!(parse_ring(&r.to_string()).unwrap(), r);
    }
    assert!(parse_ring("Zmod:8").is_err());
    assert!(parse_ring("loc:Zmod:9:s=3").is_err());
}

#[test]
fn local_flags() {
    assert!(ring("Q").is_local());
    assert!(ring("Zmod:9").is_local());
    assert!(ring("Zmod:7").is_local());
    assert!(!ring("Zmod:15").is_local());
    assert!(!ring("Z").is_local());
    assert!(ring("loc:Zmod:15:s=3").is_local());
}

#[test]
fn mismatched_descriptors() {
    let a = RingElement::parse(&ring("Zmod:9"), "1").unwrap();
    let b = RingElement::parse(&ring("Zmod:7"), "1").unwrap();
    assert_eq!(a.add(&b).unwrap_err().kind(), "DescriptorMismatch");
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut rng = rng_for(seed);
        for text in KINDS {
            let r = ring(text);
            let x = random_element(&r, &mut rng);
            let y = random_element(&r, &mut rng);
            let z = random_element(&r, &mut rng);
            prop_assert_eq!(r.add(&r.add(&x, &y), &z), r.add(&x, &r.add(&y, &z)));
            prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
            prop_assert_eq!(r.add(&x, &y), r.add(&y, &x));
            prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
            prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
            prop_assert_eq!(r.add(&x, &r.zero()), x.clone());
            prop_assert_eq!(r.mul(&x, &r.one()), x.clone());
            prop_assert!(r.is_zero(&r.add(&x, &r.neg(&x))));
        }
    }

    #[test]
    fn format_parse_round_trip(seed in any::<u64>()) {
        let mut rng = rng_for(seed);
        for text in KINDS {
            let r = ring(text);
            let x = random_element(&r, &mut rng);
            prop_assert_eq!(r.parse(&r.format(&x)).unwrap(), x);
        }
    }

    #[test]
    fn inverse_is_involutive(seed in any::<u64>()) {
        let mut rng = rng_for(seed);
        for text in KINDS {
            let r = ring(text);
            let u = random_unit(&r, &mut rng);
            let v = r.inv(&u).unwrap();
            prop_assert!(r.is_one(&r.mul(&u, &v)));
            prop_assert_eq!(r.inv(&v).unwrap(), u);
        }
    }

    #[test]
    fn localize_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = rng_for(seed);
        for text in ["loc:Z:s=6", "loc:Zmod:15:s=3", "loc:Q:s=5"] {
            let r = ring(text);
            let base = r.base().unwrap().clone();
            let x = random_element(&base, &mut rng);
            let y = random_element(&base, &mut rng);
            let lx = r.localize(&x).unwrap();
            let ly = r.localize(&y).unwrap();
            prop_assert_eq!(r.localize(&base.add(&x, &y)).unwrap(), r.add(&lx, &ly));
            prop_assert_eq!(r.localize(&base.mul(&x, &y)).unwrap(), r.mul(&lx, &ly));
        }
    }

    #[test]
    fn clear_denominator_is_minimal(seed in any::<u64>(), si in 0usize..3) {
        let mut rng = rng_for(seed);
        let s = [2i64, 3, 6][si];
        let r = ring(&format!("loc:Z:s={s}"));
        let x = random_element(&r, &mut rng);
        let (k, num) = r.clear_denominator_power(&x).unwrap();
        let value = rational_value(&r, &x);
        let sk = |k: u32| BigRational::from_integer(num_traits::pow(BigInt::from(s), k as usize));
        let Elem::Int(num) = num else { panic!() };
        prop_assert_eq!(&value * sk(k), BigRational::from_integer(num));
        if k > 0 {
            prop_assert!(!(&value * sk(k - 1)).is_integer());
        }
    }
}
