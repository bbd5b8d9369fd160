use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::{Elem, LocFlavor, Ring, RingKind};

pub fn random_small_integer<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

/// A random element of moderate size. Laurent and polynomial elements have
/// at most three terms.
pub fn random_element<R: Rng + ?Sized>(ring: &Ring, rng: &mut R) -> Elem {
    match ring.kind() {
        RingKind::Integers => Elem::Int(BigInt::from(random_small_integer(rng, 9))),
        RingKind::Rationals => {
            let n = random_small_integer(rng, 9);
            let d = rng.random_range(1..=5i64);
            Elem::Rat(BigRational::new(n.into(), d.into()))
        }
        RingKind::Mod { modulus } => Elem::Res(rng.random_range(0..*modulus)),
        RingKind::Laurent {
            base,
            vars,
            invertible,
        } => {
            let mut acc = ring.zero();
            for _ in 0..rng.random_range(0..=3) {
                let c = random_element(base, rng);
                let mono: Vec<i32> = invertible
                    .iter()
                    .map(|&inv| if inv { rng.random_range(-2..=2) } else { rng.random_range(0..=2) })
                    .collect();
                let term = if base.is_zero(&c) {
                    ring.zero()
                } else {
                    Elem::Laurent(vec![(mono, c)])
                };
                debug_assert_eq!(vars.len(), invertible.len());
                acc = ring.add(&acc, &term);
            }
            acc
        }
        RingKind::Localized { base, flavor, .. } => {
            let num = random_element(base, rng);
            let k = match flavor {
                LocFlavor::Integers(_) => rng.random_range(0..=3),
                _ => 0,
            };
            let x = ring.localize(&num).expect("localized ring");
            match flavor {
                LocFlavor::Integers(s) => {
                    let d = ring.localize(&Elem::Int(s.clone())).expect("localized ring");
                    let d = ring.pow(&d, k);
                    ring.div(&x, &d).expect("s is a unit")
                }
                _ => x,
            }
        }
        RingKind::Poly { base, .. } => {
            let deg = rng.random_range(0..=3);
            let coeffs = (0..deg).map(|_| random_element(base, rng)).collect();
            ring.poly_from_coefficients(coeffs).expect("polynomial ring")
        }
    }
}

/// A random unit. Laurent units are monomials in the invertible variables.
pub fn random_unit<R: Rng + ?Sized>(ring: &Ring, rng: &mut R) -> Elem {
    match ring.kind() {
        RingKind::Integers => Elem::Int(BigInt::from(if rng.random_bool(0.5) { 1 } else { -1 })),
        RingKind::Laurent {
            base, invertible, ..
        } => {
            let c = random_unit(base, rng);
            let mono = invertible
                .iter()
                .map(|&inv| if inv { rng.random_range(-2..=2) } else { 0 })
                .collect();
            Elem::Laurent(vec![(mono, c)])
        }
        RingKind::Poly { base, .. } => {
            let c = random_unit(base, rng);
            ring.poly_from_coefficients(vec![c]).expect("polynomial ring")
        }
        _ => loop {
            let x = random_element(ring, rng);
            if ring.is_unit(&x) {
                return x;
            }
        },
    }
}
