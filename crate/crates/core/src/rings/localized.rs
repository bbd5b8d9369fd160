use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::integer::{exact_div, mod_inverse, s_free_part};
use super::{Elem, LocFlavor, Ring};

/// Canonical form of `num / s^k` for `num` in the base ring.
pub(super) fn canonical(base: &Ring, flavor: &LocFlavor, num: Elem, k: u32) -> Elem {
    match (flavor, num) {
        (LocFlavor::Integers(s), Elem::Int(mut r)) => {
            let mut k = k;
            if r.is_zero() {
                k = 0;
            }
            while k > 0 {
                match exact_div(&r, s) {
                    Some(q) => {
                        r = q;
                        k -= 1;
                    }
                    None => break,
                }
            }
            frac(Elem::Int(r), k)
        }
        (LocFlavor::Rationals(s), Elem::Rat(q)) => {
            let mut v = q;
            for _ in 0..k {
                v /= s;
            }
            frac(Elem::Rat(v), 0)
        }
        (LocFlavor::Residues { s, reduced }, Elem::Res(r)) => {
            let r = r % reduced;
            let sinv = mod_inverse(s % reduced, *reduced).expect("s is a unit modulo the reduced modulus");
            let mut v = r as u128;
            for _ in 0..k {
                v = v * sinv as u128 % *reduced as u128;
            }
            frac(Elem::Res(v as u64), 0)
        }
        (_, other) => panic!("payload {other:?} does not belong to a localization of {base}"),
    }
}

fn frac(num: Elem, k: u32) -> Elem {
    Elem::Frac {
        num: Box::new(num),
        k,
    }
}

fn parts(x: &Elem) -> (&Elem, u32) {
    match x {
        Elem::Frac { num, k } => (num, *k),
        _ => unreachable!(),
    }
}

pub(super) fn add(base: &Ring, flavor: &LocFlavor, x: &Elem, y: &Elem) -> Elem {
    let ((a, ka), (b, kb)) = (parts(x), parts(y));
    match flavor {
        LocFlavor::Integers(s) => {
            let (Elem::Int(a), Elem::Int(b)) = (a, b) else { unreachable!() };
            let k = ka.max(kb);
            let a = a * num_traits::pow(s.clone(), (k - ka) as usize);
            let b = b * num_traits::pow(s.clone(), (k - kb) as usize);
            canonical(base, flavor, Elem::Int(a + b), k)
        }
        LocFlavor::Rationals(_) => frac(base.add(a, b), 0),
        LocFlavor::Residues { reduced, .. } => {
            let (Elem::Res(a), Elem::Res(b)) = (a, b) else { unreachable!() };
            frac(Elem::Res((a + b) % reduced), 0)
        }
    }
}

pub(super) fn mul(base: &Ring, flavor: &LocFlavor, x: &Elem, y: &Elem) -> Elem {
    let ((a, ka), (b, kb)) = (parts(x), parts(y));
    match flavor {
        LocFlavor::Integers(_) => canonical(base, flavor, base.mul(a, b), ka + kb),
        LocFlavor::Rationals(_) => frac(base.mul(a, b), 0),
        LocFlavor::Residues { reduced, .. } => {
            let (Elem::Res(a), Elem::Res(b)) = (a, b) else { unreachable!() };
            frac(Elem::Res((*a as u128 * *b as u128 % *reduced as u128) as u64), 0)
        }
    }
}

pub(super) fn inv(base: &Ring, flavor: &LocFlavor, x: &Elem) -> Result<Elem, String> {
    let (a, ka) = parts(x);
    match flavor {
        LocFlavor::Integers(s) => {
            let Elem::Int(r) = a else { unreachable!() };
            if r.is_zero() {
                return Err("zero".into());
            }
            let rest = s_free_part(r, s);
            if !rest.is_one() {
                return Err(format!("numerator has factor {rest} coprime to s = {s}"));
            }
            // smallest j with r | s^j
            let mut j = 0u32;
            let mut sj = BigInt::one();
            let q = loop {
                if let Some(q) = exact_div(&sj, r) {
                    break q;
                }
                sj *= s;
                j += 1;
            };
            let num = q * num_traits::pow(s.clone(), ka as usize);
            Ok(canonical(base, flavor, Elem::Int(num), j))
        }
        LocFlavor::Rationals(_) => base
            .inv(a)
            .map(|v| frac(v, 0))
            .map_err(|_| "zero".to_string()),
        LocFlavor::Residues { reduced, .. } => {
            let Elem::Res(r) = a else { unreachable!() };
            mod_inverse(*r, *reduced)
                .map(|v| frac(Elem::Res(v), 0))
                .ok_or_else(|| format!("not invertible modulo the reduced modulus {reduced}"))
        }
    }
}

pub(super) fn clear_denominator(_base: &Ring, _flavor: &LocFlavor, num: &Elem, k: u32) -> (u32, Elem) {
    (k, num.clone())
}
