use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

pub(crate) fn reduce_big(n: &BigInt, modulus: u64) -> u64 {
    let m = BigInt::from(modulus);
    n.mod_floor(&m).to_u64().expect("residue fits in u64")
}

/// Inverse of `a` modulo `modulus`, if it exists.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(modulus as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(modulus as i128) as u64)
}

/// Removes from `n` every prime factor it shares with `s`.
pub(crate) fn strip_common_primes(mut n: u64, s: u64) -> u64 {
    loop {
        let g = n.gcd(&s);
        if g == 1 || n == 1 {
            return n;
        }
        if s == 0 {
            // every prime divides 0
            return 1;
        }
        while n.is_multiple_of(g) && g != 1 {
            n /= g;
        }
    }
}

pub fn is_odd_prime_power(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 2;
    }
    true
}

/// `Some(q)` when `d` divides `n` exactly.
pub(crate) fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = n.div_rem(d);
    if r == BigInt::from(0) {
        Some(q)
    } else {
        None
    }
}

/// Strips from `r` every prime it shares with `s`; the remainder is `±1`
/// exactly when `r` is a unit in `Z[1/s]`.
pub(crate) fn s_free_part(r: &BigInt, s: &BigInt) -> BigInt {
    let mut r = r.abs();
    loop {
        let g = r.gcd(s);
        if g == BigInt::from(1) {
            return r;
        }
        while let Some(q) = exact_div(&r, &g) {
            r = q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_two_mod_nine() {
        assert_eq!(mod_inverse(2, 9), Some(5));
        assert_eq!(mod_inverse(3, 9), None);
    }

    #[test]
    fn prime_powers() {
        assert!(is_odd_prime_power(7));
        assert!(is_odd_prime_power(9));
        assert!(is_odd_prime_power(125));
        assert!(!is_odd_prime_power(15));
        assert!(!is_odd_prime_power(1));
    }

    #[test]
    fn strip() {
        assert_eq!(strip_common_primes(45, 3), 5);
        assert_eq!(strip_common_primes(45, 15), 1);
        assert_eq!(strip_common_primes(45, 2), 45);
    }
}
