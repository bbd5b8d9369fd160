//! Exact commutative rings.
//!
//! A [`Ring`] is a cheap-to-clone handle on a ring descriptor; arithmetic is
//! performed by the ring on bare [`Elem`] payloads, which are always kept in
//! canonical form so that structural equality is ring equality.
//!
//! The tower is fixed: `Z`, `Q`, `Z/nZ` for odd `n`, multivariate Laurent
//! polynomials over any of these, localizations `R_s` of `Z`, `Q` and `Z/nZ`,
//! and univariate polynomial extensions `R[X]` of anything in the tower.

mod element;
mod integer;
mod laurent;
mod localized;
mod parse;
mod poly;
mod sample;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use element::RingElement;
pub use integer::{is_odd_prime_power, mod_inverse};
pub use parse::parse_ring;
pub use sample::{random_element, random_small_integer, random_unit};

/// Exponent vector of a Laurent monomial, one entry per ring variable.
pub type Monomial = Vec<i32>;

/// Canonical payload of a ring element. Only meaningful together with the
/// [`Ring`] that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in `[0, modulus)`.
    Res(u64),
    /// Sorted by monomial, no zero coefficients.
    Laurent(Vec<(Monomial, Elem)>),
    /// `num / s^k` with `k` minimal.
    Frac { num: Box<Elem>, k: u32 },
    /// Coefficients in increasing degree, no trailing zeros.
    Poly(Vec<Elem>),
}

/// How a localization is represented, depending on its base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocFlavor {
    /// `Z[1/s]`, payload `r / s^k`.
    Integers(BigInt),
    /// `Q_s = Q`, payload always `k = 0`.
    Rationals(BigRational),
    /// `(Z/n)_s = Z/n'`, where `n'` is `n` with every prime dividing `s` removed;
    /// payload always `k = 0`.
    Residues { s: u64, reduced: u64 },
}

#[derive(Debug, PartialEq, Eq)]
pub enum RingKind {
    Integers,
    Rationals,
    Mod {
        modulus: u64,
    },
    Laurent {
        base: Ring,
        vars: Vec<String>,
        invertible: Vec<bool>,
    },
    Localized {
        base: Ring,
        s: Elem,
        flavor: LocFlavor,
    },
    Poly {
        base: Ring,
        var: String,
    },
}

#[derive(Clone)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Mod { modulus } => write!(f, "Zmod:{modulus}"),
            RingKind::Laurent {
                base,
                vars,
                invertible,
            } => {
                let inv: Vec<&str> = vars
                    .iter()
                    .zip(invertible)
                    .filter(|(_, &i)| i)
                    .map(|(v, _)| v.as_str())
                    .collect();
                write!(f, "laurent:{base}:[{}]:inv=[{}]", vars.join(","), inv.join(","))
            }
            RingKind::Localized { base, s, .. } => write!(f, "loc:{base}:s={}", base.format(s)),
            RingKind::Poly { base, var } => write!(f, "poly:{base}:{var}"),
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn integers() -> Ring {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(RingKind::Rationals))
    }

    /// `Z/nZ`; the modulus must be odd so that 2 is a unit.
    pub fn modular(modulus: u64) -> Result<Ring> {
        if modulus == 0 || modulus.is_multiple_of(2) {
            return Err(Error::InvalidRing(format!(
                "modulus must be a positive odd integer, got {modulus}"
            )));
        }
        if modulus > u32::MAX as u64 {
            return Err(Error::InvalidRing(format!("modulus {modulus} too large")));
        }
        Ok(Ring(Arc::new(RingKind::Mod { modulus })))
    }

    /// Laurent polynomials over `base` in `vars`; only the variables listed in
    /// `invertible` may carry negative exponents.
    pub fn laurent<S: AsRef<str>>(base: &Ring, vars: &[S], invertible: &[S]) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        let mut flags = vec![false; vars.len()];
        for v in invertible {
            let v = v.as_ref();
            match vars.iter().position(|w| w == v) {
                Some(i) => flags[i] = true,
                None => {
                    return Err(Error::InvalidRing(format!(
                        "invertible variable `{v}` is not a ring variable"
                    )))
                }
            }
        }
        Ok(Ring(Arc::new(RingKind::Laurent {
            base: base.clone(),
            vars,
            invertible: flags,
        })))
    }

    /// The localization `base_s`. Supported bases are `Z`, `Q` and `Z/nZ`;
    /// `s` must not be nilpotent.
    pub fn localized(base: &Ring, s: &Elem) -> Result<Ring> {
        let flavor = match base.kind() {
            RingKind::Integers => {
                let Elem::Int(v) = s else { unreachable!() };
                if v.is_zero() {
                    return Err(Error::InvalidRing("cannot localize at a nilpotent element (0)".into()));
                }
                LocFlavor::Integers(v.clone())
            }
            RingKind::Rationals => {
                let Elem::Rat(v) = s else { unreachable!() };
                if v.is_zero() {
                    return Err(Error::InvalidRing("cannot localize at a nilpotent element (0)".into()));
                }
                LocFlavor::Rationals(v.clone())
            }
            RingKind::Mod { modulus } => {
                let Elem::Res(v) = s else { unreachable!() };
                let reduced = integer::strip_common_primes(*modulus, *v);
                if reduced == 1 && *modulus != 1 {
                    return Err(Error::InvalidRing(format!(
                        "{} is nilpotent in Zmod:{modulus}",
                        v
                    )));
                }
                LocFlavor::Residues { s: *v, reduced }
            }
            _ => {
                return Err(Error::InvalidRing(format!(
                    "localization is only supported over Z, Q and Zmod, not {base}"
                )))
            }
        };
        Ok(Ring(Arc::new(RingKind::Localized {
            base: base.clone(),
            s: s.clone(),
            flavor,
        })))
    }

    pub fn poly(base: &Ring, var: &str) -> Result<Ring> {
        if !valid_name(var) {
            return Err(Error::InvalidRing(format!("invalid variable name `{var}`")));
        }
        Ok(Ring(Arc::new(RingKind::Poly {
            base: base.clone(),
            var: var.to_string(),
        })))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn base(&self) -> Option<&Ring> {
        match self.kind() {
            RingKind::Laurent { base, .. }
            | RingKind::Localized { base, .. }
            | RingKind::Poly { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(BigInt::zero()),
            RingKind::Rationals => Elem::Rat(BigRational::zero()),
            RingKind::Mod { .. } => Elem::Res(0),
            RingKind::Laurent { .. } => Elem::Laurent(Vec::new()),
            RingKind::Localized { base, .. } => Elem::Frac {
                num: Box::new(base.zero()),
                k: 0,
            },
            RingKind::Poly { .. } => Elem::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_int(&BigInt::from(n))
    }

    pub fn from_int(&self, n: &BigInt) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(n.clone()),
            RingKind::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            RingKind::Mod { modulus } => Elem::Res(integer::reduce_big(n, *modulus)),
            RingKind::Laurent { base, vars, .. } => {
                laurent::constant(base, vars.len(), base.from_int(n))
            }
            RingKind::Localized { base, flavor, .. } => {
                localized::canonical(base, flavor, base.from_int(n), 0)
            }
            RingKind::Poly { base, .. } => poly::trimmed(vec![base.from_int(n)], base),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let num = self.from_int(q.numer());
        let den = self.from_int(q.denom());
        self.div(&num, &den)
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Int(v) => v.is_zero(),
            Elem::Rat(v) => v.is_zero(),
            Elem::Res(v) => *v == 0,
            Elem::Laurent(t) => t.is_empty(),
            Elem::Frac { num, .. } => self.base().is_some_and(|b| b.is_zero(num)),
            Elem::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        match (self.kind(), x, y) {
            (RingKind::Integers, Elem::Int(a), Elem::Int(b)) => Elem::Int(a + b),
            (RingKind::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a + b),
            (RingKind::Mod { modulus }, Elem::Res(a), Elem::Res(b)) => {
                Elem::Res(((*a as u128 + *b as u128) % *modulus as u128) as u64)
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(a), Elem::Laurent(b)) => {
                Elem::Laurent(laurent::add(base, a, b))
            }
            (RingKind::Localized { base, flavor, .. }, Elem::Frac { .. }, Elem::Frac { .. }) => {
                localized::add(base, flavor, x, y)
            }
            (RingKind::Poly { base, .. }, Elem::Poly(a), Elem::Poly(b)) => poly::add(base, a, b),
            _ => self.foreign(x, y),
        }
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        match (self.kind(), x) {
            (RingKind::Integers, Elem::Int(a)) => Elem::Int(-a),
            (RingKind::Rationals, Elem::Rat(a)) => Elem::Rat(-a),
            (RingKind::Mod { modulus }, Elem::Res(a)) => {
                Elem::Res(if *a == 0 { 0 } else { modulus - a })
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(a)) => Elem::Laurent(
                a.iter().map(|(mono, c)| (mono.clone(), base.neg(c))).collect(),
            ),
            (RingKind::Localized { base, .. }, Elem::Frac { num, k }) => Elem::Frac {
                num: Box::new(base.neg(num)),
                k: *k,
            },
            (RingKind::Poly { base, .. }, Elem::Poly(a)) => {
                Elem::Poly(a.iter().map(|c| base.neg(c)).collect())
            }
            _ => self.foreign(x, x),
        }
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        match (self.kind(), x, y) {
            (RingKind::Integers, Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (RingKind::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a * b),
            (RingKind::Mod { modulus }, Elem::Res(a), Elem::Res(b)) => {
                Elem::Res(((*a as u128 * *b as u128) % *modulus as u128) as u64)
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(a), Elem::Laurent(b)) => {
                Elem::Laurent(laurent::mul(base, a, b))
            }
            (RingKind::Localized { base, flavor, .. }, Elem::Frac { .. }, Elem::Frac { .. }) => {
                localized::mul(base, flavor, x, y)
            }
            (RingKind::Poly { base, .. }, Elem::Poly(a), Elem::Poly(b)) => poly::mul(base, a, b),
            _ => self.foreign(x, y),
        }
    }

    pub fn pow(&self, x: &Elem, mut e: u32) -> Elem {
        let mut acc = self.one();
        let mut sq = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Integer power; negative exponents require `x` to be a unit.
    pub fn pow_signed(&self, x: &Elem, e: i64) -> Result<Elem> {
        let p = self.pow(x, e.unsigned_abs() as u32);
        if e < 0 {
            self.inv(&p)
        } else {
            Ok(p)
        }
    }

    /// Multiplicative inverse; fails with [`Error::NotAUnit`] carrying a
    /// ring-specific witness.
    pub fn inv(&self, x: &Elem) -> Result<Elem> {
        let not_unit = |witness: String| Error::NotAUnit {
            element: self.format(x),
            ring: self.to_string(),
            witness,
        };
        match (self.kind(), x) {
            (RingKind::Integers, Elem::Int(a)) => {
                if a.abs().is_one() {
                    Ok(Elem::Int(a.clone()))
                } else {
                    Err(not_unit("only 1 and -1 are units in Z".into()))
                }
            }
            (RingKind::Rationals, Elem::Rat(a)) => {
                if a.is_zero() {
                    Err(not_unit("zero".into()))
                } else {
                    Ok(Elem::Rat(a.recip()))
                }
            }
            (RingKind::Mod { modulus }, Elem::Res(a)) => mod_inverse(*a, *modulus)
                .map(Elem::Res)
                .ok_or_else(|| not_unit(format!("gcd({a}, {modulus}) = {}", a.gcd(modulus)))),
            (RingKind::Laurent { base, invertible, .. }, Elem::Laurent(t)) => {
                laurent::inv(base, invertible, t).map_err(not_unit)
            }
            (RingKind::Localized { base, flavor, .. }, Elem::Frac { .. }) => {
                localized::inv(base, flavor, x).map_err(not_unit)
            }
            (RingKind::Poly { base, .. }, Elem::Poly(c)) => {
                if c.len() == 1 {
                    Ok(Elem::Poly(vec![base.inv(&c[0]).map_err(|e| not_unit(e.to_string()))?]))
                } else if c.is_empty() {
                    Err(not_unit("zero".into()))
                } else {
                    Err(not_unit("non-constant polynomial".into()))
                }
            }
            _ => self.foreign(x, x),
        }
    }

    pub fn is_unit(&self, x: &Elem) -> bool {
        self.inv(x).is_ok()
    }

    pub fn div(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// The element `1/2`.
    pub fn half(&self) -> Result<Elem> {
        self.inv(&self.from_i64(2))
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// The generator called `name`, looked up through the tower; `None` if
    /// no ring in the tower has such a variable.
    pub fn variable(&self, name: &str) -> Option<Elem> {
        match self.kind() {
            RingKind::Laurent { base, vars, .. } => match vars.iter().position(|v| v == name) {
                Some(i) => {
                    let mut mono = vec![0; vars.len()];
                    mono[i] = 1;
                    Some(Elem::Laurent(vec![(mono, base.one())]))
                }
                None => base
                    .variable(name)
                    .map(|c| laurent::constant(base, vars.len(), c)),
            },
            RingKind::Poly { base, var } => {
                if var == name {
                    Some(poly::trimmed(vec![base.zero(), base.one()], base))
                } else {
                    base.variable(name).map(|c| poly::trimmed(vec![c], base))
                }
            }
            RingKind::Localized { base, flavor, .. } => base
                .variable(name)
                .map(|c| localized::canonical(base, flavor, c, 0)),
            _ => None,
        }
    }

    /// Canonical image of `x` (an element of `self`) in `target`.
    pub fn coerce(&self, x: &Elem, target: &Ring) -> Result<Elem> {
        if self == target {
            return Ok(x.clone());
        }
        let unsupported = || Error::UnsupportedCoercion {
            from: self.to_string(),
            to: target.to_string(),
        };
        match (self.kind(), target.kind()) {
            (RingKind::Poly { base: a, var: va }, RingKind::Poly { base: b, var: vb })
                if va == vb =>
            {
                let Elem::Poly(c) = x else { unreachable!() };
                let coeffs = c.iter().map(|e| a.coerce(e, b)).collect::<Result<Vec<_>>>()?;
                Ok(poly::trimmed(coeffs, b))
            }
            (
                RingKind::Laurent { base: a, vars: va, invertible: ia },
                RingKind::Laurent { base: b, vars: vb, invertible: ib },
            ) if va == vb && ia == ib => {
                let Elem::Laurent(t) = x else { unreachable!() };
                let mut out = Vec::with_capacity(t.len());
                for (mono, c) in t {
                    let c = a.coerce(c, b)?;
                    if !b.is_zero(&c) {
                        out.push((mono.clone(), c));
                    }
                }
                Ok(Elem::Laurent(out))
            }
            (_, RingKind::Poly { base, .. }) => {
                let c = self.coerce(x, base)?;
                Ok(poly::trimmed(vec![c], base))
            }
            (_, RingKind::Laurent { base, vars, .. }) => {
                let c = self.coerce(x, base)?;
                Ok(laurent::constant(base, vars.len(), c))
            }
            (RingKind::Localized { base: b, s: s1, .. }, RingKind::Localized { base: b2, .. })
                if b == b2 =>
            {
                // R_{s1} -> R_{s2} exists when s1 is a unit in R_{s2}
                let Elem::Frac { num, k } = x else { unreachable!() };
                let n = target.coerce_from_base(num)?;
                let s = target.coerce_from_base(s1)?;
                let d = target.pow(&s, *k);
                target.div(&n, &d).map_err(|_| unsupported())
            }
            (RingKind::Localized { base, s, .. }, _) => {
                let Elem::Frac { num, k } = x else { unreachable!() };
                let n = base.coerce(num, target)?;
                let s = base.coerce(s, target)?;
                let d = target.pow(&s, *k);
                target.div(&n, &d).map_err(|_| unsupported())
            }
            (_, RingKind::Localized { base, flavor, .. }) => {
                let c = self.coerce(x, base)?;
                Ok(localized::canonical(base, flavor, c, 0))
            }
            (RingKind::Integers, RingKind::Rationals) => {
                let Elem::Int(v) = x else { unreachable!() };
                Ok(Elem::Rat(BigRational::from_integer(v.clone())))
            }
            (RingKind::Integers, RingKind::Mod { .. }) => {
                let Elem::Int(v) = x else { unreachable!() };
                Ok(target.from_int(v))
            }
            (RingKind::Rationals, RingKind::Mod { .. }) => {
                let Elem::Rat(v) = x else { unreachable!() };
                target.from_rational(v).map_err(|_| unsupported())
            }
            _ => Err(unsupported()),
        }
    }

    fn coerce_from_base(&self, x: &Elem) -> Result<Elem> {
        match self.kind() {
            RingKind::Localized { base, flavor, .. } => {
                Ok(localized::canonical(base, flavor, x.clone(), 0))
            }
            _ => unreachable!(),
        }
    }

    /// Smallest ring of the tower containing `self` in which 2 is a unit.
    /// `Z` and its localizations map to `Q`; every other ring is returned
    /// unchanged. The embedding is injective, so identities checked in the
    /// result hold in `self`.
    pub fn with_two_inverted(&self) -> Ring {
        if self.half().is_ok() {
            return self.clone();
        }
        match self.kind() {
            RingKind::Integers | RingKind::Localized { .. } => Ring::rationals(),
            RingKind::Poly { base, var } => Ring::poly(&base.with_two_inverted(), var)
                .expect("variable already validated"),
            RingKind::Laurent {
                base,
                vars,
                invertible,
            } => {
                let inv: Vec<&String> = vars
                    .iter()
                    .zip(invertible)
                    .filter(|(_, &i)| i)
                    .map(|(v, _)| v)
                    .collect();
                Ring::laurent(&base.with_two_inverted(), vars, &inv.into_iter().cloned().collect::<Vec<_>>())
                    .expect("variables already validated")
            }
            _ => self.clone(),
        }
    }

    /// Whether the ring is known to be local: `Q`, `Z/p^k` for an odd prime
    /// `p`, and localizations that collapse to one of these.
    pub fn is_local(&self) -> bool {
        match self.kind() {
            RingKind::Rationals => true,
            RingKind::Mod { modulus } => is_odd_prime_power(*modulus),
            RingKind::Localized { flavor, .. } => match flavor {
                LocFlavor::Rationals(_) => true,
                LocFlavor::Residues { reduced, .. } => is_odd_prime_power(*reduced),
                LocFlavor::Integers(_) => false,
            },
            _ => false,
        }
    }

    /// For `Localized(R, s)`: the minimal `k` and `r ∈ R` with `s^k x = r/1`.
    pub fn clear_denominator_power(&self, x: &Elem) -> Result<(u32, Elem)> {
        match (self.kind(), x) {
            (RingKind::Localized { base, flavor, .. }, Elem::Frac { num, k }) => {
                Ok(localized::clear_denominator(base, flavor, num, *k))
            }
            _ => Err(Error::InvalidRing(format!(
                "clear_denominator_power needs a localized ring, got {self}"
            ))),
        }
    }

    /// Image of `x ∈ R` in `self = R_s`.
    pub fn localize(&self, x: &Elem) -> Result<Elem> {
        match self.kind() {
            RingKind::Localized { base, flavor, .. } => {
                Ok(localized::canonical(base, flavor, x.clone(), 0))
            }
            _ => Err(Error::InvalidRing(format!("{self} is not a localization"))),
        }
    }

    /// Evaluates `p ∈ self = R[X]` at `image`, an element of `target`, which
    /// must be `R` or a ring that `R` coerces into (typically `R[X]` itself).
    pub fn poly_substitute(&self, p: &Elem, image: &Elem, target: &Ring) -> Result<Elem> {
        let (RingKind::Poly { base, .. }, Elem::Poly(coeffs)) = (self.kind(), p) else {
            return Err(Error::InvalidRing(format!("{self} is not a polynomial ring")));
        };
        let mut acc = target.zero();
        for c in coeffs.iter().rev() {
            acc = target.mul(&acc, image);
            acc = target.add(&acc, &base.coerce(c, target)?);
        }
        Ok(acc)
    }

    /// Coefficients of `p ∈ R[X]` in increasing degree.
    pub fn poly_coefficients<'a>(&self, p: &'a Elem) -> Result<&'a [Elem]> {
        match (self.kind(), p) {
            (RingKind::Poly { .. }, Elem::Poly(c)) => Ok(c),
            _ => Err(Error::InvalidRing(format!("{self} is not a polynomial ring"))),
        }
    }

    pub fn poly_from_coefficients(&self, coeffs: Vec<Elem>) -> Result<Elem> {
        match self.kind() {
            RingKind::Poly { base, .. } => Ok(poly::trimmed(coeffs, base)),
            _ => Err(Error::InvalidRing(format!("{self} is not a polynomial ring"))),
        }
    }

    /// Splits off a leading minus sign when the ring has an ordering on its
    /// constants; used only for display.
    pub(crate) fn split_sign(&self, x: &Elem) -> (bool, Elem) {
        match (self.kind(), x) {
            (RingKind::Integers, Elem::Int(v)) if v.is_negative() => (true, Elem::Int(-v)),
            (RingKind::Rationals, Elem::Rat(v)) if v.is_negative() => (true, Elem::Rat(-v)),
            (RingKind::Localized { base, .. }, Elem::Frac { num, k }) => {
                let (neg, abs) = base.split_sign(num);
                (neg, Elem::Frac { num: Box::new(abs), k: *k })
            }
            _ => (false, x.clone()),
        }
    }

    pub fn format(&self, x: &Elem) -> String {
        parse::format_elem(self, x)
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        parse::parse_elem(self, text)
    }

    fn foreign(&self, x: &Elem, y: &Elem) -> ! {
        panic!("element payloads {x:?} / {y:?} do not belong to {self}")
    }
}

#[cfg(test)]
mod tests;
