use std::fmt;

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// An element bundled with its ring; binary operations check that both
/// operands live in the same ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    value: Elem,
}

impl RingElement {
    pub fn new(ring: &Ring, value: Elem) -> Self {
        RingElement {
            ring: ring.clone(),
            value,
        }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Ok(Self::new(ring, ring.parse(text)?))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    pub fn into_value(self) -> Elem {
        self.value
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::DescriptorMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.ring, self.ring.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.ring, self.ring.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.ring, self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.ring, self.ring.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::new(&self.ring, self.ring.inv(&self.value)?))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    /// Image under the canonical map into the localization `target`.
    pub fn localize(&self, target: &Ring) -> Result<Self> {
        match target.base() {
            Some(b) if *b == self.ring => Ok(Self::new(target, target.localize(&self.value)?)),
            _ => Err(Error::DescriptorMismatch {
                left: self.ring.to_string(),
                right: target.to_string(),
            }),
        }
    }

    /// `(k, r)` with `s^k · self = r/1` and `k` minimal.
    pub fn clear_denominator_power(&self) -> Result<(u32, RingElement)> {
        let (k, r) = self.ring.clear_denominator_power(&self.value)?;
        let base = self.ring.base().expect("localized ring has a base");
        Ok((k, Self::new(base, r)))
    }

    /// Evaluates this polynomial at `image`, which lives in this ring or in
    /// its coefficient ring.
    pub fn substitute(&self, image: &RingElement) -> Result<Self> {
        let target = image.ring();
        let v = self.ring.poly_substitute(&self.value, &image.value, target)?;
        Ok(Self::new(target, v))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}
