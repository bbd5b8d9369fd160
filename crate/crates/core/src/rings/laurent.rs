use std::collections::BTreeMap;

use super::{Elem, Monomial, Ring};

pub(super) fn constant(base: &Ring, nvars: usize, c: Elem) -> Elem {
    if base.is_zero(&c) {
        Elem::Laurent(Vec::new())
    } else {
        Elem::Laurent(vec![(vec![0; nvars], c)])
    }
}

pub(super) fn add(base: &Ring, a: &[(Monomial, Elem)], b: &[(Monomial, Elem)]) -> Vec<(Monomial, Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = base.add(&a[i].1, &b[j].1);
                if !base.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub(super) fn mul(base: &Ring, a: &[(Monomial, Elem)], b: &[(Monomial, Elem)]) -> Vec<(Monomial, Elem)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc: BTreeMap<Monomial, Elem> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mono: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let c = base.mul(ca, cb);
            match acc.get_mut(&mono) {
                Some(slot) => *slot = base.add(slot, &c),
                None => {
                    acc.insert(mono, c);
                }
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect()
}

/// Units recognised here are monomials `c·x^e` with `c` a unit of the base
/// and negative-capable variables only.
pub(super) fn inv(base: &Ring, invertible: &[bool], t: &[(Monomial, Elem)]) -> Result<Elem, String> {
    match t {
        [] => Err("zero".into()),
        [(mono, c)] => {
            if let Some(i) = mono
                .iter()
                .zip(invertible)
                .position(|(&e, &inv)| e != 0 && !inv)
            {
                return Err(format!("monomial involves non-invertible variable #{}", i + 1));
            }
            let c = base.inv(c).map_err(|e| format!("coefficient is not a unit: {e}"))?;
            Ok(Elem::Laurent(vec![(mono.iter().map(|e| -e).collect(), c)]))
        }
        _ => Err(format!("non-monomial with {} terms", t.len())),
    }
}
