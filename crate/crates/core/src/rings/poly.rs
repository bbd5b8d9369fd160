use super::{Elem, Ring};

pub(super) fn trimmed(mut c: Vec<Elem>, base: &Ring) -> Elem {
    while c.last().is_some_and(|x| base.is_zero(x)) {
        c.pop();
    }
    Elem::Poly(c)
}

pub(super) fn add(base: &Ring, a: &[Elem], b: &[Elem]) -> Elem {
    let n = a.len().max(b.len());
    let zero = base.zero();
    let c = (0..n)
        .map(|i| base.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trimmed(c, base)
}

pub(super) fn mul(base: &Ring, a: &[Elem], b: &[Elem]) -> Elem {
    if a.is_empty() || b.is_empty() {
        return Elem::Poly(Vec::new());
    }
    let mut c = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] = base.add(&c[i + j], &base.mul(x, y));
        }
    }
    trimmed(c, base)
}
