//! Rewriting between generator families.
//!
//! * [`dser_to_oe`] / [`oe_to_dser`]: Roy's generators against the classical
//!   `oe_kl` when `φ = ψ̃_{n/2}`.
//! * [`conjugate_letter`] / [`conjugate_word`]: `g·e·g⁻¹` as a DSER word for
//!   torus, swap, `O(q)`-block and hyperbolic-block `oe` conjugators.
//! * [`split_orthogonal_h`]: `O(h)` over a local ring is `[u]⊥[u⁻¹]` or
//!   `[u]⊤[u⁻¹]`.
//!
//! Conjugators that fix `Q` act on a single-entry letter through the
//! hyperbolic basis vector it is attached to: if the letter sits at
//! coordinate `c` and `g·e_c = λ·e_c`, the image is the same kind of letter
//! at `c` with parameter `λx`; if `g·e_c = e_c + μ·e_{c'}` with `c'` not the
//! partner of `c`, the image is `E_{c'}(½μx)·E_c(x)·E_{c'}(½μx)`. The second
//! rule is exact because the letters involved generate a 2-step nilpotent
//! group, where `exp(A+B) = exp(A/2)·exp(B)·exp(A/2)`.

use crate::error::{Error, Result};
use crate::generators::{oe_indices, Letter, Word};
use crate::matrix::Matrix;
use crate::quadform::{hyperbolic_gram, is_orthogonal, AmbientForm, Ordering};
use crate::rings::{Elem, Ring};

fn require_hyperbolic(form: &AmbientForm) -> Result<()> {
    if form.ordering() != Ordering::Interleaved || !form.q().is_hyperbolic() {
        return Err(Error::NotHyperbolicForm);
    }
    Ok(())
}

/// `E_{α_kl(a)} = oe_{σ(l),n+2k}(−a)` and `E*_{β_kl(b)} = oe_{σ(l),n+2k−1}(−b)`.
pub fn dser_to_oe(letter: &Letter, form: &AmbientForm) -> Result<Letter> {
    require_hyperbolic(form)?;
    let (n, r) = (form.n(), form.ring());
    let (i, j, x, star) = match letter {
        Letter::EAlphaSingle { i, j, x } => (*i, *j, x, false),
        Letter::EBetaStarSingle { i, j, x } => (*i, *j, x, true),
        other => {
            return Err(Error::PreconditionViolated(format!(
                "dser_to_oe needs a single-entry letter, got {}",
                other.kind()
            )))
        }
    };
    if i == 0 || i > form.m() {
        return Err(Error::IndexOutOfRange { index: i, max: form.m() });
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    let k = form.sigma(j - 1)? + 1;
    let l = if star { n + 2 * i - 1 } else { n + 2 * i };
    Ok(Letter::oe(k, l, r.neg(x)))
}

/// A DSER word realizing `oe_kl(a)`: a commutator of two letters, or one
/// letter when exactly one index lies in `Q`.
pub fn oe_to_dser(k: usize, l: usize, a: &Elem, form: &AmbientForm) -> Result<Word> {
    require_hyperbolic(form)?;
    let n = form.n();
    if n < 2 {
        return Err(Error::PreconditionViolated("oe_to_dser needs n ≥ 2".into()));
    }
    oe_indices(form, k, l)?;
    let r = form.ring();
    let one = r.one();
    let minus_one = r.neg(&one);
    let sig = |t: usize| -> Result<usize> { Ok(form.sigma(t - 1)? + 1) };
    // hyperbolic index -> (plane, is P*)
    let coord = |t: usize| ((t - n).div_ceil(2), (t - n).is_multiple_of(2));
    if l <= n {
        return Ok(Word::commutator(
            Letter::ealpha(1, l, a.clone()),
            Letter::ebeta(1, sig(k)?, one),
        ));
    }
    if k <= n {
        let (p, star) = coord(l);
        let x = r.neg(a);
        return Ok(Word::single(if star {
            Letter::ealpha(p, sig(k)?, x)
        } else {
            Letter::ebeta(p, sig(k)?, x)
        }));
    }
    let s = 1;
    let (i, k_star) = coord(k);
    let (j, l_star) = coord(l);
    let s2 = sig(s)?;
    let first = if k_star {
        Letter::ebeta(i, s, a.clone())
    } else {
        Letter::ealpha(i, s, a.clone())
    };
    let second = if l_star {
        Letter::ealpha(j, s2, minus_one)
    } else {
        Letter::ebeta(j, s2, minus_one)
    };
    Ok(Word::commutator(first, second))
}

/// Which variant of the torus rules to apply. The standard table is the
/// verified one; the corrupted table scales `E*` letters by `u` under `τ_u`
/// and exists to exercise failure reporting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RuleTable {
    corrupted: bool,
}

impl RuleTable {
    pub fn standard() -> RuleTable {
        RuleTable { corrupted: false }
    }

    pub fn corrupted() -> RuleTable {
        RuleTable { corrupted: true }
    }

    pub fn is_corrupted(&self) -> bool {
        self.corrupted
    }
}

/// `(coordinate, column, parameter)` of a single-entry letter, 0-based.
fn single_parts<'a>(letter: &'a Letter, form: &AmbientForm) -> Result<(usize, usize, &'a Elem)> {
    match letter {
        Letter::EAlphaSingle { i, j, x } => Ok((form.p_index(*i)?, *j, x)),
        Letter::EBetaStarSingle { i, j, x } => Ok((form.pstar_index(*i)?, *j, x)),
        _ => unreachable!("caller passes singles only"),
    }
}

/// The single-entry letter attached to hyperbolic coordinate `c`.
fn single_at(form: &AmbientForm, c: usize, j: usize, x: Elem) -> Letter {
    let (plane, star) = form.hyperbolic_coordinate(c).expect("hyperbolic index");
    if star {
        Letter::ebeta(plane, j, x)
    } else {
        Letter::ealpha(plane, j, x)
    }
}

/// Splits a full `E_α` / `E*_β` into single-entry letters. Entries of one row
/// commute; rows are peeled off symmetrically.
pub fn expand_to_singles(letter: &Letter, form: &AmbientForm) -> Result<Word> {
    let (a, star) = match letter {
        Letter::EAlpha(a) => (a, false),
        Letter::EBetaStar(b) => (b, true),
        l if l.is_single() => return Ok(Word::single(l.clone())),
        other => {
            return Err(Error::PreconditionViolated(format!(
                "cannot expand {} into single-entry letters",
                other.kind()
            )))
        }
    };
    let r = form.ring();
    let rows: Vec<Vec<(usize, usize, Elem)>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .filter(|&j| !r.is_zero(a.get(i, j)))
                .map(|j| (i + 1, j + 1, a.get(i, j).clone()))
                .collect::<Vec<_>>()
        })
        .filter(|row| !row.is_empty())
        .collect();
    let make = |i: usize, j: usize, x: Elem| if star { Letter::ebeta(i, j, x) } else { Letter::ealpha(i, j, x) };
    let h = r.half()?;
    fn go(
        rows: &[Vec<(usize, usize, Elem)>],
        r: &Ring,
        h: &Elem,
        make: &dyn Fn(usize, usize, Elem) -> Letter,
        out: &mut Vec<Letter>,
    ) {
        match rows {
            [] => {}
            [row] => out.extend(row.iter().map(|(i, j, x)| make(*i, *j, x.clone()))),
            [first, rest @ ..] => {
                let halves: Vec<Letter> = first.iter().map(|(i, j, x)| make(*i, *j, r.mul(h, x))).collect();
                out.extend(halves.iter().cloned());
                go(rest, r, h, make, out);
                out.extend(halves);
            }
        }
    }
    let mut out = Vec::new();
    go(&rows, r, &h, &make, &mut out);
    Ok(Word::new(out))
}

fn tau_rule(table: RuleTable, form: &AmbientForm, u: &Elem, plane: usize, e: &Letter) -> Result<Word> {
    let r = form.ring();
    Ok(Word::single(match e {
        Letter::EAlphaSingle { i, j, x } if *i == plane => Letter::ealpha(*i, *j, r.mul(u, x)),
        Letter::EBetaStarSingle { i, j, x } if *i == plane => {
            let factor = if table.corrupted { u.clone() } else { r.inv(u)? };
            Letter::ebeta(*i, *j, r.mul(&factor, x))
        }
        other => other.clone(),
    }))
}

fn sigma_rule(form: &AmbientForm, u: &Elem, plane: usize, e: &Letter) -> Result<Word> {
    let r = form.ring();
    Ok(Word::single(match e {
        Letter::EAlphaSingle { i, j, x } if *i == plane => Letter::ebeta(*i, *j, r.mul(&r.inv(u)?, x)),
        Letter::EBetaStarSingle { i, j, x } if *i == plane => Letter::ealpha(*i, *j, r.mul(u, x)),
        other => other.clone(),
    }))
}

fn oe_rule(form: &AmbientForm, k: usize, l: usize, a: &Elem, e: &Letter) -> Result<Word> {
    let (k0, l0, sk, sl) = oe_indices(form, k, l)?;
    let (c, j, x) = single_parts(e, form)?;
    let r = form.ring();
    // oe·e_l = e_l + a·e_k and oe·e_{σ(k)} = e_{σ(k)} − a·e_{σ(l)}
    let (target, mu) = if c == l0 {
        (k0, a.clone())
    } else if c == sk {
        (sl, r.neg(a))
    } else {
        return Ok(Word::single(e.clone()));
    };
    let halfx = r.mul(&r.half()?, &r.mul(&mu, x));
    let side = single_at(form, target, j, halfx);
    Ok(Word::new(vec![side.clone(), e.clone(), side]))
}

fn block_rule(form: &AmbientForm, a: &Matrix, e: &Letter) -> Result<Word> {
    let ainv = form.q().orthogonal_inverse(a)?;
    let full = |i: usize, j: usize, x: &Elem| {
        let mut m = Matrix::zeros(form.ring(), form.m(), form.n());
        m.set(i - 1, j - 1, x.clone());
        m
    };
    Ok(Word::single(match e {
        Letter::EAlpha(alpha) => Letter::EAlpha(alpha.mul(&ainv)?),
        Letter::EBetaStar(beta) => Letter::EBetaStar(beta.mul(&ainv)?),
        Letter::EAlphaSingle { i, j, x } => Letter::EAlpha(full(*i, *j, x).mul(&ainv)?),
        Letter::EBetaStarSingle { i, j, x } => Letter::EBetaStar(full(*i, *j, x).mul(&ainv)?),
        _ => unreachable!("caller passes DSER letters only"),
    }))
}

/// Whether `g` is handled by [`conjugate_letter`] directly.
pub fn is_covered_conjugator(g: &Letter, form: &AmbientForm) -> bool {
    match g {
        Letter::Tau { .. } | Letter::SigmaU { .. } | Letter::BlockOq(_) => true,
        Letter::OE { k, l, .. } => *k > form.n() && *l > form.n(),
        Letter::Inverse(inner) => is_covered_conjugator(inner, form),
        _ => false,
    }
}

/// `g·e·g⁻¹` as a word of DSER letters, for a covered conjugator `g`.
pub fn conjugate_letter(g: &Letter, e: &Letter, form: &AmbientForm, table: RuleTable) -> Result<Word> {
    let ring = form.ring();
    if !is_covered_conjugator(g, form) {
        return Err(Error::UnsupportedConjugator {
            index: 0,
            letter: g.display(ring),
        });
    }
    if !e.is_dser() {
        return Err(Error::NotDserLetter {
            index: 0,
            letter: e.display(ring),
        });
    }
    if let Letter::Inverse(inner) = g {
        return conjugate_letter(&inner.inverse_letter(form)?, e, form, table);
    }
    if let Letter::Inverse(inner) = e {
        return Ok(conjugate_letter(g, inner, form, table)?.inverse());
    }
    if let Letter::BlockOq(a) = g {
        return block_rule(form, a, e);
    }
    let mut out = Word::empty();
    for single in expand_to_singles(e, form)?.letters {
        out.extend(match g {
            Letter::Tau { u, plane } => tau_rule(table, form, u, *plane, &single)?,
            Letter::SigmaU { u, plane } => sigma_rule(form, u, *plane, &single)?,
            Letter::OE { k, l, a } => oe_rule(form, *k, *l, a, &single)?,
            _ => unreachable!("covered conjugators only"),
        });
    }
    Ok(out)
}

/// `g·e·g⁻¹` for words. Conjugator letters are applied right to left; DSER
/// letters in `g` are kept as `[g, …, g⁻¹]`, and `oe` letters touching `Q`
/// are first rewritten with [`oe_to_dser`] (needs `φ = ψ̃`).
pub fn conjugate_word(g: &Word, e: &Word, form: &AmbientForm, table: RuleTable) -> Result<Word> {
    let ring = form.ring();
    if let Some((index, bad)) = e.letters.iter().enumerate().find(|(_, l)| !l.is_dser()) {
        return Err(Error::NotDserLetter {
            index,
            letter: bad.display(ring),
        });
    }
    let mut cur = e.clone();
    for (index, letter) in g.letters.iter().enumerate().rev() {
        let unsupported = || Error::UnsupportedConjugator {
            index,
            letter: letter.display(ring),
        };
        if letter.is_dser() {
            let mut next = Word::single(letter.clone());
            next.extend(cur);
            next.push(letter.clone().inverse());
            cur = next;
            continue;
        }
        let letter = match letter {
            Letter::Inverse(inner) => inner.inverse_letter(form)?,
            other => other.clone(),
        };
        if is_covered_conjugator(&letter, form) {
            let mut next = Word::empty();
            for e in &cur.letters {
                next.extend(conjugate_letter(&letter, e, form, table)?);
            }
            cur = next;
        } else if let Letter::OE { k, l, a } = &letter {
            let w = oe_to_dser(*k, *l, a, form).map_err(|err| match err {
                Error::NotHyperbolicForm => unsupported(),
                other => other,
            })?;
            let mut next = w.clone();
            next.extend(cur);
            next.extend(w.inverse());
            cur = next;
        } else {
            return Err(unsupported());
        }
    }
    Ok(cur)
}

/// Shape of an element of `O(h)` over a local ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HSplit {
    /// `[u] ⊥ [u⁻¹]`
    Diag(Elem),
    /// `[u] ⊤ [u⁻¹]`
    AntiDiag(Elem),
}

impl HSplit {
    pub fn unit(&self) -> &Elem {
        match self {
            HSplit::Diag(u) | HSplit::AntiDiag(u) => u,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            HSplit::Diag(_) => "Diag",
            HSplit::AntiDiag(_) => "AntiDiag",
        }
    }

    pub fn matrix(&self, ring: &Ring) -> Result<Matrix> {
        let u = self.unit();
        let uinv = ring.inv(u)?;
        let (z, zz) = (ring.zero(), ring.zero());
        Matrix::from_rows(
            ring,
            match self {
                HSplit::Diag(_) => vec![vec![u.clone(), z], vec![zz, uinv]],
                HSplit::AntiDiag(_) => vec![vec![z, u.clone()], vec![uinv, zz]],
            },
        )
    }
}

/// Splits `M ∈ O(h)`. The determinant decides: `1` gives `Diag(M₁₁)`, `−1`
/// gives `AntiDiag(M₁₂)`, anything else is a square root of 1 that witnesses a
/// non-local ring.
pub fn split_orthogonal_h(m: &Matrix) -> Result<HSplit> {
    let r = m.ring();
    if (m.rows(), m.cols()) != (2, 2) {
        return Err(Error::DimensionMismatch("split needs a 2x2 matrix".into()));
    }
    if !is_orthogonal(m, &hyperbolic_gram(r, 1, Ordering::Interleaved)) {
        return Err(Error::NotOrthogonal);
    }
    let det = m.det()?;
    let minus_one = r.neg(&r.one());
    let broken = || Error::PreconditionViolated(format!("orthogonal matrix {m} has an unexpected shape"));
    let out = if r.is_one(&det) {
        HSplit::Diag(m.get(0, 0).clone())
    } else if det == minus_one {
        // M·ψ̃₁ has determinant 1
        HSplit::AntiDiag(m.get(0, 1).clone())
    } else {
        return Err(Error::NotLocalRing { det: r.format(&det) });
    };
    if out.matrix(r).map_err(|_| broken())? != *m {
        return Err(broken());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_ring;

    #[test]
    fn dser_to_oe_examples() {
        let r = parse_ring("laurent:Q:[a,b]:inv=[]").unwrap();
        let f = AmbientForm::hyperbolic(&r, 2, 1).unwrap();
        let (a, b) = (r.variable("a").unwrap(), r.variable("b").unwrap());
        let ea = Letter::ealpha(1, 1, a.clone());
        let oe = dser_to_oe(&ea, &f).unwrap();
        assert_eq!(oe, Letter::oe(2, 4, r.neg(&a)));
        assert_eq!(oe.matrix(&f).unwrap(), ea.matrix(&f).unwrap());
        let eb = Letter::ebeta(1, 2, b.clone());
        let oe = dser_to_oe(&eb, &f).unwrap();
        assert_eq!(oe, Letter::oe(1, 3, r.neg(&b)));
        assert_eq!(oe.matrix(&f).unwrap(), eb.matrix(&f).unwrap());
    }

    #[test]
    fn oe_to_dser_case_shapes() {
        let r = parse_ring("laurent:Q:[a]:inv=[]").unwrap();
        let f = AmbientForm::hyperbolic(&r, 2, 2).unwrap();
        let a = r.variable("a").unwrap();
        let w = oe_to_dser(1, 2, &a, &f);
        assert!(matches!(w, Err(Error::PreconditionViolated(_))));
        let w = oe_to_dser(1, 3, &a, &f).unwrap();
        assert_eq!(w.len(), 1);
        let w = oe_to_dser(3, 5, &a, &f).unwrap();
        assert_eq!(w.letters[0], Letter::ealpha(1, 1, a.clone()));
        assert_eq!(w.letters[1], Letter::ebeta(2, 2, r.neg(&r.one())));
        assert!(matches!(oe_to_dser(3, 4, &a, &f), Err(Error::SamePlane { .. })));
    }

    #[test]
    fn split_examples() {
        let r = Ring::modular(7).unwrap();
        let m = Matrix::from_i64(&r, &[&[2, 0], &[0, 4]]).unwrap();
        assert_eq!(split_orthogonal_h(&m).unwrap(), HSplit::Diag(r.from_i64(2)));
        let m = Matrix::from_i64(&r, &[&[0, 3], &[5, 0]]).unwrap();
        assert_eq!(split_orthogonal_h(&m).unwrap(), HSplit::AntiDiag(r.from_i64(3)));
        let m = Matrix::from_i64(&r, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(split_orthogonal_h(&m), Err(Error::NotOrthogonal));
    }
}
