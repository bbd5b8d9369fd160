//! Generator letters and words, with exact matrix realizations.
//!
//! Letter parameters are bare [`Elem`]s; the ring comes from the
//! [`AmbientForm`] a letter is realized against. Plane indices `i`, column
//! indices `j` and basis indices `k, l` are 1-based.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quadform::{matrix_from_json, AmbientForm};
use crate::rings::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    /// `E_α` for an `m×n` matrix `α: Q → P`.
    EAlpha(Matrix),
    /// `E*_β` for an `m×n` matrix `β: Q → P*`.
    EBetaStar(Matrix),
    EAlphaSingle { i: usize, j: usize, x: Elem },
    EBetaStarSingle { i: usize, j: usize, x: Elem },
    /// `oe_kl(a) = I + a·e_kl − a·e_{σ(l),σ(k)}`.
    OE { k: usize, l: usize, a: Elem },
    /// `[u] ⊥ [u⁻¹]` on hyperbolic plane `plane`.
    Tau { u: Elem, plane: usize },
    /// `[u] ⊤ [u⁻¹]` on hyperbolic plane `plane`.
    SigmaU { u: Elem, plane: usize },
    /// `A ⊥ I_{2m}` for `A ∈ O(q)`.
    BlockOq(Matrix),
    Inverse(Box<Letter>),
}

impl Letter {
    pub fn ealpha(i: usize, j: usize, x: Elem) -> Letter {
        Letter::EAlphaSingle { i, j, x }
    }

    pub fn ebeta(i: usize, j: usize, x: Elem) -> Letter {
        Letter::EBetaStarSingle { i, j, x }
    }

    pub fn oe(k: usize, l: usize, a: Elem) -> Letter {
        Letter::OE { k, l, a }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Inverse(inner) => *inner,
            other => Letter::Inverse(Box::new(other)),
        }
    }

    /// Whether the letter lies in the DSER group by construction.
    pub fn is_dser(&self) -> bool {
        match self {
            Letter::EAlpha(_)
            | Letter::EBetaStar(_)
            | Letter::EAlphaSingle { .. }
            | Letter::EBetaStarSingle { .. } => true,
            Letter::Inverse(inner) => inner.is_dser(),
            _ => false,
        }
    }

    pub fn is_single(&self) -> bool {
        matches!(self, Letter::EAlphaSingle { .. } | Letter::EBetaStarSingle { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Letter::EAlpha(_) => "EAlpha",
            Letter::EBetaStar(_) => "EBetaStar",
            Letter::EAlphaSingle { .. } => "EAlphaSingle",
            Letter::EBetaStarSingle { .. } => "EBetaStarSingle",
            Letter::OE { .. } => "OE",
            Letter::Tau { .. } => "Tau",
            Letter::SigmaU { .. } => "SigmaU",
            Letter::BlockOq(_) => "BlockOq",
            Letter::Inverse(_) => "Inverse",
        }
    }

    /// An explicit letter (never `Inverse` at the top) realizing the inverse.
    pub fn inverse_letter(&self, form: &AmbientForm) -> Result<Letter> {
        let r = form.ring();
        Ok(match self {
            Letter::EAlpha(a) => Letter::EAlpha(a.neg()),
            Letter::EBetaStar(b) => Letter::EBetaStar(b.neg()),
            Letter::EAlphaSingle { i, j, x } => Letter::ealpha(*i, *j, r.neg(x)),
            Letter::EBetaStarSingle { i, j, x } => Letter::ebeta(*i, *j, r.neg(x)),
            Letter::OE { k, l, a } => Letter::oe(*k, *l, r.neg(a)),
            Letter::Tau { u, plane } => Letter::Tau {
                u: r.inv(u)?,
                plane: *plane,
            },
            Letter::SigmaU { .. } => self.clone(),
            Letter::BlockOq(a) => Letter::BlockOq(form.q().orthogonal_inverse(a)?),
            Letter::Inverse(inner) => match &**inner {
                Letter::Inverse(x) => x.inverse_letter(form)?,
                x => x.clone(),
            },
        })
    }

    /// The same letter with parameters mapped into `to`.
    pub fn coerce(&self, from: &Ring, to: &Ring) -> Result<Letter> {
        let c = |x: &Elem| from.coerce(x, to);
        Ok(match self {
            Letter::EAlpha(a) => Letter::EAlpha(a.coerce(to)?),
            Letter::EBetaStar(b) => Letter::EBetaStar(b.coerce(to)?),
            Letter::EAlphaSingle { i, j, x } => Letter::ealpha(*i, *j, c(x)?),
            Letter::EBetaStarSingle { i, j, x } => Letter::ebeta(*i, *j, c(x)?),
            Letter::OE { k, l, a } => Letter::oe(*k, *l, c(a)?),
            Letter::Tau { u, plane } => Letter::Tau {
                u: c(u)?,
                plane: *plane,
            },
            Letter::SigmaU { u, plane } => Letter::SigmaU {
                u: c(u)?,
                plane: *plane,
            },
            Letter::BlockOq(a) => Letter::BlockOq(a.coerce(to)?),
            Letter::Inverse(inner) => Letter::Inverse(Box::new(inner.coerce(from, to)?)),
        })
    }

    /// Every scalar parameter of the letter, including matrix entries.
    pub fn parameters(&self) -> Vec<Elem> {
        let entries = |a: &Matrix| {
            (0..a.rows())
                .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
                .map(|(i, j)| a.get(i, j).clone())
                .collect::<Vec<_>>()
        };
        match self {
            Letter::EAlpha(a) | Letter::EBetaStar(a) | Letter::BlockOq(a) => entries(a),
            Letter::EAlphaSingle { x, .. } | Letter::EBetaStarSingle { x, .. } => vec![x.clone()],
            Letter::OE { a, .. } => vec![a.clone()],
            Letter::Tau { u, .. } | Letter::SigmaU { u, .. } => vec![u.clone()],
            Letter::Inverse(inner) => inner.parameters(),
        }
    }

    /// Exact matrix in the form's basis ordering.
    pub fn matrix(&self, form: &AmbientForm) -> Result<Matrix> {
        match self {
            Letter::EAlpha(a) => dser_matrix(form, a, false),
            Letter::EBetaStar(b) => dser_matrix(form, b, true),
            Letter::EAlphaSingle { i, j, x } => single_matrix(form, *i, *j, x, false),
            Letter::EBetaStarSingle { i, j, x } => single_matrix(form, *i, *j, x, true),
            Letter::OE { k, l, a } => oe_matrix(form, *k, *l, a),
            Letter::Tau { u, plane } => torus_matrix(form, u, *plane, false),
            Letter::SigmaU { u, plane } => torus_matrix(form, u, *plane, true),
            Letter::BlockOq(a) => block_matrix(form, a),
            Letter::Inverse(inner) => inner.inverse_letter(form)?.matrix(form),
        }
    }

    pub fn to_json(&self, ring: &Ring) -> Value {
        let f = |x: &Elem| Value::String(ring.format(x));
        match self {
            Letter::EAlpha(a) => json!({"kind": "EAlpha", "alpha": a.to_strings()}),
            Letter::EBetaStar(b) => json!({"kind": "EBetaStar", "beta": b.to_strings()}),
            Letter::EAlphaSingle { i, j, x } => json!({"kind": "EAlphaSingle", "i": i, "j": j, "x": f(x)}),
            Letter::EBetaStarSingle { i, j, x } => json!({"kind": "EBetaStarSingle", "i": i, "j": j, "x": f(x)}),
            Letter::OE { k, l, a } => json!({"kind": "OE", "k": k, "l": l, "a": f(a)}),
            Letter::Tau { u, plane } => json!({"kind": "Tau", "u": f(u), "plane": plane}),
            Letter::SigmaU { u, plane } => json!({"kind": "SigmaU", "u": f(u), "plane": plane}),
            Letter::BlockOq(a) => json!({"kind": "BlockOq", "A": a.to_strings()}),
            Letter::Inverse(inner) => json!({"kind": "Inverse", "of": inner.to_json(ring)}),
        }
    }

    pub fn from_json(v: &Value, ring: &Ring) -> Result<Letter> {
        let bad = |what: &str| Error::Parse(format!("letter {v}: {what}"));
        let idx = |key: &str| -> Result<usize> {
            v[key]
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| bad(&format!("missing integer `{key}`")))
        };
        let elem = |key: &str| -> Result<Elem> {
            match &v[key] {
                Value::String(s) => ring.parse(s),
                Value::Number(n) => ring.parse(&n.to_string()),
                _ => Err(bad(&format!("missing element `{key}`"))),
            }
        };
        let kind = v["kind"].as_str().ok_or_else(|| bad("missing `kind`"))?;
        Ok(match kind {
            "EAlpha" => Letter::EAlpha(matrix_from_json(ring, &v["alpha"])?),
            "EBetaStar" => Letter::EBetaStar(matrix_from_json(ring, &v["beta"])?),
            "EAlphaSingle" => Letter::ealpha(idx("i")?, idx("j")?, elem("x")?),
            "EBetaStarSingle" => Letter::ebeta(idx("i")?, idx("j")?, elem("x")?),
            "OE" => Letter::oe(idx("k")?, idx("l")?, elem("a")?),
            "Tau" => Letter::Tau {
                u: elem("u")?,
                plane: idx("plane")?,
            },
            "SigmaU" => Letter::SigmaU {
                u: elem("u")?,
                plane: idx("plane")?,
            },
            "BlockOq" => Letter::BlockOq(matrix_from_json(ring, &v["A"])?),
            "Inverse" => Letter::Inverse(Box::new(Letter::from_json(&v["of"], ring)?)),
            other => return Err(bad(&format!("unknown kind `{other}`"))),
        })
    }

    /// Short syntax: `ealpha:i:j:x`, `ebeta:i:j:y`, `oe:k:l:a`, `tau:u:plane`,
    /// `sigma:u:plane`, and `inv:<letter>`.
    pub fn parse_short(text: &str, ring: &Ring) -> Result<Letter> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("inv:") {
            return Ok(Letter::Inverse(Box::new(Letter::parse_short(rest, ring)?)));
        }
        let parts: Vec<&str> = text.split(':').collect();
        let bad = || Error::Parse(format!("bad letter `{text}`"));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["ealpha", i, j, x] => Ok(Letter::ealpha(num(i)?, num(j)?, ring.parse(x)?)),
            ["ebeta", i, j, x] => Ok(Letter::ebeta(num(i)?, num(j)?, ring.parse(x)?)),
            ["oe", k, l, a] => Ok(Letter::oe(num(k)?, num(l)?, ring.parse(a)?)),
            ["tau", u, p] => Ok(Letter::Tau {
                u: ring.parse(u)?,
                plane: num(p)?,
            }),
            ["sigma", u, p] => Ok(Letter::SigmaU {
                u: ring.parse(u)?,
                plane: num(p)?,
            }),
            _ => Err(bad()),
        }
    }

    /// Human-readable form, e.g. `Eα11(u*x)`.
    pub fn display(&self, ring: &Ring) -> String {
        let f = |x: &Elem| ring.format(x);
        match self {
            Letter::EAlpha(a) => format!("Eα{a}"),
            Letter::EBetaStar(b) => format!("E*β{b}"),
            Letter::EAlphaSingle { i, j, x } => format!("Eα{i}{}({})", sep(*i, *j), f(x)),
            Letter::EBetaStarSingle { i, j, x } => format!("E*β{i}{}({})", sep(*i, *j), f(x)),
            Letter::OE { k, l, a } => format!("oe{k}{}({})", sep(*k, *l), f(a)),
            Letter::Tau { u, plane } => format!("τ{plane}({})", f(u)),
            Letter::SigmaU { u, plane } => format!("σ{plane}({})", f(u)),
            Letter::BlockOq(a) => format!("({a}⊥I)"),
            Letter::Inverse(inner) => format!("{}⁻¹", inner.display(ring)),
        }
    }
}

fn sep(a: usize, b: usize) -> String {
    if a < 10 && b < 10 {
        b.to_string()
    } else {
        format!(",{b}")
    }
}

fn half(form: &AmbientForm) -> Result<Elem> {
    form.ring().half()
}

fn check_single(form: &AmbientForm, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > form.m() {
        return Err(Error::IndexOutOfRange { index: i, max: form.m() });
    }
    if j == 0 || j > form.n() {
        return Err(Error::IndexOutOfRange { index: j, max: form.n() });
    }
    Ok(())
}

/// `E_α` (`star = false`) or `E*_β` (`star = true`) for a full `m×n` matrix.
/// With `(src, dst) = (P, P*)` for `E_α` and `(P*, P)` for `E*_β`, the matrix
/// is `I + α` on `Q → src`, `−α*` on `dst → Q` and `−½αα*` on `dst → src`,
/// where `α* = φ⁻¹αᵀ`.
fn dser_matrix(form: &AmbientForm, a: &Matrix, star: bool) -> Result<Matrix> {
    let (n, m) = (form.n(), form.m());
    if (a.rows(), a.cols()) != (m, n) {
        return Err(Error::DimensionMismatch(format!(
            "parameter must be {m}x{n}, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let r = form.ring();
    let adj = form.q().gram_inv().mul(&a.transpose())?;
    let aa = a.mul(&adj)?;
    let h = half(form)?;
    let (src, dst): (Vec<usize>, Vec<usize>) = (1..=m)
        .map(|i| {
            let (p, ps) = (form.p_index(i).unwrap(), form.pstar_index(i).unwrap());
            if star { (ps, p) } else { (p, ps) }
        })
        .unzip();
    let mut out = Matrix::identity(r, form.size());
    for row in 0..m {
        for c in 0..n {
            out.add_at(src[row], c, a.get(row, c));
            out.add_at(c, dst[row], &r.neg(adj.get(c, row)));
        }
        for (row2, &d) in dst.iter().enumerate() {
            out.add_at(src[row], d, &r.neg(&r.mul(&h, aa.get(row, row2))));
        }
    }
    Ok(out)
}

/// Single-entry letter via the adjoint `φ⁻¹αᵀ`; valid for any `φ`.
fn single_matrix(form: &AmbientForm, i: usize, j: usize, x: &Elem, star: bool) -> Result<Matrix> {
    check_single(form, i, j)?;
    let r = form.ring();
    let (p, ps) = (form.p_index(i)?, form.pstar_index(i)?);
    let (src, dst) = if star { (ps, p) } else { (p, ps) };
    let phi_inv = form.q().gram_inv();
    let mut out = Matrix::identity(r, form.size());
    out.add_at(src, j - 1, x);
    for c in 0..form.n() {
        out.add_at(c, dst, &r.neg(&r.mul(x, phi_inv.get(c, j - 1))));
    }
    let corr = r.mul(&r.mul(&half(form)?, &r.mul(x, x)), phi_inv.get(j - 1, j - 1));
    out.add_at(src, dst, &r.neg(&corr));
    Ok(out)
}

/// The closed form `I + x·e_{P_i,j} − d_j·x·e_{j,P*_i} − ½·d_j·x²·e_{P_i,P*_i}`
/// (and its `E*` analogue), defined only for diagonal `φ`.
pub fn single_matrix_closed_form(letter: &Letter, form: &AmbientForm) -> Result<Matrix> {
    let (i, j, x, star) = match letter {
        Letter::EAlphaSingle { i, j, x } => (*i, *j, x, false),
        Letter::EBetaStarSingle { i, j, x } => (*i, *j, x, true),
        other => {
            return Err(Error::PreconditionViolated(format!(
                "closed form needs a single-entry letter, got {}",
                other.kind()
            )))
        }
    };
    check_single(form, i, j)?;
    let d = form.q().d_vector()?;
    let r = form.ring();
    let (p, ps) = (form.p_index(i)?, form.pstar_index(i)?);
    let (src, dst) = if star { (ps, p) } else { (p, ps) };
    let dj = &d[j - 1];
    let mut out = Matrix::identity(r, form.size());
    out.add_at(src, j - 1, x);
    out.add_at(j - 1, dst, &r.neg(&r.mul(dj, x)));
    let corr = r.mul(&half(form)?, &r.mul(dj, &r.mul(x, x)));
    out.add_at(src, dst, &r.neg(&corr));
    Ok(out)
}

/// Checks the `oe_kl` index conditions and returns 0-based `(k, l, σ(k), σ(l))`.
pub fn oe_indices(form: &AmbientForm, k: usize, l: usize) -> Result<(usize, usize, usize, usize)> {
    let size = form.size();
    for idx in [k, l] {
        if idx == 0 || idx > size {
            return Err(Error::IndexOutOfRange { index: idx, max: size });
        }
    }
    if k >= l {
        return Err(Error::PreconditionViolated(format!("oe needs k < l, got k={k}, l={l}")));
    }
    let (k0, l0) = (k - 1, l - 1);
    let (sk, sl) = (form.sigma(k0)?, form.sigma(l0)?);
    if k0 == sl {
        return Err(if k > form.n() {
            Error::SamePlane { k, l }
        } else {
            Error::PreconditionViolated(format!("oe needs k ≠ σ(l), got k={k}, l={l}"))
        });
    }
    Ok((k0, l0, sk, sl))
}

pub fn oe_matrix(form: &AmbientForm, k: usize, l: usize, a: &Elem) -> Result<Matrix> {
    let (k0, l0, sk, sl) = oe_indices(form, k, l)?;
    let r = form.ring();
    let mut out = Matrix::identity(r, form.size());
    out.add_at(k0, l0, a);
    out.add_at(sl, sk, &r.neg(a));
    Ok(out)
}

fn torus_matrix(form: &AmbientForm, u: &Elem, plane: usize, swap: bool) -> Result<Matrix> {
    let r = form.ring();
    let (p, ps) = (form.p_index(plane)?, form.pstar_index(plane)?);
    let uinv = r.inv(u)?;
    let mut out = Matrix::identity(r, form.size());
    if swap {
        out.set(p, p, r.zero());
        out.set(ps, ps, r.zero());
        out.set(p, ps, u.clone());
        out.set(ps, p, uinv);
    } else {
        out.set(p, p, u.clone());
        out.set(ps, ps, uinv);
    }
    Ok(out)
}

fn block_matrix(form: &AmbientForm, a: &Matrix) -> Result<Matrix> {
    let n = form.n();
    if (a.rows(), a.cols()) != (n, n) {
        return Err(Error::DimensionMismatch(format!("block must be {n}x{n}")));
    }
    if !form.q().is_orthogonal(a) {
        return Err(Error::NotOrthogonal);
    }
    a.block_diag(&Matrix::identity(form.ring(), 2 * form.m()))
}

/// A finite sequence of letters, read left to right as a matrix product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn single(letter: Letter) -> Word {
        Word { letters: vec![letter] }
    }

    /// `[a, b] = a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: Letter, b: Letter) -> Word {
        Word::new(vec![a.clone(), b.clone(), a.inverse(), b.inverse()])
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn extend(&mut self, other: Word) {
        self.letters.extend(other.letters);
    }

    /// The formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        Word::new(self.letters.iter().rev().map(|l| l.clone().inverse()).collect())
    }

    pub fn is_dser(&self) -> bool {
        self.letters.iter().all(Letter::is_dser)
    }

    pub fn matrix(&self, form: &AmbientForm) -> Result<Matrix> {
        let mut acc = Matrix::identity(form.ring(), form.size());
        for letter in &self.letters {
            acc = acc.mul(&letter.matrix(form)?)?;
        }
        Ok(acc)
    }

    pub fn coerce(&self, from: &Ring, to: &Ring) -> Result<Word> {
        Ok(Word::new(
            self.letters.iter().map(|l| l.coerce(from, to)).collect::<Result<_>>()?,
        ))
    }

    pub fn to_json(&self, ring: &Ring) -> Value {
        Value::Array(self.letters.iter().map(|l| l.to_json(ring)).collect())
    }

    pub fn from_json(v: &Value, ring: &Ring) -> Result<Word> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Parse("word must be an array of letters".into()))?;
        Ok(Word::new(
            items.iter().map(|l| Letter::from_json(l, ring)).collect::<Result<_>>()?,
        ))
    }

    /// Comma-separated short letters; the empty string is the empty word.
    pub fn parse_short(text: &str, ring: &Ring) -> Result<Word> {
        Ok(Word::new(
            text.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| Letter::parse_short(s, ring))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn display(&self, ring: &Ring) -> String {
        if self.letters.is_empty() {
            return "I".into();
        }
        let mut out = String::new();
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", l.display(ring));
        }
        out
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word::new(iter.into_iter().collect())
    }
}

/// The parity pairing `σ(l) = l ± 1` on `1..=n+2m`, 1-based. Indices
/// of `Q` are paired only when `n` is even.
pub fn sigma_pair(l: usize, n: usize, m: usize) -> Result<usize> {
    let size = n + 2 * m;
    if l == 0 || l > size {
        return Err(Error::IndexOutOfRange { index: l, max: size });
    }
    if l <= n && !n.is_multiple_of(2) {
        return Err(Error::PreconditionViolated(format!(
            "σ on Q needs even rank, got n = {n}"
        )));
    }
    let t = if l <= n { l } else { l - n };
    Ok(if t % 2 == 1 { l + 1 } else { l - 1 })
}

/// Whether a letter acts only on the hyperbolic block.
pub fn touches_only_hyperbolic(letter: &Letter, form: &AmbientForm) -> bool {
    match letter {
        Letter::Tau { .. } | Letter::SigmaU { .. } => true,
        Letter::OE { k, l, .. } => *k > form.n() && *l > form.n(),
        Letter::Inverse(inner) => touches_only_hyperbolic(inner, form),
        _ => false,
    }
}

/// Checks `η = word(w₁)·word(w₂)` with `w₁` in `EO(q, h^m)` and `w₂` acting
/// on the hyperbolic block only.
pub fn verify_rao_factorization(eta: &Matrix, w1: &Word, w2: &Word, form: &AmbientForm) -> bool {
    if !w1.is_dser() || !w2.letters.iter().all(|l| touches_only_hyperbolic(l, form)) {
        return false;
    }
    match (w1.matrix(form), w2.matrix(form)) {
        (Ok(a), Ok(b)) => a.mul(&b).map(|p| p == *eta).unwrap_or(false),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::{Ordering, QuadraticSpace};
    use crate::rings::parse_ring;

    fn rank_one(ring: &Ring, c: i64) -> AmbientForm {
        AmbientForm::new(
            QuadraticSpace::diagonal(ring, &[ring.from_i64(c)]).unwrap(),
            1,
            Ordering::Interleaved,
        )
        .unwrap()
    }

    #[test]
    fn zero_parameter_is_identity() {
        let q = Ring::rationals();
        let f = rank_one(&q, 1);
        assert!(Letter::ealpha(1, 1, q.zero()).matrix(&f).unwrap().is_identity());
    }

    #[test]
    fn single_rank_one_over_q() {
        let q = Ring::rationals();
        let f = rank_one(&q, 2);
        let m = Letter::ealpha(1, 1, q.from_i64(2)).matrix(&f).unwrap();
        let expect = Matrix::from_i64(&q, &[&[1, 0, -1], &[2, 1, -1], &[0, 0, 1]]).unwrap();
        assert_eq!(m, expect);
        assert!(f.is_orthogonal(&m));
    }

    #[test]
    fn sigma_pair_examples() {
        assert_eq!(sigma_pair(1, 2, 1).unwrap(), 2);
        assert_eq!(sigma_pair(4, 2, 1).unwrap(), 3);
        for l in 1..=6 {
            assert_eq!(sigma_pair(sigma_pair(l, 2, 2).unwrap(), 2, 2).unwrap(), l);
        }
        assert!(sigma_pair(7, 2, 2).is_err());
    }

    #[test]
    fn oe_examples() {
        let z = parse_ring("laurent:Q:[a]:inv=[]").unwrap();
        let f = AmbientForm::hyperbolic(&z, 2, 1).unwrap();
        let a = z.variable("a").unwrap();
        let m = oe_matrix(&f, 1, 3, &a).unwrap();
        let mut expect = Matrix::identity(&z, 4);
        expect.set(0, 2, a.clone());
        expect.set(3, 1, z.neg(&a));
        assert_eq!(m, expect);
        assert!(matches!(oe_matrix(&f, 1, 2, &a), Err(Error::PreconditionViolated(_))));
        assert!(matches!(oe_matrix(&f, 3, 4, &a), Err(Error::SamePlane { .. })));
        assert!(matches!(oe_matrix(&f, 3, 1, &a), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn json_and_short_syntax_round_trip() {
        let r = parse_ring("laurent:Q:[u,x]:inv=[u]").unwrap();
        let w = Word::parse_short("tau:u:1, ealpha:1:1:x, inv:oe:3:5:2*x", &r).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(Word::from_json(&w.to_json(&r), &r).unwrap(), w);
        let j = Letter::ealpha(1, 1, r.from_i64(3)).to_json(&r);
        assert_eq!(j, json!({"kind": "EAlphaSingle", "i": 1, "j": 1, "x": "3"}));
    }
}
