//! Polynomial matrices, localized words and dilation.
//!
//! A [`LocalizedWord`] lives over `R_s[X]`: each factor is `γ·E·γ⁻¹` with `γ`
//! a word over `R_s` and `E` a DSER letter whose parameters vanish at `X = 0`.
//! [`dilate`] finds `N` such that `X ↦ s^N·X` clears every denominator of the
//! core parameters, producing a word over `R[X]`.
//!
//! Matrices are compared over `V[X]`, with `V` the localization with 2
//! inverted (`Z` and its localizations map to `Q`). The maps involved are
//! injective, so equality there is equality in `R_s[X]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generators::{Letter, Word};
use crate::matrix::Matrix;
use crate::quadform::{matrix_from_json, AmbientForm, Ordering, QuadraticSpace};
use crate::rings::{parse_ring, Elem, Ring, RingKind};

/// `θ(0) = I` for a matrix over a polynomial ring.
pub fn eval_at_zero_is_identity(theta: &Matrix) -> Result<bool> {
    let r = theta.ring();
    let base = r
        .base()
        .filter(|_| matches!(r.kind(), RingKind::Poly { .. }))
        .ok_or_else(|| Error::InvalidRing(format!("{r} is not a polynomial ring")))?;
    let at_zero = theta.try_map(base, |p| {
        Ok(r.poly_coefficients(p)?.first().cloned().unwrap_or_else(|| base.zero()))
    })?;
    Ok(at_zero.is_identity())
}

/// `θ(X) ↦ θ(c·X)` entry-wise; `c` must lie in the matrix's ring.
pub fn substitute_scaled(theta: &Matrix, c: &Elem) -> Result<Matrix> {
    let r = theta.ring();
    let x = variable_of(r)?;
    let image = r.mul(c, &x);
    theta.try_map(r, |p| r.poly_substitute(p, &image, r))
}

fn variable_of(r: &Ring) -> Result<Elem> {
    match r.kind() {
        RingKind::Poly { var, .. } => Ok(r.variable(var).expect("ring variable")),
        _ => Err(Error::InvalidRing(format!("{r} is not a polynomial ring"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedLetter {
    /// Conjugator, over `R_s`.
    pub gamma: Word,
    /// DSER letter, parameters over `R_s[X]`.
    pub core: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedWord {
    base: Ring,
    s: Elem,
    loc: Ring,
    poly: Ring,
    phi: Matrix,
    m: usize,
    pub letters: Vec<LocalizedLetter>,
}

impl LocalizedWord {
    /// `phi` is over `base`; letters are over `base_s` (γ) and `base_s[var]`
    /// (cores).
    pub fn new(base: &Ring, s: &Elem, var: &str, phi: Matrix, m: usize, letters: Vec<LocalizedLetter>) -> Result<LocalizedWord> {
        if *phi.ring() != *base {
            return Err(Error::DescriptorMismatch {
                left: phi.ring().to_string(),
                right: base.to_string(),
            });
        }
        QuadraticSpace::new(phi.clone())?;
        let loc = Ring::localized(base, s)?;
        let poly = Ring::poly(&loc, var)?;
        Ok(LocalizedWord {
            base: base.clone(),
            s: s.clone(),
            loc,
            poly,
            phi,
            m,
            letters,
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn s(&self) -> &Elem {
        &self.s
    }

    /// `R_s`.
    pub fn localized_ring(&self) -> &Ring {
        &self.loc
    }

    /// `R_s[X]`.
    pub fn poly_ring(&self) -> &Ring {
        &self.poly
    }

    pub fn var(&self) -> &str {
        match self.poly.kind() {
            RingKind::Poly { var, .. } => var,
            _ => unreachable!(),
        }
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `V[X]`, where matrices are compared.
    pub fn verification_ring(&self) -> Result<Ring> {
        Ring::poly(&self.loc.with_two_inverted(), self.var())
    }

    /// The ambient form over `target`.
    pub fn form_over(&self, target: &Ring) -> Result<AmbientForm> {
        AmbientForm::new(QuadraticSpace::new(self.phi.coerce(target)?)?, self.m, Ordering::Interleaved)
    }

    /// `∏ γ·E·γ⁻¹` over the verification ring.
    pub fn matrix(&self) -> Result<Matrix> {
        let v = self.verification_ring()?;
        let form = self.form_over(&v)?;
        let mut acc = Matrix::identity(&v, form.size());
        for ll in &self.letters {
            let gamma = ll.gamma.coerce(&self.loc, &v)?;
            let core = ll.core.coerce(&self.poly, &v)?;
            let mut w = gamma.clone();
            w.push(core);
            w.extend(gamma.inverse());
            acc = acc.mul(&w.matrix(&form)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let letters: Vec<Value> = self
            .letters
            .iter()
            .map(|ll| {
                json!({
                    "gamma": ll.gamma.to_json(&self.loc),
                    "core": ll.core.to_json(&self.poly),
                })
            })
            .collect();
        json!({
            "base_ring": self.base.to_string(),
            "s": self.base.format(&self.s),
            "var": self.var(),
            "m": self.m,
            "phi": self.phi.to_strings(),
            "letters": letters,
        })
    }

    pub fn from_json(v: &Value) -> Result<LocalizedWord> {
        let bad = |what: &str| Error::Parse(format!("localized word: {what}"));
        let base = parse_ring(v["base_ring"].as_str().ok_or_else(|| bad("missing `base_ring`"))?)?;
        let s = match &v["s"] {
            Value::String(t) => base.parse(t)?,
            Value::Number(t) => base.parse(&t.to_string())?,
            _ => return Err(bad("missing `s`")),
        };
        let var = v["var"].as_str().unwrap_or("X");
        let m = v["m"].as_u64().ok_or_else(|| bad("missing `m`"))? as usize;
        let phi = matrix_from_json(&base, &v["phi"])?;
        let mut w = LocalizedWord::new(&base, &s, var, phi, m, Vec::new())?;
        let items = v["letters"].as_array().ok_or_else(|| bad("missing `letters`"))?;
        for item in items {
            let gamma = match item.get("gamma") {
                Some(g) => Word::from_json(g, &w.loc)?,
                None => Word::empty(),
            };
            let core = Letter::from_json(&item["core"], &w.poly)?;
            w.letters.push(LocalizedLetter { gamma, core });
        }
        Ok(w)
    }
}

fn constant_term(poly: &Ring, p: &Elem) -> Result<Option<Elem>> {
    let coeffs = poly.poly_coefficients(p)?;
    Ok(coeffs.first().filter(|c| !poly.base().expect("poly").is_zero(c)).cloned())
}

/// Every core is a DSER letter with parameters in `X·R_s[X]`, and the word's
/// matrix is `I` at `X = 0`.
pub fn kernel_shape_check(w: &LocalizedWord) -> Result<bool> {
    for ll in &w.letters {
        if !ll.core.is_dser() {
            return Ok(false);
        }
        for p in ll.core.parameters() {
            if constant_term(&w.poly, &p)?.is_some() {
                return Ok(false);
            }
        }
    }
    eval_at_zero_is_identity(&w.matrix()?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationResult {
    pub n: u32,
    /// `R[X]`, the ring of the parameters in `word`.
    pub ring: Ring,
    pub word: Word,
}

/// Smallest `N` with `c·s^{N·e}` integral, given `c = r/s^k` in lowest terms.
fn needed_power(k: u32, e: usize) -> u32 {
    k.div_ceil(e as u32)
}

/// Clears denominators of the core parameters by `X ↦ s^N·X`.
///
/// Each coefficient `c_e·X^e` with `c_e = r/s^k` (`k` minimal) becomes
/// integral exactly when `N·e ≥ k`, so `N` is the maximum of `⌈k/e⌉`. This is
/// the least `N` that makes the core parameters integral. Conjugators must be
/// integral already.
pub fn dilate(w: &LocalizedWord) -> Result<DilationResult> {
    let base = &w.base;
    let loc = &w.loc;
    let target = Ring::poly(base, w.var())?;
    let form_r = AmbientForm::new(QuadraticSpace::new(w.phi.clone())?, w.m, Ordering::Interleaved)?;

    let mut gammas = Vec::with_capacity(w.letters.len());
    for (index, ll) in w.letters.iter().enumerate() {
        for letter in &ll.gamma.letters {
            for p in letter.parameters() {
                let (k, _) = loc.clear_denominator_power(&p)?;
                if k > 0 {
                    return Err(Error::NonIntegralConjugator {
                        index,
                        param: loc.format(&p),
                    });
                }
            }
        }
        let g = ll.gamma.coerce(loc, base).map_err(|_| Error::NonIntegralConjugator {
            index,
            param: ll.gamma.display(loc),
        })?;
        // the inverse must be integral too (e.g. τ_u needs u a unit of R)
        for letter in &g.letters {
            letter.inverse_letter(&form_r).map_err(|_| Error::NonIntegralConjugator {
                index,
                param: letter.display(base),
            })?;
        }
        gammas.push(g);
    }

    let mut n = 0u32;
    for ll in &w.letters {
        if !ll.core.is_dser() {
            return Err(Error::PreconditionViolated(format!(
                "core letter {} is not a DSER letter",
                ll.core.display(&w.poly)
            )));
        }
        for p in ll.core.parameters() {
            for (e, c) in w.poly.poly_coefficients(&p)?.iter().enumerate() {
                if loc.is_zero(c) {
                    continue;
                }
                if e == 0 {
                    return Err(Error::PreconditionViolated(format!(
                        "core parameter {} has a nonzero constant term",
                        w.poly.format(&p)
                    )));
                }
                let (k, _) = loc.clear_denominator_power(c)?;
                n = n.max(needed_power(k, e));
            }
        }
    }

    let s_loc = loc.localize(&w.s)?;
    let scale = |p: &Elem| -> Result<Elem> {
        let coeffs = w.poly.poly_coefficients(p)?;
        let mut out = Vec::with_capacity(coeffs.len());
        for (e, c) in coeffs.iter().enumerate() {
            let factor = loc.pow(&s_loc, n * e as u32);
            out.push(loc.coerce(&loc.mul(c, &factor), base)?);
        }
        target.poly_from_coefficients(out)
    };

    let mut word = Word::empty();
    for (ll, g) in w.letters.iter().zip(gammas) {
        let g = g.coerce(base, &target)?;
        let core = map_parameters(&ll.core, &target, &scale)?;
        word.extend(g.clone());
        word.push(core);
        word.extend(g.inverse());
    }
    Ok(DilationResult { n, ring: target, word })
}

/// Applies `f` to every scalar parameter of a DSER letter.
fn map_parameters(letter: &Letter, to: &Ring, f: &dyn Fn(&Elem) -> Result<Elem>) -> Result<Letter> {
    let map_matrix = |a: &Matrix| -> Result<Matrix> { a.try_map(to, f) };
    Ok(match letter {
        Letter::EAlpha(a) => Letter::EAlpha(map_matrix(a)?),
        Letter::EBetaStar(b) => Letter::EBetaStar(map_matrix(b)?),
        Letter::EAlphaSingle { i, j, x } => Letter::ealpha(*i, *j, f(x)?),
        Letter::EBetaStarSingle { i, j, x } => Letter::ebeta(*i, *j, f(x)?),
        Letter::Inverse(inner) => Letter::Inverse(Box::new(map_parameters(inner, to, f)?)),
        other => {
            return Err(Error::PreconditionViolated(format!(
                "{} is not a DSER letter",
                other.kind()
            )))
        }
    })
}

/// `localize(word(result)) = input(s^N·X)`, compared over the verification
/// ring of `w`.
pub fn dilation_holds(w: &LocalizedWord, result: &DilationResult) -> Result<bool> {
    let v = w.verification_ring()?;
    let form = w.form_over(&v)?;
    let vbase = v.base().expect("poly ring");
    let s = w.base.coerce(&w.s, vbase)?;
    let factor = vbase.coerce(&vbase.pow(&s, result.n), &v)?;
    let lhs = substitute_scaled(&w.matrix()?, &factor)?;
    let rhs = result.word.coerce(&result.ring, &v)?.matrix(&form)?;
    Ok(lhs == rhs)
}

/// Whether the `s_i` generate the unit ideal of `ring` (decidable for `Z`,
/// `Q` and `Z/n`).
pub fn is_comaximal(ring: &Ring, elems: &[Elem]) -> Result<bool> {
    match ring.kind() {
        RingKind::Integers => {
            let g = elems.iter().fold(BigInt::zero(), |g, e| match e {
                Elem::Int(v) => g.gcd(v),
                _ => g,
            });
            Ok(g.is_one())
        }
        RingKind::Mod { modulus } => {
            let g = elems.iter().fold(BigInt::from(*modulus), |g, e| match e {
                Elem::Res(v) => g.gcd(&BigInt::from(*v)),
                _ => g,
            });
            Ok(g.is_one())
        }
        RingKind::Rationals => Ok(elems.iter().any(|e| !ring.is_zero(e))),
        _ => Err(Error::NotComaximal(format!("cannot decide comaximality over {ring}"))),
    }
}

/// Checks `θ ∈ R[X]` against certificates over a finite comaximal cover: each
/// localized word must pass [`kernel_shape_check`] and realize `θ` over
/// `R_{s_i}[X]`.
pub fn verify_local_membership(theta: &Matrix, cover: &[LocalizedWord]) -> Result<bool> {
    let r = theta.ring();
    let base = match r.kind() {
        RingKind::Poly { base, .. } => base.clone(),
        _ => return Err(Error::InvalidRing(format!("{r} is not a polynomial ring"))),
    };
    let ss: Vec<Elem> = cover.iter().map(|w| w.s.clone()).collect();
    if cover.iter().any(|w| w.base != base) {
        return Err(Error::DescriptorMismatch {
            left: base.to_string(),
            right: cover.iter().map(|w| w.base.to_string()).collect::<Vec<_>>().join(", "),
        });
    }
    if !is_comaximal(&base, &ss)? {
        let shown: Vec<String> = ss.iter().map(|s| base.format(s)).collect();
        return Err(Error::NotComaximal(format!("{{{}}} in {base}", shown.join(", "))));
    }
    for w in cover {
        if !kernel_shape_check(w)? {
            return Ok(false);
        }
        let v = w.verification_ring()?;
        if theta.coerce(&v)? != w.matrix()? {
            return Ok(false);
        }
    }
    Ok(true)
}
