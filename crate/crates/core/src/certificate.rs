//! Self-verifying JSON certificates.
//!
//! A certificate records an input, the rewritten output and the input's
//! matrix. [`check`] re-derives both matrices from the recorded letters by
//! multiplication only; it never re-runs a rewrite.
//!
//! ```json
//! {"v": 1, "kind": "oe-to-dser", "ring": "...", "context": {...},
//!  "input": {...}, "output_word": [...], "matrix": [[...]],
//!  "matrices_equal": true}
//! ```

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generators::{Letter, Word};
use crate::localglobal::{dilate, dilation_holds, substitute_scaled, LocalizedWord};
use crate::matrix::Matrix;
use crate::quadform::{matrix_from_json, AmbientForm};
use crate::rewrite::{conjugate_word, dser_to_oe, oe_to_dser, split_orthogonal_h, HSplit, RuleTable};
use crate::rings::{parse_ring, Ring};

pub const VERSION: u64 = 1;

fn envelope(kind: &str, form: &AmbientForm, input: Value, output: Value, matrix: &Matrix, equal: bool) -> Value {
    json!({
        "v": VERSION,
        "kind": kind,
        "ring": form.ring().to_string(),
        "context": form.header_json(),
        "input": input,
        "output_word": output,
        "matrix_ring": matrix.ring().to_string(),
        "matrix": matrix.to_strings(),
        "matrices_equal": equal,
    })
}

/// Realizes a word over the form with 2 inverted.
fn realize(word: &Word, form: &AmbientForm) -> Result<Matrix> {
    let v = form.with_two_inverted()?;
    word.coerce(form.ring(), v.ring())?.matrix(&v)
}

pub fn oe_to_dser_certificate(k: usize, l: usize, a: &crate::rings::Elem, form: &AmbientForm) -> Result<Value> {
    let input = Letter::oe(k, l, a.clone());
    let out = oe_to_dser(k, l, a, form)?;
    let lhs = realize(&Word::single(input.clone()), form)?;
    let rhs = realize(&out, form)?;
    let r = form.ring();
    Ok(envelope("oe-to-dser", form, json!({"letter": input.to_json(r)}), out.to_json(r), &lhs, lhs == rhs))
}

pub fn dser_to_oe_certificate(letter: &Letter, form: &AmbientForm) -> Result<Value> {
    let out = Word::single(dser_to_oe(letter, form)?);
    let lhs = realize(&Word::single(letter.clone()), form)?;
    let rhs = realize(&out, form)?;
    let r = form.ring();
    Ok(envelope("dser-to-oe", form, json!({"letter": letter.to_json(r)}), out.to_json(r), &lhs, lhs == rhs))
}

pub fn conjugate_certificate(g: &Word, e: &Word, form: &AmbientForm, table: RuleTable) -> Result<Value> {
    let out = conjugate_word(g, e, form, table)?;
    let lhs = conjugated_matrix(g, e, form)?;
    let rhs = realize(&out, form)?;
    let r = form.ring();
    Ok(envelope(
        "conjugate",
        form,
        json!({"g": g.to_json(r), "e": e.to_json(r)}),
        out.to_json(r),
        &lhs,
        lhs == rhs,
    ))
}

/// `M(g)·M(e)·M(g)⁻¹` by direct multiplication.
pub fn conjugated_matrix(g: &Word, e: &Word, form: &AmbientForm) -> Result<Matrix> {
    realize(g, form)?.mul(&realize(e, form)?)?.mul(&realize(&g.inverse(), form)?)
}

pub fn split_certificate(m: &Matrix) -> Result<Value> {
    let split = split_orthogonal_h(m)?;
    let r = m.ring();
    let equal = split.matrix(r)? == *m;
    Ok(json!({
        "v": VERSION,
        "kind": "split-oh",
        "ring": r.to_string(),
        "input": {"matrix": m.to_strings()},
        "output": {"tag": split.tag(), "u": r.format(split.unit())},
        "matrix": m.to_strings(),
        "matrices_equal": equal,
    }))
}

pub fn dilation_certificate(w: &LocalizedWord) -> Result<Value> {
    let d = dilate(w)?;
    let equal = dilation_holds(w, &d)?;
    let v = w.verification_ring()?;
    let vbase = v.base().expect("poly ring").clone();
    let factor = vbase.coerce(&vbase.pow(&w.base().coerce(w.s(), &vbase)?, d.n), &v)?;
    let lhs = substitute_scaled(&w.matrix()?, &factor)?;
    Ok(json!({
        "v": VERSION,
        "kind": "dilate",
        "ring": d.ring.to_string(),
        "input": w.to_json(),
        "N": d.n,
        "output_word": d.word.to_json(&d.ring),
        "matrix_ring": v.to_string(),
        "matrix": lhs.to_strings(),
        "matrices_equal": equal,
    }))
}

/// Outcome of re-checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: String,
    /// The recorded input matrix matches its recomputation.
    pub input_matches: bool,
    /// The output realizes the same matrix.
    pub matrices_equal: bool,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.input_matches && self.matrices_equal
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Certificate(format!("missing `{key}`")))
}

/// Re-verifies a certificate from its recorded data alone.
pub fn check(cert: &Value) -> Result<CheckReport> {
    if field(cert, "v")?.as_u64() != Some(VERSION) {
        return Err(Error::Certificate(format!("unsupported version {}", cert["v"])));
    }
    let kind = field(cert, "kind")?
        .as_str()
        .ok_or_else(|| Error::Certificate("`kind` must be a string".into()))?
        .to_string();
    let claimed_equal = field(cert, "matrices_equal")?.as_bool() == Some(true);
    let (input_matches, equal) = match kind.as_str() {
        "oe-to-dser" | "dser-to-oe" | "conjugate" => {
            let form = AmbientForm::from_header_json(field(cert, "context")?)?;
            let r = form.ring().clone();
            let out = Word::from_json(field(cert, "output_word")?, &r)?;
            let input = field(cert, "input")?;
            let lhs = if kind == "conjugate" {
                let g = Word::from_json(field(input, "g")?, &r)?;
                let e = Word::from_json(field(input, "e")?, &r)?;
                conjugated_matrix(&g, &e, &form)?
            } else {
                realize(&Word::single(Letter::from_json(field(input, "letter")?, &r)?), &form)?
            };
            let shape_ok = match kind.as_str() {
                "dser-to-oe" => out.letters.iter().all(|l| matches!(l, Letter::OE { .. })),
                _ => out.is_dser(),
            };
            let rhs = realize(&out, &form)?;
            let recorded = matrix_from_json(lhs.ring(), field(cert, "matrix")?)?;
            (recorded == lhs, shape_ok && lhs == rhs)
        }
        "split-oh" => {
            let r = parse_ring(field(cert, "ring")?.as_str().unwrap_or_default())?;
            let m = matrix_from_json(&r, field(field(cert, "input")?, "matrix")?)?;
            let out = field(cert, "output")?;
            let u = r.parse(field(out, "u")?.as_str().unwrap_or_default())?;
            let split = match field(out, "tag")?.as_str() {
                Some("Diag") => HSplit::Diag(u),
                Some("AntiDiag") => HSplit::AntiDiag(u),
                other => return Err(Error::Certificate(format!("unknown tag {other:?}"))),
            };
            let recorded = matrix_from_json(&r, field(cert, "matrix")?)?;
            (recorded == m, split.matrix(&r)? == m)
        }
        "dilate" => {
            let w = LocalizedWord::from_json(field(cert, "input")?)?;
            let n = field(cert, "N")?
                .as_u64()
                .ok_or_else(|| Error::Certificate("`N` must be an integer".into()))? as u32;
            let ring = parse_ring(field(cert, "ring")?.as_str().unwrap_or_default())?;
            let word = Word::from_json(field(cert, "output_word")?, &ring)?;
            let result = crate::localglobal::DilationResult { n, ring, word };
            let v = w.verification_ring()?;
            let vbase = v.base().expect("poly ring").clone();
            let factor = vbase.coerce(&vbase.pow(&w.base().coerce(w.s(), &vbase)?, n), &v)?;
            let lhs = substitute_scaled(&w.matrix()?, &factor)?;
            let recorded = matrix_from_json(&v, field(cert, "matrix")?)?;
            (recorded == lhs, dilation_holds(&w, &result)?)
        }
        other => return Err(Error::Certificate(format!("unknown kind `{other}`"))),
    };
    if claimed_equal != equal {
        return Ok(CheckReport {
            kind,
            input_matches,
            matrices_equal: false,
        });
    }
    Ok(CheckReport {
        kind,
        input_matches,
        matrices_equal: equal,
    })
}

/// The ring recorded in a certificate.
pub fn certificate_ring(cert: &Value) -> Result<Ring> {
    parse_ring(field(cert, "ring")?.as_str().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let r = parse_ring("laurent:Q:[a]:inv=[]").unwrap();
        let f = AmbientForm::hyperbolic(&r, 2, 2).unwrap();
        let a = r.variable("a").unwrap();
        let cert = oe_to_dser_certificate(1, 2, &a, &f);
        assert!(cert.is_err());
        let cert = oe_to_dser_certificate(1, 4, &a, &f).unwrap();
        assert_eq!(cert["matrices_equal"], json!(true));
        assert!(check(&cert).unwrap().ok());
        let mut bad = cert.clone();
        bad["output_word"][0]["x"] = json!("2*a");
        assert!(!check(&bad).unwrap().ok());
    }

    #[test]
    fn split_certificate_checks() {
        let r = Ring::modular(7).unwrap();
        let m = Matrix::from_i64(&r, &[&[2, 0], &[0, 4]]).unwrap();
        let cert = split_certificate(&m).unwrap();
        assert_eq!(cert["output"], json!({"tag": "Diag", "u": "2"}));
        assert!(check(&cert).unwrap().ok());
    }
}
