use dser_core::certificate::{self, check};
use dser_core::localglobal::{LocalizedLetter, LocalizedWord};
use dser_core::rewrite::RuleTable;
use dser_core::{parse_ring, AmbientForm, Letter, Matrix, Ring, Word};
use serde_json::json;

fn laurent_a() -> Ring {
    parse_ring("laurent:Q:[a,u,x]:inv=[u]").unwrap()
}

#[test]
fn every_oe_certificate_verifies() {
    let r = laurent_a();
    let a = r.variable("a").unwrap();
    let form = AmbientForm::hyperbolic(&r, 4, 2).unwrap();
    let mut count = 0;
    for k in 1..=8 {
        for l in k + 1..=8 {
            if form.sigma(l - 1).unwrap() + 1 == k {
                continue;
            }
            let cert = certificate::oe_to_dser_certificate(k, l, &a, &form).unwrap();
            assert_eq!(cert["matrices_equal"], json!(true), "oe {k} {l}");
            assert!(check(&cert).unwrap().ok());
            count += 1;
        }
    }
    assert_eq!(count, 28 - 4);
}

#[test]
fn dser_to_oe_certificate_verifies() {
    let r = laurent_a();
    let form = AmbientForm::hyperbolic(&r, 2, 1).unwrap();
    let cert = certificate::dser_to_oe_certificate(&Letter::ealpha(1, 1, r.variable("a").unwrap()), &form).unwrap();
    assert_eq!(cert["output_word"][0]["k"], json!(2));
    assert_eq!(cert["output_word"][0]["l"], json!(4));
    assert!(check(&cert).unwrap().ok());
}

#[test]
fn conjugate_certificate_and_tampering() {
    let r = laurent_a();
    let form = AmbientForm::hyperbolic(&r, 2, 2).unwrap();
    let g = Word::parse_short("tau:u:1", &r).unwrap();
    let e = Word::parse_short("ealpha:1:1:x", &r).unwrap();
    let cert = certificate::conjugate_certificate(&g, &e, &form, RuleTable::standard()).unwrap();
    assert!(check(&cert).unwrap().ok());
    assert_eq!(
        Word::from_json(&cert["output_word"], &r).unwrap(),
        Word::parse_short("ealpha:1:1:u*x", &r).unwrap()
    );

    let mut swapped = cert.clone();
    swapped["input"]["e"] = Word::parse_short("ebeta:1:1:x", &r).unwrap().to_json(&r);
    assert!(!check(&swapped).unwrap().ok());

    let mut bad_matrix = cert.clone();
    bad_matrix["matrix"][0][0] = json!("2");
    let report = check(&bad_matrix).unwrap();
    assert!(!report.input_matches && report.matrices_equal);

    let mut bad_claim = cert;
    bad_claim["matrices_equal"] = json!(false);
    assert!(!check(&bad_claim).unwrap().ok());
}

#[test]
fn corrupted_rules_produce_a_false_certificate() {
    let r = laurent_a();
    let form = AmbientForm::hyperbolic(&r, 2, 1).unwrap();
    let g = Word::parse_short("tau:u:1", &r).unwrap();
    let e = Word::parse_short("ebeta:1:1:x", &r).unwrap();
    let cert = certificate::conjugate_certificate(&g, &e, &form, RuleTable::corrupted()).unwrap();
    assert_eq!(cert["matrices_equal"], json!(false));
    assert!(!check(&cert).unwrap().ok());
}

#[test]
fn dilation_certificate_verifies() {
    let z = Ring::integers();
    let phi = Matrix::from_i64(&z, &[&[1, 0], &[0, -1]]).unwrap();
    let mut w = LocalizedWord::new(&z, &z.from_i64(3), "X", phi, 2, Vec::new()).unwrap();
    let loc = w.localized_ring().clone();
    let core = Letter::ebeta(2, 1, w.poly_ring().parse("2/9*X + 1/3*X^3").unwrap());
    let gamma = Word::new(vec![
        Letter::SigmaU { u: loc.from_i64(-1), plane: 1 },
        Letter::ealpha(2, 2, loc.from_i64(4)),
    ]);
    w.letters.push(LocalizedLetter { gamma, core });
    let cert = certificate::dilation_certificate(&w).unwrap();
    assert_eq!(cert["N"], json!(2));
    assert!(check(&cert).unwrap().ok());
    let mut lower = cert.clone();
    lower["N"] = json!(1);
    assert!(check(&lower).is_err() || !check(&lower).unwrap().ok());
}

#[test]
fn split_certificate_rejects_wrong_tag() {
    let r = parse_ring("Zmod:9").unwrap();
    let m = Matrix::from_i64(&r, &[&[0, 4], &[7, 0]]).unwrap();
    let cert = certificate::split_certificate(&m).unwrap();
    assert_eq!(cert["output"], json!({"tag": "AntiDiag", "u": "4"}));
    assert!(check(&cert).unwrap().ok());
    let mut bad = cert;
    bad["output"]["tag"] = json!("Diag");
    assert!(!check(&bad).unwrap().ok());
}

#[test]
fn unknown_versions_are_rejected() {
    let bad = json!({"v": 2, "kind": "split-oh"});
    assert_eq!(check(&bad).unwrap_err().kind(), "Certificate");
}
