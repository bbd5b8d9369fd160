use dser_core::rewrite::{conjugate_word, RuleTable};
use dser_core::{parse_ring, AmbientForm, Word};

#[test]
fn library_example() {
    let r = parse_ring("laurent:Q:[u,x]:inv=[u]").unwrap();
    let form = AmbientForm::hyperbolic(&r, 2, 2).unwrap();
    let g = Word::parse_short("tau:u:1", &r).unwrap();
    let e = Word::parse_short("ealpha:1:1:x", &r).unwrap();
    let w = conjugate_word(&g, &e, &form, RuleTable::standard()).unwrap();
    assert_eq!(w.display(&r), "Eα11(u*x)");
}
