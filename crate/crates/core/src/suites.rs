//! Seeded identity suites.
//!
//! Every suite checks identities by re-multiplying matrices. Cases carry
//! stable ids and failures are sorted by id, so a report depends only on the
//! configuration and the seed.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generators::{single_matrix_closed_form, Letter, Word};
use crate::localglobal::{dilate, dilation_holds, kernel_shape_check, LocalizedLetter, LocalizedWord};
use crate::matrix::Matrix;
use crate::quadform::{AmbientForm, Ordering, QuadraticSpace};
use crate::rewrite::{conjugate_letter, conjugate_word, dser_to_oe, oe_to_dser, split_orthogonal_h, RuleTable};
use crate::rings::{random_element, random_small_integer, random_unit, Elem, Ring, RingKind};

pub const SUITES: &[&str] = &[
    "roy",
    "n1-table",
    "tau-sigma",
    "block-oq",
    "eo-equality",
    "split",
    "dilation",
    "closure",
];

pub const MAX_N: usize = 6;
pub const MAX_M: usize = 4;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// `None` selects the suite's default ring (symbolic where possible).
    pub ring: Option<Ring>,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub ordering: Ordering,
    pub table: RuleTable,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ring: None,
            n: 2,
            m: 2,
            seed: 0,
            ordering: Ordering::Interleaved,
            table: RuleTable::standard(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CaseFailure {
    pub case: String,
    pub identity: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub ring: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    /// Not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} ring={} n={} m={} seed={}: {} cases, {} failures\n",
            self.suite,
            self.ring,
            self.n,
            self.m,
            self.seed,
            self.cases,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!("  FAIL {} {}", f.case, f.identity));
            if let Some(e) = &f.error {
                out.push_str(&format!(" ({e})"));
            }
            out.push('\n');
        }
        out
    }
}

/// Collects case outcomes for one suite.
struct Cases {
    count: usize,
    failures: Vec<CaseFailure>,
}

impl Cases {
    fn new() -> Cases {
        Cases {
            count: 0,
            failures: Vec::new(),
        }
    }

    /// Records `expected == actual`; errors on either side count as failures.
    fn check(&mut self, case: String, identity: String, inputs: Value, expected: Result<Matrix>, actual: Result<Matrix>) {
        self.count += 1;
        let failure = match (expected, actual) {
            (Ok(e), Ok(a)) if e == a => return,
            (Ok(e), Ok(a)) => CaseFailure {
                case,
                identity,
                inputs,
                expected: Some(e.to_strings()),
                actual: Some(a.to_strings()),
                error: None,
            },
            (Err(err), _) | (_, Err(err)) => CaseFailure {
                case,
                identity,
                inputs,
                expected: None,
                actual: None,
                error: Some(format!("{}: {err}", err.kind())),
            },
        };
        self.failures.push(failure);
    }

    fn check_bool(&mut self, case: String, identity: String, inputs: Value, outcome: Result<bool>) {
        self.count += 1;
        let error = match outcome {
            Ok(true) => return,
            Ok(false) => None,
            Err(err) => Some(format!("{}: {err}", err.kind())),
        };
        self.failures.push(CaseFailure {
            case,
            identity,
            inputs,
            expected: None,
            actual: None,
            error,
        });
    }

    fn into_report(mut self, suite: &str, ring: &Ring, cfg: &SuiteConfig, n: usize, m: usize, start: Instant) -> SuiteReport {
        self.failures.sort_by(|a, b| a.case.cmp(&b.case));
        SuiteReport {
            suite: suite.to_string(),
            ring: ring.to_string(),
            n,
            m,
            seed: cfg.seed,
            cases: self.count,
            failures: self.failures,
            wall_time: start.elapsed(),
        }
    }
}

/// Supplies parameters: the ring's variable of that name when it has one,
/// otherwise a seeded random element.
pub struct Params<'a> {
    ring: Ring,
    rng: &'a mut ChaCha8Rng,
}

impl<'a> Params<'a> {
    pub fn new(ring: &Ring, rng: &'a mut ChaCha8Rng) -> Params<'a> {
        Params { ring: ring.clone(), rng }
    }

    pub fn elem(&mut self, name: &str) -> Elem {
        self.ring
            .variable(name)
            .unwrap_or_else(|| random_element(&self.ring, self.rng))
    }

    pub fn unit(&mut self, name: &str) -> Elem {
        match self.ring.variable(name) {
            Some(v) if self.ring.is_unit(&v) => v,
            _ => random_unit(&self.ring, self.rng),
        }
    }
}

fn laurent(vars: &[String], invertible: &[String]) -> Ring {
    Ring::laurent(&Ring::rationals(), vars, invertible).expect("valid variable names")
}

fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|j| format!("{prefix}{j}")).collect()
}

fn grid(prefix: &str, m: usize, n: usize) -> Vec<String> {
    (1..=m)
        .flat_map(|i| (1..=n).map(move |j| format!("{prefix}{i}{j}")))
        .collect()
}

/// Rings without ½ are replaced by their localization with 2 inverted.
fn with_half(ring: Ring) -> Ring {
    if ring.half().is_ok() {
        ring
    } else {
        ring.with_two_inverted()
    }
}

fn suite_rng(seed: u64, suite: &str) -> ChaCha8Rng {
    let salt = suite.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

/// `diag(e_1, …, e_n) ⊥ ψ̃_m`, with the `e_j` drawn from `params`.
pub fn diagonal_form(params: &mut Params, n: usize, m: usize, ordering: Ordering) -> Result<AmbientForm> {
    let entries: Vec<Elem> = (1..=n).map(|j| params.unit(&format!("e{j}"))).collect();
    let q = QuadraticSpace::diagonal(&params.ring, &entries)?;
    AmbientForm::new(q, m, ordering)
}

fn letter_inputs(ring: &Ring, letters: &[&Letter]) -> Value {
    Value::Array(letters.iter().map(|l| json!(l.display(ring))).collect())
}

/// `M(g)·M(e)·M(g)⁻¹`, with `M(g)⁻¹` computed as a matrix inverse.
fn conjugated(g: &Word, e: &Word, form: &AmbientForm) -> Result<Matrix> {
    let mg = g.matrix(form)?;
    mg.mul(&e.matrix(form)?)?.mul(&mg.inverse()?)
}

fn check_config(cfg: &SuiteConfig) -> Result<()> {
    if cfg.n == 0 || cfg.n > MAX_N {
        return Err(Error::IndexOutOfRange { index: cfg.n, max: MAX_N });
    }
    if cfg.m == 0 || cfg.m > MAX_M {
        return Err(Error::IndexOutOfRange { index: cfg.m, max: MAX_M });
    }
    Ok(())
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    check_config(cfg)?;
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

pub fn run_one(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    check_config(cfg)?;
    match name {
        "roy" => roy(cfg),
        "n1-table" => n1_table_suite(cfg),
        "tau-sigma" => tau_sigma(cfg),
        "block-oq" => block_oq(cfg),
        "eo-equality" => eo_equality(cfg),
        "split" => split(cfg),
        "dilation" => dilation(cfg),
        "closure" => closure(cfg),
        other => Err(Error::Parse(format!(
            "unknown suite `{other}` (expected one of {}, all)",
            SUITES.join(", ")
        ))),
    }
}

fn roy(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    let ring = with_half(cfg.ring.clone().unwrap_or_else(|| {
        let mut vars = names("e", n);
        vars.extend(["x".to_string(), "y".to_string()]);
        vars.extend(grid("a", m, n));
        vars.extend(grid("b", m, n));
        laurent(&vars, &names("e", n))
    }));
    let mut rng = suite_rng(cfg.seed, "roy");
    let mut p = Params::new(&ring, &mut rng);
    let form = diagonal_form(&mut p, n, m, cfg.ordering)?;
    let gram = form.gram().clone();
    let mut letters = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            letters.push(Letter::ealpha(i, j, p.elem("x")));
            letters.push(Letter::ebeta(i, j, p.elem("y")));
        }
    }
    let alpha = Matrix::from_fn(&ring, m, n, |i, j| p.elem(&format!("a{}{}", i + 1, j + 1)));
    let beta = Matrix::from_fn(&ring, m, n, |i, j| p.elem(&format!("b{}{}", i + 1, j + 1)));
    letters.push(Letter::EAlpha(alpha));
    letters.push(Letter::EBetaStar(beta));

    let mut cases = Cases::new();
    for (idx, letter) in letters.iter().enumerate() {
        let inputs = letter_inputs(&ring, &[letter]);
        let mat = letter.matrix(&form);
        let orth = mat.as_ref().map(|x| x.transpose().mul(&gram).and_then(|t| t.mul(x)));
        cases.check(
            format!("roy/{idx:03}/orthogonal"),
            "MᵀΦM = Φ".into(),
            inputs.clone(),
            Ok(gram.clone()),
            match orth {
                Ok(r) => r,
                Err(e) => Err(e.clone()),
            },
        );
        cases.check_bool(
            format!("roy/{idx:03}/det"),
            "det M = 1".into(),
            inputs.clone(),
            mat.as_ref()
                .map_err(Clone::clone)
                .and_then(|x| Ok(ring.is_one(&x.det()?))),
        );
        if letter.is_single() {
            cases.check(
                format!("roy/{idx:03}/closed-form"),
                "general realization = diagonal closed form".into(),
                inputs,
                single_matrix_closed_form(letter, &form),
                mat,
            );
        }
    }
    Ok(cases.into_report("roy", &ring, cfg, n, m, start))
}

/// One displayed row of the `EO_4` conjugation table: `oe·letter·oe⁻¹ = rhs`.
#[derive(Clone, Debug)]
pub struct N1Row {
    pub label: String,
    pub oe: Letter,
    pub letter: Letter,
    /// The right-hand side as printed.
    pub printed: Word,
    /// A replacement where the printed side is wrong.
    pub corrected: Option<Word>,
    /// An equivalent single `E_α` letter, where one is displayed.
    pub combined: Option<Letter>,
}

pub const N1_VARS: &[&str] = &[
    "a", "b", "c", "d", "a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22", "e1", "e2",
];

/// `laurent:Q` in the table's parameters, with `e1, e2` (the diagonal of `φ`)
/// invertible.
pub fn n1_ring() -> Ring {
    let vars: Vec<String> = N1_VARS.iter().map(|s| s.to_string()).collect();
    laurent(&vars, &["e1".to_string(), "e2".to_string()])
}

/// The sixteen `E_α` rows for `n = m = 2`. `oe` indices in the table count
/// from the start of the hyperbolic block, so `oe_{13}` acts on `(n+1, n+3)`.
pub fn n1_table(form: &AmbientForm, p: &mut Params) -> Result<Vec<N1Row>> {
    if form.n() != 2 || form.m() != 2 {
        return Err(Error::PreconditionViolated("the table is stated for n = m = 2".into()));
    }
    let r = form.ring().clone();
    let n = form.n();
    let h = r.half()?;
    let vals: Vec<Elem> = N1_VARS[..12].iter().map(|v| p.elem(v)).collect();
    let (a, b, c, d) = (&vals[0], &vals[1], &vals[2], &vals[3]);
    let av = |i: usize, j: usize| vals[4 + 2 * (i - 1) + (j - 1)].clone();
    let oe = |k: usize, l: usize, x: &Elem| Letter::oe(n + k, n + l, x.clone());
    let al = |i: usize, j: usize, x: Elem| Letter::ealpha(i, j, x);
    let be = |i: usize, j: usize, x: Elem| Letter::ebeta(i, j, x);
    let mul = |x: &Elem, y: &Elem| r.mul(x, y);
    let halfof = |x: &Elem, y: &Elem| r.mul(&h, &r.mul(x, y));
    let neg = |x: Elem| r.neg(&x);
    let comm_then = |left: Letter, right: Letter, tail: Vec<Letter>| {
        let mut w = Word::commutator(left, right);
        w.extend(Word::new(tail));
        w
    };
    let full = |entries: &[(usize, usize, Elem)]| {
        let mut mat = Matrix::zeros(&r, 2, 2);
        for (i, j, x) in entries {
            mat.set(i - 1, j - 1, x.clone());
        }
        Letter::EAlpha(mat)
    };
    let row = |label: &str, g: Letter, e: Letter, printed: Word| N1Row {
        label: label.to_string(),
        oe: g,
        letter: e,
        printed,
        corrected: None,
        combined: None,
    };

    let mut rows = Vec::with_capacity(16);
    // oe13(a)
    rows.push(row("01", oe(1, 3, a), al(1, 1, av(1, 1)), Word::single(al(1, 1, av(1, 1)))));
    rows.push(row("02", oe(1, 3, a), al(1, 2, av(1, 2)), Word::single(al(1, 2, av(1, 2)))));
    let mut r3 = row(
        "03",
        oe(1, 3, a),
        al(2, 1, av(2, 1)),
        Word::new(vec![
            al(1, 1, halfof(a, &av(2, 1))),
            al(2, 1, av(2, 1)),
            al(1, 1, halfof(a, &av(2, 1))),
        ]),
    );
    r3.combined = Some(full(&[(1, 1, mul(a, &av(2, 1))), (2, 1, av(2, 1))]));
    rows.push(r3);
    let mut r4 = row(
        "04",
        oe(1, 3, a),
        al(2, 2, av(2, 2)),
        Word::new(vec![
            al(1, 2, halfof(a, &av(2, 2))),
            al(2, 2, av(2, 2)),
            al(1, 2, halfof(a, &av(2, 2))),
        ]),
    );
    r4.combined = Some(full(&[(1, 2, mul(a, &av(2, 2))), (2, 2, av(2, 2))]));
    rows.push(r4);
    // oe14(b)
    for (label, (i, j)) in ["05", "06", "07", "08"].iter().zip([(1, 1), (1, 2), (2, 1), (2, 2)]) {
        rows.push(row(label, oe(1, 4, b), al(i, j, av(i, j)), Word::single(al(i, j, av(i, j)))));
    }
    // oe23(c)
    rows.push(row(
        "09",
        oe(2, 3, c),
        al(1, 1, av(1, 1)),
        comm_then(
            be(2, 1, halfof(c, &av(1, 1))),
            al(1, 1, av(1, 1)),
            vec![be(2, 1, neg(mul(c, &av(1, 1)))), al(1, 1, av(1, 1))],
        ),
    ));
    rows.push(row(
        "10",
        oe(2, 3, c),
        al(1, 2, av(1, 2)),
        comm_then(
            be(2, 2, halfof(c, &av(1, 2))),
            al(1, 2, av(1, 2)),
            vec![be(2, 2, neg(mul(c, &av(1, 2)))), al(1, 2, av(1, 2))],
        ),
    ));
    let mut r11 = row(
        "11",
        oe(2, 3, c),
        al(2, 1, av(2, 1)),
        comm_then(
            be(1, 1, halfof(c, &av(2, 1))),
            al(2, 1, av(2, 1)),
            vec![be(1, 1, mul(c, &av(2, 1))), al(2, 1, av(2, 1))],
        ),
    );
    r11.corrected = Some(comm_then(
        al(2, 1, av(2, 1)),
        be(1, 1, halfof(c, &av(2, 1))),
        vec![be(1, 1, mul(c, &av(2, 1))), al(2, 1, av(2, 1))],
    ));
    rows.push(r11);
    rows.push(row(
        "12",
        oe(2, 3, c),
        al(2, 2, av(2, 2)),
        comm_then(
            al(2, 2, av(2, 2)),
            be(1, 2, halfof(c, &av(2, 2))),
            vec![be(1, 2, mul(c, &av(2, 2))), al(2, 2, av(2, 2))],
        ),
    ));
    // oe24(d)
    rows.push(row(
        "13",
        oe(2, 4, d),
        al(1, 1, av(1, 1)),
        comm_then(
            al(2, 1, halfof(d, &av(1, 1))),
            al(1, 1, av(1, 1)),
            vec![al(2, 1, neg(mul(d, &av(1, 1)))), al(1, 1, av(1, 1))],
        ),
    ));
    rows.push(row(
        "14",
        oe(2, 4, d),
        al(1, 2, av(1, 2)),
        comm_then(
            al(2, 2, halfof(d, &av(1, 2))),
            al(1, 2, av(1, 2)),
            vec![al(2, 2, neg(mul(d, &av(1, 2)))), al(1, 2, av(1, 2))],
        ),
    ));
    rows.push(row("15", oe(2, 4, d), al(2, 1, av(2, 1)), Word::single(al(2, 1, av(2, 1)))));
    rows.push(row("16", oe(2, 4, d), al(2, 2, av(2, 2)), Word::single(al(2, 2, av(2, 2)))));
    Ok(rows)
}

fn n1_table_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let ring = with_half(cfg.ring.clone().unwrap_or_else(n1_ring));
    let mut rng = suite_rng(cfg.seed, "n1-table");
    let mut p = Params::new(&ring, &mut rng);
    let form = diagonal_form(&mut p, 2, 2, Ordering::Interleaved)?;
    let rows = n1_table(&form, &mut p)?;
    let bvals: Vec<Elem> = ["b11", "b12", "b21", "b22"].iter().map(|v| p.elem(v)).collect();
    let mut cases = Cases::new();
    for row in &rows {
        let g = Word::single(row.oe.clone());
        let lhs = conjugated(&g, &Word::single(row.letter.clone()), &form);
        let inputs = letter_inputs(&ring, &[&row.oe, &row.letter]);
        let rhs = row.corrected.as_ref().unwrap_or(&row.printed);
        cases.check(
            format!("n1-table/alpha/{}/printed", row.label),
            format!("row {}: oe·E·oe⁻¹ = {}", row.label, rhs.display(&ring)),
            inputs.clone(),
            lhs.clone(),
            rhs.matrix(&form),
        );
        if let Some(comb) = &row.combined {
            cases.check(
                format!("n1-table/alpha/{}/combined", row.label),
                format!("row {}: oe·E·oe⁻¹ = {}", row.label, comb.display(&ring)),
                inputs.clone(),
                lhs.clone(),
                comb.matrix(&form),
            );
        }
        cases.check(
            format!("n1-table/alpha/{}/rule", row.label),
            format!("row {}: conjugate_letter", row.label),
            inputs,
            lhs,
            conjugate_letter(&row.oe, &row.letter, &form, cfg.table).and_then(|w| w.matrix(&form)),
        );
    }
    // E*_β analogues, one per (oe, β_ij)
    let oes: Vec<Letter> = rows.iter().step_by(4).map(|r| r.oe.clone()).collect();
    for (t, g) in oes.iter().enumerate() {
        for (idx, (i, j)) in [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
            let e = Letter::ebeta(i, j, bvals[idx].clone());
            cases.check(
                format!("n1-table/beta/{t}{idx}"),
                format!("{}·{}·inverse via rule table", g.display(&ring), e.display(&ring)),
                letter_inputs(&ring, &[g, &e]),
                conjugated(&Word::single(g.clone()), &Word::single(e.clone()), &form),
                conjugate_letter(g, &e, &form, cfg.table).and_then(|w| w.matrix(&form)),
            );
        }
    }
    Ok(cases.into_report("n1-table", &ring, cfg, 2, 2, start))
}

/// The expected image of a single letter under `τ_u` or `σ_u` on `plane`,
/// written out independently of the rewrite rules.
fn torus_image(g: &Letter, e: &Letter, ring: &Ring) -> Result<Letter> {
    let same_plane = |i: usize, plane: usize| i == plane;
    Ok(match (g, e) {
        (Letter::Tau { u, plane }, Letter::EAlphaSingle { i, j, x }) if same_plane(*i, *plane) => {
            Letter::ealpha(*i, *j, ring.mul(u, x))
        }
        (Letter::Tau { u, plane }, Letter::EBetaStarSingle { i, j, x }) if same_plane(*i, *plane) => {
            Letter::ebeta(*i, *j, ring.mul(&ring.inv(u)?, x))
        }
        (Letter::SigmaU { u, plane }, Letter::EAlphaSingle { i, j, x }) if same_plane(*i, *plane) => {
            Letter::ebeta(*i, *j, ring.mul(&ring.inv(u)?, x))
        }
        (Letter::SigmaU { u, plane }, Letter::EBetaStarSingle { i, j, x }) if same_plane(*i, *plane) => {
            Letter::ealpha(*i, *j, ring.mul(u, x))
        }
        _ => e.clone(),
    })
}

fn tau_sigma(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    let ring = with_half(cfg.ring.clone().unwrap_or_else(|| {
        let mut vars = names("e", n);
        vars.extend(["u", "x", "y"].map(String::from));
        vars.extend(grid("a", m, n));
        let mut inv = names("e", n);
        inv.push("u".into());
        laurent(&vars, &inv)
    }));
    let mut rng = suite_rng(cfg.seed, "tau-sigma");
    let mut p = Params::new(&ring, &mut rng);
    let form = diagonal_form(&mut p, n, m, cfg.ordering)?;
    let u = p.unit("u");
    let x = p.elem("x");
    let y = p.elem("y");
    let alpha = Matrix::from_fn(&ring, m, n, |i, j| p.elem(&format!("a{}{}", i + 1, j + 1)));
    let mut cases = Cases::new();
    for plane in 1..=m {
        let conjugators = [
            ("tau", Letter::Tau { u: u.clone(), plane }),
            ("sigma1", Letter::SigmaU { u: ring.one(), plane }),
            ("sigma", Letter::SigmaU { u: u.clone(), plane }),
        ];
        for (tag, g) in &conjugators {
            let gw = Word::single(g.clone());
            for i in 1..=m {
                for j in 1..=n {
                    for e in [Letter::ealpha(i, j, x.clone()), Letter::ebeta(i, j, y.clone())] {
                        let ew = Word::single(e.clone());
                        let lhs = conjugated(&gw, &ew, &form);
                        let id = format!("tau-sigma/{tag}/p{plane}/{}{i}{j}", e.kind());
                        let inputs = letter_inputs(&ring, &[g, &e]);
                        let expected = torus_image(g, &e, &ring);
                        cases.check(
                            format!("{id}/identity"),
                            format!(
                                "{}·{}·inverse = {}",
                                g.display(&ring),
                                e.display(&ring),
                                expected.as_ref().map(|l| l.display(&ring)).unwrap_or_default()
                            ),
                            inputs.clone(),
                            lhs.clone(),
                            expected.and_then(|l| l.matrix(&form)),
                        );
                        cases.check(
                            format!("{id}/rule"),
                            format!("conjugate_letter {} {}", g.display(&ring), e.display(&ring)),
                            inputs,
                            lhs,
                            conjugate_letter(g, &e, &form, cfg.table).and_then(|w| w.matrix(&form)),
                        );
                    }
                }
            }
            // full letters go through expansion into singles
            let e = Letter::EAlpha(alpha.clone());
            cases.check(
                format!("tau-sigma/{tag}/p{plane}/full"),
                format!("conjugate_letter {} E_α", g.display(&ring)),
                letter_inputs(&ring, &[g, &e]),
                conjugated(&gw, &Word::single(e.clone()), &form),
                conjugate_letter(g, &e, &form, cfg.table).and_then(|w| w.matrix(&form)),
            );
        }
    }
    Ok(cases.into_report("tau-sigma", &ring, cfg, n, m, start))
}

/// A random element of `O(q)`: a product of `1..=max` reflections. Vectors
/// with non-unit value are resampled, falling back to basis vectors.
pub fn random_orthogonal<R: Rng + ?Sized>(q: &QuadraticSpace, max: usize, rng: &mut R) -> Result<Matrix> {
    let r = q.ring();
    let n = q.rank();
    let mut acc = Matrix::identity(r, n);
    for _ in 0..rng.random_range(1..=max) {
        let mut refl = None;
        for _ in 0..32 {
            let v: Vec<Elem> = (0..n).map(|_| r.from_i64(random_small_integer(rng, 3))).collect();
            if let Ok(m) = q.reflection(&v) {
                refl = Some(m);
                break;
            }
        }
        let refl = match refl {
            Some(m) => m,
            None => {
                let j = rng.random_range(0..n);
                let v: Vec<Elem> = (0..n).map(|t| if t == j { r.one() } else { r.zero() }).collect();
                q.reflection(&v)?
            }
        };
        acc = acc.mul(&refl)?;
    }
    Ok(acc)
}

fn block_oq(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    let ring = with_half(cfg.ring.clone().unwrap_or_else(Ring::rationals));
    let mut rng = suite_rng(cfg.seed, "block-oq");
    let mut cases = Cases::new();
    let form = {
        let mut p = Params::new(&ring, &mut rng);
        diagonal_form(&mut p, n, m, cfg.ordering)?
    };
    for t in 0..200 {
        let a = random_orthogonal(form.q(), 3, &mut rng)?;
        let ainv = form.q().orthogonal_inverse(&a)?;
        let star = t % 2 == 1;
        let b = Matrix::from_fn(&ring, m, n, |_, _| random_element(&ring, &mut rng));
        let (e, expected) = if star {
            (Letter::EBetaStar(b.clone()), b.mul(&ainv).map(Letter::EBetaStar))
        } else {
            (Letter::EAlpha(b.clone()), b.mul(&ainv).map(Letter::EAlpha))
        };
        let g = Letter::BlockOq(a);
        let lhs = conjugated(&Word::single(g.clone()), &Word::single(e.clone()), &form);
        let inputs = json!({"A": match &g { Letter::BlockOq(a) => a.to_strings(), _ => unreachable!() }, "beta": b.to_strings(), "star": star});
        cases.check(
            format!("block-oq/{t:03}/identity"),
            "(A⊥I)·E_β·(A⊥I)⁻¹ = E_{βA⁻¹}".into(),
            inputs.clone(),
            lhs.clone(),
            expected.and_then(|l| l.matrix(&form)),
        );
        cases.check(
            format!("block-oq/{t:03}/rule"),
            "conjugate_letter (A⊥I) E_β".into(),
            inputs,
            lhs,
            conjugate_letter(&g, &e, &form, cfg.table).and_then(|w| w.matrix(&form)),
        );
    }
    Ok(cases.into_report("block-oq", &ring, cfg, n, m, start))
}

fn eo_equality(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    if n < 2 || n % 2 == 1 {
        return Err(Error::PreconditionViolated(format!(
            "eo-equality needs φ = ψ̃_(n/2), so n must be even and at least 2 (got {n})"
        )));
    }
    let ring = with_half(cfg.ring.clone().unwrap_or_else(|| laurent(&["a".to_string()], &[])));
    let mut rng = suite_rng(cfg.seed, "eo-equality");
    let mut p = Params::new(&ring, &mut rng);
    let a = p.elem("a");
    let form = AmbientForm::hyperbolic(&ring, n, m)?;
    let size = n + 2 * m;
    let mut cases = Cases::new();
    for k in 1..=size {
        for l in k + 1..=size {
            if form.sigma(l - 1)? + 1 == k {
                continue;
            }
            let oe = Letter::oe(k, l, a.clone());
            cases.check(
                format!("eo-equality/oe/{k:02}-{l:02}"),
                format!("word(oe_to_dser({k},{l},a)) = oe_{k}{l}(a)"),
                letter_inputs(&ring, &[&oe]),
                oe.matrix(&form),
                oe_to_dser(k, l, &a, &form).and_then(|w| {
                    if w.is_dser() && w.len() <= 4 {
                        w.matrix(&form)
                    } else {
                        Err(Error::PreconditionViolated(format!("not a short DSER word: {}", w.display(&ring))))
                    }
                }),
            );
        }
    }
    for i in 1..=m {
        for j in 1..=n {
            for e in [Letter::ealpha(i, j, a.clone()), Letter::ebeta(i, j, a.clone())] {
                let id = format!("eo-equality/letter/{}{i}{j}", e.kind());
                let inputs = letter_inputs(&ring, &[&e]);
                let oe = dser_to_oe(&e, &form);
                cases.check(
                    format!("{id}/forward"),
                    "matrix(dser_to_oe(E)) = matrix(E)".into(),
                    inputs.clone(),
                    e.matrix(&form),
                    oe.clone().and_then(|o| o.matrix(&form)),
                );
                let back = oe.and_then(|o| match o {
                    Letter::OE { k, l, a } => oe_to_dser(k, l, &a, &form),
                    other => Err(Error::PreconditionViolated(format!("expected an oe letter, got {}", other.kind()))),
                });
                cases.check_bool(
                    format!("{id}/round-trip"),
                    "oe_to_dser(dser_to_oe(E)) = E".into(),
                    inputs,
                    back.map(|w| w == Word::single(e.clone())),
                );
            }
        }
    }
    Ok(cases.into_report("eo-equality", &ring, cfg, n, m, start))
}

fn split(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let ring = cfg.ring.clone().unwrap_or_else(|| Ring::modular(7).expect("valid modulus"));
    let psi = Matrix::from_i64(&ring, &[&[0, 1], &[1, 0]])?;
    let mut cases = Cases::new();
    let check = |cases: &mut Cases, id: String, mat: Matrix| {
        let inputs = json!(mat.to_strings());
        let outcome = match split_orthogonal_h(&mat) {
            Ok(s) => s.matrix(&ring).map(|real| real == mat),
            // the determinant is ±1 exactly when the ring is local
            Err(Error::NotLocalRing { .. }) => Ok(!ring.is_local()),
            Err(e) => Err(e),
        };
        cases.check_bool(id, "split realization = input".into(), inputs, outcome);
    };
    match ring.kind() {
        RingKind::Mod { modulus } if *modulus <= 31 => {
            let q = *modulus as i64;
            for code in 0..q.pow(4) {
                let v = [code % q, (code / q) % q, (code / q / q) % q, code / q / q / q];
                let mat = Matrix::from_i64(&ring, &[&v[..2], &v[2..]])?;
                if crate::quadform::is_orthogonal(&mat, &psi) {
                    check(&mut cases, format!("split/{code:06}"), mat);
                }
            }
        }
        _ => {
            let mut rng = suite_rng(cfg.seed, "split");
            for t in 0..100 {
                let u = random_unit(&ring, &mut rng);
                let ui = ring.inv(&u)?;
                let z = ring.zero();
                let mat = if t % 2 == 0 {
                    Matrix::from_rows(&ring, vec![vec![u, z.clone()], vec![z, ui]])?
                } else {
                    Matrix::from_rows(&ring, vec![vec![z.clone(), u], vec![ui, z]])?
                };
                check(&mut cases, format!("split/{t:03}"), mat);
            }
        }
    }
    Ok(cases.into_report("split", &ring, cfg, 0, 1, start))
}

/// A random localized word over `base_s[X]` with `1..=3` factors. Conjugators
/// are integral; core parameters are `Σ c_e X^e` (`e = 1..3`) with
/// `c_e = r/s^k`, `k ≤ 3`.
pub fn random_localized_word<R: Rng + ?Sized>(base: &Ring, s: &Elem, n: usize, m: usize, rng: &mut R) -> Result<LocalizedWord> {
    let entries: Vec<Elem> = (0..n).map(|_| random_unit(base, rng)).collect();
    let phi = QuadraticSpace::diagonal(base, &entries)?.gram().clone();
    let mut w = LocalizedWord::new(base, s, "X", phi, m, Vec::new())?;
    let loc = w.localized_ring().clone();
    let poly = w.poly_ring().clone();
    let s_loc = loc.localize(s)?;
    let lift = |x: &Elem| loc.localize(x);
    for _ in 0..rng.random_range(1..=3) {
        let mut gamma = Word::empty();
        for _ in 0..rng.random_range(0..=2) {
            let plane = rng.random_range(1..=m);
            let j = rng.random_range(1..=n);
            let letter = match rng.random_range(0..4) {
                0 => Letter::Tau {
                    u: lift(&random_unit(base, rng))?,
                    plane,
                },
                1 => Letter::SigmaU {
                    u: lift(&random_unit(base, rng))?,
                    plane,
                },
                2 => Letter::ealpha(plane, j, lift(&random_element(base, rng))?),
                _ => Letter::ebeta(plane, j, lift(&random_element(base, rng))?),
            };
            gamma.push(letter);
        }
        let mut coeffs = vec![loc.zero()];
        for _ in 1..=3 {
            let num = lift(&base.from_i64(random_small_integer(rng, 7)))?;
            let k = rng.random_range(0..=3);
            coeffs.push(loc.div(&num, &loc.pow(&s_loc, k))?);
        }
        let x = poly.poly_from_coefficients(coeffs)?;
        let (i, j) = (rng.random_range(1..=m), rng.random_range(1..=n));
        let core = if rng.random_bool(0.5) {
            Letter::ealpha(i, j, x)
        } else {
            Letter::ebeta(i, j, x)
        };
        w.letters.push(LocalizedLetter { gamma, core });
    }
    Ok(w)
}

/// Whether every core coefficient becomes integral under `X ↦ s^N·X`,
/// checked one coefficient at a time.
pub fn cores_integral_after(w: &LocalizedWord, n: u32) -> Result<bool> {
    let loc = w.localized_ring();
    let s = loc.localize(w.s())?;
    for ll in &w.letters {
        for p in ll.core.parameters() {
            for (e, c) in w.poly_ring().poly_coefficients(&p)?.iter().enumerate() {
                let scaled = loc.mul(c, &loc.pow(&s, n * e as u32));
                if loc.clear_denominator_power(&scaled)?.0 > 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn dilation(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    let base = match &cfg.ring {
        Some(r) if matches!(r.kind(), RingKind::Integers | RingKind::Rationals | RingKind::Mod { .. }) => r.clone(),
        _ => Ring::integers(),
    };
    let svals: Vec<Elem> = [2, 3, 6]
        .iter()
        .map(|&s| base.from_i64(s))
        .filter(|s| Ring::localized(&base, s).is_ok())
        .collect();
    if svals.is_empty() {
        return Err(Error::InvalidRing(format!("none of 2, 3, 6 can be inverted in {base}")));
    }
    let mut rng = suite_rng(cfg.seed, "dilation");
    let mut cases = Cases::new();
    for t in 0..100 {
        let s = &svals[t % svals.len()];
        let w = random_localized_word(&base, s, n, m, &mut rng)?;
        let inputs = w.to_json();
        let id = format!("dilation/{t:03}");
        cases.check_bool(format!("{id}/shape"), "cores vanish at X = 0".into(), inputs.clone(), kernel_shape_check(&w));
        let result = dilate(&w);
        cases.check_bool(
            format!("{id}/equality"),
            "word(X) = input(s^N·X)".into(),
            inputs.clone(),
            result.as_ref().map_err(Clone::clone).and_then(|d| dilation_holds(&w, d)),
        );
        if let Ok(d) = &result {
            cases.check_bool(
                format!("{id}/sufficient"),
                "cores integral after X ↦ s^N·X".into(),
                inputs.clone(),
                cores_integral_after(&w, d.n),
            );
            if d.n > 0 {
                cases.check_bool(
                    format!("{id}/minimal"),
                    "cores not integral after X ↦ s^(N-1)·X".into(),
                    inputs,
                    cores_integral_after(&w, d.n - 1).map(|ok| !ok),
                );
            }
        }
    }
    Ok(cases.into_report("dilation", &base, cfg, n, m, start))
}

/// A random word of `1..=3` conjugators from the covered families: `τ_u`,
/// `σ_u`, `A ⊥ I` with `A` a product of reflections, and `oe` letters inside
/// the hyperbolic block. Letters are inverted at random.
pub fn random_conjugator<R: Rng + ?Sized>(form: &AmbientForm, rng: &mut R) -> Result<Word> {
    let r = form.ring();
    let (n, m) = (form.n(), form.m());
    let mut word = Word::empty();
    for _ in 0..rng.random_range(1..=3) {
        let families = if m >= 2 { 4 } else { 3 };
        let plane = rng.random_range(1..=m);
        let letter = match rng.random_range(0..families) {
            0 => Letter::Tau {
                u: random_unit(r, rng),
                plane,
            },
            1 => Letter::SigmaU {
                u: random_unit(r, rng),
                plane,
            },
            2 => Letter::BlockOq(random_orthogonal(form.q(), 3, rng)?),
            _ => loop {
                let k = rng.random_range(n + 1..=n + 2 * m);
                let l = rng.random_range(n + 1..=n + 2 * m);
                if k < l && form.sigma(l - 1)? + 1 != k {
                    break Letter::oe(k, l, random_element(r, rng));
                }
            },
        };
        word.push(if rng.random_bool(0.25) { letter.inverse() } else { letter });
    }
    Ok(word)
}

/// A random word of `1..=3` DSER letters, single-entry or full.
pub fn random_dser_word<R: Rng + ?Sized>(form: &AmbientForm, rng: &mut R) -> Word {
    let r = form.ring();
    let (n, m) = (form.n(), form.m());
    let mut word = Word::empty();
    for _ in 0..rng.random_range(1..=3) {
        let (i, j) = (rng.random_range(1..=m), rng.random_range(1..=n));
        let letter = match rng.random_range(0..4) {
            0 => Letter::ealpha(i, j, random_element(r, rng)),
            1 => Letter::ebeta(i, j, random_element(r, rng)),
            2 => Letter::EAlpha(Matrix::from_fn(r, m, n, |_, _| random_element(r, rng))),
            _ => Letter::EBetaStar(Matrix::from_fn(r, m, n, |_, _| random_element(r, rng))),
        };
        word.push(letter);
    }
    word
}

fn closure(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let (n, m) = (cfg.n, cfg.m);
    let ring = with_half(cfg.ring.clone().unwrap_or_else(Ring::rationals));
    let mut rng = suite_rng(cfg.seed, "closure");
    let form = {
        let mut p = Params::new(&ring, &mut rng);
        diagonal_form(&mut p, n, m, cfg.ordering)?
    };
    let mut cases = Cases::new();
    for t in 0..500 {
        let g = random_conjugator(&form, &mut rng)?;
        let e = random_dser_word(&form, &mut rng);
        let inputs = json!({"g": g.display(&ring), "e": e.display(&ring)});
        let out = conjugate_word(&g, &e, &form, cfg.table);
        cases.check_bool(
            format!("closure/{t:03}/dser"),
            "conjugate_word returns DSER letters only".into(),
            inputs.clone(),
            out.as_ref().map(Word::is_dser).map_err(Clone::clone),
        );
        cases.check(
            format!("closure/{t:03}/equality"),
            "word(conjugate_word(g, e)) = g·e·g⁻¹".into(),
            inputs,
            conjugated(&g, &e, &form),
            out.and_then(|w| w.matrix(&form)),
        );
    }
    Ok(cases.into_report("closure", &ring, cfg, n, m, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig::default();
        for name in ["roy", "n1-table", "tau-sigma", "eo-equality"] {
            let report = run_one(name, &cfg).unwrap();
            assert!(report.passed(), "{}", report.to_text());
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let cfg = SuiteConfig {
            table: RuleTable::corrupted(),
            ..SuiteConfig::default()
        };
        let report = run_one("tau-sigma", &cfg).unwrap();
        assert!(!report.passed());
        assert!(report.failures.iter().all(|f| f.case.contains("/tau/")));
    }

    #[test]
    fn odd_n_is_a_configuration_error() {
        let cfg = SuiteConfig {
            n: 3,
            ..SuiteConfig::default()
        };
        assert!(run_one("eo-equality", &cfg).is_err());
        assert!(run_one("nope", &SuiteConfig::default()).is_err());
    }
}
