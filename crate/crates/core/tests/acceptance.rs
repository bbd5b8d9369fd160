//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::process::ExitCode;

use dser_core::localglobal::{dilate, dilation_holds, LocalizedLetter, LocalizedWord};
use dser_core::rewrite::split_orthogonal_h;
use dser_core::suites::{self, cores_integral_after, n1_ring, n1_table, Params, SuiteConfig, SuiteReport};
use dser_core::{parse_ring, AmbientForm, Error, Letter, Matrix, Ordering, QuadraticSpace, Ring, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn run_suites(name: &str, configs: &[SuiteConfig]) -> (bool, usize, Vec<String>) {
    let mut ok = true;
    let mut cases = 0;
    let mut notes = Vec::new();
    for cfg in configs {
        match suites::run_one(name, cfg) {
            Ok(r) => {
                cases += r.cases;
                if !r.passed() {
                    ok = false;
                    notes.push(summary(&r));
                }
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{name} n={} m={}: {e}", cfg.n, cfg.m));
            }
        }
    }
    (ok, cases, notes)
}

fn summary(r: &SuiteReport) -> String {
    let first = r.failures.first().map(|f| f.case.as_str()).unwrap_or("");
    format!("{} n={} m={}: {} failures (first {first})", r.suite, r.n, r.m, r.failures.len())
}

fn grid_configs(ns: &[usize], ms: &[usize], ring: Option<Ring>) -> Vec<SuiteConfig> {
    let mut out = Vec::new();
    for &n in ns {
        for &m in ms {
            out.push(SuiteConfig {
                ring: ring.clone(),
                n,
                m,
                ..SuiteConfig::default()
            });
        }
    }
    out
}

fn conjugated(g: &Letter, e: &Letter, form: &AmbientForm) -> Matrix {
    let mg = g.matrix(form).unwrap();
    mg.mul(&e.matrix(form).unwrap()).unwrap().mul(&mg.inverse().unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let (ok, cases, notes) = run_suites("roy", &grid_configs(&[1, 2, 3], &[1, 2, 3], None));
    Outcome {
        ok,
        detail: format!("n, m in 1..3, symbolic diagonal φ, {cases} cases {}", notes.join("; ")),
    }
}

fn criterion_2() -> Outcome {
    let (suite_ok, cases, mut notes) = run_suites("n1-table", &[SuiteConfig::default()]);
    // the printed row 11 is checked separately: it must fail as printed
    let ring = n1_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut p = Params::new(&ring, &mut rng);
    let phi: Vec<_> = ["e1", "e2"].iter().map(|v| p.unit(v)).collect();
    let form = AmbientForm::new(QuadraticSpace::diagonal(&ring, &phi).unwrap(), 2, Ordering::Interleaved).unwrap();
    let rows = n1_table(&form, &mut p).unwrap();
    let mut printed_ok = 0;
    let mut printed_bad = Vec::new();
    for row in &rows {
        let lhs = conjugated(&row.oe, &row.letter, &form);
        if row.printed.matrix(&form).unwrap() == lhs {
            printed_ok += 1;
        } else {
            printed_bad.push(row.label.clone());
        }
    }
    let literal_as_expected = printed_ok == 15 && printed_bad == ["11"];
    if !literal_as_expected {
        notes.push(format!("rows failing as printed: {printed_bad:?}"));
    }
    Outcome {
        ok: suite_ok && literal_as_expected,
        detail: format!(
            "16 rows + 16 β analogues, {cases} cases; {printed_ok}/16 hold as printed, row 11 holds with the commutator reversed {}",
            notes.join("; ")
        ),
    }
}

fn criterion_3() -> Outcome {
    let (suite_ok, cases, mut notes) = run_suites("tau-sigma", &grid_configs(&[1, 2, 3], &[1, 2, 3], None));
    // the printed τ-on-E* and σ₁ rules must fail
    let mut literal_failures = 0;
    let mut literal_checks = 0;
    for n in 1..=3 {
        for m in 1..=3 {
            let mut vars: Vec<String> = (1..=n).map(|j| format!("e{j}")).collect();
            vars.extend(["u", "x"].map(String::from));
            let mut inv: Vec<String> = (1..=n).map(|j| format!("e{j}")).collect();
            inv.push("u".into());
            let ring = Ring::laurent(&Ring::rationals(), &vars, &inv).unwrap();
            let phi: Vec<_> = (1..=n).map(|j| ring.variable(&format!("e{j}")).unwrap()).collect();
            let form = AmbientForm::new(QuadraticSpace::diagonal(&ring, &phi).unwrap(), m, Ordering::Interleaved).unwrap();
            let u = ring.variable("u").unwrap();
            let x = ring.variable("x").unwrap();
            for j in 1..=n {
                let tau = Letter::Tau { u: u.clone(), plane: m };
                let sigma1 = Letter::SigmaU { u: ring.one(), plane: m };
                let beta = Letter::ebeta(m, j, x.clone());
                let alpha = Letter::ealpha(m, j, x.clone());
                let printed = [
                    (&tau, &beta, Letter::ebeta(m, j, ring.mul(&u, &x))),
                    (&sigma1, &alpha, alpha.clone()),
                    (&sigma1, &beta, beta.clone()),
                ];
                for (g, e, claim) in printed {
                    literal_checks += 1;
                    if conjugated(g, e, &form) != claim.matrix(&form).unwrap() {
                        literal_failures += 1;
                    }
                }
            }
        }
    }
    let literal_as_expected = literal_failures == literal_checks;
    if !literal_as_expected {
        notes.push(format!("{} printed forms unexpectedly hold", literal_checks - literal_failures));
    }
    Outcome {
        ok: suite_ok && literal_as_expected,
        detail: format!(
            "n, m in 1..3, {cases} cases in corrected form (τ on E* scales by u⁻¹, σ swaps E and E*); printed forms fail in {literal_failures}/{literal_checks} {}",
            notes.join("; ")
        ),
    }
}

fn criterion_4() -> Outcome {
    let configs: Vec<SuiteConfig> = ["Q", "Zmod:7"]
        .iter()
        .map(|r| SuiteConfig {
            ring: Some(parse_ring(r).unwrap()),
            ..SuiteConfig::default()
        })
        .collect();
    let (ok, cases, notes) = run_suites("block-oq", &configs);
    Outcome {
        ok,
        detail: format!("Q and Zmod:7, 200 samples each, {cases} cases {}", notes.join("; ")),
    }
}

fn criterion_5() -> Outcome {
    let (ok, cases, notes) = run_suites("eo-equality", &grid_configs(&[2, 4], &[1, 2, 3], None));
    Outcome {
        ok,
        detail: format!("n in {{2,4}}, m in 1..3, all (k,l), {cases} cases {}", notes.join("; ")),
    }
}

fn criterion_6() -> Outcome {
    let configs: Vec<SuiteConfig> = ["Zmod:7", "Zmod:9"]
        .iter()
        .map(|r| SuiteConfig {
            ring: Some(parse_ring(r).unwrap()),
            ..SuiteConfig::default()
        })
        .collect();
    let (suite_ok, cases, mut notes) = run_suites("split", &configs);
    let z15 = parse_ring("Zmod:15").unwrap();
    let fixture = Matrix::from_i64(&z15, &[&[5, 12], &[3, 5]]).unwrap();
    let fixture_ok = match split_orthogonal_h(&fixture) {
        Err(Error::NotLocalRing { det }) => det == "4",
        other => {
            notes.push(format!("Zmod:15 fixture gave {other:?}"));
            false
        }
    };
    Outcome {
        ok: suite_ok && fixture_ok,
        detail: format!(
            "exhaustive over Zmod:7 and Zmod:9, {cases} orthogonal matrices; Zmod:15 [[5,12],[3,5]] gives NotLocalRing(det 4) {}",
            notes.join("; ")
        ),
    }
}

/// Least `N` with every `c·s^{N·e}` integral, by search over rationals.
fn brute_force_n(s: i64, coeffs: &[(usize, BigRational)]) -> u32 {
    (0..64)
        .find(|&n| {
            coeffs.iter().all(|(e, c)| {
                let f = BigRational::from_integer(BigInt::from(s).pow(n * *e as u32));
                (c * f).is_integer()
            })
        })
        .expect("small N")
}

fn criterion_7() -> Outcome {
    let configs: Vec<SuiteConfig> = [1, 2]
        .iter()
        .map(|&n| SuiteConfig {
            ring: Some(Ring::integers()),
            n,
            m: 2,
            seed: 7,
            ..SuiteConfig::default()
        })
        .collect();
    let (suite_ok, cases, mut notes) = run_suites("dilation", &configs);
    // fixture: s = 2, cores X/2 and 5X²/8
    let z = Ring::integers();
    let phi = Matrix::from_i64(&z, &[&[1]]).unwrap();
    let mut w = LocalizedWord::new(&z, &z.from_i64(2), "X", phi, 1, Vec::new()).unwrap();
    for p in ["1/2*X", "5/8*X^2"] {
        let x = w.poly_ring().parse(p).unwrap();
        w.letters.push(LocalizedLetter {
            gamma: Word::empty(),
            core: Letter::ealpha(1, 1, x),
        });
    }
    let oracle = brute_force_n(
        2,
        &[
            (1, BigRational::new(1.into(), 2.into())),
            (2, BigRational::new(5.into(), 8.into())),
        ],
    );
    let fixture_ok = match dilate(&w) {
        Ok(d) => {
            let holds = dilation_holds(&w, &d).unwrap();
            let below_fails = !cores_integral_after(&w, d.n - 1).unwrap();
            if !(d.n == oracle && holds && below_fails) {
                notes.push(format!("fixture: N={} oracle={oracle} holds={holds} N-1 fails={below_fails}", d.n));
            }
            d.n == oracle && holds && below_fails
        }
        Err(e) => {
            notes.push(format!("fixture: {e}"));
            false
        }
    };
    Outcome {
        ok: suite_ok && fixture_ok,
        detail: format!(
            "200 random words over Z_s, s in {{2,3,6}}, {cases} cases; fixture X/2, 5X²/8 needs N = {oracle} and N-1 fails {}",
            notes.join("; ")
        ),
    }
}

fn criterion_8() -> Outcome {
    let configs: Vec<SuiteConfig> = ["Zmod:7", "Q"]
        .iter()
        .map(|r| SuiteConfig {
            ring: Some(parse_ring(r).unwrap()),
            seed: 8,
            ..SuiteConfig::default()
        })
        .collect();
    let (ok, cases, notes) = run_suites("closure", &configs);
    Outcome {
        ok,
        detail: format!("Zmod:7 and Q, n = m = 2, 500 words each, {cases} cases {}", notes.join("; ")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 generator orthogonality", criterion_1),
        ("2 EO_4 conjugation table", criterion_2),
        ("3 torus and swap conjugation", criterion_3),
        ("4 block conjugation by O(q)", criterion_4),
        ("5 EO equality round trip", criterion_5),
        ("6 splitting of O(h)", criterion_6),
        ("7 dilation", criterion_7),
        ("8 normality closure", criterion_8),
    ];
    let mut all = true;
    for (name, f) in criterion_list(&criteria) {
        let out = f();
        all &= out.ok;
        println!("{} criterion {name}: {}", if out.ok { "PASS" } else { "FAIL" }, out.detail.trim_end());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Restricts to the criteria named on the command line, if any.
fn criterion_list(criteria: &[Criterion]) -> Vec<Criterion> {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    criteria
        .iter()
        .filter(|(name, _)| filters.is_empty() || filters.iter().any(|f| name.starts_with(f.as_str())))
        .copied()
        .collect()
}
