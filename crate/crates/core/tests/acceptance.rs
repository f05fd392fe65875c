//! Acceptance run: one pass/fail line per criterion. Symbolic checks compare canonical
//! forms exactly (tolerance zero); each worked example must finish within `EXAMPLE_BUDGET`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{fixture, fixture_text, suites};
use tangle_gate::alexander::*;
use tangle_gate::ideal::IdealZA;
use tangle_gate::linalg::{minor_gcd, smith_normal_form, to_integer_matrix, to_rational_laurent, DEFAULT_MINOR_CAP};
use tangle_gate::ring::{AbsNorm, LaurentPoly};
use tangle_gate::skein::*;

const EXAMPLE_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(what.into()) }
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn same(a: &LaurentPoly, b: &str) -> bool {
    a.associate(&lp(b))
}

fn beta_value(b: Beta) -> Result<LaurentPoly, String> {
    b.value().cloned().ok_or_else(|| "beta is indeterminate".to_string())
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn square_colored() -> Outcome {
    let p = ModulePresentation::parse(&fixture_text("presentations/square.pres")).map_err(e)?;
    let (pt, pb) = (tau_of(&p).map_err(e)?, beta_value(beta_of(&p, LabelingMode::Colored).map_err(e)?)?);
    ensure(same(&pt, "1 - x + x*y") && same(&pb, "1 - y + x*y"), format!("presentation: tau {pt}, beta {pb}"))?;
    let t = fixture("square.tg");
    let (ft, fb) = (tau(&t, LabelingMode::Colored).map_err(e)?, beta_value(beta(&t, LabelingMode::Colored).map_err(e)?)?);
    ensure(same(&ft, "1 - x + x*y") && same(&fb, "1 - y + x*y"), format!("fixture: tau {ft}, beta {fb}"))?;
    let mut r = t.clone();
    r.reverse_component(0);
    let (rt, rb) = (tau(&r, LabelingMode::Colored).map_err(e)?, beta_value(beta(&r, LabelingMode::Colored).map_err(e)?)?);
    ensure(same(&rt, "x + y - 1") && same(&rb, "x + y - x*y"), format!("reversed: tau {rt}, beta {rb}"))?;
    Ok(format!("tau {ft}, beta {fb} (presentation and fixture); first strand reversed: tau {rt}, beta {rb}"))
}

fn square_oriented_unoriented() -> Outcome {
    let t = fixture("square.tg");
    let ot = tau(&t, LabelingMode::Oriented).map_err(e)?;
    let ob = beta_value(beta(&t, LabelingMode::Oriented).map_err(e)?)?;
    ensure(same(&ot, "x^2 - x + 1") && same(&ob, "x^2 - x + 1"), format!("oriented: tau {ot}, beta {ob}"))?;
    let ut = tau(&t, LabelingMode::Unoriented).map_err(e)?;
    let ub = beta_value(beta(&t, LabelingMode::Unoriented).map_err(e)?)?;
    ensure(ut == lp("3") && ub == lp("3"), format!("unoriented: tau {ut}, beta {ub}"))?;
    let mut dets = Vec::new();
    for name in ["square-n.tg", "square-d.tg"] {
        let l = fixture(name);
        let v = check_embedding_obstruction(&t, &l, LabelingMode::Unoriented).map_err(e)?;
        let line = v.lines.iter().find(|l| l.name == "determinant gcd").ok_or("no determinant line")?;
        let det = determinant(&l).map_err(e)?;
        ensure(!v.obstructed() && line.detail.contains("= 9 divides") && det % 9 == 0, format!("{name}: {v}"))?;
        dets.push(format!("9 | {det}"));
    }
    Ok(format!("oriented tau = beta = {ot}; unoriented tau = beta = 3; check-embed on shipped closures: {}", dets.join(", ")))
}

fn virtual_determinant() -> Outcome {
    let t = fixture("square.tg");
    let (v, n, d) = (fixture("square-virtual.tg"), fixture("square-n.tg"), fixture("square-d.tg"));
    let dets = [determinant(&v).map_err(e)?, determinant(&n).map_err(e)?, determinant(&d).map_err(e)?];
    ensure(dets == [3, 0, 9], format!("dets (virtual, n, d) = {dets:?}"))?;
    let g = krebes_gcd(&t).map_err(e)?;
    ensure(g == 9 && dets[0] % g != 0, "9 should not divide 3")?;
    ensure(squarefree_part(g) == 3 && dets[0] % 3 == 0, "square-free part 3 should divide 3")?;
    let verdict = check_embedding_obstruction(&t, &v, LabelingMode::Unoriented).map_err(e)?;
    ensure(!verdict.obstructed() && !verdict.notes.is_empty(), format!("{verdict}"))?;
    Ok("det virtual closure = 3, det n = 0, det d = 9; 9 does not divide 3, square-free part 3 does".into())
}

fn krebes_ideal() -> Outcome {
    let l4 = fixture("l4a1-mirror.tg");
    let b = bracket(&l4).map_err(e)?;
    ensure(b == lp("-A^-10 + A^-6 - A^-2 - A^6"), format!("mirror 4^2_1 bracket {b}"))?;
    let k85 = bracket(&fixture("krebes-n.tg")).map_err(e)?;
    ensure(
        k85 == lp("A^12 - A^8 + 3*A^4 - 3 + 3*A^-4 - 4*A^-8 + 3*A^-12 - 2*A^-16 + A^-20"),
        format!("8_5 bracket {k85}"),
    )?;
    let k88 = bracket(&fixture("krebes-d.tg")).map_err(e)?;
    let i = IdealZA::new(&[k85.clone(), k88]).map_err(e)?;
    let want = IdealZA::new(&[lp("17"), lp("A^4 - 5")]).map_err(e)?;
    ensure(i == want, format!("ideal of the closures {i}"))?;
    ensure(bracket_ideal(&fixture("krebes.tg")).map_err(e)? == want, "Catalan ideal differs")?;
    let l4p = bracket(&fixture("l4a1.tg")).map_err(e)?;
    ensure(l4p == lp("-A^10 + A^6 - A^2 - A^-6"), format!("4^2_1 bracket {l4p}"))?;
    ensure(!i.contains(&l4p), "4^2_1 is in the ideal")?;
    // the other chirality is in: it and 8_5 generate the same ideal
    ensure(i.contains(&b), "mirror 4^2_1 is not in the ideal")?;
    ensure(IdealZA::new(&[b, k85]).map_err(e)? == want, "mirror 4^2_1 and 8_5 generate a different ideal")?;
    let loop_value = lp("A^2 + A^-2");
    for n in 1..=6 {
        ensure(!i.contains(&loop_value.pow(n)), format!("(A^2 + A^-2)^{n} is in the ideal"))?;
    }
    for name in ["k6_2.tg", "k8_1-mirror.tg", "k8_14-a.tg", "k8_5.tg", "k8_8-mirror.tg"] {
        ensure(i.contains(&bracket(&fixture(name)).map_err(e)?), format!("{name} is not in the ideal"))?;
    }
    for name in ["k6_2-mirror.tg", "k8_1.tg", "k8_14-b.tg"] {
        ensure(!i.contains(&bracket(&fixture(name)).map_err(e)?), format!("{name} is in the ideal"))?;
    }
    Ok(format!("ideal {i}, also generated by mirror 4^2_1 and 8_5; excludes 4^2_1 and (A^2+A^-2)^n, n <= 6; contains 6_2, mirror 8_1, 8_14"))
}

fn square_ideals() -> Outcome {
    let t = fixture("square.tg");
    let v = fixture("square-virtual.tg");
    let b = bracket(&v).map_err(e)?;
    let stated = lp("A^20 + A^18 - A^16 - 2*A^14 + 3*A^10 - 2*A^6 - A^4 + A^2 + 1");
    // the stated polynomial is shifted to start at A^0; compare up to a unit +-A^k
    ensure(b.associate(&stated), format!("virtual closure bracket {b}"))?;
    let i = bracket_ideal(&t).map_err(e)?;
    ensure(i == IdealZA::new(&[lp("A^4 + 1"), lp("9")]).map_err(e)?, format!("I_t = {i}"))?;
    let generators = IdealZA::new(&[lp("A^4 + 1"), &lp("A^12 + A^4 - 1") * &lp("A^12 - A^8 - 1")]).map_err(e)?;
    ensure(i == generators, "I_t differs from the ideal of its stated generators")?;
    let iv = virtual_bracket_ideal(&t).map_err(e)?;
    ensure(iv == i, format!("I_t^v = {iv}"))?;
    ensure(i.at_zeta().as_integer() == Some(9), format!("ideal at zeta {}", i.at_zeta()))?;
    let z = bracket_at_zeta(&v).map_err(e)?;
    ensure(z.abs_norm() == AbsNorm::Integer(9), format!("|bracket at zeta| of {z}"))?;
    Ok(format!("virtual closure bracket {b} matches up to a unit; I_t = I_t^v = {i}; at zeta ({}); |bracket at zeta| = 9", 9))
}

struct Expect {
    diagonal: Vec<LaurentPoly>,
    tau: LaurentPoly,
    beta: LaurentPoly,
    unoriented: Option<i128>,
}

fn expectations(text: &str) -> Expect {
    let get = |k: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix("# expect ").and_then(|r| r.strip_prefix(k)).and_then(|r| r.strip_prefix(" = ")))
            .map(str::to_string)
    };
    Expect {
        diagonal: get("diagonal").unwrap().split(", ").map(lp).collect(),
        tau: lp(&get("tau").unwrap()),
        beta: lp(&get("beta").unwrap()),
        unoriented: get("unoriented tau*beta").map(|s| s.parse().unwrap()),
    }
}

/// Diagonal from the Smith form, plus a check that `U·M·V = S`.
fn snf_diagonal(p: &ModulePresentation) -> Result<Vec<LaurentPoly>, String> {
    let m = &p.relations;
    let vars: std::collections::BTreeSet<String> = (0..m.rows()).flat_map(|i| m.row(i).iter().flat_map(|x| x.vars().to_vec())).collect();
    if vars.is_empty() {
        let z = to_integer_matrix(m).map_err(e)?;
        let s = smith_normal_form(&z);
        ensure(s.u.mul(&z).map_err(e)?.mul(&s.v).map_err(e)? == s.s, "U M V != S")?;
        return Ok(s.diagonal.iter().map(|d| LaurentPoly::constant(d.abs())).collect());
    }
    let q = to_rational_laurent(m, "x").map_err(e)?;
    let s = smith_normal_form(&q);
    ensure(s.u.mul(&q).map_err(e)?.mul(&s.v).map_err(e)? == s.s, "U M V != S")?;
    Ok(s.diagonal.iter().map(|d| d.primitive("x")).collect())
}

fn primitive(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() { p.clone() } else { p.div_scalar(p.content()).unwrap().normalize() }
}

fn synthetic_presentations() -> Outcome {
    let mut done = Vec::new();
    for k in 1..=5 {
        let name = format!("presentations/synthetic-{k}.pres");
        let text = fixture_text(&name);
        let want = expectations(&text);
        let p = ModulePresentation::parse(&text).map_err(e)?;
        let diag = snf_diagonal(&p)?;
        let ok = diag.len() == want.diagonal.len() && diag.iter().zip(&want.diagonal).all(|(a, b)| a.normalize() == b.normalize());
        ensure(ok, format!("{name}: diagonal {}", diag.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")))?;
        // independent route: d_1 ... d_k agrees with the gcd of k-minors
        let integer = (0..p.relations.rows()).all(|i| p.relations.row(i).iter().all(|x| x.vars().is_empty()));
        let mut running = LaurentPoly::one();
        for (j, d) in want.diagonal.iter().enumerate() {
            running = &running * d;
            let g = minor_gcd(&p.relations, j + 1, DEFAULT_MINOR_CAP).map_err(e)?;
            let agree = if integer { g.normalize() == running.normalize() } else { primitive(&g) == primitive(&running) };
            ensure(agree, format!("{name}: gcd of {}-minors {g} vs {running}", j + 1))?;
        }
        let mode = if integer { LabelingMode::Unoriented } else { LabelingMode::Oriented };
        let t = tau_of(&p).map_err(e)?;
        let b = beta_value(beta_of(&p, mode).map_err(e)?)?;
        ensure(t.associate(&want.tau) && b.associate(&want.beta), format!("{name}: tau {t}, beta {b}"))?;
        if let Some(u) = want.unoriented {
            let s = p.specialize(LabelingMode::Unoriented).map_err(e)?;
            let prod = &tau_of(&s).map_err(e)? * &beta_value(beta_of(&s, LabelingMode::Unoriented).map_err(e)?)?;
            ensure(prod.constant_value().map(i128::abs) == Some(u), format!("{name}: unoriented product {prod}"))?;
        }
        done.push(format!("#{k}"));
    }
    Ok(format!(
        "no 6-tangle reconstruction; synthetic presentations {} match diagonals (Smith form and minor gcds), tau, beta; #1 gives diagonal (1, (x^2-4x+1)(x^2-x+1)(x-1), 0, 0), beta x^2-x+1, unoriented product 108",
        done.join(" ")
    ))
}

fn property_suites() -> Outcome {
    let runs: [(&str, fn() -> String); 15] = [
        ("gcd divides det", suites::krebes_gcd_divides_determinant),
        ("square-free gcd divides virtual det", suites::squarefree_gcd_divides_virtual_determinant),
        ("det = |bracket at zeta|", suites::determinant_is_bracket_at_zeta),
        ("oriented tau*beta | Delta", suites::oriented_tau_beta_divides_alexander),
        ("colored tau*beta | Delta", suites::colored_tau_beta_divides_alexander),
        ("2-component Delta(x) = (x-1)Delta(x,x)", suites::two_component_alexander_specializes),
        ("closures in bracket ideal", suites::closures_lie_in_bracket_ideal),
        ("virtual closures in virtual ideal", suites::virtual_closures_lie_in_virtual_ideal),
        ("classical ideals agree", suites::classical_ideals_agree),
        ("(delta+1)<D_v> = <D_0> + <D_inf>", suites::virtual_crossing_relation),
        ("bracket move invariance", suites::bracket_move_invariance),
        ("R1 is a unit", suites::bracket_first_move_is_a_unit),
        ("Alexander move invariance", suites::alexander_move_invariance),
        ("ideal unit/order invariance", suites::ideal_ignores_units_and_order),
        ("beta | conj(tau) report", suites::beta_divides_conjugate_tau_report),
    ];
    let mut lines = Vec::new();
    for (name, f) in runs {
        match catch_unwind(f) {
            Ok(summary) => lines.push(format!("    {name}: {summary}")),
            Err(_) => return Err(format!("suite '{name}' failed")),
        }
    }
    Ok(format!("{} suites, {} cases each\n{}", lines.len(), suites::CASES, lines.join("\n")))
}

fn exclusions() -> Outcome {
    Ok("not reproduced, by design: the full knot-table census up to 8 crossings (only the listed knots ship as fixtures and are checked under criterion 4) and Groebner computations in the Homflypt quotient ring mod 17".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, bool); 8] = [
        ("square tangle colored invariants, presentation and fixture, orientation reversal", square_colored, true),
        ("square tangle oriented and unoriented invariants, determinant gcd on its closures", square_oriented_unoriented, true),
        ("virtual closure determinant and the square-free divisibility", virtual_determinant, true),
        ("krebes tangle brackets and ideal membership", krebes_ideal, true),
        ("square tangle bracket ideals, virtual closure, evaluation at zeta", square_ideals, true),
        ("Smith form and beta pipeline on synthetic presentations", synthetic_presentations, true),
        ("randomized property suites", property_suites, false),
        ("excluded results", exclusions, false),
    ];
    println!("acceptance (symbolic tolerance: exact canonical forms; example budget {}s)", EXAMPLE_BUDGET.as_secs());
    let mut failed = 0;
    for (k, (name, run, timed)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let out = match out {
            Ok(_) if timed && elapsed > EXAMPLE_BUDGET => Err(format!("took {elapsed:?}")),
            o => o,
        };
        match out {
            Ok(detail) => println!("criterion {}: PASS  {name} [{} ms]\n    {detail}", k + 1, elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{} ms]\n    {why}", k + 1, elapsed.as_millis());
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
