//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! All set comparisons are exact; the only tolerances are the wall-clock
//! limits and the oracle rates pinned below.

mod common;

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use setcalc::{load_instance, run, CheckSpec, Instance};
use setcalc_core::oracle::{compare_cones, sampled_limiting_cone, SampleGrid};
use setcalc_core::subcalc::{coderivative, is_lipschitz_like, singular_subdiff, subdiff, ConeKind};
use setcalc_core::varcone::normal_cones;
use setcalc_core::verifier::{self, HypothesisStatus, Verdict};
use setcalc_core::{
    ConeUnion, Constraint, OrderCone, PolyMap, PolySet, Polyhedron, RatMatrix, RatVec, Rational,
};

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const EPI_SUM_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_RESOLUTION: usize = 64;
const MIN_COVERAGE: f64 = 0.95;
const MIN_MUTANT_DETECTION: f64 = 0.95;
const MAX_ATTEMPTS: usize = 20;

type Outcome = Result<String, String>;

/// Regular ⊆ limiting containments seen by every suite.
#[derive(Default)]
struct Containment {
    tested: usize,
    violations: Vec<String>,
}

impl Containment {
    fn normal_cones(&mut self, s: &PolySet, x: &[Rational]) {
        let pair = normal_cones(s, x).unwrap();
        self.record(PolySet::from(pair.regular).is_subset(pair.limiting.as_set()).unwrap(), || {
            format!("normal cones of {s} at {}", RatVec(x.to_vec()))
        });
    }

    fn subdiffs(&mut self, f: &PolyMap, theta: &OrderCone, x: &[Rational], z: &[Rational]) {
        for singular in [false, true] {
            let get = |k| if singular { singular_subdiff(f, theta, x, z, k) } else { subdiff(f, theta, x, z, k) };
            let reg = get(ConeKind::Regular).unwrap().set;
            let lim = get(ConeKind::Limiting).unwrap().set;
            self.record(reg.is_subset(&lim).unwrap(), || format!("subdifferentials (singular: {singular}) at {:?}", (x, z)));
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

fn instances_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("instances")
}

fn shipped(name: &str) -> Instance {
    load_instance(&instances_dir().join(name)).unwrap()
}

fn split(p: &RatVec) -> (&[Rational], &[Rational]) {
    p.split_at(1)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sum_equality() -> Outcome {
    let start = Instant::now();
    let inst = shipped("abs_sum_equality.json");
    let spec = inst.checks.iter().find(|c| matches!(c, CheckSpec::SumRule { .. })).unwrap();
    let report = run::run_check(&inst, spec).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = interval(-1, 1);
    ensure(report.verdict() == Verdict::EqualityHolds, || format!("verdict {}", report.verdict()))?;
    ensure(report.lhs().set_equal(&expected).unwrap(), || format!("LHS {}", report.lhs()))?;
    ensure(report.rhs().set_equal(&expected).unwrap(), || format!("RHS {}", report.rhs()))?;
    ensure(elapsed < EXAMPLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("LHS=RHS={} in {:.1} ms", report.lhs(), elapsed.as_secs_f64() * 1e3))
}

fn sum_strict() -> Outcome {
    let start = Instant::now();
    let inst = shipped("abs_sum_strict.json");
    let (f1, f2, theta) = (&inst.maps["F1"], &inst.maps["F2"], &inst.cones["Theta"]);
    let o = [Rational::from_integer(0.into())];
    let lim = ConeKind::Limiting;
    let d1 = subdiff(f1, theta, &o, &o, lim).unwrap().set;
    let d2 = subdiff(f2, theta, &o, &o, lim).unwrap().set;
    let s1 = singular_subdiff(f1, theta, &o, &o, lim).unwrap().set;
    let s2 = singular_subdiff(f2, theta, &o, &o, lim).unwrap().set;
    let spec = inst.checks.iter().find(|c| matches!(c, CheckSpec::SumRule { .. })).unwrap();
    let report = run::run_check(&inst, spec).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(d1.set_equal(&interval(-1, 1)).unwrap(), || format!("∂F1 = {d1}"))?;
    ensure(d2.set_equal(&points_1d(&[-1, 1])).unwrap(), || format!("∂F2 = {d2}"))?;
    ensure(s1.set_equal(&origin(1)).unwrap() && s2.set_equal(&origin(1)).unwrap(), || format!("∂∞ = {s1}, {s2}"))?;
    ensure(report.lhs().set_equal(&origin(1)).unwrap(), || format!("LHS {}", report.lhs()))?;
    ensure(report.rhs().set_equal(&interval(-2, 2)).unwrap(), || format!("RHS {}", report.rhs()))?;
    ensure(report.verdict() == Verdict::InclusionHolds, || format!("verdict {}", report.verdict()))?;
    let w = report.witnesses().first().ok_or("no witness")?;
    ensure(report.rhs().member(w) && !report.lhs().member(w), || format!("bad witness {w}"))?;
    ensure(elapsed < EXAMPLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("LHS={} ⊊ RHS={}, witness {w}, in {:.1} ms", report.lhs(), report.rhs(), elapsed.as_secs_f64() * 1e3))
}

fn epi_sum_identity() -> Outcome {
    let mut rng = seeded(3);
    let start = Instant::now();
    let (mut holds, mut nonempty) = (0, 0);
    let mut failures = Vec::new();
    for i in 0..200 {
        let (dom, rng_dim) = match i % 4 {
            0 | 1 => (1, 1),
            2 => (2, 1),
            _ => (1, 2),
        };
        let f1 = map(&mut rng, dom, rng_dim);
        let f2 = map(&mut rng, dom, rng_dim);
        let theta = order_cone(&mut rng, rng_dim);
        let r = verifier::check_epi_sum_identity(&f1, &f2, &theta).map_err(|e| e.to_string())?;
        nonempty += usize::from(!r.lhs().is_empty());
        if r.verdict() == Verdict::EqualityHolds && r.passed() {
            holds += 1;
        } else if failures.len() < 3 {
            failures.push(format!("#{i}: {}", r.verdict()));
        }
    }
    let elapsed = start.elapsed();
    ensure(holds == 200, || format!("{holds}/200 equalities; {}", failures.join("; ")))?;
    ensure(elapsed < EPI_SUM_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("200/200 equalities ({nonempty} with nonempty graphs) in {:.2} s", elapsed.as_secs_f64()))
}

fn indicator_identity(inv: &mut Containment) -> Outcome {
    let mut rng = seeded(4);
    let mut holds = 0;
    let mut bad = Vec::new();
    for i in 0..50 {
        let dim = 1 + i % 2;
        let omega = polyset(&mut rng, dim, 3);
        let theta = order_cone(&mut rng, 1);
        for _ in 0..3 {
            let x = face_point(&mut rng, &omega);
            inv.normal_cones(&omega, &x);
            let r = verifier::check_indicator_identity(&omega, &theta, &x).map_err(|e| e.to_string())?;
            if r.verdict() == Verdict::EqualityHolds && r.passed() {
                holds += 1;
            } else if bad.len() < 3 {
                bad.push(format!("{omega} at {x}: {}", r.verdict()));
            }
        }
    }
    ensure(holds == 150, || format!("{holds}/150; {}", bad.join("; ")))?;
    Ok("150/150 exact equalities".into())
}

fn sum_rule_fuzz(inv: &mut Containment) -> Outcome {
    let mut rng = seeded(5);
    let (mut qualified, mut violated, mut holds) = (0, 0, 0);
    let mut bad = Vec::new();
    let mut strict = 0;
    while qualified < 200 && qualified + violated < 200 * MAX_ATTEMPTS {
        let f1 = map(&mut rng, 1, 1);
        let f2 = map(&mut rng, 1, 1);
        let theta = order_cone(&mut rng, 1);
        let e = f1.sum(&f2).unwrap().epi(&theta).unwrap();
        if e.graph().is_empty() {
            continue;
        }
        let p = face_point(&mut rng, e.graph());
        let (x, z) = split(&p);
        let r = verifier::check_sum_rule(&f1, &f2, &theta, x, z).map_err(|e| e.to_string())?;
        if r.hypothesis("qualification").unwrap().status != HypothesisStatus::Verified {
            violated += 1;
            continue;
        }
        qualified += 1;
        inv.subdiffs(&f1.sum(&f2).unwrap(), &theta, x, z);
        let plain = r.comparison("plain").unwrap().verdict;
        let singular = r.comparison("singular").unwrap().verdict;
        if plain.holds() && singular.holds() {
            holds += 1;
            strict += usize::from(plain == Verdict::InclusionHolds);
        } else if bad.len() < 3 {
            bad.push(format!("F1={} F2={} at {p}: plain {plain}, singular {singular}", f1.graph(), f2.graph()));
        }
    }
    ensure(qualified == 200, || format!("only {qualified} qualified instances"))?;
    ensure(holds == 200, || format!("{holds}/200; {}", bad.join("; ")))?;
    Ok(format!("200/200 inclusions hold ({strict} strict), {violated} unqualified draws skipped"))
}

fn chain_rule_fuzz(inv: &mut Containment) -> Outcome {
    let mut rng = seeded(6);
    let (mut qualified, mut skipped, mut holds) = (0, 0, 0);
    let mut bad = Vec::new();
    while qualified < 100 && qualified + skipped < 100 * MAX_ATTEMPTS {
        let g = map(&mut rng, 1, 1);
        let f = map(&mut rng, 1, 1);
        let (t1, t2) = (order_cone(&mut rng, 1), order_cone(&mut rng, 1));
        let comp = f.compose(&g).unwrap();
        let e = comp.epi(&t2).unwrap();
        if e.graph().is_empty() {
            continue;
        }
        let p = face_point(&mut rng, e.graph());
        let (x, z) = split(&p);
        let r = verifier::check_chain_rule(&g, &f, &t1, &t2, x, z).map_err(|e| e.to_string())?;
        // Both the qualification and the epigraphical composition identity must be verified.
        if !r.conclusion_guaranteed() {
            skipped += 1;
            continue;
        }
        qualified += 1;
        inv.subdiffs(&comp, &t2, x, z);
        let plain = r.comparison("plain").unwrap().verdict;
        let singular = r.comparison("singular").unwrap().verdict;
        if plain.holds() && singular.holds() {
            holds += 1;
        } else if bad.len() < 3 {
            bad.push(format!("G={} F={} at {p}: plain {plain}, singular {singular}", g.graph(), f.graph()));
        }
    }
    ensure(qualified == 100, || format!("only {qualified} qualified compositions"))?;
    ensure(holds == 100, || format!("{holds}/100; {}", bad.join("; ")))?;

    let inst = shipped("chain_abs.json");
    let spec = inst.checks.iter().find(|c| matches!(c, CheckSpec::ChainRule { point, .. } if point == "origin")).unwrap();
    let r = run::run_check(&inst, spec).map_err(|e| e.to_string())?;
    ensure(r.verdict() == Verdict::EqualityHolds && r.lhs().set_equal(&interval(-1, 1)).unwrap(), || {
        format!("|x| chain: {} vs {}", r.lhs(), r.rhs())
    })?;
    Ok(format!("100/100 inclusions hold, {skipped} draws without verified hypotheses skipped; |x| chain LHS=RHS={}", r.lhs()))
}

fn oracle(inv: &mut Containment) -> Outcome {
    let mut rng = seeded(7);
    let (mut generators, mut covered, mut unsound) = (0, 0, Vec::new());
    let (mut mutants, mut detected) = (0, 0);
    let start = Instant::now();
    for i in 0..30 {
        let dim = 1 + i % 3;
        let s = polyset(&mut rng, dim, if dim == 3 { 2 } else { 3 });
        let x = face_point(&mut rng, &s);
        inv.normal_cones(&s, &x);
        let exact = setcalc_core::varcone::limiting_normal_cone(&s, &x).unwrap();
        let grid = SampleGrid::local(&s, &x, run::ORACLE_GRID).unwrap();
        let sampled = sampled_limiting_cone(&s, &x, &grid, ORACLE_RESOLUTION).unwrap();
        let cmp = compare_cones(&exact, &sampled, ORACLE_RESOLUTION).unwrap();
        generators += cmp.generators;
        covered += cmp.covered;
        if !cmp.sound() {
            unsound.push(format!("{s} at {x}: {}", cmp.non_members[0]));
        }
        for k in 0..exact.pieces().len() {
            let rest: Vec<Polyhedron> =
                exact.pieces().iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p.clone()).collect();
            let mutant = if rest.is_empty() { ConeUnion::origin(dim) } else { ConeUnion::from_cones(dim, rest).unwrap() };
            if mutant.set_equal(&exact).unwrap() {
                continue;
            }
            mutants += 1;
            if !compare_cones(&mutant, &sampled, ORACLE_RESOLUTION).unwrap().sound() {
                detected += 1;
            }
        }
    }
    let coverage = if generators == 0 { 1.0 } else { covered as f64 / generators as f64 };
    let detection = if mutants == 0 { 1.0 } else { detected as f64 / mutants as f64 };
    ensure(unsound.is_empty(), || format!("unsound samples: {}", unsound.join("; ")))?;
    ensure(coverage >= MIN_COVERAGE, || format!("coverage {covered}/{generators}"))?;
    ensure(mutants > 0 && detection >= MIN_MUTANT_DETECTION, || format!("mutants detected {detected}/{mutants}"))?;
    Ok(format!(
        "30 instances sound, coverage {covered}/{generators}, mutants detected {detected}/{mutants}, {:.1} s",
        start.elapsed().as_secs_f64()
    ))
}

fn graph(pieces: Vec<Polyhedron>) -> PolyMap {
    PolyMap::from_pieces(1, 1, pieces).unwrap()
}

fn h(ineqs: &[(&[i64], i64)], eqs: &[(&[i64], i64)]) -> Polyhedron {
    let dim = ineqs.iter().chain(eqs).map(|(a, _)| a.len()).next().unwrap();
    Polyhedron::from_hrep(
        dim,
        ineqs.iter().map(|(a, b)| Constraint::from_i64(a, *b)).collect(),
        eqs.iter().map(|(a, b)| Constraint::from_i64(a, *b)).collect(),
    )
}

/// Hand-built mappings with their known Lipschitz-like status at the given graph point.
fn lipschitz_cases() -> Vec<(&'static str, PolyMap, Vec<i64>, bool)> {
    let xs = |v: &[i64]| v.to_vec();
    let line = |a: i64, b: i64| h(&[], &[(&[a, -1], -b)]);
    let step_low = h(&[(&[1, 0], 0)], &[(&[0, 1], 0)]);
    let step_high = h(&[(&[-1, 0], 0)], &[(&[0, 1], 1)]);
    let riser = h(&[(&[0, -1], 0), (&[0, 1], 1)], &[(&[1, 0], 0)]);
    vec![
        ("identity", PolyMap::identity(1), xs(&[0, 0]), true),
        ("constant", graph(vec![line(0, 2)]), xs(&[5, 2]), true),
        ("affine slope 3", graph(vec![line(3, -1)]), xs(&[1, 2]), true),
        ("|x| at kink", graph(vec![h(&[(&[-1, 0], 0)], &[(&[1, -1], 0)]), h(&[(&[1, 0], 0)], &[(&[-1, -1], 0)])]), xs(&[0, 0]), true),
        ("-|x| at kink", graph(vec![h(&[(&[-1, 0], 0)], &[(&[-1, -1], 0)]), h(&[(&[1, 0], 0)], &[(&[1, -1], 0)])]), xs(&[0, 0]), true),
        ("epigraph of |x|", graph(vec![h(&[(&[1, -1], 0), (&[-1, -1], 0)], &[])]), xs(&[0, 0]), true),
        ("epigraph of |x| interior", graph(vec![h(&[(&[1, -1], 0), (&[-1, -1], 0)], &[])]), xs(&[0, 3]), true),
        ("[-|x|, |x|] band", graph(vec![h(&[(&[1, -1], 0), (&[-1, -1], 0)], &[]), h(&[(&[1, 1], 0), (&[-1, 1], 0)], &[])]), xs(&[0, 0]), true),
        ("x ↦ [x, x+1]", graph(vec![h(&[(&[1, -1], 0), (&[-1, 1], 1)], &[])]), xs(&[0, 1]), true),
        ("x ↦ [0, 1] constant", graph(vec![h(&[(&[0, -1], 0), (&[0, 1], 1)], &[])]), xs(&[2, 0]), true),
        ("whole plane", PolyMap::new(1, 1, PolySet::from(Polyhedron::universe(2))).unwrap(), xs(&[0, 0]), true),
        ("hypograph of x", graph(vec![h(&[(&[-1, 1], 0)], &[])]), xs(&[1, 1]), true),
        ("two crossing lines", graph(vec![line(1, 0), line(-1, 0)]), xs(&[0, 0]), true),
        ("sawtooth kink", graph(vec![h(&[(&[1, 0], 0)], &[(&[2, -1], 0)]), h(&[(&[-1, 0], 0)], &[(&[-1, -1], 0)])]), xs(&[0, 0]), true),
        ("2D domain, |x1| + x2", PolyMap::from_pieces(2, 1, vec![
            h(&[(&[-1, 0, 0], 0)], &[(&[1, 1, -1], 0)]),
            h(&[(&[1, 0, 0], 0)], &[(&[-1, 1, -1], 0)]),
        ]).unwrap(), xs(&[0, 0, 0]), true),
        ("upward jump, midpoint of riser", graph(vec![step_low.clone(), step_high.clone(), riser.clone()]), xs(&[0, 0]), false),
        ("upward jump, top of riser", graph(vec![step_low.clone(), step_high.clone(), riser.clone()]), xs(&[0, 1]), false),
        ("riser alone over the line", graph(vec![line(0, 0), riser.clone()]), xs(&[0, 1]), false),
        ("downward jump", graph(vec![h(&[(&[1, 0], 0)], &[(&[0, 1], 1)]), h(&[(&[-1, 0], 0)], &[(&[0, 1], 0)]), riser]), xs(&[0, 0]), false),
        ("2D domain jump in x1", PolyMap::from_pieces(2, 1, vec![
            h(&[(&[1, 0, 0], 0)], &[(&[0, 0, 1], 0)]),
            h(&[(&[-1, 0, 0], 0)], &[(&[0, 0, 1], 1)]),
            h(&[(&[0, 0, -1], 0), (&[0, 0, 1], 1)], &[(&[1, 0, 0], 0)]),
        ]).unwrap(), xs(&[0, 0, 0]), false),
    ]
}

fn wellposedness() -> Outcome {
    let cases = lipschitz_cases();
    let mut wrong = Vec::new();
    let mut rejected = 0;
    for (name, f, p, expected) in &cases {
        let p = RatVec::from_i64(p);
        let (x, z) = p.split_at(f.dom_dim());
        ensure(f.on_graph(x, z), || format!("{name}: point off the graph"))?;
        let got = is_lipschitz_like(f, x, z).map_err(|e| e.to_string())?;
        if got != *expected {
            wrong.push(*name);
        }
        rejected += usize::from(!got && !expected);
    }
    ensure(cases.len() == 20, || format!("{} cases", cases.len()))?;
    ensure(wrong.is_empty(), || format!("wrong classification: {}", wrong.join(", ")))?;
    ensure(rejected == 5, || format!("{rejected} jump graphs rejected"))?;

    let mut rng = seeded(8);
    for _ in 0..20 {
        let (m, n) = (rng.gen_range(1..=2), rng.gen_range(1..=3));
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let a = RatMatrix::from_i64(&refs);
        let b = RatVec::from_i64(&(0..m).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>());
        let x = RatVec::from_i64(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>());
        let zs = RatVec::from_i64(&(0..m).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
        let f = PolyMap::affine(&a, &b).unwrap();
        let fx = a.apply(&x).add(&b);
        let expected = PolySet::from(Polyhedron::point(a.transpose().apply(&zs)));
        for kind in [ConeKind::Regular, ConeKind::Limiting] {
            let got = coderivative(&f, &x, &fx, &zs, kind).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("D*f({zs}) = {got}, expected {expected} for A = {a:?}"))?;
        }
    }
    Ok("20/20 Lipschitz-like classifications (5 jump graphs rejected), 20/20 affine coderivatives".into())
}

fn containment(inv: &Containment) -> Outcome {
    ensure(inv.tested > 0, || "nothing tested".into())?;
    ensure(inv.violations.is_empty(), || format!("{} violations: {}", inv.violations.len(), inv.violations[0]))?;
    Ok(format!("{} containments, 0 violations", inv.tested))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_setcalc");
    let mut files: Vec<PathBuf> = std::fs::read_dir(instances_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    let run = |file: &Path, jobs: &str| Command::new(bin).args(["--json", "check", "--jobs", jobs]).arg(file).output().unwrap().stdout;
    for file in &files {
        let first = run(file, "1");
        let second = run(file, "1");
        let parallel = run(file, "4");
        ensure(!first.is_empty(), || format!("{} produced no report", file.display()))?;
        ensure(first == second && first == parallel, || format!("{} differs between runs", file.display()))?;
    }
    Ok(format!("{} instances byte-identical across three runs", files.len()))
}

fn main() {
    let mut inv = Containment::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("sum rule equality on |x| and -|x| epigraphs", sum_equality()),
        ("strict sum rule inclusion", sum_strict()),
        ("epigraphical sum identity suite", epi_sum_identity()),
        ("indicator identity suite", indicator_identity(&mut inv)),
        ("sum rule soundness fuzz", sum_rule_fuzz(&mut inv)),
        ("chain rule soundness fuzz", chain_rule_fuzz(&mut inv)),
        ("oracle equivalence", oracle(&mut inv)),
        ("well-posedness criteria", wellposedness()),
    ];
    let mut results = results;
    results.push(("regular within limiting", containment(&inv)));
    results.push(("deterministic JSON reports", determinism()));

    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
