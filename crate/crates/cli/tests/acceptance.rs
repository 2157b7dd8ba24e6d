//! Acceptance criteria, one PASS / FAIL / SKIPPED line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use singlink::algebra::io::{parse_candidate, parse_structure, Structure};
use singlink::algebra::{
    validate_psyquandle, Biquandle, OperationTable, OrientedSingquandle, PsyOp, Psyquandle, ShadowStructure,
};
use singlink::coloring::{psyquandle_colorings, shadow_colorings, singquandle_colorings};
use singlink::diagram::{
    braid_closure, parse_diagram, validate_diagram, BraidLetter, CrossingKind, SingularDiagram, Slot,
};
use singlink::invariants::{
    boltzmann_single, boltzmann_two, parse_weights, phi_ssqp, shadow_polynomial, solve_cocycle_space, sp, state_sum,
    validate_boltzmann, validate_cocycle_pair, BoltzmannPair, CocyclePair, WeightFile, WeightTable,
};
use singlink::polynomial::{InvariantValue, TagShape, Variables};

enum Verdict {
    Pass(String),
    Fail(String),
    Skipped(String),
}

type Outcome = Result<Vec<Verdict>, String>;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(root().join(path)).map_err(|e| format!("{path}: {e}"))
}

fn diagram(name: &str) -> Result<SingularDiagram, String> {
    parse_diagram(&read(&format!("corpus/{name}"))?).map_err(|e| format!("{name}: {e}"))
}

fn structure(name: &str) -> Result<Structure, String> {
    parse_structure(&read(&format!("fixtures/{name}"))?).map_err(|e| format!("{name}: {e}"))
}

fn singquandle(name: &str) -> Result<OrientedSingquandle, String> {
    match structure(name)? {
        Structure::Singquandle(s) => Ok(s),
        Structure::Shadow(sh) => Ok(sh.base().clone()),
        other => Err(format!("{name} holds a {}", other.kind())),
    }
}

fn shadow(name: &str) -> Result<ShadowStructure, String> {
    match structure(name)? {
        Structure::Shadow(sh) => Ok(sh),
        other => Err(format!("{name} holds a {}", other.kind())),
    }
}

fn psyquandle(name: &str) -> Result<Psyquandle, String> {
    match structure(name)? {
        Structure::Psyquandle(p) => Ok(p),
        other => Err(format!("{name} holds a {}", other.kind())),
    }
}

fn weights(name: &str) -> Result<WeightFile, String> {
    parse_weights(&read(&format!("fixtures/{name}"))?).map_err(|e| format!("{name}: {e}"))
}

fn z6_cocycle() -> Result<CocyclePair, String> {
    let w = weights("z6_cocycle.wgt")?;
    Ok(CocyclePair {
        modulus: w.modulus,
        phi: w.phi,
        phi_prime: w.phi_prime.ok_or("z6_cocycle.wgt has no phiprime block")?,
    })
}

fn poly(text: &str) -> InvariantValue {
    InvariantValue::parse(text, Variables::Single('u'), TagShape::Poly).expect("expected value parses")
}

/// Compares a named value and records the comparison.
fn expect<T: PartialEq + std::fmt::Display>(
    what: &str,
    actual: T,
    expected: T,
    notes: &mut Vec<String>,
) -> Result<(), String> {
    if actual == expected {
        notes.push(format!("{what} = {actual}"));
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, got {actual}"))
    }
}

fn single(notes: Vec<String>) -> Outcome {
    Ok(vec![Verdict::Pass(notes.join(", "))])
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let constant = parse_candidate(&read("fixtures/z6_constant_r2.alg")?).map_err(|e| e.to_string())?;
    if constant.validate().is_valid() {
        return Err("the structure with constant R2 = 3 passed validation".into());
    }
    notes.push("R2 = 3 rejected, R2 = 3+x used".into());
    let s = singquandle("z6_singquandle.alg")?;
    let cp = z6_cocycle()?;
    for (name, sum) in [("5k6.dgm", "6u^3"), ("5k7.dgm", "6")] {
        let d = diagram(name)?;
        expect(
            &format!("{name} count"),
            singquandle_colorings(&d, &s).len(),
            6,
            &mut notes,
        )?;
        let value = state_sum(&d, &s, &cp).map_err(|e| e.to_string())?;
        expect(
            &format!("{name} state sum"),
            value.to_string(),
            sum.to_string(),
            &mut notes,
        )?;
    }
    single(notes)
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    let s = singquandle("z8_singquandle.alg")?;
    let cases = [
        (
            "K1.dgm",
            "4u^{s1^4 t1^4 s2^2 t2^2 s3 t3} + 4u^{2 s1^4 t1^4 s2^2 t2^2 s3 t3}",
        ),
        ("K2.dgm", "4u^{4 s1^4 t1^4 s3 t3} + 4u^{s1^4 t1^4 s2^2 t2^2 s3 t3}"),
    ];
    for (name, expected) in cases {
        let d = diagram(name)?;
        expect(
            &format!("{name} count"),
            singquandle_colorings(&d, &s).len(),
            8,
            &mut notes,
        )?;
        let value = phi_ssqp(&d, &s).map_err(|e| e.to_string())?;
        expect(&format!("{name} phi_Ssqp"), value, poly(expected), &mut notes)?;
    }
    single(notes)
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (file, expected) in [("z8_z4_shadow.alg", "4 t^4"), ("z8_z4_shadow_quad.alg", "2 t^8 + 2")] {
        expect(
            &format!("sp({file})"),
            sp(&shadow(file)?).to_string(),
            expected.to_string(),
            &mut notes,
        )?;
    }
    single(notes)
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    let sh = shadow("z8_z6_shadow.alg")?;
    let ssqp =
        poly("4u^{s1^2 t1^2 s2^2 t2^2 s3 t3} + 4u^{2 s1^2 t1^2 s2^2 t2^2 s3 t3} + 8u^{4 s1^2 t1^2 s2^2 t2^2 s3 t3}");
    let cases = [
        ("4_1k.dgm", "24u^{t^2} + 24u^{t} + 48u^{2}"),
        ("5_4k.dgm", "48u^{t^4} + 24u^{t^2} + 24u^{t}"),
    ];
    let mut values = Vec::new();
    for (name, expected) in cases {
        let d = diagram(name)?;
        let count = singquandle_colorings(&d, sh.base()).len();
        expect(&format!("{name} count"), count, 16, &mut notes)?;
        let shadows = shadow_colorings(&d, &sh).map_err(|e| e.to_string())?.len();
        expect(
            &format!("{name} shadow count"),
            shadows,
            sh.set_order() * count,
            &mut notes,
        )?;
        let value = phi_ssqp(&d, sh.base()).map_err(|e| e.to_string())?;
        if value != ssqp {
            return Err(format!("{name} phi_Ssqp: expected {ssqp}, got {value}"));
        }
        let value = shadow_polynomial(&d, &sh).map_err(|e| e.to_string())?;
        expect(&format!("{name} SP"), value.clone(), poly(expected), &mut notes)?;
        values.push(value);
    }
    if values[0] == values[1] {
        return Err("SP does not separate the pair".into());
    }
    notes.push("equal phi_Ssqp".into());
    single(notes)
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    let p = psyquandle("psy6.alg")?;
    let report = validate_psyquandle(
        p.table(PsyOp::Under),
        p.table(PsyOp::Over),
        p.table(PsyOp::SingularUnder),
        p.table(PsyOp::SingularOver),
    );
    if !report.is_valid() {
        return Err(format!("psyquandle axioms: {report}"));
    }
    notes.push("psyquandle axioms (I)-(VI) hold".into());
    let w = weights("psy6_boltzmann.wgt")?;
    let psi = w.psi.ok_or("psy6_boltzmann.wgt has no psi block")?;
    let check = validate_boltzmann(&p, w.modulus, &w.phi, &psi).map_err(|e| e.to_string())?;
    if !check.report.is_valid() {
        return Err(format!("Boltzmann axioms: {}", check.report));
    }
    notes.push("Boltzmann axioms (I)-(III) hold".into());
    notes.push(if check.compatibility.is_valid() {
        "axiom (IV) holds: strongly compatible".to_string()
    } else {
        format!(
            "axiom (IV) fails ({} instances): not strongly compatible",
            check.compatibility.violations.len()
        )
    });
    single(notes)
}

/// Rows of the type-L table; only diagrams present in the corpus are checked.
fn criterion_6() -> Outcome {
    let rows: &[(&str, usize, &str)] = &[
        ("5_2l", 12, "12w"),
        ("6_1l", 12, "12w"),
        ("3_1l", 12, "6w + 6"),
        ("4_1l", 12, "6w + 6"),
        ("5_3l", 12, "6w + 6"),
        ("6_2l", 12, "6w + 6"),
        ("6_6l", 12, "6w + 6"),
        ("6_3l", 24, "24w"),
        ("6_8l", 24, "24w"),
        ("6_9l", 24, "24w"),
        ("6_10l", 24, "24w"),
        ("6_11l", 24, "24w"),
        ("5_1l", 24, "6w + 18"),
        ("6_5l", 24, "6w + 18"),
        ("6_7l", 24, "6w + 18"),
        ("1_1l", 24, "18w + 6"),
        ("6_4l", 36, "18w + 18"),
        ("6_12l", 36, "18w + 18"),
    ];
    let p = psyquandle("psy6.alg")?;
    let w = weights("psy6_boltzmann.wgt")?;
    let bp = BoltzmannPair::new(&p, w.modulus, w.phi, w.psi.ok_or("no psi block")?).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for &(name, count, value) in rows {
        let file = format!("{name}.dgm");
        if !root().join("corpus").join(&file).exists() {
            out.push(Verdict::Skipped(format!("{name}: diagram not transcribed")));
            continue;
        }
        let d = diagram(&file)?;
        let found = psyquandle_colorings(&d, &p).len();
        let poly = boltzmann_single(&d, &p, &bp).map_err(|e| e.to_string())?.to_string();
        out.push(if found == count && poly == value {
            Verdict::Pass(format!("{name}: {found} colorings, {poly}"))
        } else {
            Verdict::Fail(format!("{name}: expected {count} and {value}, got {found} and {poly}"))
        });
    }
    Ok(out)
}

// Property suites.

type Rule<'a> = Box<dyn Fn(CrossingKind, [usize; 4]) -> bool + 'a>;

fn brute_force_count(d: &SingularDiagram, n: usize, rule: &Rule<'_>) -> usize {
    let arcs = d.semiarc_count();
    let last_port = |i: usize| (0..4).map(|k| d.crossings()[i].port(Slot(k)).0).max().unwrap();
    let ready: Vec<Vec<usize>> = (0..arcs)
        .map(|a| (0..d.crossings().len()).filter(|&i| last_port(i) == a).collect())
        .collect();
    let mut colors = vec![0; arcs];
    let mut stack = vec![(0usize, 0usize)];
    let mut count = 0;
    // Iterative depth-first search: (semiarc, next color to try).
    while let Some((a, x)) = stack.pop() {
        if a == arcs {
            count += 1;
            continue;
        }
        if x == n {
            continue;
        }
        stack.push((a, x + 1));
        colors[a] = x;
        let ok = ready[a].iter().all(|&i| {
            let c = &d.crossings()[i];
            rule(c.kind, [0, 1, 2, 3].map(|k| colors[c.port(Slot(k)).0]))
        });
        if ok {
            stack.push((a + 1, 0));
        }
    }
    count
}

fn singquandle_rule(s: &OrientedSingquandle) -> Rule<'_> {
    Box::new(move |kind, [ui, oi, uo, oo]| match kind {
        CrossingKind::Positive => oo == oi && uo == s.star(ui, oi),
        CrossingKind::Negative => oo == oi && uo == s.star_inv(ui, oi),
        CrossingKind::Singular => uo == s.r1(ui, oi) && oo == s.r2(ui, oi),
    })
}

fn psyquandle_rule(p: &Psyquandle) -> Rule<'_> {
    Box::new(move |kind, [ui, oi, uo, oo]| match kind {
        CrossingKind::Positive => oi == p.apply(PsyOp::Over, oo, ui) && uo == p.apply(PsyOp::Under, ui, oo),
        CrossingKind::Negative => ui == p.apply(PsyOp::Under, uo, oi) && oo == p.apply(PsyOp::Over, oi, uo),
        CrossingKind::Singular => {
            oi == p.apply(PsyOp::SingularOver, uo, ui) && oo == p.apply(PsyOp::SingularUnder, ui, uo)
        }
    })
}

fn corpus() -> Result<Vec<(String, SingularDiagram)>, String> {
    let mut names: Vec<String> = std::fs::read_dir(root().join("corpus"))
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter(|n| n.ends_with(".dgm"))
        .collect();
    names.sort();
    names.into_iter().map(|n| Ok((n.clone(), diagram(&n)?))).collect()
}

fn solver_matches_brute_force() -> Result<String, String> {
    let fixtures = ["one.alg", "one_psy.alg", "z6_singquandle.alg", "psy6.alg"];
    let mut pairs = 0;
    for (name, d) in corpus()? {
        if d.semiarc_count() > 12 {
            continue;
        }
        for file in fixtures {
            let (found, expected) = match structure(file)? {
                Structure::Singquandle(s) => (
                    singquandle_colorings(&d, &s).len(),
                    brute_force_count(&d, s.order(), &singquandle_rule(&s)),
                ),
                Structure::Psyquandle(p) => (
                    psyquandle_colorings(&d, &p).len(),
                    brute_force_count(&d, p.order(), &psyquandle_rule(&p)),
                ),
                other => return Err(format!("{file} holds a {}", other.kind())),
            };
            if found != expected {
                return Err(format!("{name} with {file}: solver {found}, brute force {expected}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("solver = brute force on {pairs} pairs"))
}

fn euler_formula() -> Result<String, String> {
    let diagrams = corpus()?;
    for (name, d) in &diagrams {
        let f = d.regions().map_err(|e| e.to_string())?.len() as i64;
        let v = d.crossings().len() as i64;
        let e = d.semiarc_count() as i64;
        if v - e + f != 2 || e != 2 * v || !validate_diagram(d).is_valid() {
            return Err(format!("{name}: V = {v}, E = {e}, F = {f}"));
        }
    }
    Ok(format!("V - E + F = 2 on {} diagrams", diagrams.len()))
}

fn affine_family(rng: &mut StdRng) -> Result<String, String> {
    let mut checked = 0;
    while checked < 1000 {
        let n = rng.gen_range(2..=12i64);
        let a = rng.gen_range(1..n);
        if (1..n).all(|k| (a * k) % n != 1) {
            continue;
        }
        let b = rng.gen_range(0..n);
        // Pick c so that (1 - a)(1 - b - c) = 0 modulo n.
        let candidates: Vec<i64> = (0..n).filter(|c| ((1 - a) * (1 - b - c)).rem_euclid(n) == 0).collect();
        let c = candidates[rng.gen_range(0..candidates.len())];
        let s = OrientedSingquandle::affine(n as usize, a, b, c).map_err(|e| format!("({n}, {a}, {b}, {c}): {e}"))?;
        let tables = [s.star_table(), s.r1_table(), s.r2_table()];
        let direct = OrientedSingquandle::from_formulas(
            n as usize,
            &format!("{a}x+{}y", (1 - a).rem_euclid(n)),
            &format!("{b}x+{c}y"),
            &format!("{}x+{}y", (a * c).rem_euclid(n), (b + c * (1 - a)).rem_euclid(n)),
        )
        .map_err(|e| format!("({n}, {a}, {b}, {c}): {e}"))?;
        if tables != [direct.star_table(), direct.r1_table(), direct.r2_table()] {
            return Err(format!("({n}, {a}, {b}, {c}): tables disagree"));
        }
        checked += 1;
    }
    Ok(format!("{checked} affine triples valid"))
}

/// Strand count and word.
type Braid = (usize, Vec<BraidLetter>);

/// A nonzero strongly compatible weight pair on the two-element swap
/// psyquandle, found by enumerating all pairs modulo 2.
fn swap_weights() -> Result<(Psyquandle, BoltzmannPair), String> {
    let p = Biquandle::constant_action(&[1, 0])
        .and_then(|b| b.to_psyquandle())
        .map_err(|e| e.to_string())?;
    for code in 1u32..256 {
        let bit = |k: usize| i64::from((code >> k) & 1 == 1);
        let phi = WeightTable::from_fn(2, |x, y| bit((2 * x + y) as usize));
        let psi = WeightTable::from_fn(2, |x, y| bit(4 + (2 * x + y) as usize));
        if phi.entries().iter().all(|&v| v == 0) {
            continue;
        }
        if let Ok(bp) = BoltzmannPair::new(&p, 2, phi, psi) {
            if bp.strongly_compatible {
                return Ok((p, bp));
            }
        }
    }
    Err("no nonzero strongly compatible pair on the swap psyquandle".into())
}

fn move_invariance() -> Result<String, String> {
    use BraidLetter::{Sigma as S, SigmaInv as Si, Tau as T};
    let pairs: Vec<(&str, Braid, Braid)> = vec![
        ("RII", (2, vec![T(0), S(0), S(0), Si(0)]), (2, vec![T(0), S(0)])),
        (
            "RIII",
            (3, vec![S(0), S(1), S(0), T(1)]),
            (3, vec![S(1), S(0), S(1), T(1)]),
        ),
        (
            "singular commutation",
            (2, vec![T(0), S(0), S(0)]),
            (2, vec![S(0), T(0), S(0)]),
        ),
        (
            "singular slide",
            (3, vec![S(0), S(1), T(0), Si(1)]),
            (3, vec![T(1), S(0), S(1), Si(1)]),
        ),
        (
            "stabilization",
            (2, vec![T(0), S(0), T(0)]),
            (3, vec![T(0), S(0), T(0), Si(1)]),
        ),
    ];
    let z6 = singquandle("z6_singquandle.alg")?;
    let cp = z6_cocycle()?;
    let z8 = singquandle("z8_singquandle.alg")?;
    let sh = shadow("z8_z6_shadow.alg")?;
    let p = psyquandle("psy6.alg")?;
    let w = weights("psy6_boltzmann.wgt")?;
    let bp = BoltzmannPair::new(&p, w.modulus, w.phi, w.psi.ok_or("no psi block")?).map_err(|e| e.to_string())?;
    let (swap, swap_pair) = swap_weights()?;
    let err = |e: &dyn std::fmt::Display| e.to_string();
    for (name, (na, wa), (nb, wb)) in &pairs {
        let a = braid_closure(*na, wa).map_err(|e| err(&e))?;
        let b = braid_closure(*nb, wb).map_err(|e| err(&e))?;
        let values = |d: &SingularDiagram| -> Result<Vec<String>, String> {
            Ok(vec![
                state_sum(d, &z6, &cp).map_err(|e| err(&e))?.to_string(),
                phi_ssqp(d, &z8).map_err(|e| err(&e))?.to_string(),
                shadow_polynomial(d, &sh).map_err(|e| err(&e))?.to_string(),
                boltzmann_single(d, &p, &bp).map_err(|e| err(&e))?.to_string(),
                boltzmann_two(d, &swap, &swap_pair).map_err(|e| err(&e))?.to_string(),
            ])
        };
        let (va, vb) = (values(&a)?, values(&b)?);
        if va != vb {
            return Err(format!("{name}: {va:?} != {vb:?}"));
        }
    }
    Ok(format!("{} move pairs agree on five invariants", pairs.len()))
}

fn shadow_counts() -> Result<String, String> {
    let mut checked = 0;
    for file in ["z8_z4_shadow.alg", "z8_z4_shadow_quad.alg", "z8_z6_shadow.alg"] {
        let sh = shadow(file)?;
        for (name, d) in corpus()? {
            let base = singquandle_colorings(&d, sh.base()).len();
            let found = shadow_colorings(&d, &sh).map_err(|e| e.to_string())?.len();
            if found != sh.set_order() * base {
                return Err(format!("{name} with {file}: {found} != {} * {base}", sh.set_order()));
            }
            checked += 1;
        }
    }
    Ok(format!("shadow count = |X| * count on {checked} pairs"))
}

fn cocycle_completeness() -> Result<String, String> {
    let star = OperationTable::projection(2);
    let tables: Vec<OperationTable> = (0..16usize)
        .map(|code| OperationTable::new(2, (0..4).map(|k| (code >> k) & 1).collect()).expect("2x2 table"))
        .collect();
    let mut structures = 0;
    for r1 in &tables {
        for r2 in &tables {
            let Ok(s) = OrientedSingquandle::new(star.clone(), r1.clone(), r2.clone()) else {
                continue;
            };
            let space = solve_cocycle_space(&s, 2).map_err(|e| e.to_string())?;
            let mut valid = 0u128;
            for code in 0..256i64 {
                let v: Vec<i64> = (0..8).map(|k| (code >> k) & 1).collect();
                let cp = CocyclePair::from_vector(2, 2, &v);
                let ok = validate_cocycle_pair(&s, &cp).map_err(|e| e.to_string())?.is_valid();
                if ok != space.contains(&cp) {
                    return Err(format!("pair {v:?} misclassified"));
                }
                valid += u128::from(ok);
            }
            if valid != space.size() {
                return Err(format!("space size {} but {valid} pairs found", space.size()));
            }
            structures += 1;
        }
    }
    Ok(format!("cocycle space exact on {structures} two-element structures"))
}

fn sp_relabelling(rng: &mut StdRng) -> Result<String, String> {
    let sh = shadow("z8_z6_shadow.alg")?;
    let expected = sp(&sh);
    let mut set_perm: Vec<usize> = (0..sh.set_order()).collect();
    let mut acting_perm: Vec<usize> = (0..sh.base().order()).collect();
    for _ in 0..100 {
        set_perm.shuffle(rng);
        acting_perm.shuffle(rng);
        let moved = sh.relabel(&set_perm, &acting_perm);
        if sp(&moved) != expected {
            return Err(format!("sp changed under {set_perm:?}, {acting_perm:?}"));
        }
    }
    Ok("sp fixed by 100 relabellings".into())
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let results = [
        solver_matches_brute_force(),
        euler_formula(),
        affine_family(&mut rng),
        move_invariance(),
        shadow_counts(),
        cocycle_completeness(),
        sp_relabelling(&mut rng),
    ];
    Ok(results
        .into_iter()
        .map(|r| match r {
            Ok(note) => Verdict::Pass(note),
            Err(e) => Verdict::Fail(e),
        })
        .collect())
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "counts and cocycle state sums",
            budget: Duration::from_secs(1),
            check: criterion_1,
        },
        Criterion {
            id: 2,
            title: "subsingquandle polynomials",
            budget: Duration::from_secs(1),
            check: criterion_2,
        },
        Criterion {
            id: 3,
            title: "shadow polynomials sp",
            budget: Duration::from_secs(1),
            check: criterion_3,
        },
        Criterion {
            id: 4,
            title: "shadow pipeline",
            budget: Duration::from_secs(5),
            check: criterion_4,
        },
        Criterion {
            id: 5,
            title: "psyquandle and Boltzmann axioms",
            budget: Duration::from_secs(1),
            check: criterion_5,
        },
        Criterion {
            id: 6,
            title: "type-L table",
            budget: Duration::from_secs(5),
            check: criterion_6,
        },
        Criterion {
            id: 7,
            title: "property suites",
            budget: Duration::from_secs(120),
            check: criterion_7,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let mut verdicts = match outcome {
            Ok(v) => v,
            Err(e) => vec![Verdict::Fail(e)],
        };
        if elapsed > c.budget {
            verdicts.push(Verdict::Fail(format!("took {elapsed:?}, budget {:?}", c.budget)));
        }
        for v in verdicts {
            let (tag, note) = match v {
                Verdict::Pass(n) => ("PASS", n),
                Verdict::Fail(n) => {
                    failed += 1;
                    ("FAIL", n)
                }
                Verdict::Skipped(n) => ("SKIPPED", n),
            };
            println!(
                "{tag:<8} criterion {} ({}): {note} [{:.1} ms]",
                c.id,
                c.title,
                elapsed.as_secs_f64() * 1e3
            );
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} failing line(s)");
        ExitCode::FAILURE
    }
}
