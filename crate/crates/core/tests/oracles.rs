mod common;

use common::*;
use singlink::algebra::{dihedral_quandle, Biquandle, OperationTable, OrientedSingquandle, PsyOp, Psyquandle};
use singlink::coloring::{psyquandle_colorings, satisfies_region_rule, shadow_colorings, singquandle_colorings};
use singlink::diagram::{validate_diagram, CrossingKind, SingularDiagram, Slot};
use singlink::invariants::{solve_cocycle_space, validate_cocycle_pair, CocyclePair, WeightTable};

type Rule<'a> = Box<dyn Fn(CrossingKind, [usize; 4]) -> bool + 'a>;

/// Port colors in slot order: under/in1, over/in2, under out/out1, over out/out2.
fn port_colors(d: &SingularDiagram, i: usize, colors: &[usize]) -> [usize; 4] {
    let c = &d.crossings()[i];
    [0, 1, 2, 3].map(|k| colors[c.port(Slot(k)).0])
}

fn singquandle_rule(s: &OrientedSingquandle) -> Rule<'_> {
    Box::new(move |kind, [ui, oi, uo, oo]| match kind {
        CrossingKind::Positive => oo == oi && uo == s.star(ui, oi),
        CrossingKind::Negative => oo == oi && uo == s.star_inv(ui, oi),
        CrossingKind::Singular => uo == s.r1(ui, oi) && oo == s.r2(ui, oi),
    })
}

fn psyquandle_rule(p: &Psyquandle) -> Rule<'_> {
    Box::new(move |kind, [ui, oi, uo, oo]| {
        let op = |o, x, y| p.apply(o, x, y);
        match kind {
            CrossingKind::Positive => oi == op(PsyOp::Over, oo, ui) && uo == op(PsyOp::Under, ui, oo),
            CrossingKind::Negative => ui == op(PsyOp::Under, uo, oi) && oo == op(PsyOp::Over, oi, uo),
            CrossingKind::Singular => oi == op(PsyOp::SingularOver, uo, ui) && oo == op(PsyOp::SingularUnder, ui, uo),
        }
    })
}

/// Depth-first enumeration over semiarcs in index order, checking each
/// crossing once all four of its ports are colored.
fn brute_force(d: &SingularDiagram, n: usize, rule: &Rule<'_>) -> Vec<Vec<usize>> {
    let arcs = d.semiarc_count();
    let ready: Vec<Vec<usize>> = (0..arcs)
        .map(|a| {
            (0..d.crossings().len())
                .filter(|&i| (0..4).map(|k| d.crossings()[i].port(Slot(k)).0).max() == Some(a))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut colors = vec![0; arcs];
    fn go(
        a: usize,
        n: usize,
        d: &SingularDiagram,
        ready: &[Vec<usize>],
        rule: &Rule<'_>,
        colors: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if a == colors.len() {
            out.push(colors.clone());
            return;
        }
        for x in 0..n {
            colors[a] = x;
            if ready[a]
                .iter()
                .all(|&i| rule(d.crossings()[i].kind, port_colors(d, i, colors)))
            {
                go(a + 1, n, d, ready, rule, colors, out);
            }
        }
    }
    go(0, n, d, &ready, rule, &mut colors, &mut out);
    out
}

fn small_singquandles() -> Vec<(String, OrientedSingquandle)> {
    vec![
        ("one".into(), singquandle("one.alg")),
        ("z6".into(), singquandle("z6_singquandle.alg")),
        (
            "dihedral 3".into(),
            OrientedSingquandle::from_quandle(dihedral_quandle(3)).unwrap(),
        ),
        ("affine 5".into(), OrientedSingquandle::affine(5, 2, 3, 3).unwrap()),
        ("affine 4".into(), OrientedSingquandle::affine(4, 3, 1, 2).unwrap()),
    ]
}

fn small_psyquandles() -> Vec<(String, Psyquandle)> {
    vec![
        ("one".into(), psyquandle("one_psy.alg")),
        ("psy6".into(), psyquandle("psy6.alg")),
        (
            "cyclic 3".into(),
            Biquandle::constant_action(&[1, 2, 0]).unwrap().to_psyquandle().unwrap(),
        ),
        (
            "dihedral 5".into(),
            Biquandle::from_quandle(dihedral_quandle(5))
                .unwrap()
                .to_psyquandle()
                .unwrap(),
        ),
    ]
}

#[test]
fn singquandle_solver_matches_brute_force() {
    for (dname, d) in corpus() {
        for (sname, s) in small_singquandles() {
            let expected = brute_force(&d, s.order(), &singquandle_rule(&s));
            let found: Vec<Vec<usize>> = singquandle_colorings(&d, &s)
                .iter()
                .map(|c| c.semiarc_colors.clone())
                .collect();
            assert_eq!(found, expected, "{dname} with {sname}");
        }
    }
}

#[test]
fn psyquandle_solver_matches_brute_force() {
    for (dname, d) in corpus() {
        for (pname, p) in small_psyquandles() {
            let expected = brute_force(&d, p.order(), &psyquandle_rule(&p));
            let found: Vec<Vec<usize>> = psyquandle_colorings(&d, &p)
                .iter()
                .map(|c| c.semiarc_colors.clone())
                .collect();
            assert_eq!(found, expected, "{dname} with {pname}");
        }
    }
}

#[test]
fn constant_colorings_exist_exactly_for_fixed_points() {
    for (dname, d) in corpus() {
        for (sname, s) in small_singquandles() {
            let set = singquandle_colorings(&d, &s);
            for x in 0..s.order() {
                let has_singular = d.crossings().iter().any(|c| c.kind == CrossingKind::Singular);
                let fixed = s.star(x, x) == x && (!has_singular || (s.r1(x, x) == x && s.r2(x, x) == x));
                let present = set.iter().any(|c| c.semiarc_colors.iter().all(|&y| y == x));
                assert_eq!(present, fixed, "{dname} with {sname}, color {x}");
            }
        }
    }
}

#[test]
fn corpus_satisfies_euler_formula() {
    for (name, d) in corpus() {
        let report = validate_diagram(&d);
        assert!(report.is_valid(), "{name}: {:?}", report.problems);
        let v = d.crossings().len() as i64;
        let e = d.semiarc_count() as i64;
        let f = d.regions().unwrap().len() as i64;
        assert_eq!(v - e + f, 2, "{name}");
        assert_eq!(report.faces.map(|x| x as i64), Some(f));
    }
}

#[test]
fn shadow_colorings_factor_through_semiarc_colorings() {
    for file in ["z8_z4_shadow.alg", "z8_z4_shadow_quad.alg", "z8_z6_shadow.alg"] {
        let sh = shadow(file);
        for (name, d) in corpus() {
            let base = singquandle_colorings(&d, sh.base());
            let shadows = shadow_colorings(&d, &sh).unwrap();
            let bijective = sh.action().non_bijective_columns().is_empty();
            if bijective {
                assert_eq!(shadows.len(), base.len() * sh.set_order(), "{name} with {file}");
            }
            let map = d.regions().unwrap();
            for c in &shadows {
                let rc = c.region_colors.as_ref().unwrap();
                assert!(base.iter().any(|b| b.semiarc_colors == c.semiarc_colors));
                assert!(satisfies_region_rule(&map, &c.semiarc_colors, rc, |x, s| sh.act(x, s)));
            }
        }
    }
}

fn all_tables(n: usize) -> impl Iterator<Item = OperationTable> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |mut code| {
        let entries = (0..cells)
            .map(|_| {
                let e = code % n;
                code /= n;
                e
            })
            .collect();
        OperationTable::new(n, entries).unwrap()
    })
}

fn order_two_singquandles() -> Vec<OrientedSingquandle> {
    let star = OperationTable::projection(2);
    let mut out = Vec::new();
    for r1 in all_tables(2) {
        for r2 in all_tables(2) {
            if let Ok(s) = OrientedSingquandle::new(star.clone(), r1.clone(), r2.clone()) {
                out.push(s);
            }
        }
    }
    out
}

#[test]
fn cocycle_space_is_complete_for_order_two() {
    let structures = order_two_singquandles();
    assert!(!structures.is_empty());
    for (i, s) in structures.iter().enumerate() {
        // Modulus 4 exercises non-prime pivots; a few structures suffice.
        let moduli: &[u64] = if i < 3 { &[2, 3, 4] } else { &[2, 3] };
        for &m in moduli {
            let space = solve_cocycle_space(s, m).unwrap();
            let mut valid = 0u128;
            for code in 0..m.pow(8) {
                let v: Vec<i64> = (0..8).map(|k| ((code / m.pow(k)) % m) as i64).collect();
                let cp = CocyclePair::from_vector(2, m, &v);
                let ok = validate_cocycle_pair(s, &cp).unwrap().is_valid();
                assert_eq!(space.contains(&cp), ok, "{v:?} modulo {m}");
                valid += u128::from(ok);
            }
            assert_eq!(space.size(), valid, "modulo {m}");
        }
    }
}

#[test]
fn cocycle_generators_validate() {
    let cases = [
        (singquandle("z6_singquandle.alg"), 6),
        (singquandle("z6_singquandle.alg"), 12),
        (singquandle("z8_singquandle.alg"), 8),
        (OrientedSingquandle::affine(5, 2, 3, 3).unwrap(), 5),
        (OrientedSingquandle::from_quandle(dihedral_quandle(3)).unwrap(), 9),
    ];
    for (s, m) in cases {
        let space = solve_cocycle_space(&s, m).unwrap();
        let gens = space.generators();
        assert_eq!(gens.len(), space.cyclic_orders().len());
        for (g, &order) in gens.iter().zip(&space.cyclic_orders()) {
            assert!(validate_cocycle_pair(&s, g).unwrap().is_valid());
            assert!(space.contains(g));
            // The generator has exactly the advertised additive order.
            let scaled = |k: u64| {
                let v: Vec<i64> = g
                    .to_vector()
                    .iter()
                    .map(|&x| (x * k as i64).rem_euclid(m as i64))
                    .collect();
                v.iter().all(|&x| x == 0)
            };
            assert!(scaled(order));
            assert!((1..order).all(|k| !scaled(k)));
        }
    }
}

#[test]
fn perturbed_cocycle_is_not_a_member() {
    let s = singquandle("z6_singquandle.alg");
    let space = solve_cocycle_space(&s, 6).unwrap();
    let mut cp = z6_cocycle();
    assert!(space.contains(&cp));
    cp.phi_prime = WeightTable::zero(6);
    assert_eq!(space.contains(&cp), validate_cocycle_pair(&s, &cp).unwrap().is_valid());
}
