//! The `corpus` subcommand: recomputes every bundled reproduction target.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::ValueEnum;
use serde_json::{json, Value};
use singlink::invariants::{solve_cocycle_space, validate_boltzmann, CocyclePair};
use singlink::polynomial::{InvariantValue, TagShape, Variables};

use crate::embedded;
use crate::error::CliError;
use crate::inputs::{
    as_psyquandle, as_singquandle, candidate_from_text, diagram_from_text, structure_from_text, weights_from_text,
};
use crate::invariant::{compute, InvariantKind, Loaded};
use crate::output::millis;

/// Groups of rows that can be run on their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    /// Counting and cocycle state sums over the six-element structure.
    Cocycle,
    /// Subsingquandle polynomials.
    Ssqp,
    /// Shadow colorings and shadow polynomials.
    Shadow,
    /// Psyquandle colorings and Boltzmann weights.
    Psyquandle,
}

impl Group {
    fn name(self) -> &'static str {
        match self {
            Group::Cocycle => "cocycle",
            Group::Ssqp => "ssqp",
            Group::Shadow => "shadow",
            Group::Psyquandle => "psyquandle",
        }
    }
}

/// How an expected value is compared with the computed one.
#[derive(Debug, Clone, Copy)]
enum Compare {
    Text,
    Value(Variables, TagShape),
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Invariant {
        kind: InvariantKind,
        diagram: Option<&'static str>,
        structure: &'static str,
        weights: Option<&'static str>,
    },
    Validity(&'static str),
    Membership {
        structure: &'static str,
        modulus: u64,
        weights: &'static str,
    },
    BoltzmannAxioms {
        structure: &'static str,
        weights: &'static str,
    },
    StrongCompatibility {
        structure: &'static str,
        weights: &'static str,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct Row {
    group: Group,
    label: &'static str,
    task: Task,
    expected: &'static str,
    compare: Compare,
}

const U_POLY: Compare = Compare::Value(Variables::Single('u'), TagShape::Poly);

fn inv(kind: InvariantKind, diagram: &'static str, structure: &'static str) -> Task {
    Task::Invariant {
        kind,
        diagram: Some(diagram),
        structure,
        weights: None,
    }
}

fn row(group: Group, label: &'static str, task: Task, expected: &'static str, compare: Compare) -> Row {
    Row {
        group,
        label,
        task,
        expected,
        compare,
    }
}

/// Every reproduction target, in output order.
pub fn rows() -> Vec<Row> {
    use Compare::Text;
    use Group::*;
    use InvariantKind as K;
    let z6 = "z6_singquandle.alg";
    let z8 = "z8_singquandle.alg";
    let shadow = "z8_z6_shadow.alg";
    let state_sum = |d| Task::Invariant {
        kind: K::StateSum,
        diagram: Some(d),
        structure: z6,
        weights: Some("z6_cocycle.wgt"),
    };
    let z6_ring = Compare::Value(Variables::Single('u'), TagShape::Ring(6));
    vec![
        row(Cocycle, "Z6 structure", Task::Validity(z6), "valid", Text),
        row(
            Cocycle,
            "Z6 structure with R2 = 3",
            Task::Validity("z6_constant_r2.alg"),
            "invalid",
            Text,
        ),
        row(Cocycle, "5k6 count", inv(K::Count, "5k6.dgm", z6), "6", Text),
        row(Cocycle, "5k7 count", inv(K::Count, "5k7.dgm", z6), "6", Text),
        row(Cocycle, "5k6 state sum", state_sum("5k6.dgm"), "6u^3", z6_ring),
        row(Cocycle, "5k7 state sum", state_sum("5k7.dgm"), "6", z6_ring),
        row(
            Cocycle,
            "Z6 weight pair is a cocycle",
            Task::Membership {
                structure: z6,
                modulus: 6,
                weights: "z6_cocycle.wgt",
            },
            "yes",
            Text,
        ),
        row(Ssqp, "K1 count", inv(K::Count, "K1.dgm", z8), "8", Text),
        row(Ssqp, "K2 count", inv(K::Count, "K2.dgm", z8), "8", Text),
        row(
            Ssqp,
            "K1 phi_Ssqp",
            inv(K::PhiSsqp, "K1.dgm", z8),
            "4u^{s1^4 t1^4 s2^2 t2^2 s3 t3} + 4u^{2 s1^4 t1^4 s2^2 t2^2 s3 t3}",
            U_POLY,
        ),
        row(
            Ssqp,
            "K2 phi_Ssqp",
            inv(K::PhiSsqp, "K2.dgm", z8),
            "4u^{4 s1^4 t1^4 s3 t3} + 4u^{s1^4 t1^4 s2^2 t2^2 s3 t3}",
            U_POLY,
        ),
        row(
            Shadow,
            "sp with x.s = x+2s+s^2",
            Task::Invariant {
                kind: K::Sp,
                diagram: None,
                structure: "z8_z4_shadow.alg",
                weights: None,
            },
            "4 t^4",
            Text,
        ),
        row(
            Shadow,
            "sp with x.s = 3x+2s+2s^2",
            Task::Invariant {
                kind: K::Sp,
                diagram: None,
                structure: "z8_z4_shadow_quad.alg",
                weights: None,
            },
            "2 t^8 + 2",
            Text,
        ),
        row(Shadow, "4_1k count", inv(K::Count, "4_1k.dgm", shadow), "16", Text),
        row(Shadow, "5_4k count", inv(K::Count, "5_4k.dgm", shadow), "16", Text),
        row(
            Shadow,
            "4_1k shadow count",
            inv(K::ShadowCount, "4_1k.dgm", shadow),
            "96",
            Text,
        ),
        row(
            Shadow,
            "5_4k shadow count",
            inv(K::ShadowCount, "5_4k.dgm", shadow),
            "96",
            Text,
        ),
        row(
            Shadow,
            "4_1k phi_Ssqp",
            inv(K::PhiSsqp, "4_1k.dgm", shadow),
            "4u^{s1^2 t1^2 s2^2 t2^2 s3 t3} + 4u^{2 s1^2 t1^2 s2^2 t2^2 s3 t3} + 8u^{4 s1^2 t1^2 s2^2 t2^2 s3 t3}",
            U_POLY,
        ),
        row(
            Shadow,
            "5_4k phi_Ssqp",
            inv(K::PhiSsqp, "5_4k.dgm", shadow),
            "4u^{s1^2 t1^2 s2^2 t2^2 s3 t3} + 4u^{2 s1^2 t1^2 s2^2 t2^2 s3 t3} + 8u^{4 s1^2 t1^2 s2^2 t2^2 s3 t3}",
            U_POLY,
        ),
        row(
            Shadow,
            "4_1k SP",
            inv(K::ShadowPolynomial, "4_1k.dgm", shadow),
            "24u^{t^2} + 24u^{t} + 48u^{2}",
            U_POLY,
        ),
        row(
            Shadow,
            "5_4k SP",
            inv(K::ShadowPolynomial, "5_4k.dgm", shadow),
            "48u^{t^4} + 24u^{t^2} + 24u^{t}",
            U_POLY,
        ),
        row(
            Psyquandle,
            "six-element psyquandle",
            Task::Validity("psy6.alg"),
            "valid",
            Text,
        ),
        row(
            Psyquandle,
            "Boltzmann weights, axioms (I)-(III)",
            Task::BoltzmannAxioms {
                structure: "psy6.alg",
                weights: "psy6_boltzmann.wgt",
            },
            "valid",
            Text,
        ),
        row(
            Psyquandle,
            "Boltzmann weights, axiom (IV)",
            Task::StrongCompatibility {
                structure: "psy6.alg",
                weights: "psy6_boltzmann.wgt",
            },
            "not strongly compatible",
            Text,
        ),
        row(
            Psyquandle,
            "1_1l count",
            inv(K::PsyCount, "1_1l.dgm", "psy6.alg"),
            "24",
            Text,
        ),
        row(
            Psyquandle,
            "1_1l Boltzmann polynomial",
            Task::Invariant {
                kind: K::BoltzmannSingle,
                diagram: Some("1_1l.dgm"),
                structure: "psy6.alg",
                weights: Some("psy6_boltzmann.wgt"),
            },
            "18w + 6",
            Compare::Value(Variables::Single('w'), TagShape::Ring(2)),
        ),
    ]
}

/// Where corpus diagrams are read from.
#[derive(Debug, Clone, Default)]
pub struct Sources {
    pub diagram_dir: Option<PathBuf>,
}

impl Sources {
    fn diagram(&self, name: &str) -> Result<singlink::diagram::SingularDiagram, CliError> {
        match &self.diagram_dir {
            Some(dir) => crate::inputs::load_diagram(&dir.join(name)),
            None => {
                let text =
                    embedded::diagram(name).ok_or_else(|| CliError::Usage(format!("no bundled diagram {name}")))?;
                diagram_from_text(&Path::new("corpus").join(name), text)
            }
        }
    }

    fn fixture(&self, name: &str) -> Result<(&'static str, PathBuf), CliError> {
        let text = embedded::fixture(name).ok_or_else(|| CliError::Usage(format!("no bundled fixture {name}")))?;
        Ok((text, Path::new("fixtures").join(name)))
    }

    fn structure(&self, name: &str) -> Result<singlink::algebra::io::Structure, CliError> {
        let (text, path) = self.fixture(name)?;
        structure_from_text(&path, text)
    }

    fn weights(&self, name: &str) -> Result<singlink::invariants::WeightFile, CliError> {
        let (text, path) = self.fixture(name)?;
        weights_from_text(&path, text)
    }
}

fn perform(task: Task, sources: &Sources) -> Result<String, CliError> {
    match task {
        Task::Invariant {
            kind,
            diagram,
            structure,
            weights,
        } => {
            let d = diagram.map(|n| sources.diagram(n)).transpose()?;
            let loaded = Loaded {
                diagram: d.as_ref(),
                structure: sources.structure(structure)?,
                weights: weights.map(|w| sources.weights(w)).transpose()?,
            };
            Ok(compute(kind, loaded)?.render())
        }
        Task::Validity(name) => {
            let (text, path) = sources.fixture(name)?;
            let valid = candidate_from_text(&path, text)?.validate().is_valid();
            Ok(if valid { "valid" } else { "invalid" }.to_string())
        }
        Task::Membership {
            structure,
            modulus,
            weights,
        } => {
            let s = as_singquandle(sources.structure(structure)?)?;
            let w = sources.weights(weights)?;
            let cp = CocyclePair {
                modulus,
                phi: w.phi,
                phi_prime: w
                    .phi_prime
                    .ok_or_else(|| CliError::Usage(format!("{weights}: no 'phiprime:' block")))?,
            };
            let member = solve_cocycle_space(&s, modulus)?.contains(&cp);
            Ok(if member { "yes" } else { "no" }.to_string())
        }
        Task::BoltzmannAxioms { structure, weights } | Task::StrongCompatibility { structure, weights } => {
            let p = as_psyquandle(sources.structure(structure)?)?;
            let w = sources.weights(weights)?;
            let psi = w
                .psi
                .ok_or_else(|| CliError::Usage(format!("{weights}: no 'psi:' block")))?;
            let check = validate_boltzmann(&p, w.modulus, &w.phi, &psi)?;
            Ok(match task {
                Task::BoltzmannAxioms { .. } => {
                    if check.report.is_valid() {
                        "valid"
                    } else {
                        "invalid"
                    }
                }
                _ if check.compatibility.is_valid() => "strongly compatible",
                _ => "not strongly compatible",
            }
            .to_string())
        }
    }
}

fn agrees(compare: Compare, expected: &str, actual: &str) -> bool {
    match compare {
        Compare::Text => expected == actual,
        Compare::Value(vars, shape) => {
            match (
                InvariantValue::parse(expected, vars, shape),
                InvariantValue::parse(actual, vars, shape),
            ) {
                (Ok(e), Ok(a)) => e == a,
                _ => false,
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct RowOutcome {
    pub group: &'static str,
    pub label: &'static str,
    pub expected: &'static str,
    pub actual: Result<String, String>,
    pub ok: bool,
    pub elapsed: Duration,
}

impl RowOutcome {
    pub fn to_text(&self, timing: bool) -> String {
        let status = if self.ok { "OK" } else { "MISMATCH" };
        let actual = match &self.actual {
            Ok(v) => v.clone(),
            Err(e) => format!("error: {e}"),
        };
        let mut out = format!("{status:<9}{:<11}{}", self.group, self.label);
        if timing {
            out.push_str(&format!(" ({:.1} ms)", millis(self.elapsed)));
        }
        out.push_str(&format!("\n  expected: {}\n  actual:   {actual}", self.expected));
        out
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "group": self.group,
            "label": self.label,
            "expected": self.expected,
            "actual": self.actual.as_ref().ok(),
            "error": self.actual.as_ref().err(),
            "ok": self.ok,
        });
        if timing {
            v["timing_ms"] = json!(millis(self.elapsed));
        }
        v
    }
}

/// Runs the selected rows concurrently and returns outcomes in row order.
pub fn run(filter: Option<Group>, sources: &Sources) -> Vec<RowOutcome> {
    let selected: Vec<Row> = rows()
        .into_iter()
        .filter(|r| filter.is_none_or(|g| g == r.group))
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|r| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let actual = perform(r.task, sources).map_err(|e| e.to_string());
                    let ok = actual.as_ref().is_ok_and(|a| agrees(r.compare, r.expected, a));
                    RowOutcome {
                        group: r.group.name(),
                        label: r.label,
                        expected: r.expected,
                        actual,
                        ok,
                        elapsed: start.elapsed(),
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("corpus row panicked"))
            .collect()
    })
}
