#![allow(dead_code)]

use std::path::PathBuf;

use singlink::algebra::io::{parse_structure, Structure};
use singlink::algebra::{OrientedSingquandle, Psyquandle, ShadowStructure};
use singlink::diagram::{parse_diagram, SingularDiagram};
use singlink::invariants::{parse_weights, CocyclePair, WeightFile};

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn read(path: &str) -> String {
    std::fs::read_to_string(root().join(path)).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn diagram(name: &str) -> SingularDiagram {
    parse_diagram(&read(&format!("corpus/{name}"))).unwrap()
}

pub fn corpus() -> Vec<(String, SingularDiagram)> {
    let mut names: Vec<String> = std::fs::read_dir(root().join("corpus"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".dgm"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), diagram(&n))).collect()
}

pub fn structure(name: &str) -> Structure {
    parse_structure(&read(&format!("fixtures/{name}"))).unwrap()
}

pub fn singquandle(name: &str) -> OrientedSingquandle {
    match structure(name) {
        Structure::Singquandle(s) => s,
        Structure::Shadow(sh) => sh.base().clone(),
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub fn shadow(name: &str) -> ShadowStructure {
    match structure(name) {
        Structure::Shadow(s) => s,
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub fn psyquandle(name: &str) -> Psyquandle {
    match structure(name) {
        Structure::Psyquandle(p) => p,
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub fn weights(name: &str) -> WeightFile {
    parse_weights(&read(&format!("fixtures/{name}"))).unwrap()
}

pub fn z6_cocycle() -> CocyclePair {
    let w = weights("z6_cocycle.wgt");
    CocyclePair {
        modulus: w.modulus,
        phi: w.phi,
        phi_prime: w.phi_prime.unwrap(),
    }
}
