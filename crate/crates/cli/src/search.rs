//! The `search-cocycles` subcommand.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use singlink::invariants::{solve_cocycle_space, validate_cocycle_pair, CocyclePair, WeightFile};

use crate::error::CliError;
use crate::inputs::{as_singquandle, load_structure, load_weights};

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub structure: PathBuf,
    pub modulus: u64,
    pub size: u128,
    pub cyclic_orders: Vec<u64>,
    pub generators: Vec<CocyclePair>,
    pub generators_valid: bool,
    pub member: Option<bool>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl SearchResult {
    pub fn to_text(&self) -> String {
        let factors: Vec<String> = self.cyclic_orders.iter().map(|d| format!("Z{d}")).collect();
        let mut out = format!(
            "structure: {}\nmodulus: {}\nsolutions: {}\ngroup: {}\ngenerators: {}\ngenerators valid: {}\n",
            self.structure.display(),
            self.modulus,
            self.size,
            if factors.is_empty() {
                "0".to_string()
            } else {
                factors.join(" x ")
            },
            self.generators.len(),
            yes_no(self.generators_valid),
        );
        for (i, (g, d)) in self.generators.iter().zip(&self.cyclic_orders).enumerate() {
            let file = WeightFile {
                modulus: g.modulus,
                phi: g.phi.clone(),
                phi_prime: Some(g.phi_prime.clone()),
                psi: None,
            };
            out.push_str(&format!("# generator {} of order {d}\n{}", i + 1, file.serialize()));
        }
        if let Some(m) = self.member {
            out.push_str(&format!("member: {}\n", yes_no(m)));
        }
        out.trim_end().to_string()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "search-cocycles",
            "inputs": { "structure": self.structure.display().to_string() },
            "value": self.size.to_string(),
            "multiset": Value::Null,
            "modulus": self.modulus,
            "cyclic_orders": self.cyclic_orders,
            "generators": self.generators.iter().map(|g| g.to_vector()).collect::<Vec<_>>(),
            "generators_valid": self.generators_valid,
            "member": self.member,
        })
    }
}

pub fn run(structure: &Path, modulus: u64, contains: Option<&Path>) -> Result<SearchResult, CliError> {
    if modulus < 2 {
        return Err(CliError::Usage(format!("--modulus must be at least 2, got {modulus}")));
    }
    let s = as_singquandle(load_structure(structure)?)?;
    let space = solve_cocycle_space(&s, modulus)?;
    let generators = space.generators();
    let generators_valid = generators
        .iter()
        .all(|g| validate_cocycle_pair(&s, g).is_ok_and(|r| r.is_valid()));
    let member = contains
        .map(|path| -> Result<bool, CliError> {
            let w = load_weights(path)?;
            if w.modulus != 0 && w.modulus % modulus != 0 {
                return Err(CliError::Usage(format!(
                    "{}: weights modulo {} do not reduce modulo {modulus}",
                    path.display(),
                    w.modulus
                )));
            }
            let phi_prime = w
                .phi_prime
                .ok_or_else(|| CliError::Usage(format!("{}: no 'phiprime:' block", path.display())))?;
            let cp = CocyclePair {
                modulus,
                phi: w.phi.reduced(modulus),
                phi_prime: phi_prime.reduced(modulus),
            };
            Ok(space.contains(&cp))
        })
        .transpose()?;
    Ok(SearchResult {
        structure: structure.to_path_buf(),
        modulus,
        size: space.size(),
        cyclic_orders: space.cyclic_orders(),
        generators,
        generators_valid,
        member,
    })
}
