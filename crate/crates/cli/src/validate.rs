//! The `validate` subcommand.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use singlink::algebra::io::Structure;
use singlink::algebra::ValidationReport;
use singlink::diagram::{parse_diagram, validate_diagram};
use singlink::invariants::{validate_boltzmann, validate_cocycle_pair, CocyclePair, WeightFile};

use crate::error::CliError;
use crate::inputs::{as_psyquandle, as_singquandle, candidate_from_text, load_structure, load_weights, read, FileKind};

/// The verdict on one file.
#[derive(Debug, Clone)]
pub struct FileReport {
    pub path: PathBuf,
    pub subject: String,
    pub checks: Vec<(String, ValidationReport)>,
    pub notes: Vec<String>,
}

impl FileReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.is_valid())
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.is_valid() { "valid" } else { "invalid" };
        let mut out = format!("{}: {} {verdict}", self.path.display(), self.subject);
        for note in &self.notes {
            out.push_str(&format!("\n  {note}"));
        }
        for (name, report) in &self.checks {
            for axiom in report.axioms() {
                let hits: Vec<_> = report.violations.iter().filter(|v| v.axiom == axiom).collect();
                let witness: Vec<String> = hits[0].witness.iter().map(|e| (e + 1).to_string()).collect();
                out.push_str(&format!(
                    "\n  {name} axiom {axiom}: {} failure(s), first at ({})",
                    hits.len(),
                    witness.join(", ")
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(name, report)| {
                let axioms: Vec<Value> = report
                    .axioms()
                    .into_iter()
                    .map(|axiom| {
                        let hits: Vec<_> = report.violations.iter().filter(|v| v.axiom == axiom).collect();
                        json!({
                            "axiom": axiom,
                            "failures": hits.len(),
                            "witness": hits[0].witness.iter().map(|e| e + 1).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                json!({ "check": name, "valid": report.is_valid(), "violations": axioms })
            })
            .collect();
        json!({
            "path": self.path.display().to_string(),
            "subject": self.subject,
            "valid": self.is_valid(),
            "checks": checks,
            "notes": self.notes,
        })
    }
}

fn structure_report(path: &Path) -> Result<FileReport, CliError> {
    let candidate = candidate_from_text(path, &read(path)?)?;
    Ok(FileReport {
        path: path.to_path_buf(),
        subject: candidate.kind().to_string(),
        checks: vec![(candidate.kind().to_string(), candidate.validate())],
        notes: Vec::new(),
    })
}

fn diagram_report(path: &Path) -> Result<FileReport, CliError> {
    let d = parse_diagram(&read(path)?).map_err(|source| CliError::Diagram {
        path: path.to_path_buf(),
        source,
    })?;
    let r = validate_diagram(&d);
    let faces = r
        .faces
        .map_or("no rotation system".to_string(), |f| format!("{f} faces"));
    let mut report = ValidationReport::new();
    for p in &r.problems {
        report.push(p.clone(), Vec::new());
    }
    Ok(FileReport {
        path: path.to_path_buf(),
        subject: format!(
            "diagram ({} crossings, {} semiarcs, {faces}, {} components)",
            r.vertices, r.edges, r.components
        ),
        checks: vec![("diagram".into(), report)],
        notes: Vec::new(),
    })
}

fn weights_report(path: &Path, against: Option<&Path>) -> Result<FileReport, CliError> {
    let w: WeightFile = load_weights(path)?;
    let mut report = FileReport {
        path: path.to_path_buf(),
        subject: format!("weights (modulus {}, order {})", w.modulus, w.phi.order()),
        checks: Vec::new(),
        notes: Vec::new(),
    };
    let Some(structure_path) = against else {
        report
            .notes
            .push("parsed; pass --against <structure> to check the weight axioms".into());
        return Ok(report);
    };
    let structure: Structure = load_structure(structure_path)?;
    if let Some(phi_prime) = &w.phi_prime {
        let s = as_singquandle(structure.clone())?;
        let cp = CocyclePair {
            modulus: w.modulus,
            phi: w.phi.clone(),
            phi_prime: phi_prime.clone(),
        };
        report.checks.push(("cocycle".into(), validate_cocycle_pair(&s, &cp)?));
    }
    if let Some(psi) = &w.psi {
        let p = as_psyquandle(structure)?;
        let check = validate_boltzmann(&p, w.modulus, &w.phi, psi)?;
        let compatible = if check.compatibility.is_valid() { "yes" } else { "no" };
        report.notes.push(format!("strongly compatible: {compatible}"));
        report.checks.push(("Boltzmann".into(), check.report));
    }
    if report.checks.is_empty() {
        report.notes.push("no 'phiprime:' or 'psi:' block to check".into());
    }
    Ok(report)
}

/// Validates one file, choosing the checks from its extension.
pub fn validate_file(path: &Path, against: Option<&Path>) -> Result<FileReport, CliError> {
    match FileKind::of(path)? {
        FileKind::Structure => structure_report(path),
        FileKind::Diagram => diagram_report(path),
        FileKind::Weights => weights_report(path, against),
    }
}
