//! Loading and classifying input files.

use std::path::{Path, PathBuf};

use singlink::algebra::io::{parse_candidate, Candidate, Structure};
use singlink::algebra::{Biquandle, OrientedSingquandle, Psyquandle, ShadowStructure};
use singlink::diagram::{parse_diagram, validate_diagram, SingularDiagram};
use singlink::invariants::{parse_weights, WeightFile};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Diagram,
    Structure,
    Weights,
}

impl FileKind {
    pub fn of(path: &Path) -> Result<FileKind, CliError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dgm") => Ok(FileKind::Diagram),
            Some("alg") => Ok(FileKind::Structure),
            Some("wgt") => Ok(FileKind::Weights),
            _ => Err(CliError::Usage(format!(
                "{}: expected a .dgm, .alg or .wgt file",
                path.display()
            ))),
        }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn diagram_from_text(path: &Path, text: &str) -> Result<SingularDiagram, CliError> {
    let d = parse_diagram(text).map_err(|source| CliError::Diagram {
        path: path.to_path_buf(),
        source,
    })?;
    let report = validate_diagram(&d);
    if !report.is_valid() {
        return Err(CliError::Invalid {
            path: path.to_path_buf(),
            reason: report.problems.join("; "),
        });
    }
    Ok(d)
}

pub fn candidate_from_text(path: &Path, text: &str) -> Result<Candidate, CliError> {
    parse_candidate(text).map_err(|source| CliError::Algebra {
        path: path.to_path_buf(),
        source,
    })
}

pub fn structure_from_text(path: &Path, text: &str) -> Result<Structure, CliError> {
    candidate_from_text(path, text)?
        .into_structure()
        .map_err(|source| CliError::Algebra {
            path: path.to_path_buf(),
            source,
        })
}

pub fn weights_from_text(path: &Path, text: &str) -> Result<WeightFile, CliError> {
    parse_weights(text).map_err(|source| CliError::Weights {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_diagram(path: &Path) -> Result<SingularDiagram, CliError> {
    diagram_from_text(path, &read(path)?)
}

pub fn load_structure(path: &Path) -> Result<Structure, CliError> {
    structure_from_text(path, &read(path)?)
}

pub fn load_weights(path: &Path) -> Result<WeightFile, CliError> {
    weights_from_text(path, &read(path)?)
}

fn mismatch(wanted: &str, s: &Structure) -> CliError {
    CliError::Usage(format!(
        "this needs a {wanted}, but the structure file holds a {}",
        s.kind()
    ))
}

/// Views a structure as a singquandle; quandles get projection `R1`, `R2`
/// and shadows contribute their acting singquandle.
pub fn as_singquandle(s: Structure) -> Result<OrientedSingquandle, CliError> {
    match s {
        Structure::Singquandle(s) => Ok(s),
        Structure::Shadow(sh) => Ok(sh.base().clone()),
        Structure::Quandle(t) => {
            OrientedSingquandle::from_quandle(t).map_err(|e| CliError::Usage(format!("quandle cannot be lifted: {e}")))
        }
        other => Err(mismatch("singquandle", &other)),
    }
}

pub fn as_shadow(s: Structure) -> Result<ShadowStructure, CliError> {
    match s {
        Structure::Shadow(sh) => Ok(sh),
        other => Err(mismatch("shadow structure", &other)),
    }
}

/// Views a structure as a psyquandle; biquandles and quandles are lifted.
pub fn as_psyquandle(s: Structure) -> Result<Psyquandle, CliError> {
    let lift = |b: Result<Biquandle, _>| {
        b.and_then(|b: Biquandle| b.to_psyquandle())
            .map_err(|e| CliError::Usage(format!("structure cannot be lifted to a psyquandle: {e}")))
    };
    match s {
        Structure::Psyquandle(p) => Ok(p),
        Structure::Biquandle(b) => lift(Ok(b)),
        Structure::Quandle(t) => lift(Biquandle::from_quandle(t)),
        other => Err(mismatch("psyquandle", &other)),
    }
}

/// Input paths sorted by role.
#[derive(Debug, Default)]
pub struct Inputs {
    pub diagram: Option<PathBuf>,
    pub structure: Option<PathBuf>,
    pub weights: Option<PathBuf>,
}

impl Inputs {
    pub fn classify(paths: &[PathBuf]) -> Result<Inputs, CliError> {
        let mut inputs = Inputs::default();
        for p in paths {
            let slot = match FileKind::of(p)? {
                FileKind::Diagram => &mut inputs.diagram,
                FileKind::Structure => &mut inputs.structure,
                FileKind::Weights => &mut inputs.weights,
            };
            if slot.replace(p.clone()).is_some() {
                return Err(CliError::Usage(format!("more than one file like {}", p.display())));
            }
        }
        Ok(inputs)
    }
}
