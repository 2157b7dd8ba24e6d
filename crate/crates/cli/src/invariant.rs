//! The `invariant` subcommand.

use std::path::PathBuf;
use std::time::Instant;

use clap::ValueEnum;
use singlink::algebra::io::Structure;
use singlink::coloring::{psyquandle_colorings, shadow_colorings, singquandle_colorings, ColoringError};
use singlink::diagram::SingularDiagram;
use singlink::invariants::{
    boltzmann_single, boltzmann_two, phi_ssqp, shadow_polynomial, sp, state_sum, BoltzmannPair, CocyclePair,
    InvariantError, WeightFile,
};

use crate::error::CliError;
use crate::inputs::{as_psyquandle, as_shadow, as_singquandle, load_diagram, load_structure, load_weights, Inputs};
use crate::output::{Computed, RunResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantKind {
    #[value(name = "count")]
    Count,
    #[value(name = "state-sum")]
    StateSum,
    #[value(name = "phi-ssqp")]
    PhiSsqp,
    #[value(name = "shadow-count")]
    ShadowCount,
    #[value(name = "sp")]
    Sp,
    #[value(name = "SP")]
    ShadowPolynomial,
    #[value(name = "psy-count")]
    PsyCount,
    #[value(name = "boltzmann-1")]
    BoltzmannSingle,
    #[value(name = "boltzmann-2")]
    BoltzmannTwo,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Count => "count",
            InvariantKind::StateSum => "state-sum",
            InvariantKind::PhiSsqp => "phi-ssqp",
            InvariantKind::ShadowCount => "shadow-count",
            InvariantKind::Sp => "sp",
            InvariantKind::ShadowPolynomial => "SP",
            InvariantKind::PsyCount => "psy-count",
            InvariantKind::BoltzmannSingle => "boltzmann-1",
            InvariantKind::BoltzmannTwo => "boltzmann-2",
        }
    }

    fn needs_diagram(self) -> bool {
        self != InvariantKind::Sp
    }

    fn needs_weights(self) -> bool {
        matches!(
            self,
            InvariantKind::StateSum | InvariantKind::BoltzmannSingle | InvariantKind::BoltzmannTwo
        )
    }
}

/// Already-loaded inputs for one computation.
pub struct Loaded<'a> {
    pub diagram: Option<&'a SingularDiagram>,
    pub structure: Structure,
    pub weights: Option<WeightFile>,
}

fn cocycle_pair(w: WeightFile) -> Result<CocyclePair, CliError> {
    let phi_prime = w
        .phi_prime
        .ok_or_else(|| CliError::Usage("state-sum needs a weight file with a 'phiprime:' block".into()))?;
    Ok(CocyclePair {
        modulus: w.modulus,
        phi: w.phi,
        phi_prime,
    })
}

fn boltzmann_pair(p: &singlink::algebra::Psyquandle, w: WeightFile) -> Result<BoltzmannPair, CliError> {
    let psi = w
        .psi
        .ok_or_else(|| CliError::Usage("Boltzmann invariants need a weight file with a 'psi:' block".into()))?;
    Ok(BoltzmannPair::new(p, w.modulus, w.phi, psi)?)
}

fn coloring_error(e: ColoringError) -> CliError {
    CliError::Invariant(InvariantError::Coloring(e))
}

/// Computes one invariant from loaded inputs.
pub fn compute(kind: InvariantKind, input: Loaded<'_>) -> Result<Computed, CliError> {
    let d = || {
        input
            .diagram
            .ok_or_else(|| CliError::Usage(format!("{} needs a diagram file", kind.name())))
    };
    let weights = || {
        input
            .weights
            .clone()
            .ok_or_else(|| CliError::Usage(format!("{} needs a weight file", kind.name())))
    };
    Ok(match kind {
        InvariantKind::Count => Computed::Count(singquandle_colorings(d()?, &as_singquandle(input.structure)?).len()),
        InvariantKind::StateSum => {
            let s = as_singquandle(input.structure.clone())?;
            Computed::Multiset(state_sum(d()?, &s, &cocycle_pair(weights()?)?)?)
        }
        InvariantKind::PhiSsqp => Computed::Multiset(phi_ssqp(d()?, &as_singquandle(input.structure)?)?),
        InvariantKind::ShadowCount => {
            let sh = as_shadow(input.structure)?;
            Computed::Count(shadow_colorings(d()?, &sh).map_err(coloring_error)?.len())
        }
        InvariantKind::Sp => Computed::Polynomial(sp(&as_shadow(input.structure)?)),
        InvariantKind::ShadowPolynomial => Computed::Multiset(shadow_polynomial(d()?, &as_shadow(input.structure)?)?),
        InvariantKind::PsyCount => Computed::Count(psyquandle_colorings(d()?, &as_psyquandle(input.structure)?).len()),
        InvariantKind::BoltzmannSingle => {
            let p = as_psyquandle(input.structure.clone())?;
            let bp = boltzmann_pair(&p, weights()?)?;
            Computed::Multiset(boltzmann_single(d()?, &p, &bp)?)
        }
        InvariantKind::BoltzmannTwo => {
            let p = as_psyquandle(input.structure.clone())?;
            let bp = boltzmann_pair(&p, weights()?)?;
            Computed::Multiset(boltzmann_two(d()?, &p, &bp)?)
        }
    })
}

fn required(path: Option<PathBuf>, what: &str, kind: InvariantKind) -> Result<PathBuf, CliError> {
    path.ok_or_else(|| CliError::Usage(format!("{} needs a {what} file", kind.name())))
}

/// Runs the `invariant` subcommand on the given files.
pub fn run(kind: InvariantKind, paths: &[PathBuf]) -> Result<RunResult, CliError> {
    let inputs = Inputs::classify(paths)?;
    let structure_path = required(inputs.structure.clone(), "structure (.alg)", kind)?;
    if kind.needs_diagram() {
        required(inputs.diagram.clone(), "diagram (.dgm)", kind)?;
    }
    if kind.needs_weights() {
        required(inputs.weights.clone(), "weight (.wgt)", kind)?;
    } else if let Some(w) = &inputs.weights {
        return Err(CliError::Usage(format!(
            "{} takes no weight file, got {}",
            kind.name(),
            w.display()
        )));
    }
    let diagram = inputs.diagram.as_deref().map(load_diagram).transpose()?;
    let structure = load_structure(&structure_path)?;
    let weights = inputs.weights.as_deref().map(load_weights).transpose()?;
    let start = Instant::now();
    let value = compute(
        kind,
        Loaded {
            diagram: diagram.as_ref(),
            structure,
            weights,
        },
    )?;
    Ok(RunResult {
        kind: kind.name().to_string(),
        diagram: inputs.diagram,
        structure: Some(structure_path),
        weights: inputs.weights,
        value,
        elapsed: start.elapsed(),
    })
}
