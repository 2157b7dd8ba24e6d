//! Oriented singular link diagrams as crossing records over directed
//! semiarcs, with an optional counterclockwise rotation per crossing.
//!
//! File format, one record per line (`#` starts a comment):
//!
//! ```text
//! P <under_in> <over_in> <under_out> <over_out>
//! N <under_in> <over_in> <under_out> <over_out>
//! S <in1> <in2> <out1> <out2>
//! rot <crossing> <port> <port> <port> <port>
//! ```
//!
//! Crossings are numbered from 1 in file order. Ports are named
//! `ui oi uo oo` at classical crossings and `i1 i2 o1 o2` at singular ones.

mod braid;
mod regions;

pub use braid::{braid_closure, BraidLetter};
pub use regions::{Region, RegionId, RegionMap, Side};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("semiarc '{label}' has {role} at two ports")]
    DuplicateEndpoint { label: String, role: &'static str },
    #[error("semiarc '{label}' has no {role}")]
    MissingEndpoint { label: String, role: &'static str },
    #[error("diagram has no crossings")]
    Empty,
    #[error("crossing {0} has no rotation")]
    MissingRotation(usize),
    #[error("rotations are not planar: {0}")]
    NonPlanar(String),
    #[error("invalid braid word: {0}")]
    Braid(String),
}

/// Index of a semiarc in [`SingularDiagram::labels`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiArcId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
}

impl CrossingKind {
    fn tag(self) -> &'static str {
        match self {
            CrossingKind::Positive => "P",
            CrossingKind::Negative => "N",
            CrossingKind::Singular => "S",
        }
    }

    pub fn is_classical(self) -> bool {
        self != CrossingKind::Singular
    }
}

/// A port slot of a crossing. Slots 0 and 1 are incoming, 2 and 3 outgoing:
/// `ui oi uo oo` at classical crossings, `i1 i2 o1 o2` at singular ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot(pub usize);

impl Slot {
    pub const UNDER_IN: Slot = Slot(0);
    pub const OVER_IN: Slot = Slot(1);
    pub const UNDER_OUT: Slot = Slot(2);
    pub const OVER_OUT: Slot = Slot(3);
    pub const IN1: Slot = Slot(0);
    pub const IN2: Slot = Slot(1);
    pub const OUT1: Slot = Slot(2);
    pub const OUT2: Slot = Slot(3);

    pub fn is_incoming(self) -> bool {
        self.0 < 2
    }

    fn name(self, kind: CrossingKind) -> &'static str {
        let names = if kind.is_classical() {
            ["ui", "oi", "uo", "oo"]
        } else {
            ["i1", "i2", "o1", "o2"]
        };
        names[self.0]
    }

    fn parse(name: &str, kind: CrossingKind) -> Option<Slot> {
        (0..4).map(Slot).find(|s| s.name(kind) == name)
    }
}

/// One crossing: the semiarc attached at each slot and the counterclockwise
/// order of the slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub ports: [SemiArcId; 4],
    pub rotation: Option<[Slot; 4]>,
}

impl Crossing {
    pub fn port(&self, slot: Slot) -> SemiArcId {
        self.ports[slot.0]
    }

    /// The outgoing slot on the same strand as an incoming slot.
    pub fn continuation(&self, incoming: Slot) -> Slot {
        match (self.kind.is_classical(), incoming.0) {
            (true, i) => Slot(i + 2),
            (false, 0) => Slot::OUT2,
            (false, _) => Slot::OUT1,
        }
    }
}

/// Where a semiarc end is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularDiagram {
    labels: Vec<String>,
    crossings: Vec<Crossing>,
    tails: Vec<Endpoint>,
    heads: Vec<Endpoint>,
}

impl SingularDiagram {
    /// Builds a diagram, checking that every semiarc has exactly one tail and one head.
    pub fn new(labels: Vec<String>, crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let n = labels.len();
        let mut tails: Vec<Option<Endpoint>> = vec![None; n];
        let mut heads: Vec<Option<Endpoint>> = vec![None; n];
        for (c, crossing) in crossings.iter().enumerate() {
            for slot in (0..4).map(Slot) {
                let a = crossing.port(slot).0;
                let (ends, role) = if slot.is_incoming() {
                    (&mut heads, "head")
                } else {
                    (&mut tails, "tail")
                };
                if ends[a].replace(Endpoint { crossing: c, slot }).is_some() {
                    return Err(DiagramError::DuplicateEndpoint {
                        label: labels[a].clone(),
                        role,
                    });
                }
            }
        }
        let collect = |ends: Vec<Option<Endpoint>>, role| {
            ends.into_iter()
                .enumerate()
                .map(|(a, e)| {
                    e.ok_or_else(|| DiagramError::MissingEndpoint {
                        label: labels[a].clone(),
                        role,
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let tails = collect(tails, "tail")?;
        let heads = collect(heads, "head")?;
        Ok(SingularDiagram {
            labels,
            crossings,
            tails,
            heads,
        })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.labels.len()
    }

    pub fn semiarcs(&self) -> impl Iterator<Item = SemiArcId> {
        (0..self.labels.len()).map(SemiArcId)
    }

    pub fn label(&self, a: SemiArcId) -> &str {
        &self.labels[a.0]
    }

    /// The crossing port where the semiarc starts.
    pub fn tail(&self, a: SemiArcId) -> Endpoint {
        self.tails[a.0]
    }

    /// The crossing port where the semiarc ends.
    pub fn head(&self, a: SemiArcId) -> Endpoint {
        self.heads[a.0]
    }

    pub fn has_rotations(&self) -> bool {
        self.crossings.iter().all(|c| c.rotation.is_some())
    }

    /// Number of link components, found by following strands through crossings.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.labels.len()];
        let mut count = 0;
        for start in 0..self.labels.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                let h = self.heads[a];
                let c = &self.crossings[h.crossing];
                a = c.port(c.continuation(h.slot)).0;
            }
        }
        count
    }

    /// Connected components of the underlying 4-valent graph, as crossing index sets.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                i += 1;
                for &a in &self.crossings[c].ports {
                    for e in [self.tails[a.0], self.heads[a.0]] {
                        if comp[e.crossing] == usize::MAX {
                            comp[e.crossing] = id;
                            members.push(e.crossing);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The canonical text form: crossings in index order, then rotations.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SingularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            write!(f, "{}", c.kind.tag())?;
            for a in c.ports {
                write!(f, " {}", self.labels[a.0])?;
            }
            writeln!(f)?;
        }
        for (i, c) in self.crossings.iter().enumerate() {
            if let Some(rot) = c.rotation {
                write!(f, "rot {}", i + 1)?;
                for s in rot {
                    write!(f, " {}", s.name(c.kind))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> DiagramError {
    DiagramError::Parse {
        line,
        reason: reason.into(),
    }
}

/// Parses a diagram file. Semiarcs are numbered in order of first appearance.
pub fn parse_diagram(text: &str) -> Result<SingularDiagram, DiagramError> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, SemiArcId> = HashMap::new();
    let mut crossings: Vec<Crossing> = Vec::new();
    let mut rotations: Vec<(usize, usize, Vec<String>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().expect("nonempty line");
        let rest: Vec<&str> = tokens.collect();
        let kind = match head {
            "P" => CrossingKind::Positive,
            "N" => CrossingKind::Negative,
            "S" => CrossingKind::Singular,
            "rot" => {
                if rest.len() != 5 {
                    return Err(parse_err(lineno, "rotation needs a crossing index and four ports"));
                }
                let idx = rest[0]
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| parse_err(lineno, format!("bad crossing index '{}'", rest[0])))?;
                rotations.push((lineno, idx - 1, rest[1..].iter().map(|s| s.to_string()).collect()));
                continue;
            }
            other => return Err(parse_err(lineno, format!("unknown crossing kind '{other}'"))),
        };
        if rest.len() != 4 {
            return Err(parse_err(lineno, format!("expected 4 semiarcs, found {}", rest.len())));
        }
        let mut ports = [SemiArcId(0); 4];
        for (slot, label) in ports.iter_mut().zip(&rest) {
            *slot = *ids.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                SemiArcId(labels.len() - 1)
            });
        }
        crossings.push(Crossing {
            kind,
            ports,
            rotation: None,
        });
    }
    for (lineno, idx, names) in rotations {
        let crossing = crossings
            .get_mut(idx)
            .ok_or_else(|| parse_err(lineno, format!("no crossing {}", idx + 1)))?;
        if crossing.rotation.is_some() {
            return Err(parse_err(lineno, format!("crossing {} has two rotations", idx + 1)));
        }
        let mut rot = [Slot(0); 4];
        let mut used = [false; 4];
        for (r, name) in rot.iter_mut().zip(&names) {
            let slot =
                Slot::parse(name, crossing.kind).ok_or_else(|| parse_err(lineno, format!("unknown port '{name}'")))?;
            if std::mem::replace(&mut used[slot.0], true) {
                return Err(parse_err(lineno, format!("port '{name}' repeated")));
            }
            *r = slot;
        }
        crossing.rotation = Some(rot);
    }
    SingularDiagram::new(labels, crossings)
}

/// Summary of a well-formedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: Option<usize>,
    pub components: usize,
    pub problems: Vec<String>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks the semiarc/port bijection and, when rotations are present,
/// `V - E + F = 2` on each connected piece of the diagram.
pub fn validate_diagram(d: &SingularDiagram) -> DiagramReport {
    let mut problems = Vec::new();
    if d.semiarc_count() != 2 * d.crossings.len() {
        problems.push(format!(
            "{} semiarcs for {} crossings",
            d.semiarc_count(),
            d.crossings.len()
        ));
    }
    let faces = if d.has_rotations() {
        let map = RegionMap::trace(d);
        for (piece, members) in d.graph_components().iter().enumerate() {
            let v = members.len() as i64;
            let e = 2 * v;
            let f = map.faces_touching(d, members) as i64;
            if v - e + f != 2 {
                problems.push(format!("piece {} has V - E + F = {}", piece + 1, v - e + f));
            }
        }
        Some(map.len())
    } else {
        None
    };
    DiagramReport {
        vertices: d.crossings.len(),
        edges: d.semiarc_count(),
        faces,
        components: d.component_count(),
        problems,
    }
}
