use super::{Crossing, CrossingKind, DiagramError, SemiArcId, SingularDiagram, Slot};

/// A generator of the singular braid monoid acting on positions `i` and `i + 1`
/// (0-based). Strands run upward; position 0 is leftmost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidLetter {
    /// The strand from the lower left passes over.
    Sigma(usize),
    /// The strand from the lower right passes over.
    SigmaInv(usize),
    /// A singular crossing.
    Tau(usize),
}

impl BraidLetter {
    fn position(self) -> usize {
        match self {
            BraidLetter::Sigma(i) | BraidLetter::SigmaInv(i) | BraidLetter::Tau(i) => i,
        }
    }
}

/// Compass corners of a braid crossing in counterclockwise order.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// The slot at each corner, indexed by `NE, NW, SW, SE`.
fn corners(letter: BraidLetter) -> (CrossingKind, [Slot; 4]) {
    match letter {
        BraidLetter::Sigma(_) => (
            CrossingKind::Positive,
            [Slot::OVER_OUT, Slot::UNDER_OUT, Slot::OVER_IN, Slot::UNDER_IN],
        ),
        BraidLetter::SigmaInv(_) => (
            CrossingKind::Negative,
            [Slot::UNDER_OUT, Slot::OVER_OUT, Slot::UNDER_IN, Slot::OVER_IN],
        ),
        BraidLetter::Tau(_) => (CrossingKind::Singular, [Slot::OUT1, Slot::OUT2, Slot::IN2, Slot::IN1]),
    }
}

/// The closure of a singular braid on `strands` strands, with rotations.
/// Every position must be touched by some letter so that the diagram is connected.
pub fn braid_closure(strands: usize, word: &[BraidLetter]) -> Result<SingularDiagram, DiagramError> {
    if strands < 2 {
        return Err(DiagramError::Braid("need at least two strands".into()));
    }
    if let Some(l) = word.iter().find(|l| l.position() + 1 >= strands) {
        return Err(DiagramError::Braid(format!("{l:?} is outside {strands} strands")));
    }
    // Semiarcs are numbered as they are created; the bottom ones are later
    // identified with the top ones by the closure.
    let mut next = strands;
    let bottom: Vec<usize> = (0..strands).collect();
    let mut current = bottom.clone();
    let mut raw: Vec<(CrossingKind, [usize; 4], [Slot; 4])> = Vec::new();
    for &letter in word {
        let i = letter.position();
        let (kind, slots) = corners(letter);
        let mut at = [0; 4];
        at[SW] = current[i];
        at[SE] = current[i + 1];
        at[NW] = next;
        at[NE] = next + 1;
        next += 2;
        current[i] = at[NW];
        current[i + 1] = at[NE];
        let mut ports = [0; 4];
        for corner in 0..4 {
            ports[slots[corner].0] = at[corner];
        }
        raw.push((kind, ports, slots));
    }
    if let Some(p) = (0..strands).find(|&p| current[p] == bottom[p]) {
        return Err(DiagramError::Braid(format!("position {p} is never crossed")));
    }
    let mut alias: Vec<usize> = (0..next).collect();
    for p in 0..strands {
        alias[bottom[p]] = current[p];
    }
    let mut label_of = vec![usize::MAX; next];
    let mut labels = Vec::new();
    let crossings = raw
        .into_iter()
        .map(|(kind, ports, rotation)| {
            let ports = ports.map(|a| {
                let a = alias[a];
                if label_of[a] == usize::MAX {
                    label_of[a] = labels.len();
                    labels.push(format!("a{}", labels.len() + 1));
                }
                SemiArcId(label_of[a])
            });
            Crossing {
                kind,
                ports,
                rotation: Some(rotation),
            }
        })
        .collect();
    SingularDiagram::new(labels, crossings)
}
