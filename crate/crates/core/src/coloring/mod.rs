//! Enumeration of semiarc colorings (and region colorings for shadows).
//!
//! Each crossing kind is turned into a table constraint: the list of all
//! 4-tuples of slot colors it allows. The solver propagates these tables to
//! arc consistency and branches on the semiarc with the fewest remaining
//! colors.

mod domain;
mod shadow;
mod solver;

pub use shadow::shadow_colorings;
pub use solver::solve;

use thiserror::Error;

use crate::algebra::{Element, OrientedSingquandle, PsyOp, Psyquandle};
use crate::diagram::{CrossingKind, DiagramError, RegionMap, SingularDiagram};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("region graph is disconnected")]
    DisconnectedRegions,
}

/// The colors allowed at a crossing, as `[slot0, slot1, slot2, slot3]` tuples
/// in port order `ui oi uo oo` or `i1 i2 o1 o2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringRules {
    order: usize,
    positive: Vec<[Element; 4]>,
    negative: Vec<[Element; 4]>,
    singular: Vec<[Element; 4]>,
}

impl ColoringRules {
    /// Positive: `oo = oi`, `uo = ui * oi`. Negative: `oo = oi`,
    /// `uo = ui *̄ oi`. Singular: `o1 = R1(i1, i2)`, `o2 = R2(i1, i2)`.
    pub fn singquandle(s: &OrientedSingquandle) -> Self {
        let n = s.order();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        ColoringRules {
            order: n,
            positive: pairs().map(|(x, y)| [x, y, s.star(x, y), y]).collect(),
            negative: pairs().map(|(x, y)| [x, y, s.star_inv(x, y), y]).collect(),
            singular: pairs().map(|(x, y)| [x, y, s.r1(x, y), s.r2(x, y)]).collect(),
        }
    }

    /// Positive, with `x = ui` and `y = oo`: `oi = y ⊳̄ x`, `uo = x ⊵ y`.
    /// Negative, with `x = uo` and `y = oi`: `ui = x ⊵ y`, `oo = y ⊳̄ x`.
    /// Singular, with `x = i1` and `y = o1`: `i2 = y •̄ x`, `o2 = x •̲ y`.
    pub fn psyquandle(p: &Psyquandle) -> Self {
        let n = p.order();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let (u, o) = (PsyOp::Under, PsyOp::Over);
        let (bu, bo) = (PsyOp::SingularUnder, PsyOp::SingularOver);
        ColoringRules {
            order: n,
            positive: pairs()
                .map(|(x, y)| [x, p.apply(o, y, x), p.apply(u, x, y), y])
                .collect(),
            negative: pairs()
                .map(|(x, y)| [p.apply(u, x, y), y, x, p.apply(o, y, x)])
                .collect(),
            singular: pairs()
                .map(|(x, y)| [x, p.apply(bo, y, x), y, p.apply(bu, x, y)])
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tuples(&self, kind: CrossingKind) -> &[[Element; 4]] {
        match kind {
            CrossingKind::Positive => &self.positive,
            CrossingKind::Negative => &self.negative,
            CrossingKind::Singular => &self.singular,
        }
    }

    /// True iff the slot colors are allowed at a crossing of this kind.
    pub fn allows(&self, kind: CrossingKind, colors: [Element; 4]) -> bool {
        self.tuples(kind).contains(&colors)
    }

    /// True iff every crossing of `d` is satisfied by the semiarc colors.
    pub fn is_coloring(&self, d: &SingularDiagram, colors: &[Element]) -> bool {
        colors.len() == d.semiarc_count()
            && colors.iter().all(|&c| c < self.order)
            && d.crossings()
                .iter()
                .all(|c| self.allows(c.kind, c.ports.map(|a| colors[a.0])))
    }
}

/// Colors of every semiarc and, for shadow colorings, of every region.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub semiarc_colors: Vec<Element>,
    pub region_colors: Option<Vec<Element>>,
}

impl Coloring {
    /// Colors used on semiarcs, without repetition.
    pub fn image(&self) -> std::collections::BTreeSet<Element> {
        self.semiarc_colors.iter().copied().collect()
    }
}

/// All colorings of a diagram, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoringSet {
    colorings: Vec<Coloring>,
}

impl ColoringSet {
    pub fn new(mut colorings: Vec<Coloring>) -> Self {
        colorings.sort();
        ColoringSet { colorings }
    }

    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coloring> {
        self.colorings.iter()
    }

    pub fn as_slice(&self) -> &[Coloring] {
        &self.colorings
    }
}

impl<'a> IntoIterator for &'a ColoringSet {
    type Item = &'a Coloring;
    type IntoIter = std::slice::Iter<'a, Coloring>;

    fn into_iter(self) -> Self::IntoIter {
        self.colorings.iter()
    }
}

fn semiarc_only(vectors: Vec<Vec<Element>>) -> ColoringSet {
    ColoringSet::new(
        vectors
            .into_iter()
            .map(|semiarc_colors| Coloring {
                semiarc_colors,
                region_colors: None,
            })
            .collect(),
    )
}

pub fn singquandle_colorings(d: &SingularDiagram, s: &OrientedSingquandle) -> ColoringSet {
    semiarc_only(solve(d, &ColoringRules::singquandle(s)))
}

pub fn psyquandle_colorings(d: &SingularDiagram, p: &Psyquandle) -> ColoringSet {
    semiarc_only(solve(d, &ColoringRules::psyquandle(p)))
}

pub fn coloring_count(cs: &ColoringSet) -> usize {
    cs.len()
}

/// The region on the left of each semiarc equals the region on its right acted on by its color.
pub fn satisfies_region_rule(
    map: &RegionMap,
    semiarc_colors: &[Element],
    region_colors: &[Element],
    act: impl Fn(Element, Element) -> Element,
) -> bool {
    semiarc_colors.iter().enumerate().all(|(a, &c)| {
        let a = crate::diagram::SemiArcId(a);
        region_colors[map.left_of(a).0] == act(region_colors[map.right_of(a).0], c)
    })
}
