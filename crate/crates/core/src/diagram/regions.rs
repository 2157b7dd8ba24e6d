use super::{DiagramError, SemiArcId, SingularDiagram, Slot};

/// Which side of an oriented semiarc a region lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Index of a region in [`RegionMap::regions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionId(pub usize);

/// A face of the diagram on the sphere, with its boundary in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: RegionId,
    pub boundary: Vec<(SemiArcId, Side)>,
}

/// The faces of a diagram and the region on each side of every semiarc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMap {
    regions: Vec<Region>,
    left: Vec<RegionId>,
    right: Vec<RegionId>,
}

fn dart_index(a: SemiArcId, side: Side) -> usize {
    2 * a.0 + usize::from(side == Side::Right)
}

impl RegionMap {
    /// Traces faces of the rotation system. Walking a semiarc forward keeps
    /// its left region in view; at each crossing the walk leaves through the
    /// port clockwise from the arrival port.
    pub(super) fn trace(d: &SingularDiagram) -> RegionMap {
        let n = d.semiarc_count();
        let mut face = vec![usize::MAX; 2 * n];
        let mut faces: Vec<Vec<(SemiArcId, Side)>> = Vec::new();
        for start in 0..2 * n {
            if face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut dart = (
                SemiArcId(start / 2),
                if start % 2 == 0 { Side::Left } else { Side::Right },
            );
            while face[dart_index(dart.0, dart.1)] == usize::MAX {
                face[dart_index(dart.0, dart.1)] = id;
                boundary.push(dart);
                let end = match dart.1 {
                    Side::Left => d.head(dart.0),
                    Side::Right => d.tail(dart.0),
                };
                let crossing = &d.crossings()[end.crossing];
                let rot = crossing.rotation.expect("trace requires rotations");
                let pos = rot
                    .iter()
                    .position(|&s| s == end.slot)
                    .expect("rotation is a permutation");
                let next: Slot = rot[(pos + 3) % 4];
                let side = if next.is_incoming() { Side::Right } else { Side::Left };
                dart = (crossing.port(next), side);
            }
            faces.push(boundary);
        }
        // Order regions by their smallest (semiarc, side) incidence.
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by_key(|&f| faces[f].iter().min().copied());
        let mut rank = vec![0; faces.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let regions = order
            .iter()
            .enumerate()
            .map(|(new, &old)| Region {
                id: RegionId(new),
                boundary: std::mem::take(&mut faces[old]),
            })
            .collect();
        let lookup = |side| {
            (0..n)
                .map(|a| RegionId(rank[face[dart_index(SemiArcId(a), side)]]))
                .collect()
        };
        RegionMap {
            left: lookup(Side::Left),
            right: lookup(Side::Right),
            regions,
        }
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn left_of(&self, a: SemiArcId) -> RegionId {
        self.left[a.0]
    }

    pub fn right_of(&self, a: SemiArcId) -> RegionId {
        self.right[a.0]
    }

    /// For each boundary incidence of `r`: the semiarc, the region across it,
    /// and the side of the semiarc on which `r` lies.
    pub fn adjacency(&self, r: RegionId) -> Vec<(SemiArcId, RegionId, Side)> {
        self.regions[r.0]
            .boundary
            .iter()
            .map(|&(a, side)| {
                let across = match side {
                    Side::Left => self.right_of(a),
                    Side::Right => self.left_of(a),
                };
                (a, across, side)
            })
            .collect()
    }

    /// Number of regions whose boundary touches one of the given crossings.
    pub(super) fn faces_touching(&self, d: &SingularDiagram, crossings: &[usize]) -> usize {
        self.regions
            .iter()
            .filter(|r| {
                r.boundary
                    .iter()
                    .any(|&(a, _)| crossings.binary_search(&d.head(a).crossing).is_ok())
            })
            .count()
    }
}

impl SingularDiagram {
    /// Faces of the diagram on the sphere, ordered by smallest incident semiarc.
    pub fn regions(&self) -> Result<RegionMap, DiagramError> {
        if let Some(i) = self.crossings().iter().position(|c| c.rotation.is_none()) {
            return Err(DiagramError::MissingRotation(i + 1));
        }
        let report = super::validate_diagram(self);
        if !report.is_valid() {
            return Err(DiagramError::NonPlanar(report.problems.join("; ")));
        }
        Ok(RegionMap::trace(self))
    }
}
