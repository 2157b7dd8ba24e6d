use super::{satisfies_region_rule, singquandle_colorings, Coloring, ColoringError, ColoringSet};
use crate::algebra::{Element, ShadowStructure};
use crate::diagram::{RegionMap, SemiArcId, Side, SingularDiagram};

/// Region colors forced by `first` on region 0, or `None` on a conflict.
fn spread(
    map: &RegionMap,
    sh: &ShadowStructure,
    semiarc_colors: &[Element],
    first: Element,
) -> Result<Option<Vec<Element>>, ColoringError> {
    let mut colors: Vec<Option<Element>> = vec![None; map.len()];
    colors[0] = Some(first);
    let mut stack = vec![0];
    while let Some(r) = stack.pop() {
        let here = colors[r].expect("stacked regions are colored");
        for (a, across, side) in map.adjacency(crate::diagram::RegionId(r)) {
            let SemiArcId(i) = a;
            let s = semiarc_colors[i];
            let there = match side {
                Side::Right => sh.act(here, s),
                Side::Left => sh.act_inv(here, s),
            };
            match colors[across.0] {
                None => {
                    colors[across.0] = Some(there);
                    stack.push(across.0);
                }
                Some(c) if c != there => return Ok(None),
                Some(_) => {}
            }
        }
    }
    colors
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .map(Some)
        .ok_or(ColoringError::DisconnectedRegions)
}

/// Pairs of a base coloring and a region coloring such that the region left
/// of each semiarc is the region on its right acted on by the semiarc's color.
pub fn shadow_colorings(d: &SingularDiagram, sh: &ShadowStructure) -> Result<ColoringSet, ColoringError> {
    let map = d.regions()?;
    let mut out = Vec::new();
    for base in &singquandle_colorings(d, sh.base()) {
        for first in 0..sh.set_order() {
            if let Some(regions) = spread(&map, sh, &base.semiarc_colors, first)? {
                debug_assert!(satisfies_region_rule(&map, &base.semiarc_colors, &regions, |x, s| sh.act(x, s)));
                out.push(Coloring {
                    semiarc_colors: base.semiarc_colors.clone(),
                    region_colors: Some(regions),
                });
            }
        }
    }
    Ok(ColoringSet::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ActionTable, OrientedSingquandle};
    use crate::diagram::parse_diagram;

    #[test]
    fn trivial_action_gives_constant_regions() {
        let base = OrientedSingquandle::from_formulas(3, "2x-y", "x", "y").unwrap();
        let sh = ShadowStructure::trivial(base, 4).unwrap();
        let d = parse_diagram("P a b b a\nrot 1 oo uo oi ui\n").unwrap();
        let cs = shadow_colorings(&d, &sh).unwrap();
        assert_eq!(cs.len(), 4 * 3);
        for c in &cs {
            let r = c.region_colors.as_ref().unwrap();
            assert!(r.iter().all(|&x| x == r[0]));
        }
    }

    #[test]
    fn kink_shadow_count_factorises() {
        let base = OrientedSingquandle::from_formulas(8, "3x-2y", "7x+6y", "2x+3y").unwrap();
        let sh = ShadowStructure::new(base.clone(), ActionTable::from_fn(6, 8, |x, s| x + 3 * s)).unwrap();
        let d = parse_diagram("P a b b a\nrot 1 oo uo oi ui\n").unwrap();
        let base_count = singquandle_colorings(&d, &base).len();
        assert_eq!(shadow_colorings(&d, &sh).unwrap().len(), 6 * base_count);
    }
}
