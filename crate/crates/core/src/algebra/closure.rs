use std::collections::BTreeSet;

use super::{Element, OrientedSingquandle, ShadowStructure};

/// The smallest superset of `seed` closed under `*`, `*̄`, `R1` and `R2`.
pub fn substructure_closure(s: &OrientedSingquandle, seed: &BTreeSet<Element>) -> BTreeSet<Element> {
    let mut members: Vec<Element> = seed.iter().copied().collect();
    let mut inside = vec![false; s.order()];
    for &x in &members {
        inside[x] = true;
    }
    // Each new element is combined with every member seen so far, in both orders.
    let mut next = 0;
    while next < members.len() {
        let a = members[next];
        next += 1;
        for i in 0..next {
            let b = members[i];
            for (x, y) in [(a, b), (b, a)] {
                for z in [s.star(x, y), s.star_inv(x, y), s.r1(x, y), s.r2(x, y)] {
                    if !std::mem::replace(&mut inside[z], true) {
                        members.push(z);
                    }
                }
            }
        }
    }
    members.into_iter().collect()
}

/// The smallest superset of `region_seed` closed under `· s` for every `s` in `acting`.
pub fn shadow_closure(
    sh: &ShadowStructure,
    region_seed: &BTreeSet<Element>,
    acting: &BTreeSet<Element>,
) -> BTreeSet<Element> {
    let mut out = region_seed.clone();
    let mut stack: Vec<Element> = region_seed.iter().copied().collect();
    while let Some(x) = stack.pop() {
        for &s in acting {
            let y = sh.act(x, s);
            if out.insert(y) {
                stack.push(y);
            }
        }
    }
    out
}
