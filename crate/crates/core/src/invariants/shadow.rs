use std::collections::BTreeSet;

use super::InvariantError;
use crate::algebra::{shadow_closure, substructure_closure, Element, ShadowStructure};
use crate::coloring::shadow_colorings;
use crate::diagram::SingularDiagram;
use crate::polynomial::{BasePolynomial, ExponentTag, InvariantValue, Monomial, Variables};

fn fixed_count(sh: &ShadowStructure, x: Element, acting: impl Iterator<Item = Element>) -> usize {
    acting.filter(|&s| sh.act(x, s) == x).count()
}

fn t_sum(exponents: impl Iterator<Item = usize>) -> BasePolynomial {
    exponents.fold(BasePolynomial::zero(), |acc, r| {
        acc.add(&BasePolynomial::term(1, Monomial::var("t", r as u32)))
    })
}

/// `Σ_x t^r(x)` where `r(x)` counts the acting elements fixing `x`.
pub fn sp(sh: &ShadowStructure) -> BasePolynomial {
    let n = sh.base().order();
    t_sum((0..sh.set_order()).map(|x| fixed_count(sh, x, 0..n)))
}

/// `sp` restricted to a subshadow: `x` ranges over `region_subset` and
/// fixed points are counted among `acting` only.
pub fn subsp(
    region_subset: &BTreeSet<Element>,
    acting: &BTreeSet<Element>,
    sh: &ShadowStructure,
) -> Result<BasePolynomial, InvariantError> {
    if acting.iter().any(|&s| s >= sh.base().order()) || substructure_closure(sh.base(), acting) != *acting {
        return Err(InvariantError::NotClosed(format!("{acting:?} is not a substructure")));
    }
    if region_subset.iter().any(|&x| x >= sh.set_order()) || shadow_closure(sh, region_subset, acting) != *region_subset
    {
        return Err(InvariantError::NotClosed(format!(
            "{region_subset:?} is not closed under the action"
        )));
    }
    Ok(t_sum(
        region_subset
            .iter()
            .map(|&x| fixed_count(sh, x, acting.iter().copied())),
    ))
}

/// The multiset of `subsp` of each shadow coloring's image, written in `u`.
pub fn shadow_polynomial(d: &SingularDiagram, sh: &ShadowStructure) -> Result<InvariantValue, InvariantError> {
    let mut value = InvariantValue::new(Variables::Single('u'));
    for c in &shadow_colorings(d, sh)? {
        let acting = substructure_closure(sh.base(), &c.image());
        let regions: BTreeSet<Element> = c
            .region_colors
            .as_ref()
            .expect("shadow colorings color regions")
            .iter()
            .copied()
            .collect();
        let image = shadow_closure(sh, &regions, &acting);
        value.add_one(ExponentTag::Poly(subsp(&image, &acting, sh)?))?;
    }
    Ok(value)
}
