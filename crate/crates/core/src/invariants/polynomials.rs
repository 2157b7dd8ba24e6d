use std::collections::BTreeSet;

use super::InvariantError;
use crate::algebra::{substructure_closure, Element, OrientedSingquandle};
use crate::coloring::singquandle_colorings;
use crate::diagram::SingularDiagram;
use crate::polynomial::{BasePolynomial, ExponentTag, InvariantValue, Monomial, Variables};

/// Where the second argument `y` ranges when counting fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileScope {
    /// `y` ranges over the whole structure.
    Ambient,
    /// `y` ranges over the subset being summarised.
    Within,
}

/// Fixed-point counts of one element `x`, in the order
/// `r¹ c¹ r² c² r³ c³` for the operations `*`, `R1`, `R2`: `rⁱ` counts
/// `y` with `op(x, y) = x` and `cⁱ` counts `y` with `op(y, x) = y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProfileCounts(pub [usize; 6]);

impl ProfileCounts {
    /// The monomial `s1^r¹ t1^c¹ s2^r² t2^c² s3^r³ t3^c³`.
    pub fn monomial(&self) -> Monomial {
        let names = ["s1", "t1", "s2", "t2", "s3", "t3"];
        Monomial::from_pairs(names.iter().zip(self.0).map(|(&v, e)| (v, e as u32)))
    }
}

fn counts(s: &OrientedSingquandle, x: Element, range: &[Element]) -> ProfileCounts {
    let count = |p: &dyn Fn(Element) -> bool| range.iter().filter(|&&y| p(y)).count();
    ProfileCounts([
        count(&|y| s.star(x, y) == x),
        count(&|y| s.star(y, x) == y),
        count(&|y| s.r1(x, y) == x),
        count(&|y| s.r1(y, x) == y),
        count(&|y| s.r2(x, y) == x),
        count(&|y| s.r2(y, x) == y),
    ])
}

/// Fixed-point counts of every element over the whole structure.
pub fn profile(s: &OrientedSingquandle) -> Vec<ProfileCounts> {
    let all: Vec<Element> = (0..s.order()).collect();
    all.iter().map(|&x| counts(s, x, &all)).collect()
}

/// The sum of profile monomials over all elements.
pub fn sqp(s: &OrientedSingquandle) -> BasePolynomial {
    profile(s).iter().fold(BasePolynomial::zero(), |acc, p| {
        acc.add(&BasePolynomial::term(1, p.monomial()))
    })
}

/// The sum of profile monomials over a closed subset.
pub fn ssqp(
    sub: &BTreeSet<Element>,
    s: &OrientedSingquandle,
    scope: ProfileScope,
) -> Result<BasePolynomial, InvariantError> {
    if sub.iter().any(|&x| x >= s.order()) || substructure_closure(s, sub) != *sub {
        return Err(InvariantError::NotClosed(format!("{sub:?} is not a substructure")));
    }
    let range: Vec<Element> = match scope {
        ProfileScope::Ambient => (0..s.order()).collect(),
        ProfileScope::Within => sub.iter().copied().collect(),
    };
    Ok(sub.iter().fold(BasePolynomial::zero(), |acc, &x| {
        acc.add(&BasePolynomial::term(1, counts(s, x, &range).monomial()))
    }))
}

/// The multiset of `ssqp` of each coloring's image, written in `u`.
pub fn phi_ssqp(d: &SingularDiagram, s: &OrientedSingquandle) -> Result<InvariantValue, InvariantError> {
    let mut value = InvariantValue::new(Variables::Single('u'));
    for c in &singquandle_colorings(d, s) {
        let image = substructure_closure(s, &c.image());
        value.add_one(ExponentTag::Poly(ssqp(&image, s, ProfileScope::Ambient)?))?;
    }
    Ok(value)
}
