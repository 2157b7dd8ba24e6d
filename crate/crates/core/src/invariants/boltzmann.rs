use super::{reduce, InvariantError, WeightTable};
use crate::algebra::{PsyOp, Psyquandle, ValidationReport};
use crate::coloring::psyquandle_colorings;
use crate::diagram::{CrossingKind, SingularDiagram, Slot};
use crate::polynomial::{ExponentTag, InvariantValue, Variables};

/// Outcome of checking a Boltzmann weight pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoltzmannCheck {
    /// Failures of axioms (I)-(III).
    pub report: ValidationReport,
    /// Failures of axiom (IV); empty iff the pair is strongly compatible.
    pub compatibility: ValidationReport,
}

/// Checks `φ` and `ψ` against a psyquandle with values in `Z_modulus`.
pub fn validate_boltzmann(
    p: &Psyquandle,
    modulus: u64,
    phi: &WeightTable,
    psi: &WeightTable,
) -> Result<BoltzmannCheck, InvariantError> {
    let n = p.order();
    for t in [phi, psi] {
        if t.order() != n {
            return Err(InvariantError::SizeMismatch {
                expected: n,
                found: t.order(),
            });
        }
    }
    let u = |x, y| p.apply(PsyOp::Under, x, y);
    let o = |x, y| p.apply(PsyOp::Over, x, y);
    let bu = |x, y| p.apply(PsyOp::SingularUnder, x, y);
    let bo = |x, y| p.apply(PsyOp::SingularOver, x, y);
    let bo_inv = p.inverse_table(PsyOp::SingularOver);
    let (f, g) = (|x, y| phi.get(x, y), |x, y| psi.get(x, y));
    let zero = |v: i64| reduce(v, modulus) == 0;
    let mut report = ValidationReport::new();
    let mut compatibility = ValidationReport::new();
    for x in 0..n {
        report.check(zero(f(x, x)), "(I)", &[x]);
        for y in 0..n {
            let a = bo_inv.get(u(x, y), y);
            let b = bo_inv.get(o(y, x), x);
            report.check(zero(f(x, y) + g(y, a) - f(b, a) - g(x, b)), "(II)", &[x, y]);
            for z in 0..n {
                let w = &[x, y, z];
                report.check(
                    zero(f(x, y) + f(y, z) + f(u(x, y), o(z, y)) - f(u(x, z), u(y, z)) - f(x, z) - f(o(y, x), o(z, x))),
                    "(III) 1",
                    w,
                );
                report.check(
                    zero(
                        g(x, y) + f(y, z) + f(bu(x, y), o(z, y)) - g(u(x, z), u(y, z)) - f(x, z) - f(bo(y, x), o(z, x)),
                    ),
                    "(III) 2",
                    w,
                );
                report.check(
                    zero(
                        g(z, y) - f(x, y) - f(u(x, y), bu(z, y)) - g(o(z, x), o(y, x)) + f(x, z) + f(u(x, z), bo(y, z)),
                    ),
                    "(III) 3",
                    w,
                );
                compatibility.check(zero(g(x, y) - g(u(x, z), u(y, z))), "(IV) 1", w);
                compatibility.check(zero(g(z, y) - g(o(z, x), o(y, x))), "(IV) 2", w);
            }
        }
    }
    Ok(BoltzmannCheck { report, compatibility })
}

/// A Boltzmann weight pair that satisfies axioms (I)-(III).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoltzmannPair {
    pub modulus: u64,
    pub phi: WeightTable,
    pub psi: WeightTable,
    pub strongly_compatible: bool,
}

impl BoltzmannPair {
    pub fn new(p: &Psyquandle, modulus: u64, phi: WeightTable, psi: WeightTable) -> Result<Self, InvariantError> {
        let check = validate_boltzmann(p, modulus, &phi, &psi)?;
        if !check.report.is_valid() {
            return Err(InvariantError::InvalidBoltzmann(check.report));
        }
        Ok(BoltzmannPair {
            modulus,
            phi,
            psi,
            strongly_compatible: check.compatibility.is_valid(),
        })
    }

    pub fn zero(p: &Psyquandle, modulus: u64) -> Self {
        let n = p.order();
        BoltzmannPair::new(p, modulus, WeightTable::zero(n), WeightTable::zero(n)).expect("zero weights are valid")
    }
}

/// Classical and singular weight totals of one coloring: `+φ(ui, oo)` at
/// positive crossings, `-φ(uo, oi)` at negative ones, `+ψ(i1, o1)` at
/// singular ones.
fn split_weight(d: &SingularDiagram, bp: &BoltzmannPair, colors: &[usize]) -> (i64, i64) {
    d.crossings().iter().fold((0, 0), |(cl, si), c| {
        let at = |slot: Slot| colors[c.port(slot).0];
        match c.kind {
            CrossingKind::Positive => (cl + bp.phi.get(at(Slot::UNDER_IN), at(Slot::OVER_OUT)), si),
            CrossingKind::Negative => (cl - bp.phi.get(at(Slot::UNDER_OUT), at(Slot::OVER_IN)), si),
            CrossingKind::Singular => (cl, si + bp.psi.get(at(Slot::IN1), at(Slot::OUT1))),
        }
    })
}

fn ensure_fits(p: &Psyquandle, bp: &BoltzmannPair) -> Result<(), InvariantError> {
    let check = validate_boltzmann(p, bp.modulus, &bp.phi, &bp.psi)?;
    if check.report.is_valid() {
        Ok(())
    } else {
        Err(InvariantError::InvalidBoltzmann(check.report))
    }
}

/// The multiset of total weights `φ + ψ` over all colorings, written in `w`.
pub fn boltzmann_single(
    d: &SingularDiagram,
    p: &Psyquandle,
    bp: &BoltzmannPair,
) -> Result<InvariantValue, InvariantError> {
    ensure_fits(p, bp)?;
    let mut value = InvariantValue::new(Variables::Single('w'));
    for c in &psyquandle_colorings(d, p) {
        let (cl, si) = split_weight(d, bp, &c.semiarc_colors);
        value.add_one(ExponentTag::ring(cl + si, bp.modulus))?;
    }
    Ok(value)
}

/// The multiset of `(φ total, ψ total)` pairs over all colorings, written in `u` and `v`.
pub fn boltzmann_two(
    d: &SingularDiagram,
    p: &Psyquandle,
    bp: &BoltzmannPair,
) -> Result<InvariantValue, InvariantError> {
    let check = validate_boltzmann(p, bp.modulus, &bp.phi, &bp.psi)?;
    if !check.report.is_valid() {
        return Err(InvariantError::InvalidBoltzmann(check.report));
    }
    if !check.compatibility.is_valid() {
        return Err(InvariantError::NotStronglyCompatible(check.compatibility));
    }
    let mut value = InvariantValue::new(Variables::Double('u', 'v'));
    for c in &psyquandle_colorings(d, p) {
        let (cl, si) = split_weight(d, bp, &c.semiarc_colors);
        value.add_one(ExponentTag::pair(cl, si, bp.modulus))?;
    }
    Ok(value)
}
