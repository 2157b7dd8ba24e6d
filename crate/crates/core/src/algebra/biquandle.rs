use super::{AlgebraError, Element, OperationTable, Psyquandle, ValidationReport};

/// A biquandle with under operation `⊵` and over operation `⊳̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biquandle {
    under: OperationTable,
    over: OperationTable,
}

/// Checks right-invertibility, `x ⊵ x = x ⊳̄ x`, invertibility of the
/// pairing `S(x, y) = (y ⊳̄ x, x ⊵ y)` and the three exchange laws.
pub fn validate_biquandle(under: &OperationTable, over: &OperationTable) -> ValidationReport {
    let mut report = ValidationReport::new();
    if under.order() != over.order() {
        report.push("order mismatch", vec![]);
        return report;
    }
    let n = under.order();
    for (name, t) in [("(I) under", under), ("(I) over", over)] {
        for y in t.non_invertible_columns() {
            report.push(name, vec![y]);
        }
    }
    for x in 0..n {
        report.check(under.get(x, x) == over.get(x, x), "(II)", &[x]);
    }
    if let Some((x, y)) = pairing_collision(n, |x, y| (over.get(y, x), under.get(x, y))) {
        report.push("(III) S", vec![x, y]);
    }
    exchange_laws(under, over, &mut report);
    report
}

/// The first pair whose image under `pairing` repeats an earlier image.
pub(super) fn pairing_collision(
    n: usize,
    pairing: impl Fn(Element, Element) -> (Element, Element),
) -> Option<(Element, Element)> {
    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (a, b) = pairing(x, y);
            if std::mem::replace(&mut seen[a * n + b], true) {
                return Some((x, y));
            }
        }
    }
    None
}

pub(super) fn exchange_laws(u: &OperationTable, o: &OperationTable, report: &mut ValidationReport) {
    let n = u.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = &[x, y, z];
                report.check(
                    u.get(u.get(x, y), u.get(z, y)) == u.get(u.get(x, z), o.get(y, z)),
                    "(IV) 1",
                    w,
                );
                report.check(
                    o.get(u.get(x, y), u.get(z, y)) == u.get(o.get(x, z), o.get(y, z)),
                    "(IV) 2",
                    w,
                );
                report.check(
                    o.get(o.get(x, y), o.get(z, y)) == o.get(o.get(x, z), u.get(y, z)),
                    "(IV) 3",
                    w,
                );
            }
        }
    }
}

impl Biquandle {
    pub fn new(under: OperationTable, over: OperationTable) -> Result<Self, AlgebraError> {
        let report = validate_biquandle(&under, &over);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid {
                kind: "biquandle",
                report,
            });
        }
        Ok(Biquandle { under, over })
    }

    /// A quandle `*` as the biquandle with `⊵ = *` and trivial `⊳̄`.
    pub fn from_quandle(star: OperationTable) -> Result<Self, AlgebraError> {
        let over = OperationTable::projection(star.order());
        Biquandle::new(star, over)
    }

    /// The constant action biquandle `x ⊵ y = x ⊳̄ y = σ(x)`.
    pub fn constant_action(sigma: &[Element]) -> Result<Self, AlgebraError> {
        let n = sigma.len();
        let entries: Vec<Element> = (0..n).flat_map(|x| std::iter::repeat_n(sigma[x], n)).collect();
        let t = OperationTable::new(n, entries)?;
        Biquandle::new(t.clone(), t)
    }

    pub fn order(&self) -> usize {
        self.under.order()
    }

    pub fn under(&self) -> &OperationTable {
        &self.under
    }

    pub fn over(&self) -> &OperationTable {
        &self.over
    }

    /// The psyquandle with `•̲ = ⊵` and `•̄ = ⊳̄`.
    pub fn to_psyquandle(&self) -> Result<Psyquandle, AlgebraError> {
        Psyquandle::new(
            self.under.clone(),
            self.over.clone(),
            self.under.clone(),
            self.over.clone(),
        )
    }
}
