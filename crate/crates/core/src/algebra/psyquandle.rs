use super::biquandle::{exchange_laws, pairing_collision};
use super::{AlgebraError, Element, OperationTable, ValidationReport};

/// A psyquandle: classical operations `⊵` (under), `⊳̄` (over) and singular
/// operations `•̲` (under), `•̄` (over), each with its right inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psyquandle {
    ops: [OperationTable; 4],
    inverses: [OperationTable; 4],
}

/// Index of each operation in [`Psyquandle::table`], matching the block order of the file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsyOp {
    Under = 0,
    Over = 1,
    SingularUnder = 2,
    SingularOver = 3,
}

/// Exhaustively checks psyquandle axioms (I)–(VI).
pub fn validate_psyquandle(
    under: &OperationTable,
    over: &OperationTable,
    sing_under: &OperationTable,
    sing_over: &OperationTable,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = under.order();
    if [over, sing_under, sing_over].iter().any(|t| t.order() != n) {
        report.push("order mismatch", vec![]);
        return report;
    }
    let names = ["(I) ⊵", "(I) ⊳̄", "(I) •̲", "(I) •̄"];
    for (name, t) in names.iter().zip([under, over, sing_under, sing_over]) {
        for y in t.non_invertible_columns() {
            report.push(*name, vec![y]);
        }
    }
    if !report.is_valid() {
        return report;
    }
    for x in 0..n {
        report.check(under.get(x, x) == over.get(x, x), "(II)", &[x]);
    }
    if let Some((x, y)) = pairing_collision(n, |x, y| (over.get(y, x), under.get(x, y))) {
        report.push("(III) S", vec![x, y]);
    }
    if let Some((x, y)) = pairing_collision(n, |x, y| (sing_over.get(y, x), sing_under.get(x, y))) {
        report.push("(III) S'", vec![x, y]);
    }
    exchange_laws(under, over, &mut report);

    let (u, o, bu, bo) = (under, over, sing_under, sing_over);
    let bo_inv = bo.right_inverse().expect("checked in (I)");
    let bu_inv = bu.right_inverse().expect("checked in (I)");
    for x in 0..n {
        for y in 0..n {
            let w = &[x, y];
            report.check(
                bu.get(x, bo_inv.get(o.get(y, x), x)) == o.get(bo_inv.get(u.get(x, y), y), bu_inv.get(o.get(y, x), x)),
                "(V) 1",
                w,
            );
            report.check(
                bu.get(y, bo_inv.get(u.get(x, y), y)) == u.get(bo_inv.get(o.get(y, x), x), bo_inv.get(u.get(x, y), y)),
                "(V) 2",
                w,
            );
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = &[x, y, z];
                report.check(
                    o.get(o.get(x, y), bo.get(z, y)) == o.get(o.get(x, z), bu.get(y, z)),
                    "(VI) 1",
                    w,
                );
                report.check(
                    u.get(u.get(x, y), bo.get(z, y)) == u.get(u.get(x, z), bu.get(y, z)),
                    "(VI) 2",
                    w,
                );
                report.check(
                    bo.get(o.get(x, y), o.get(z, y)) == o.get(bo.get(x, z), u.get(y, z)),
                    "(VI) 3",
                    w,
                );
                report.check(
                    bu.get(u.get(x, y), u.get(z, y)) == u.get(bu.get(x, z), o.get(y, z)),
                    "(VI) 4",
                    w,
                );
                report.check(
                    bu.get(o.get(x, y), o.get(z, y)) == o.get(bu.get(x, z), u.get(y, z)),
                    "(VI) 5",
                    w,
                );
                report.check(
                    bo.get(u.get(x, y), u.get(z, y)) == u.get(bo.get(x, z), o.get(y, z)),
                    "(VI) 6",
                    w,
                );
            }
        }
    }
    report
}

impl Psyquandle {
    pub fn new(
        under: OperationTable,
        over: OperationTable,
        sing_under: OperationTable,
        sing_over: OperationTable,
    ) -> Result<Self, AlgebraError> {
        let report = validate_psyquandle(&under, &over, &sing_under, &sing_over);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid {
                kind: "psyquandle",
                report,
            });
        }
        let ops = [under, over, sing_under, sing_over];
        let inverses = ops.clone().map(|t| t.right_inverse().expect("validated in (I)"));
        Ok(Psyquandle { ops, inverses })
    }

    pub fn order(&self) -> usize {
        self.ops[0].order()
    }

    pub fn table(&self, op: PsyOp) -> &OperationTable {
        &self.ops[op as usize]
    }

    pub fn inverse_table(&self, op: PsyOp) -> &OperationTable {
        &self.inverses[op as usize]
    }

    pub fn apply(&self, op: PsyOp, x: Element, y: Element) -> Element {
        self.ops[op as usize].get(x, y)
    }

    /// True iff `x •̲ x = x •̄ x` for every `x`.
    pub fn is_pi_adequate(&self) -> bool {
        (0..self.order()).all(|x| self.apply(PsyOp::SingularUnder, x, x) == self.apply(PsyOp::SingularOver, x, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_element_psyquandle() {
        let t = OperationTable::projection(1);
        let p = Psyquandle::new(t.clone(), t.clone(), t.clone(), t).unwrap();
        assert!(p.is_pi_adequate());
    }

    #[test]
    fn breaking_the_singular_operation_is_detected() {
        let star = OperationTable::from_fn(3, |x, y| 2 * y - x);
        let triv = OperationTable::projection(3);
        let bad = OperationTable::from_fn(3, |x, y| x + y);
        let report = validate_psyquandle(&star, &triv, &bad, &triv);
        assert!(!report.is_valid());
    }
}
