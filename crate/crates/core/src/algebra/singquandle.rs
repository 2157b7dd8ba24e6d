use super::quandle::{gcd, validate_quandle};
use super::{formula, AlgebraError, Element, OperationTable, ValidationReport};

/// An oriented singquandle `(X, *, R1, R2)`; `*̄` is derived from `*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSingquandle {
    star: OperationTable,
    star_inv: OperationTable,
    r1: OperationTable,
    r2: OperationTable,
}

/// Exhaustively checks the quandle axioms for `star` and the five
/// singquandle identities. Quandle failures are reported with a `quandle `
/// prefix and stop the check, since the identities need `*̄`.
pub fn validate_singquandle(star: &OperationTable, r1: &OperationTable, r2: &OperationTable) -> ValidationReport {
    let n = star.order();
    if r1.order() != n || r2.order() != n {
        let mut report = ValidationReport::new();
        report.push("order mismatch", vec![]);
        return report;
    }
    let quandle = validate_quandle(star);
    if !quandle.is_valid() {
        return quandle.prefixed("quandle ");
    }
    let inv = star.right_inverse().expect("quandle tables are right-invertible");
    let s = |a, b| star.get(a, b);
    let si = |a, b| inv.get(a, b);
    let f1 = |a, b| r1.get(a, b);
    let f2 = |a, b| r2.get(a, b);
    let mut report = ValidationReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = &[x, y, z];
                report.check(s(f1(si(x, y), z), y) == f1(x, s(z, y)), "(1)", w);
                report.check(f2(si(x, y), z) == si(f2(x, s(z, y)), y), "(2)", w);
                report.check(s(si(y, f1(x, z)), x) == si(s(y, f2(x, z)), z), "(3)", w);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            report.check(f2(x, y) == f1(y, s(x, y)), "(4)", &[x, y]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            report.check(s(f1(x, y), f2(x, y)) == f2(y, s(x, y)), "(5)", &[x, y]);
        }
    }
    report
}

impl OrientedSingquandle {
    pub fn new(star: OperationTable, r1: OperationTable, r2: OperationTable) -> Result<Self, AlgebraError> {
        let report = validate_singquandle(&star, &r1, &r2);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid {
                kind: "oriented singquandle",
                report,
            });
        }
        let star_inv = star.right_inverse().expect("validated quandle");
        Ok(OrientedSingquandle { star, star_inv, r1, r2 })
    }

    /// A quandle with `R1(x, y) = x` and `R2(x, y) = y`.
    pub fn from_quandle(star: OperationTable) -> Result<Self, AlgebraError> {
        let n = star.order();
        let r1 = OperationTable::from_fn(n, |x, _| x);
        let r2 = OperationTable::from_fn(n, |_, y| y);
        OrientedSingquandle::new(star, r1, r2)
    }

    /// The affine family over `Z_n`: `x * y = a x + (1 − a) y`,
    /// `R1 = b x + c y`, `R2 = a c x + (b + c (1 − a)) y`.
    pub fn affine(n: usize, a: i64, b: i64, c: i64) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let m = n as i64;
        if gcd(a.rem_euclid(m), m) != 1 {
            return Err(AlgebraError::Parameter(format!("a = {a} is not invertible modulo {n}")));
        }
        if ((1 - a) * (1 - b - c)).rem_euclid(m) != 0 {
            return Err(AlgebraError::Parameter(format!(
                "(1 - a)(1 - b - c) is not 0 modulo {n} for a = {a}, b = {b}, c = {c}"
            )));
        }
        let star = OperationTable::from_fn(n, move |x, y| a * x + (1 - a) * y);
        let r1 = OperationTable::from_fn(n, move |x, y| b * x + c * y);
        let r2 = OperationTable::from_fn(n, move |x, y| a * c * x + (b + c * (1 - a)) * y);
        OrientedSingquandle::new(star, r1, r2)
    }

    /// Builds the tables by evaluating integer polynomials in `x`, `y` modulo `n`.
    pub fn from_formulas(n: usize, star: &str, r1: &str, r2: &str) -> Result<Self, AlgebraError> {
        let (star, r1, r2) = formula_tables(n, star, r1, r2)?;
        OrientedSingquandle::new(star, r1, r2)
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self, x: Element, y: Element) -> Element {
        self.star.get(x, y)
    }

    pub fn star_inv(&self, x: Element, y: Element) -> Element {
        self.star_inv.get(x, y)
    }

    pub fn r1(&self, x: Element, y: Element) -> Element {
        self.r1.get(x, y)
    }

    pub fn r2(&self, x: Element, y: Element) -> Element {
        self.r2.get(x, y)
    }

    pub fn star_table(&self) -> &OperationTable {
        &self.star
    }

    pub fn star_inv_table(&self) -> &OperationTable {
        &self.star_inv
    }

    pub fn r1_table(&self) -> &OperationTable {
        &self.r1
    }

    pub fn r2_table(&self) -> &OperationTable {
        &self.r2
    }

    /// The structure transported along the bijection `perm`.
    pub fn relabel(&self, perm: &[Element]) -> OrientedSingquandle {
        OrientedSingquandle {
            star: self.star.relabel(perm),
            star_inv: self.star_inv.relabel(perm),
            r1: self.r1.relabel(perm),
            r2: self.r2.relabel(perm),
        }
    }
}

/// Evaluates the three formulas into tables without validating them.
pub fn formula_tables(
    n: usize,
    star: &str,
    r1: &str,
    r2: &str,
) -> Result<(OperationTable, OperationTable, OperationTable), AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Empty);
    }
    let table = |src: &str| -> Result<OperationTable, AlgebraError> {
        let expr = formula::Expr::parse(src, &["x", "y"])?;
        Ok(OperationTable::from_fn(n, |x, y| expr.eval_mod(&[x, y], n as i64)))
    };
    Ok((table(star)?, table(r1)?, table(r2)?))
}
