use super::{AlgebraError, OperationTable, ValidationReport};

/// Checks idempotency, right-invertibility and right self-distributivity.
pub fn validate_quandle(t: &OperationTable) -> ValidationReport {
    let n = t.order();
    let mut report = ValidationReport::new();
    for x in 0..n {
        report.check(t.get(x, x) == x, "idempotency", &[x]);
    }
    for y in t.non_invertible_columns() {
        report.push("right-invertibility", vec![y]);
    }
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                report.check(
                    t.get(xy, z) == t.get(t.get(x, z), t.get(y, z)),
                    "self-distributivity",
                    &[x, y, z],
                );
            }
        }
    }
    report
}

/// `x * y = x`.
pub fn trivial_quandle(n: usize) -> OperationTable {
    OperationTable::projection(n)
}

/// `x * y = 2y − x` modulo `n`.
pub fn dihedral_quandle(n: usize) -> OperationTable {
    OperationTable::from_fn(n, |x, y| 2 * y - x)
}

/// `x * y = t·x + (1 − t)·y` modulo `n`; `t` must be a unit.
pub fn alexander_quandle(n: usize, t: i64) -> Result<OperationTable, AlgebraError> {
    if gcd(t.rem_euclid(n as i64), n as i64) != 1 {
        return Err(AlgebraError::Parameter(format!("{t} is not a unit modulo {n}")));
    }
    Ok(OperationTable::from_fn(n, move |x, y| t * x + (1 - t) * y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupMode {
    /// `a * b = b⁻¹ a b`
    Conj,
    /// `a * b = b a⁻¹ b`
    Core,
}

/// Builds the conjugation or core quandle of a finite group given by its
/// multiplication table.
pub fn quandle_from_group(mult: &OperationTable, mode: GroupMode) -> Result<OperationTable, AlgebraError> {
    let n = mult.order();
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| mult.get(e, a) == a && mult.get(a, e) == a))
        .ok_or_else(|| AlgebraError::Parameter("group table has no identity".into()))?;
    let inverse: Vec<usize> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| mult.get(a, b) == identity && mult.get(b, a) == identity)
                .ok_or_else(|| AlgebraError::Parameter(format!("element {} has no inverse", a + 1)))
        })
        .collect::<Result<_, _>>()?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mult.get(mult.get(a, b), c) != mult.get(a, mult.get(b, c)) {
                    return Err(AlgebraError::Parameter(format!(
                        "multiplication is not associative at ({}, {}, {})",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
    }
    let entries = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| match mode {
            GroupMode::Conj => mult.get(mult.get(inverse[b], a), b),
            GroupMode::Core => mult.get(mult.get(b, inverse[a]), b),
        })
        .collect();
    OperationTable::new(n, entries)
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_group(n: usize) -> OperationTable {
        OperationTable::from_fn(n, |a, b| a + b)
    }

    fn symmetric_group_3() -> OperationTable {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let entries = perms
            .iter()
            .flat_map(|a| perms.iter().map(move |b| (a, b)))
            .map(|(a, b)| index([a[b[0]], a[b[1]], a[b[2]]]))
            .collect();
        OperationTable::new(6, entries).unwrap()
    }

    #[test]
    fn dihedral_and_trivial_are_quandles() {
        assert!(validate_quandle(&dihedral_quandle(5)).is_valid());
        assert!(validate_quandle(&trivial_quandle(1)).is_valid());
        assert!(validate_quandle(&alexander_quandle(7, 3).unwrap()).is_valid());
        assert!(alexander_quandle(4, 2).is_err());
    }

    #[test]
    fn addition_fails_idempotency() {
        let report = validate_quandle(&OperationTable::from_fn(3, |x, y| x + y));
        assert!(report.violations.contains(&super::super::Violation {
            axiom: "idempotency".into(),
            witness: vec![1],
        }));
    }

    #[test]
    fn group_quandles() {
        let conj = quandle_from_group(&cyclic_group(3), GroupMode::Conj).unwrap();
        assert_eq!(conj, trivial_quandle(3));
        let s3 = quandle_from_group(&symmetric_group_3(), GroupMode::Conj).unwrap();
        assert!(validate_quandle(&s3).is_valid());
        let core = quandle_from_group(&cyclic_group(4), GroupMode::Core).unwrap();
        assert_eq!(core, dihedral_quandle(4));
    }

    #[test]
    fn non_group_is_rejected() {
        let bad = OperationTable::from_fn(3, |a, b| a * b);
        assert!(quandle_from_group(&bad, GroupMode::Conj).is_err());
    }
}
