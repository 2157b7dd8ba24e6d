use std::fmt;

use super::{AlgebraError, Element};

/// An `n × n` table encoding a binary operation `x ∘ y = table[x][y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperationTable {
    order: usize,
    entries: Vec<Element>,
}

impl OperationTable {
    /// Builds a table from row-major entries, rejecting out-of-range values.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::Empty);
        }
        if entries.len() != order * order {
            return Err(AlgebraError::TableSize {
                order,
                expected: order * order,
                found: entries.len(),
            });
        }
        if let Some(i) = entries.iter().position(|&v| v >= order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: i / order,
                col: i % order,
                value: entries[i],
                order,
            });
        }
        Ok(OperationTable { order, entries })
    }

    /// Builds a table by evaluating `f` and reducing modulo the order.
    pub fn from_fn(order: usize, f: impl Fn(i64, i64) -> i64) -> Self {
        assert!(order > 0, "operation table needs at least one element");
        let n = order as i64;
        let entries = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y).rem_euclid(n) as usize)
            .collect();
        OperationTable { order, entries }
    }

    /// The left projection `x ∘ y = x`.
    pub fn projection(order: usize) -> Self {
        OperationTable::from_fn(order, |x, _| x)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x * self.order + y]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.order)
    }

    /// Columns `y` whose right translation `x ↦ x ∘ y` is not a bijection.
    pub fn non_invertible_columns(&self) -> Vec<Element> {
        (0..self.order)
            .filter(|&y| {
                let mut seen = vec![false; self.order];
                (0..self.order).any(|x| std::mem::replace(&mut seen[self.get(x, y)], true))
            })
            .collect()
    }

    pub fn is_right_invertible(&self) -> bool {
        self.non_invertible_columns().is_empty()
    }

    /// The table `z ∘⁻¹ y` with `(x ∘ y) ∘⁻¹ y = x`, if every right translation is bijective.
    pub fn right_inverse(&self) -> Option<OperationTable> {
        let n = self.order;
        let mut inv = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let slot = &mut inv[self.get(x, y) * n + y];
                if *slot != usize::MAX {
                    return None;
                }
                *slot = x;
            }
        }
        Some(OperationTable { order: n, entries: inv })
    }

    /// Transports the table along the bijection `perm`: the result satisfies
    /// `new[perm[x]][perm[y]] = perm[self[x][y]]`.
    pub fn relabel(&self, perm: &[Element]) -> OperationTable {
        let n = self.order;
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.get(x, y)];
            }
        }
        OperationTable { order: n, entries }
    }
}

/// One failed instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: String,
    /// Element indices witnessing the failure (0-based).
    pub witness: Vec<Element>,
}

/// The outcome of an exhaustive axiom check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: Vec<Element>) {
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness,
        });
    }

    /// Records a violation when `holds` is false.
    pub fn check(&mut self, holds: bool, axiom: &str, witness: &[Element]) {
        if !holds {
            self.push(axiom, witness.to_vec());
        }
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Prefixes every axiom name, used when a prerequisite structure fails.
    pub fn prefixed(mut self, prefix: &str) -> ValidationReport {
        for v in &mut self.violations {
            v.axiom = format!("{prefix}{}", v.axiom);
        }
        self
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }

    pub fn axioms(&self) -> Vec<&str> {
        let mut names: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !names.contains(&v.axiom.as_str()) {
                names.push(&v.axiom);
            }
        }
        names
    }

    pub fn sorted(mut self) -> ValidationReport {
        self.violations.sort();
        self
    }
}

impl fmt::Display for ValidationReport {
    /// Summarises violations per axiom with the first witness, 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        let mut first = true;
        for axiom in self.axioms() {
            let hits: Vec<_> = self.violations.iter().filter(|v| v.axiom == axiom).collect();
            let witness: Vec<String> = hits[0].witness.iter().map(|e| (e + 1).to_string()).collect();
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(
                f,
                "axiom {axiom} fails {} time(s), e.g. at ({})",
                hits.len(),
                witness.join(", ")
            )?;
        }
        Ok(())
    }
}
