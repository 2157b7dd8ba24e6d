use super::{AlgebraError, Element, OrientedSingquandle, ValidationReport};

/// A right action `x · s` of a singquandle on a finite set, stored as a
/// `|X| × |S|` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    set_order: usize,
    acting_order: usize,
    entries: Vec<Element>,
}

impl ActionTable {
    pub fn new(set_order: usize, acting_order: usize, entries: Vec<Element>) -> Result<Self, AlgebraError> {
        if set_order == 0 || acting_order == 0 {
            return Err(AlgebraError::Empty);
        }
        if entries.len() != set_order * acting_order {
            return Err(AlgebraError::TableSize {
                order: set_order,
                expected: set_order * acting_order,
                found: entries.len(),
            });
        }
        if let Some(i) = entries.iter().position(|&v| v >= set_order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: i / acting_order,
                col: i % acting_order,
                value: entries[i],
                order: set_order,
            });
        }
        Ok(ActionTable {
            set_order,
            acting_order,
            entries,
        })
    }

    /// Evaluates `f(x, s)` modulo the set order.
    pub fn from_fn(set_order: usize, acting_order: usize, f: impl Fn(i64, i64) -> i64) -> Self {
        assert!(set_order > 0 && acting_order > 0, "action needs nonempty sets");
        let m = set_order as i64;
        let entries = (0..set_order as i64)
            .flat_map(|x| (0..acting_order as i64).map(move |s| (x, s)))
            .map(|(x, s)| f(x, s).rem_euclid(m) as usize)
            .collect();
        ActionTable {
            set_order,
            acting_order,
            entries,
        }
    }

    pub fn set_order(&self) -> usize {
        self.set_order
    }

    pub fn acting_order(&self) -> usize {
        self.acting_order
    }

    #[inline]
    pub fn get(&self, x: Element, s: Element) -> Element {
        self.entries[x * self.acting_order + s]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.acting_order)
    }

    /// Columns `s` whose map `x ↦ x · s` is not a bijection.
    pub fn non_bijective_columns(&self) -> Vec<Element> {
        (0..self.acting_order)
            .filter(|&s| {
                let mut seen = vec![false; self.set_order];
                (0..self.set_order).any(|x| std::mem::replace(&mut seen[self.get(x, s)], true))
            })
            .collect()
    }

    fn inverse(&self) -> ActionTable {
        let mut entries = vec![0; self.entries.len()];
        for x in 0..self.set_order {
            for s in 0..self.acting_order {
                entries[self.get(x, s) * self.acting_order + s] = x;
            }
        }
        ActionTable { entries, ..*self }
    }

    /// Relabels the set by `set_perm` and the acting singquandle by `acting_perm`.
    pub fn relabel(&self, set_perm: &[Element], acting_perm: &[Element]) -> ActionTable {
        let mut entries = vec![0; self.entries.len()];
        for x in 0..self.set_order {
            for s in 0..self.acting_order {
                entries[set_perm[x] * self.acting_order + acting_perm[s]] = set_perm[self.get(x, s)];
            }
        }
        ActionTable { entries, ..*self }
    }
}

/// A singquandle shadow: a singquandle `S` acting on a set `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowStructure {
    base: OrientedSingquandle,
    action: ActionTable,
    inverse: ActionTable,
}

/// Checks that every `· s` is a bijection and that
/// `(x·s1)·s2 = (x·s2)·(s1*s2)` and `(x·s1)·s2 = (x·R1(s1,s2))·R2(s1,s2)`.
pub fn validate_shadow(base: &OrientedSingquandle, action: &ActionTable) -> ValidationReport {
    let mut report = ValidationReport::new();
    if action.acting_order() != base.order() {
        report.push("order mismatch", vec![]);
        return report;
    }
    for s in action.non_bijective_columns() {
        report.push("(I)", vec![s]);
    }
    let n = base.order();
    for x in 0..action.set_order() {
        for s1 in 0..n {
            for s2 in 0..n {
                let lhs = action.get(action.get(x, s1), s2);
                let w = &[x, s1, s2];
                report.check(
                    lhs == action.get(action.get(x, s2), base.star(s1, s2)),
                    "(II) classical",
                    w,
                );
                report.check(
                    lhs == action.get(action.get(x, base.r1(s1, s2)), base.r2(s1, s2)),
                    "(II) singular",
                    w,
                );
            }
        }
    }
    report
}

impl ShadowStructure {
    pub fn new(base: OrientedSingquandle, action: ActionTable) -> Result<Self, AlgebraError> {
        let report = validate_shadow(&base, &action);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid { kind: "shadow", report });
        }
        let inverse = action.inverse();
        Ok(ShadowStructure { base, action, inverse })
    }

    /// The action `x · s = x`.
    pub fn trivial(base: OrientedSingquandle, set_order: usize) -> Result<Self, AlgebraError> {
        let n = base.order();
        ShadowStructure::new(base, ActionTable::from_fn(set_order, n, |x, _| x))
    }

    pub fn base(&self) -> &OrientedSingquandle {
        &self.base
    }

    pub fn action(&self) -> &ActionTable {
        &self.action
    }

    pub fn set_order(&self) -> usize {
        self.action.set_order()
    }

    pub fn act(&self, x: Element, s: Element) -> Element {
        self.action.get(x, s)
    }

    /// The unique `y` with `y · s = x`.
    pub fn act_inv(&self, x: Element, s: Element) -> Element {
        self.inverse.get(x, s)
    }

    pub fn relabel(&self, set_perm: &[Element], acting_perm: &[Element]) -> ShadowStructure {
        let action = self.action.relabel(set_perm, acting_perm);
        ShadowStructure {
            base: self.base.relabel(acting_perm),
            inverse: action.inverse(),
            action,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> OrientedSingquandle {
        OrientedSingquandle::from_formulas(8, "5x-4y", "3x+4y", "4x+3y").unwrap()
    }

    #[test]
    fn quadratic_actions_are_shadows() {
        assert!(ShadowStructure::new(base(), ActionTable::from_fn(4, 8, |x, s| x + 2 * s + s * s)).is_ok());
        assert!(ShadowStructure::new(base(), ActionTable::from_fn(4, 8, |x, s| 3 * x + 2 * s + 2 * s * s)).is_ok());
        assert!(ShadowStructure::trivial(base(), 3).is_ok());
    }

    #[test]
    fn translation_action_is_not_a_shadow() {
        let report = validate_shadow(&base(), &ActionTable::from_fn(4, 8, |x, s| x + s));
        assert!(!report.is_valid());
        // Oracle: x + s1 + s2 against x + s2 + (5 s1 - 4 s2) mod 4 differ when s1 - ... != 0.
        let first = &report.violations[0];
        let (x, s1, s2) = (
            first.witness[0] as i64,
            first.witness[1] as i64,
            first.witness[2] as i64,
        );
        let lhs = (x + s1 + s2).rem_euclid(4);
        let star = (5 * s1 - 4 * s2).rem_euclid(8);
        let r1 = (3 * s1 + 4 * s2).rem_euclid(8);
        let r2 = (4 * s1 + 3 * s2).rem_euclid(8);
        assert!(lhs != (x + s2 + star).rem_euclid(4) || lhs != (x + r1 + r2).rem_euclid(4));
    }
}
