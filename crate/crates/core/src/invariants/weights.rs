//! Weight tables and their text format.
//!
//! ```text
//! modulus: 2
//! phi:
//! 0 1
//! 0 0
//! psi:
//! 1 0
//! 1 1
//! ```
//!
//! Row `i`, column `j` holds the weight of the pair of elements `(i, j)`,
//! both counted from 1. The second block is `phiprime:` for singquandle
//! cocycles or `psi:` for psyquandle Boltzmann weights. Modulus 0 means
//! integer weights.

use super::InvariantError;
use crate::algebra::Element;

/// A square table of integer weights indexed by pairs of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    order: usize,
    entries: Vec<i64>,
}

impl WeightTable {
    pub fn new(order: usize, entries: Vec<i64>) -> Result<Self, InvariantError> {
        if entries.len() != order * order {
            return Err(InvariantError::SizeMismatch {
                expected: order * order,
                found: entries.len(),
            });
        }
        Ok(WeightTable { order, entries })
    }

    pub fn zero(order: usize) -> Self {
        WeightTable {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn from_fn(order: usize, f: impl Fn(i64, i64) -> i64) -> Self {
        let entries = (0..order as i64)
            .flat_map(|x| (0..order as i64).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        WeightTable { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> i64 {
        self.entries[x * self.order + y]
    }

    pub fn set(&mut self, x: Element, y: Element, v: i64) {
        self.entries[x * self.order + y] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Reduces every entry into `[0, m)`; `m = 0` leaves entries unchanged.
    pub fn reduced(&self, m: u64) -> WeightTable {
        WeightTable {
            order: self.order,
            entries: self.entries.iter().map(|&v| super::reduce(v, m)).collect(),
        }
    }

    fn write_block(&self, out: &mut String, name: &str) {
        out.push_str(name);
        out.push_str(":\n");
        for row in self.entries.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
}

/// The contents of a weight file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFile {
    pub modulus: u64,
    pub phi: WeightTable,
    pub phi_prime: Option<WeightTable>,
    pub psi: Option<WeightTable>,
}

impl WeightFile {
    pub fn serialize(&self) -> String {
        let mut out = format!("modulus: {}\n", self.modulus);
        self.phi.write_block(&mut out, "phi");
        if let Some(t) = &self.phi_prime {
            t.write_block(&mut out, "phiprime");
        }
        if let Some(t) = &self.psi {
            t.write_block(&mut out, "psi");
        }
        out
    }
}

fn format_err(line: usize, reason: impl Into<String>) -> InvariantError {
    InvariantError::Format {
        line,
        reason: reason.into(),
    }
}

pub fn parse_weights(text: &str) -> Result<WeightFile, InvariantError> {
    let mut modulus = None;
    let mut blocks: Vec<(String, usize, Vec<Vec<i64>>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(value) = content.strip_prefix("modulus:") {
            let m = value
                .trim()
                .parse::<u64>()
                .map_err(|_| format_err(lineno, "modulus must be a nonnegative integer"))?;
            modulus = Some(m);
            continue;
        }
        if let Some(name) = content.strip_suffix(':') {
            let name = name.trim();
            if !["phi", "phiprime", "psi"].contains(&name) {
                return Err(format_err(lineno, format!("unknown block '{name}'")));
            }
            if blocks.iter().any(|b| b.0 == name) {
                return Err(format_err(lineno, format!("block '{name}' given twice")));
            }
            blocks.push((name.to_string(), lineno, Vec::new()));
            continue;
        }
        let row = content
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| format_err(lineno, format!("'{t}' is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        blocks
            .last_mut()
            .ok_or_else(|| format_err(lineno, "row outside a block"))?
            .2
            .push(row);
    }
    let modulus = modulus.ok_or_else(|| format_err(1, "missing 'modulus:' header"))?;
    let mut take = |name: &str| -> Result<Option<WeightTable>, InvariantError> {
        let Some(pos) = blocks.iter().position(|b| b.0 == name) else {
            return Ok(None);
        };
        let (_, line, rows) = blocks.remove(pos);
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(format_err(line, format!("block '{name}' must be a square table")));
        }
        Ok(Some(WeightTable {
            order: n,
            entries: rows.concat(),
        }))
    };
    let phi = take("phi")?.ok_or_else(|| format_err(1, "missing 'phi:' block"))?;
    let phi_prime = take("phiprime")?;
    let psi = take("psi")?;
    for t in phi_prime.iter().chain(&psi) {
        if t.order() != phi.order() {
            return Err(InvariantError::SizeMismatch {
                expected: phi.order(),
                found: t.order(),
            });
        }
    }
    Ok(WeightFile {
        modulus,
        phi,
        phi_prime,
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "modulus: 2\nphi:\n0 1\n0 0\npsi:\n1 0\n1 1\n";
        let w = parse_weights(text).unwrap();
        assert_eq!(w.phi.get(0, 1), 1);
        assert_eq!(w.psi.as_ref().unwrap().get(1, 0), 1);
        assert_eq!(w.serialize(), text);
    }

    #[test]
    fn ragged_block_is_rejected() {
        let err = parse_weights("modulus: 2\nphi:\n0 1\n0\n").unwrap_err();
        assert!(matches!(err, InvariantError::Format { line: 2, .. }));
    }
}
