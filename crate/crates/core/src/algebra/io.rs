//! Text format for finite structures.
//!
//! ```text
//! type: singquandle
//! modulus: 6
//! formula:
//! star = -x+2y
//! r1 = 3+2x-y
//! r2 = 3+x
//! ```
//!
//! Tables are given as named blocks (`star:`, `r1:`, `r2:`, `ops:`,
//! `action:`) of whitespace-separated 1-indexed entries. A psyquandle `ops:`
//! block holds the `⊵`, `⊳̄`, `•̲`, `•̄` tables side by side; a biquandle
//! block holds `⊵` and `⊳̄`. Shadows declare `set-order:` and an `action:`
//! block with one row per set element, or an `action = ...` formula in `x`
//! and `s`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::formula::Expr;
use super::singquandle::formula_tables;
use super::{
    validate_biquandle, validate_psyquandle, validate_quandle, validate_shadow, validate_singquandle, ActionTable,
    AlgebraError, Biquandle, OperationTable, OrientedSingquandle, Psyquandle, ShadowStructure, ValidationReport,
};

/// A validated structure read from a file.
#[derive(Debug, Clone)]
pub enum Structure {
    Quandle(OperationTable),
    Singquandle(OrientedSingquandle),
    Biquandle(Biquandle),
    Psyquandle(Psyquandle),
    Shadow(ShadowStructure),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Quandle(_) => "quandle",
            Structure::Singquandle(_) => "singquandle",
            Structure::Biquandle(_) => "biquandle",
            Structure::Psyquandle(_) => "psyquandle",
            Structure::Shadow(_) => "shadow",
        }
    }
}

/// The tables of a structure before validation.
#[derive(Debug, Clone)]
pub enum Candidate {
    Quandle(OperationTable),
    Singquandle {
        star: OperationTable,
        r1: OperationTable,
        r2: OperationTable,
    },
    Biquandle([OperationTable; 2]),
    Psyquandle([OperationTable; 4]),
    Shadow {
        star: OperationTable,
        r1: OperationTable,
        r2: OperationTable,
        action: ActionTable,
    },
}

impl Candidate {
    pub fn kind(&self) -> &'static str {
        match self {
            Candidate::Quandle(_) => "quandle",
            Candidate::Singquandle { .. } => "singquandle",
            Candidate::Biquandle(_) => "biquandle",
            Candidate::Psyquandle(_) => "psyquandle",
            Candidate::Shadow { .. } => "shadow",
        }
    }

    /// Runs the exhaustive validator for this kind of structure.
    pub fn validate(&self) -> ValidationReport {
        match self {
            Candidate::Quandle(t) => validate_quandle(t),
            Candidate::Singquandle { star, r1, r2 } => validate_singquandle(star, r1, r2),
            Candidate::Biquandle([u, o]) => validate_biquandle(u, o),
            Candidate::Psyquandle([u, o, bu, bo]) => validate_psyquandle(u, o, bu, bo),
            Candidate::Shadow { star, r1, r2, action } => {
                match OrientedSingquandle::new(star.clone(), r1.clone(), r2.clone()) {
                    Ok(base) => validate_shadow(&base, action),
                    Err(AlgebraError::Invalid { report, .. }) => report.prefixed("base "),
                    Err(e) => {
                        let mut r = ValidationReport::new();
                        r.push(format!("base {e}"), vec![]);
                        r
                    }
                }
            }
        }
    }

    pub fn into_structure(self) -> Result<Structure, AlgebraError> {
        Ok(match self {
            Candidate::Quandle(t) => {
                let report = validate_quandle(&t);
                if !report.is_valid() {
                    return Err(AlgebraError::Invalid {
                        kind: "quandle",
                        report,
                    });
                }
                Structure::Quandle(t)
            }
            Candidate::Singquandle { star, r1, r2 } => Structure::Singquandle(OrientedSingquandle::new(star, r1, r2)?),
            Candidate::Biquandle([u, o]) => Structure::Biquandle(Biquandle::new(u, o)?),
            Candidate::Psyquandle([u, o, bu, bo]) => Structure::Psyquandle(Psyquandle::new(u, o, bu, bo)?),
            Candidate::Shadow { star, r1, r2, action } => {
                let base = OrientedSingquandle::new(star, r1, r2)?;
                Structure::Shadow(ShadowStructure::new(base, action)?)
            }
        })
    }

    /// Canonical text: headers followed by 1-indexed table blocks.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "type: {}", self.kind());
        match self {
            Candidate::Quandle(t) => {
                let _ = writeln!(out, "order: {}", t.order());
                write_block(&mut out, "star", &[t]);
            }
            Candidate::Singquandle { star, r1, r2 } => {
                let _ = writeln!(out, "order: {}", star.order());
                write_block(&mut out, "star", &[star]);
                write_block(&mut out, "r1", &[r1]);
                write_block(&mut out, "r2", &[r2]);
            }
            Candidate::Biquandle([u, o]) => {
                let _ = writeln!(out, "order: {}", u.order());
                write_block(&mut out, "ops", &[u, o]);
            }
            Candidate::Psyquandle(ops) => {
                let _ = writeln!(out, "order: {}", ops[0].order());
                write_block(&mut out, "ops", &ops.iter().collect::<Vec<_>>());
            }
            Candidate::Shadow { star, r1, r2, action } => {
                let _ = writeln!(out, "order: {}", star.order());
                let _ = writeln!(out, "set-order: {}", action.set_order());
                write_block(&mut out, "star", &[star]);
                write_block(&mut out, "r1", &[r1]);
                write_block(&mut out, "r2", &[r2]);
                out.push_str("action:\n");
                for row in action.rows() {
                    out.push_str(&join_row(row));
                    out.push('\n');
                }
            }
        }
        out
    }
}

impl Structure {
    /// The tables of this structure, e.g. for serialization.
    pub fn to_candidate(&self) -> Candidate {
        match self {
            Structure::Quandle(t) => Candidate::Quandle(t.clone()),
            Structure::Singquandle(s) => Candidate::Singquandle {
                star: s.star_table().clone(),
                r1: s.r1_table().clone(),
                r2: s.r2_table().clone(),
            },
            Structure::Biquandle(b) => Candidate::Biquandle([b.under().clone(), b.over().clone()]),
            Structure::Psyquandle(p) => {
                use super::psyquandle::PsyOp::*;
                Candidate::Psyquandle([Under, Over, SingularUnder, SingularOver].map(|op| p.table(op).clone()))
            }
            Structure::Shadow(sh) => Candidate::Shadow {
                star: sh.base().star_table().clone(),
                r1: sh.base().r1_table().clone(),
                r2: sh.base().r2_table().clone(),
                action: sh.action().clone(),
            },
        }
    }
}

fn join_row(row: &[usize]) -> String {
    row.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn write_block(out: &mut String, name: &str, tables: &[&OperationTable]) {
    let _ = writeln!(out, "{name}:");
    let n = tables[0].order();
    let rows: Vec<Vec<&[usize]>> = tables.iter().map(|t| t.rows().collect()).collect();
    for r in 0..n {
        let parts: Vec<String> = rows.iter().map(|t| join_row(t[r])).collect();
        out.push_str(&parts.join("  "));
        out.push('\n');
    }
}

struct RawFile {
    headers: BTreeMap<String, (usize, String)>,
    blocks: BTreeMap<String, (usize, Vec<Vec<usize>>)>,
    formulas: BTreeMap<String, (usize, String)>,
}

fn format_err(line: usize, reason: impl Into<String>) -> AlgebraError {
    AlgebraError::Format {
        line,
        reason: reason.into(),
    }
}

const BLOCKS: [&str; 5] = ["star", "r1", "r2", "ops", "action"];

fn read_raw(text: &str) -> Result<RawFile, AlgebraError> {
    let mut raw = RawFile {
        headers: BTreeMap::new(),
        blocks: BTreeMap::new(),
        formulas: BTreeMap::new(),
    };
    let mut current: Option<String> = None;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_suffix(':') {
            let name = name.trim();
            if name != "formula" && !BLOCKS.contains(&name) {
                return Err(format_err(lineno, format!("unknown block '{name}'")));
            }
            if name != "formula" && raw.blocks.contains_key(name) {
                return Err(format_err(lineno, format!("block '{name}' given twice")));
            }
            if name != "formula" {
                raw.blocks.insert(name.to_string(), (lineno, Vec::new()));
            }
            current = Some(name.to_string());
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            let key = key.trim().to_string();
            if raw
                .headers
                .insert(key.clone(), (lineno, value.trim().to_string()))
                .is_some()
            {
                return Err(format_err(lineno, format!("header '{key}' given twice")));
            }
            current = None;
            continue;
        }
        match current.as_deref() {
            Some("formula") => {
                let (name, expr) = content
                    .split_once('=')
                    .ok_or_else(|| format_err(lineno, "expected 'name = expression'"))?;
                raw.formulas
                    .insert(name.trim().to_string(), (lineno, expr.trim().to_string()));
            }
            Some(block) => {
                let row = content
                    .split_whitespace()
                    .map(|tok| match tok.parse::<usize>() {
                        Ok(v) if v >= 1 => Ok(v - 1),
                        _ => Err(format_err(lineno, format!("'{tok}' is not a positive integer"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                raw.blocks.get_mut(block).expect("block opened").1.push(row);
            }
            None => return Err(format_err(lineno, format!("unexpected line '{content}'"))),
        }
    }
    Ok(raw)
}

impl RawFile {
    fn header_usize(&self, key: &str) -> Result<Option<usize>, AlgebraError> {
        match self.headers.get(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| format_err(*line, format!("'{key}' must be a positive integer"))),
        }
    }

    /// Splits a block into `parts` square tables of the given order.
    fn tables(&self, name: &str, order: usize, parts: usize) -> Result<Option<Vec<OperationTable>>, AlgebraError> {
        let Some((line, rows)) = self.blocks.get(name) else {
            return Ok(None);
        };
        if rows.len() != order || rows.iter().any(|r| r.len() != order * parts) {
            return Err(format_err(
                *line,
                format!("block '{name}' must have {order} rows of {} entries", order * parts),
            ));
        }
        (0..parts)
            .map(|p| {
                let entries = rows
                    .iter()
                    .flat_map(|r| r[p * order..(p + 1) * order].iter().copied())
                    .collect();
                OperationTable::new(order, entries).map_err(|e| format_err(*line, e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    fn formula(&self, name: &str) -> Option<&str> {
        self.formulas.get(name).map(|(_, e)| e.as_str())
    }
}

fn singquandle_tables(
    raw: &RawFile,
    order: usize,
) -> Result<(OperationTable, OperationTable, OperationTable), AlgebraError> {
    if let (Some(star), Some(r1), Some(r2)) = (raw.formula("star"), raw.formula("r1"), raw.formula("r2")) {
        return formula_tables(order, star, r1, r2);
    }
    let get = |name: &str| -> Result<OperationTable, AlgebraError> {
        raw.tables(name, order, 1)?
            .map(|mut v| v.remove(0))
            .ok_or_else(|| format_err(0, format!("missing '{name}' block or formula")))
    };
    Ok((get("star")?, get("r1")?, get("r2")?))
}

/// Parses a structure file without validating the axioms.
pub fn parse_candidate(text: &str) -> Result<Candidate, AlgebraError> {
    let raw = read_raw(text)?;
    let (type_line, kind) = raw
        .headers
        .get("type")
        .cloned()
        .ok_or_else(|| format_err(1, "missing 'type:' header"))?;
    let order = match (raw.header_usize("order")?, raw.header_usize("modulus")?) {
        (Some(o), _) | (None, Some(o)) => o,
        (None, None) => return Err(format_err(1, "missing 'order:' or 'modulus:' header")),
    };
    if order == 0 {
        return Err(AlgebraError::Empty);
    }
    match kind.as_str() {
        "quandle" => {
            if let Some(expr) = raw.formula("star") {
                let e = Expr::parse(expr, &["x", "y"])?;
                return Ok(Candidate::Quandle(OperationTable::from_fn(order, |x, y| {
                    e.eval_mod(&[x, y], order as i64)
                })));
            }
            let t = raw
                .tables("star", order, 1)?
                .ok_or_else(|| format_err(type_line, "missing 'star' block"))?;
            Ok(Candidate::Quandle(t.into_iter().next().expect("one table")))
        }
        "singquandle" => {
            let (star, r1, r2) = singquandle_tables(&raw, order)?;
            Ok(Candidate::Singquandle { star, r1, r2 })
        }
        "biquandle" => {
            let t = raw
                .tables("ops", order, 2)?
                .ok_or_else(|| format_err(type_line, "missing 'ops' block"))?;
            let [u, o]: [OperationTable; 2] = t.try_into().expect("two tables");
            Ok(Candidate::Biquandle([u, o]))
        }
        "psyquandle" => {
            let t = raw
                .tables("ops", order, 4)?
                .ok_or_else(|| format_err(type_line, "missing 'ops' block"))?;
            Ok(Candidate::Psyquandle(t.try_into().expect("four tables")))
        }
        "shadow" => {
            let (star, r1, r2) = singquandle_tables(&raw, order)?;
            let set_order = raw
                .header_usize("set-order")?
                .ok_or_else(|| format_err(type_line, "missing 'set-order:' header"))?;
            let action = if let Some(expr) = raw.formula("action") {
                let e = Expr::parse(expr, &["x", "s"])?;
                ActionTable::from_fn(set_order, order, |x, s| e.eval_mod(&[x, s], set_order as i64))
            } else {
                let (line, rows) = raw
                    .blocks
                    .get("action")
                    .ok_or_else(|| format_err(type_line, "missing 'action' block or formula"))?;
                if rows.len() != set_order || rows.iter().any(|r| r.len() != order) {
                    return Err(format_err(
                        *line,
                        format!("block 'action' must have {set_order} rows of {order} entries"),
                    ));
                }
                ActionTable::new(set_order, order, rows.concat()).map_err(|e| format_err(*line, e.to_string()))?
            };
            Ok(Candidate::Shadow { star, r1, r2, action })
        }
        other => Err(format_err(type_line, format!("unknown structure type '{other}'"))),
    }
}

/// Parses and validates a structure file.
pub fn parse_structure(text: &str) -> Result<Structure, AlgebraError> {
    parse_candidate(text)?.into_structure()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z6: &str = "type: singquandle\nmodulus: 6\nformula:\nstar = -x+2y\nr1 = 3+2x-y\nr2 = 3+x\n";

    #[test]
    fn formula_file_parses() {
        let s = parse_structure(Z6).unwrap();
        assert_eq!(s.kind(), "singquandle");
    }

    #[test]
    fn round_trip_keeps_verdict() {
        let c = parse_candidate(Z6).unwrap();
        let again = parse_candidate(&c.serialize()).unwrap();
        assert_eq!(again.validate(), c.validate());
        assert!(again.validate().is_valid());
    }

    #[test]
    fn bad_entries_report_lines() {
        let text = "type: quandle\norder: 2\nstar:\n1 2\n1 x\n";
        match parse_candidate(text) {
            Err(AlgebraError::Format { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        let text = "type: quandle\norder: 2\nstar:\n1 3\n1 2\n";
        assert!(matches!(
            parse_candidate(text),
            Err(AlgebraError::Format { line: 3, .. })
        ));
    }

    #[test]
    fn shadow_formula_file() {
        let text =
            "type: shadow\nmodulus: 8\nset-order: 6\nformula:\nstar = 3x-2y\nr1 = 7x+6y\nr2 = 2x+3y\naction = x+3s\n";
        let s = parse_structure(text).unwrap();
        match s {
            Structure::Shadow(sh) => assert_eq!(sh.act(1, 1), 4),
            other => panic!("unexpected {}", other.kind()),
        }
    }
}
