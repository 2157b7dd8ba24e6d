//! Integer polynomial expressions such as `6+5x+6xy` or `x+2s+s^2`.
//!
//! Supported syntax: integer constants, single-letter variables, `+`, `-`,
//! `*`, implicit multiplication, `^` with a constant exponent, and parentheses.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("in '{src}' at column {col}: {reason}")]
    Syntax { src: String, col: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(i64),
    Var(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Parses `src`; `vars` lists the allowed variable names in argument order.
    pub fn parse(src: &str, vars: &[&str]) -> Result<Expr, FormulaError> {
        let mut p = ExprParser {
            src,
            chars: src.chars().collect(),
            pos: 0,
            vars,
        };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(e)
    }

    /// Evaluates with all intermediate values reduced modulo `m`.
    pub fn eval_mod(&self, args: &[i64], m: i64) -> i64 {
        let r = |v: i64| v.rem_euclid(m);
        match self {
            Expr::Const(c) => r(*c),
            Expr::Var(i) => r(args[*i]),
            Expr::Add(a, b) => r(a.eval_mod(args, m) + b.eval_mod(args, m)),
            Expr::Sub(a, b) => r(a.eval_mod(args, m) - b.eval_mod(args, m)),
            Expr::Mul(a, b) => r(a.eval_mod(args, m) * b.eval_mod(args, m)),
            Expr::Neg(a) => r(-a.eval_mod(args, m)),
            Expr::Pow(a, k) => {
                let base = a.eval_mod(args, m);
                (0..*k).fold(r(1), |acc, _| r(acc * base))
            }
        }
    }
}

struct ExprParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    vars: &'a [&'a str],
}

impl ExprParser<'_> {
    fn error(&self, reason: &str) -> FormulaError {
        FormulaError::Syntax {
            src: self.src.to_string(),
            col: self.pos + 1,
            reason: reason.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, FormulaError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                Expr::Neg(Box::new(self.product()?))
            }
            Some('+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Some('-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, FormulaError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, FormulaError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let k = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, FormulaError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                digits
                    .parse()
                    .map(Expr::Const)
                    .map_err(|_| self.error("constant out of range"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = c.to_string();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => {
                        self.pos += 1;
                        Ok(Expr::Var(i))
                    }
                    None => Err(self.error(&format!("unknown variable '{name}'"))),
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, x: i64, y: i64, m: i64) -> i64 {
        Expr::parse(src, &["x", "y"]).unwrap().eval_mod(&[x, y], m)
    }

    #[test]
    fn implicit_multiplication_and_signs() {
        assert_eq!(eval("6+5x+6xy", 3, 5, 8), (6 + 15 + 90) % 8);
        assert_eq!(eval("-x+2y", 1, 0, 6), 5);
        assert_eq!(eval("3x-2y", 1, 3, 8), (3 - 6i64).rem_euclid(8));
        assert_eq!(eval("2(x+y)^2", 1, 2, 100), 18);
        assert_eq!(eval("x*y", 3, 4, 100), 12);
    }

    #[test]
    fn rejects_unknown_variables_and_garbage() {
        assert!(Expr::parse("x+z", &["x", "y"]).is_err());
        assert!(Expr::parse("x+", &["x", "y"]).is_err());
        assert!(Expr::parse("(x", &["x", "y"]).is_err());
    }
}
