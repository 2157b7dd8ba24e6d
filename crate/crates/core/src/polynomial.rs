//! Exact polynomials and the multiset-valued invariants built on them.
//!
//! An [`InvariantValue`] is a multiset of exponent tags rendered as
//! `a1 u^{tag1} + a2 u^{tag2} + ...`. Tags are ring residues (state sums,
//! Boltzmann weights), base polynomials (singquandle and shadow polynomials)
//! or pairs of residues (two-variable Boltzmann values).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error("tag {tag} does not match the shape of the value")]
    ShapeMismatch { tag: String },
    #[error("cannot parse value text at byte {pos}: {reason}")]
    Parse { pos: usize, reason: String },
}

/// A polynomial variable such as `t`, `s1` or `t3`.
///
/// Variables sort by numeric suffix first and then by name, so the profile
/// variables appear in the order `s1 t1 s2 t2 s3 t3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn sort_key(&self) -> (u32, &str) {
        let digits = self.0.trim_start_matches(|c: char| !c.is_ascii_digit());
        let prefix = &self.0[..self.0.len() - digits.len()];
        (digits.parse().unwrap_or(0), prefix)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial as a map from variable to positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(Var::new(name), exp);
        }
        Monomial(m)
    }

    /// Builds a monomial from `(variable, exponent)` pairs, skipping zero exponents.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        let mut m = Monomial::one();
        for (name, exp) in pairs {
            m = m.mul(&Monomial::var(name, exp));
        }
        m
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| u64::from(e)).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.get(&Var::new(name)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Graded order: total degree first, then lexicographic.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Lexicographic comparison of exponent vectors in variable order.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // `self` has a variable that `other` lacks at this position.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", v.0)?;
            } else {
                write!(f, "{}^{}", v.0, e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BasePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BasePolynomial {
    pub fn zero() -> Self {
        BasePolynomial::default()
    }

    pub fn one() -> Self {
        BasePolynomial::term(1, Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BasePolynomial::term(c, Monomial::one())
    }

    pub fn term(coeff: impl Into<BigInt>, mono: Monomial) -> Self {
        let mut p = BasePolynomial::zero();
        p.add_term(mono, coeff.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &BasePolynomial) -> BasePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> BasePolynomial {
        BasePolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &BasePolynomial) -> BasePolynomial {
        let mut out = BasePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Terms sorted by descending graded order, used to compare tags.
    fn graded_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.graded_cmp(a.0));
        v
    }

    /// Order used when listing polynomial tags: by leading monomial in
    /// descending graded order, then ascending coefficient, then the next term.
    pub fn tag_cmp(&self, other: &BasePolynomial) -> Ordering {
        let a = self.graded_terms();
        let b = other.graded_terms();
        for ((ma, ca), (mb, cb)) in a.iter().zip(&b) {
            let ord = mb.graded_cmp(ma).then_with(|| ca.cmp(cb));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        a.len().cmp(&b.len())
    }

    pub fn parse(text: &str) -> Result<BasePolynomial, ValueError> {
        let mut p = Parser::new(text);
        let poly = p.poly()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        Ok(poly)
    }
}

impl fmt::Display for BasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

/// A residue modulo `modulus`; modulus 0 stands for the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: i64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Self {
        let value = if modulus == 0 {
            value
        } else {
            value.rem_euclid(modulus as i64)
        };
        Residue { value, modulus }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// An exponent tag of an invariant value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExponentTag {
    Ring(Residue),
    Poly(BasePolynomial),
    Pair(Residue, Residue),
}

impl ExponentTag {
    pub fn ring(value: i64, modulus: u64) -> Self {
        ExponentTag::Ring(Residue::new(value, modulus))
    }

    pub fn pair(first: i64, second: i64, modulus: u64) -> Self {
        ExponentTag::Pair(Residue::new(first, modulus), Residue::new(second, modulus))
    }

    /// Reduces residues into `[0, n)`; polynomials are canonical by construction.
    pub fn canonicalize(&self) -> ExponentTag {
        match self {
            ExponentTag::Ring(r) => ExponentTag::Ring(Residue::new(r.value, r.modulus)),
            ExponentTag::Poly(p) => ExponentTag::Poly(p.clone()),
            ExponentTag::Pair(a, b) => {
                ExponentTag::Pair(Residue::new(a.value, a.modulus), Residue::new(b.value, b.modulus))
            }
        }
    }

    fn shape(&self) -> TagShape {
        match self {
            ExponentTag::Ring(r) => TagShape::Ring(r.modulus),
            ExponentTag::Poly(_) => TagShape::Poly,
            ExponentTag::Pair(a, _) => TagShape::Pair(a.modulus),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            ExponentTag::Ring(_) => 0,
            ExponentTag::Poly(_) => 1,
            ExponentTag::Pair(..) => 2,
        }
    }
}

impl Ord for ExponentTag {
    /// Listing order: residues by descending value, polynomials by
    /// [`BasePolynomial::tag_cmp`], pairs lexicographically descending.
    fn cmp(&self, other: &Self) -> Ordering {
        use ExponentTag::*;
        match (self, other) {
            (Ring(a), Ring(b)) => a.modulus.cmp(&b.modulus).then_with(|| b.value.cmp(&a.value)),
            (Poly(a), Poly(b)) => a.tag_cmp(b).then_with(|| a.terms.cmp(&b.terms)),
            (Pair(a1, a2), Pair(b1, b2)) => a1
                .modulus
                .cmp(&b1.modulus)
                .then_with(|| (b1.value, b2.value).cmp(&(a1.value, a2.value)))
                .then_with(|| a2.modulus.cmp(&b2.modulus)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for ExponentTag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The formal variables a value is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variables {
    /// One variable, e.g. `u` for state sums or `w` for Boltzmann polynomials.
    Single(char),
    /// Two variables for pair tags.
    Double(char, char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagShape {
    Ring(u64),
    Poly,
    Pair(u64),
}

/// A multiset of exponent tags with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    vars: Variables,
    shape: Option<TagShape>,
    terms: BTreeMap<ExponentTag, BigUint>,
}

impl InvariantValue {
    pub fn new(vars: Variables) -> Self {
        InvariantValue {
            vars,
            shape: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn variables(&self) -> Variables {
        self.vars
    }

    pub fn insert(&mut self, tag: ExponentTag, mult: impl Into<BigUint>) -> Result<(), ValueError> {
        let tag = tag.canonicalize();
        let shape = tag.shape();
        if let Some(existing) = self.shape {
            if existing != shape {
                return Err(ValueError::ShapeMismatch {
                    tag: format!("{tag:?}"),
                });
            }
        }
        if matches!(tag, ExponentTag::Pair(..)) != matches!(self.vars, Variables::Double(..)) {
            return Err(ValueError::ShapeMismatch {
                tag: format!("{tag:?}"),
            });
        }
        let mult = mult.into();
        if mult.is_zero() {
            return Ok(());
        }
        self.shape = Some(shape);
        *self.terms.entry(tag).or_default() += mult;
        Ok(())
    }

    pub fn add_one(&mut self, tag: ExponentTag) -> Result<(), ValueError> {
        self.insert(tag, 1u32)
    }

    pub fn from_tags(vars: Variables, tags: impl IntoIterator<Item = ExponentTag>) -> Result<Self, ValueError> {
        let mut v = InvariantValue::new(vars);
        for t in tags {
            v.add_one(t)?;
        }
        Ok(v)
    }

    /// `(tag, multiplicity)` pairs in listing order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTag, &BigUint)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, tag: &ExponentTag) -> BigUint {
        self.terms.get(&tag.canonicalize()).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Renders a tag on its own, as used in JSON multiset listings.
    pub fn render_tag(tag: &ExponentTag) -> String {
        match tag {
            ExponentTag::Ring(r) => r.value.to_string(),
            ExponentTag::Poly(p) => p.to_string(),
            ExponentTag::Pair(a, b) => format!("({}, {})", a.value, b.value),
        }
    }

    /// Parses rendered text back into a value of the given shape.
    pub fn parse(text: &str, vars: Variables, shape: TagShape) -> Result<Self, ValueError> {
        let mut value = InvariantValue::new(vars);
        let mut p = Parser::new(text);
        p.skip_ws();
        let start = p.pos;
        if p.eat_str("0") {
            p.skip_ws();
            if p.at_end() {
                return Ok(value);
            }
            p.pos = start;
        }
        loop {
            p.skip_ws();
            let mult = p.natural().unwrap_or_else(BigUint::one);
            let tag = match (shape, vars) {
                (TagShape::Ring(m), Variables::Single(u)) => ExponentTag::ring(p.ring_power(u)?, m),
                (TagShape::Poly, Variables::Single(u)) => {
                    let poly = if p.eat_char(u) {
                        p.expect('^')?;
                        p.expect('{')?;
                        let poly = p.poly()?;
                        p.skip_ws();
                        p.expect('}')?;
                        poly
                    } else {
                        return Err(p.error("expected polynomial power"));
                    };
                    ExponentTag::Poly(poly)
                }
                (TagShape::Pair(m), Variables::Double(u, v)) => {
                    let a = p.ring_power(u)?;
                    let b = p.ring_power(v)?;
                    ExponentTag::pair(a, b, m)
                }
                _ => return Err(p.error("shape does not fit the variables")),
            };
            value.insert(tag, mult)?;
            p.skip_ws();
            if p.at_end() {
                return Ok(value);
            }
            p.expect('+')?;
        }
    }
}

fn write_ring_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        e if e < 0 => write!(f, "{var}^{{{e}}}"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (tag, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let trivial = match tag {
                ExponentTag::Ring(r) => r.value == 0,
                ExponentTag::Poly(_) => false,
                ExponentTag::Pair(a, b) => a.value == 0 && b.value == 0,
            };
            if trivial || !mult.is_one() {
                write!(f, "{mult}")?;
            }
            match (tag, self.vars) {
                (ExponentTag::Ring(r), Variables::Single(u) | Variables::Double(u, _)) => {
                    write_ring_power(f, u, r.value)?
                }
                (ExponentTag::Poly(p), Variables::Single(u) | Variables::Double(u, _)) => write!(f, "{u}^{{{p}}}")?,
                (ExponentTag::Pair(a, b), Variables::Double(u, v)) => {
                    write_ring_power(f, u, a.value)?;
                    write_ring_power(f, v, b.value)?;
                }
                (ExponentTag::Pair(a, b), Variables::Single(u)) => {
                    write_ring_power(f, u, a.value)?;
                    write_ring_power(f, 'v', b.value)?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, reason: &str) -> ValueError {
        ValueError::Parse {
            pos: self.pos,
            reason: reason.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn eat_char(&mut self, c: char) -> bool {
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ValueError> {
        self.skip_ws();
        if self.eat_char(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn natural(&mut self) -> Option<BigUint> {
        self.digits().map(|d| d.parse().unwrap())
    }

    fn small(&mut self) -> Result<i64, ValueError> {
        let neg = self.eat_char('-');
        let d = self.digits().ok_or_else(|| self.error("expected integer"))?;
        let v: i64 = d.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Parses an optional `u`, `u^k` or `u^{k}` factor.
    fn ring_power(&mut self, var: char) -> Result<i64, ValueError> {
        if !self.eat_char(var) {
            return Ok(0);
        }
        if !self.eat_char('^') {
            return Ok(1);
        }
        if self.eat_char('{') {
            let v = self.small()?;
            self.expect('}')?;
            Ok(v)
        } else {
            self.small()
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        if !matches!(self.peek(), Some(b'a'..=b'z' | b'A'..=b'Z')) {
            return None;
        }
        while matches!(self.peek(), Some(b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9')) {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn poly(&mut self) -> Result<BasePolynomial, ValueError> {
        let mut out = BasePolynomial::zero();
        self.skip_ws();
        let mut negative = self.eat_char('-');
        loop {
            self.skip_ws();
            let coeff = self.natural();
            let mut mono = Monomial::one();
            loop {
                self.skip_ws();
                let save = self.pos;
                match self.ident() {
                    Some(name) => {
                        let exp = if self.eat_char('^') {
                            self.digits()
                                .ok_or_else(|| self.error("expected exponent"))?
                                .parse()
                                .map_err(|_| self.error("exponent out of range"))?
                        } else {
                            1
                        };
                        mono = mono.mul(&Monomial::var(name, exp));
                    }
                    None => {
                        self.pos = save;
                        break;
                    }
                }
            }
            let coeff = match coeff {
                Some(c) => BigInt::from(c),
                None if !mono.is_one() => BigInt::one(),
                None => return Err(self.error("expected term")),
            };
            if mono.is_one() && coeff.is_zero() && out.is_zero() {
                // "0" is the zero polynomial
            } else {
                out.add_term(mono, if negative { -coeff } else { coeff });
            }
            self.skip_ws();
            if self.eat_char('+') {
                negative = false;
            } else if self.eat_char('-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }
}
