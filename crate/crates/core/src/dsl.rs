//! Text format for polynomials and problem files.
//!
//! Polynomials:
//!
//! ```text
//! s^2*y1 + d1^2*s*y1 - 3/2*(s*y1)^2*(d1*y2) + 4
//! ```
//!
//! `d<k>^e` and `s^e` are operators applied to the factor that follows
//! them (a variable or a bracketed polynomial); an exponent after that
//! factor raises the transformed factor. Bare `y` means `y1`.
//!
//! Problem files are `;`-terminated statements, `#` starts a comment:
//!
//! ```text
//! ring m=2 n=1;
//! mode psi;
//! charset: s*y1 + d1^2*y1 + d2^2*y1; shift=1;
//! generator: s^2*y1 - y1;
//! points: (1,0,2) (0,1,1);
//! target: s*d1*y1;
//! option oracle=true;
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dpoly::DPoly;
use crate::field::{CoeffField, QConstants};
use crate::lattice::PointSet;
use crate::termalg::{DTerm, Operator, MAX_DERIVATIONS};

/// Current problem-file JSON schema.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
    #[error("invalid problem JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "'{v}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Spanned {
                tok: Tok::Int(s.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
            continue;
        }
        if "+-*/^()=;:,".contains(c) {
            out.push(Spanned {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
            i += 1;
            col += 1;
            continue;
        }
        return Err(DslError::Parse {
            line: l0,
            column: c0,
            expected: vec!["a token".into()],
            found: format!("'{c}'"),
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    m: usize,
    n: usize,
}

enum Piece {
    Delta(usize),
    Sigma,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, DslError> {
        let h = self.here();
        Err(DslError::Parse {
            line: h.line,
            column: h.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: h.tok.to_string(),
        })
    }

    fn semantic<T>(&self, message: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Semantic {
            line: self.here().line,
            message: message.into(),
        })
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), DslError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expect_int(&mut self) -> Result<BigInt, DslError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => self.fail(&["an integer"]),
        }
    }

    fn expect_small(&mut self) -> Result<u32, DslError> {
        let v = self.expect_int()?;
        match v.to_u32() {
            Some(x) => Ok(x),
            None => self.semantic(format!("{v} is too large")),
        }
    }

    fn expect_ident(&mut self, word: &str) -> Result<(), DslError> {
        if *self.peek() == Tok::Ident(word.to_string()) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("'{word}'")])
        }
    }

    // poly := ['+'|'-'] summand (('+'|'-') summand)*
    fn poly(&mut self) -> Result<DPoly, DslError> {
        let mut acc = DPoly::zero(self.m, self.n);
        let mut negative = if self.eat_sym('-') {
            true
        } else {
            self.eat_sym('+');
            false
        };
        loop {
            let p = self.product()?;
            acc = if negative { acc.sub(&p) } else { acc.add(&p) };
            if self.eat_sym('+') {
                negative = false;
            } else if self.eat_sym('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    // product := factor ('*' factor)*
    fn product(&mut self) -> Result<DPoly, DslError> {
        let mut acc = DPoly::constant(self.m, self.n, QConstants::one());
        loop {
            let mut op = Operator::identity(self.m);
            // operator pieces, each followed by '*'
            while let Some(piece) = self.operator_piece()? {
                let e = if self.eat_sym('^') { self.expect_small()? } else { 1 };
                let mut delta = op.delta_exps().to_vec();
                let mut sigma = op.sigma_exp();
                match piece {
                    Piece::Delta(k) => delta[k - 1] += e,
                    Piece::Sigma => sigma += e,
                }
                op = Operator::new(delta, sigma);
                self.expect_sym('*')?;
            }
            let mut f = self.primary()?.apply_operator(&op);
            if self.eat_sym('^') {
                let e = self.expect_small()?;
                f = f.pow(e);
            }
            acc = acc.mul(&f);
            if !self.eat_sym('*') {
                return Ok(acc);
            }
        }
    }

    fn operator_piece(&mut self) -> Result<Option<Piece>, DslError> {
        let Tok::Ident(name) = self.peek().clone() else {
            return Ok(None);
        };
        if name == "s" {
            self.bump();
            return Ok(Some(Piece::Sigma));
        }
        if let Some(k) = name.strip_prefix('d').and_then(|d| d.parse::<usize>().ok()) {
            if k == 0 || k > self.m {
                return self.semantic(format!("derivation d{k} is outside d1..d{}", self.m));
            }
            self.bump();
            return Ok(Some(Piece::Delta(k)));
        }
        Ok(None)
    }

    // primary := number ['/' number] | variable | '(' poly ')'
    fn primary(&mut self) -> Result<DPoly, DslError> {
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let den = if self.eat_sym('/') {
                    self.expect_int()?
                } else {
                    BigInt::from(1)
                };
                if den.is_zero() {
                    return self.semantic("zero denominator");
                }
                Ok(DPoly::constant(self.m, self.n, QConstants(BigRational::new(num, den))))
            }
            Tok::Sym('(') => {
                self.bump();
                let p = self.poly()?;
                self.expect_sym(')')?;
                Ok(p)
            }
            Tok::Ident(name) => {
                let idx = match name.strip_prefix('y') {
                    Some("") => 1,
                    Some(d) => match d.parse::<usize>() {
                        Ok(i) => i,
                        Err(_) => return self.fail(&["a variable y<i>", "an operator d<k> or s", "'('", "a number"]),
                    },
                    None => return self.fail(&["a variable y<i>", "an operator d<k> or s", "'('", "a number"]),
                };
                if idx == 0 || idx > self.n {
                    return self.semantic(format!("variable y{idx} is outside y1..y{}", self.n));
                }
                self.bump();
                Ok(DPoly::term(self.m, self.n, DTerm::var(self.m, idx)))
            }
            _ => self.fail(&["a variable y<i>", "an operator d<k> or s", "'('", "a number"]),
        }
    }
}

/// Parses a polynomial in the ring with `m` derivations and `n` variables.
pub fn parse_poly(text: &str, m: usize, n: usize) -> Result<DPoly, DslError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        m,
        n,
    };
    let out = p.poly()?;
    if *p.peek() != Tok::End {
        return p.fail(&["'+'", "'-'", "'*'", "end of input"]);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Omega,
    Phi,
    Psi,
    Gap,
    Strength,
    Reduce,
    Oracle,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Omega,
        Mode::Phi,
        Mode::Psi,
        Mode::Gap,
        Mode::Strength,
        Mode::Reduce,
        Mode::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Omega => "omega",
            Mode::Phi => "phi",
            Mode::Psi => "psi",
            Mode::Gap => "gap",
            Mode::Strength => "strength",
            Mode::Reduce => "reduce",
            Mode::Oracle => "oracle",
        }
    }

    fn from_name(s: &str) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharsetEntry {
    pub poly: DPoly,
    pub shift: u32,
}

/// A parsed problem: ring shape, optional mode, and mode-specific data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub m: usize,
    pub n: usize,
    pub mode: Option<Mode>,
    pub charset: Vec<CharsetEntry>,
    pub generators: Vec<DPoly>,
    pub points: Vec<Vec<u32>>,
    pub targets: Vec<DPoly>,
    pub options: BTreeMap<String, String>,
}

impl ProblemFile {
    pub fn new(m: usize, n: usize) -> Self {
        ProblemFile {
            m,
            n,
            mode: None,
            charset: Vec::new(),
            generators: Vec::new(),
            points: Vec::new(),
            targets: Vec::new(),
            options: BTreeMap::new(),
        }
    }

    pub fn charset_polys(&self) -> Vec<DPoly> {
        self.charset.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn shifts(&self) -> Vec<u32> {
        self.charset.iter().map(|e| e.shift).collect()
    }

    pub fn option_bool(&self, key: &str) -> Option<bool> {
        self.options.get(key).and_then(|v| match v.as_str() {
            "true" | "on" | "1" => Some(true),
            "false" | "off" | "0" => Some(false),
            _ => None,
        })
    }

    /// Renders the problem in the statement syntax accepted by
    /// [`parse_problem`].
    pub fn render(&self) -> String {
        let mut out = format!("ring m={} n={};\n", self.m, self.n);
        if let Some(mode) = self.mode {
            out.push_str(&format!("mode {};\n", mode.name()));
        }
        for e in &self.charset {
            out.push_str(&format!("charset: {}; shift={};\n", e.poly, e.shift));
        }
        for g in &self.generators {
            out.push_str(&format!("generator: {g};\n"));
        }
        if !self.points.is_empty() {
            let pts: Vec<String> = self
                .points
                .iter()
                .map(|p| format!("({})", p.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            out.push_str(&format!("points: {};\n", pts.join(" ")));
        }
        for t in &self.targets {
            out.push_str(&format!("target: {t};\n"));
        }
        for (k, v) in &self.options {
            out.push_str(&format!("option {k}={v};\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ProblemJson::from(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self, DslError> {
        let raw: ProblemJson = serde_json::from_str(text).map_err(|e| DslError::Json(e.to_string()))?;
        if raw.schema != SCHEMA_VERSION {
            return Err(DslError::Json(format!("unsupported schema {}", raw.schema)));
        }
        let (m, n) = (raw.ring.m, raw.ring.n);
        check_ring(m, n, 0)?;
        let poly = |s: &str| parse_poly(s, m, n);
        let mut pf = ProblemFile::new(m, n);
        pf.mode = raw.mode;
        for e in raw.charset {
            pf.charset.push(CharsetEntry {
                poly: poly(&e.poly)?,
                shift: e.shift,
            });
        }
        pf.generators = raw.generators.iter().map(|g| poly(g)).collect::<Result<_, _>>()?;
        pf.points = raw.points;
        pf.targets = raw.targets.iter().map(|g| poly(g)).collect::<Result<_, _>>()?;
        pf.options = raw.options;
        pf.validate(0)?;
        Ok(pf)
    }

    fn validate(&self, line: usize) -> Result<(), DslError> {
        for (k, e) in self.charset.iter().enumerate() {
            if e.poly.is_constant() {
                return Err(DslError::Semantic {
                    line,
                    message: format!("charset element {} is a constant", k + 1),
                });
            }
        }
        for p in &self.points {
            if p.len() != self.m + 1 {
                return Err(DslError::Semantic {
                    line,
                    message: format!("point has {} coordinates, expected {}", p.len(), self.m + 1),
                });
            }
        }
        Ok(())
    }
}

fn check_ring(m: usize, n: usize, line: usize) -> Result<(), DslError> {
    if m > MAX_DERIVATIONS {
        return Err(DslError::Semantic {
            line,
            message: format!("at most {MAX_DERIVATIONS} derivations are supported"),
        });
    }
    if n == 0 {
        return Err(DslError::Semantic {
            line,
            message: "at least one variable is required".into(),
        });
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharsetJson {
    poly: String,
    #[serde(default)]
    shift: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemJson {
    schema: u32,
    ring: RingJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<Mode>,
    #[serde(default)]
    charset: Vec<CharsetJson>,
    #[serde(default)]
    generators: Vec<String>,
    #[serde(default)]
    points: Vec<Vec<u32>>,
    #[serde(default)]
    targets: Vec<String>,
    #[serde(default)]
    options: BTreeMap<String, String>,
}

fn point_set_problem(value: serde_json::Value) -> Result<ProblemFile, DslError> {
    let set: PointSet = serde_json::from_value(value).map_err(|e| DslError::Json(format!("invalid point set: {e}")))?;
    set.validate().map_err(|e| DslError::Json(e.to_string()))?;
    check_ring(set.m, 1, 0)?;
    let mut pf = ProblemFile::new(set.m, 1);
    pf.mode = Some(Mode::Omega);
    pf.points = set.points.into_iter().map(|p| p.0).collect();
    Ok(pf)
}

impl From<&ProblemFile> for ProblemJson {
    fn from(pf: &ProblemFile) -> Self {
        ProblemJson {
            schema: SCHEMA_VERSION,
            ring: RingJson { m: pf.m, n: pf.n },
            mode: pf.mode,
            charset: pf
                .charset
                .iter()
                .map(|e| CharsetJson {
                    poly: e.poly.to_string(),
                    shift: e.shift,
                })
                .collect(),
            generators: pf.generators.iter().map(ToString::to_string).collect(),
            points: pf.points.clone(),
            targets: pf.targets.iter().map(ToString::to_string).collect(),
            options: pf.options.clone(),
        }
    }
}

/// Parses a problem file; JSON input is recognized by a leading `{`.
///
/// A bare point set `{"m": .., "points": [[..]]}` is accepted as an
/// `omega` problem.
pub fn parse_problem(text: &str) -> Result<ProblemFile, DslError> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| DslError::Json(e.to_string()))?;
        if value.get("schema").is_none() && value.get("points").is_some() {
            return point_set_problem(value);
        }
        return ProblemFile::from_json(text);
    }
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        m: 0,
        n: 1,
    };
    p.expect_ident("ring")?;
    p.expect_ident("m")?;
    p.expect_sym('=')?;
    let m = p.expect_small()? as usize;
    p.expect_ident("n")?;
    p.expect_sym('=')?;
    let n = p.expect_small()? as usize;
    check_ring(m, n, p.here().line)?;
    p.expect_sym(';')?;
    p.m = m;
    p.n = n;
    let mut pf = ProblemFile::new(m, n);

    const STATEMENTS: [&str; 7] = [
        "'mode'",
        "'charset'",
        "'shift'",
        "'generator'",
        "'points'",
        "'target'",
        "'option'",
    ];
    loop {
        let line = p.here().line;
        let word = match p.peek().clone() {
            Tok::End => break,
            Tok::Ident(w) => w,
            _ => return p.fail(&STATEMENTS),
        };
        p.bump();
        match word.as_str() {
            "mode" => {
                let Tok::Ident(name) = p.peek().clone() else {
                    return p.fail(&["a mode name"]);
                };
                let Some(mode) = Mode::from_name(&name) else {
                    return p.semantic(format!("unknown mode '{name}'"));
                };
                p.bump();
                pf.mode = Some(mode);
            }
            "charset" => {
                p.expect_sym(':')?;
                let poly = p.poly()?;
                if poly.is_constant() {
                    return Err(DslError::Semantic {
                        line,
                        message: "charset element is a constant".into(),
                    });
                }
                pf.charset.push(CharsetEntry { poly, shift: 0 });
            }
            "shift" => {
                p.expect_sym('=')?;
                if p.eat_sym('-') {
                    return p.semantic("shift must be non-negative");
                }
                let k = p.expect_small()?;
                match pf.charset.last_mut() {
                    Some(e) => e.shift = k,
                    None => return p.semantic("shift without a preceding charset element"),
                }
            }
            "generator" => {
                p.expect_sym(':')?;
                let g = p.poly()?;
                pf.generators.push(g);
            }
            "target" => {
                p.expect_sym(':')?;
                let t = p.poly()?;
                pf.targets.push(t);
            }
            "points" => {
                p.expect_sym(':')?;
                while p.eat_sym('(') {
                    let mut pt = vec![p.expect_small()?];
                    while p.eat_sym(',') {
                        pt.push(p.expect_small()?);
                    }
                    p.expect_sym(')')?;
                    if pt.len() != m + 1 {
                        return p.semantic(format!("point has {} coordinates, expected {}", pt.len(), m + 1));
                    }
                    pf.points.push(pt);
                }
            }
            "option" => {
                let Tok::Ident(key) = p.peek().clone() else {
                    return p.fail(&["an option name"]);
                };
                p.bump();
                p.expect_sym('=')?;
                let value = match p.peek().clone() {
                    Tok::Ident(v) => v,
                    Tok::Int(v) => v.to_string(),
                    _ => return p.fail(&["an option value"]),
                };
                p.bump();
                pf.options.insert(key, value);
            }
            "ring" => return p.semantic("duplicate ring statement"),
            _ => {
                p.pos -= 1;
                return p.fail(&STATEMENTS);
            }
        }
        p.expect_sym(';')?;
    }
    pf.validate(p.here().line)?;
    Ok(pf)
}
