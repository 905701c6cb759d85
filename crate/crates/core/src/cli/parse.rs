//! Hand-writable text documents for ideals and partitions.
//!
//! ```text
//! # Example ideal
//! n=9; name=example;
//! x1*x2, x1*x3, x2*x4
//! x4*x5, x4*x6
//! ```
//!
//! A header of `key=value;` items (`n` is required, `name` and `target`
//! are optional) is followed by monomials separated by commas or newlines.
//! Partition documents list their parts in order, one bracketed group each:
//!
//! ```text
//! n=9; target=x1*x2, x1*x3, x2*x4;
//! [x1*x2] [x1*x3, x2*x4]
//! ```

use crate::error::{Error, Result};
use crate::monomial::{Ideal, Monomial, MAX_VARS};
use crate::sv::SvPartition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub n: usize,
    pub name: Option<String>,
    pub generators: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionDocument {
    pub n: usize,
    pub name: Option<String>,
    pub target: Option<Vec<Monomial>>,
    pub parts: Vec<Vec<Monomial>>,
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    /// Skips blanks and comments, and newlines too when `newlines` is set.
    fn skip_trivia(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            match c {
                '#' => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                '\n' if !newlines => return,
                c if c.is_whitespace() => {
                    self.bump();
                }
                _ => return,
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_trivia(false);
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    /// A header key (`n`, `name`, `target`) followed by `=`, if present.
    fn header_key(&mut self) -> Option<&'a str> {
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        let key = &rest[..len];
        if !matches!(key, "n" | "name" | "target") {
            return None;
        }
        if !rest[len..].trim_start_matches([' ', '\t']).starts_with('=') {
            return None;
        }
        for _ in 0..len {
            self.bump();
        }
        Some(key)
    }

    /// Raw text up to (not including) one of `stops` or a comment.
    fn take_until(&mut self, stops: &[char]) -> (usize, usize, &'a str) {
        let (line, column, start) = (self.line, self.column, self.pos);
        while self.peek().is_some_and(|c| !stops.contains(&c) && c != '#') {
            self.bump();
        }
        (line, column, &self.src[start..self.pos])
    }

    fn monomial(&mut self, n: usize, stops: &[char]) -> Result<Option<Monomial>> {
        let (line, column, raw) = self.take_until(stops);
        if raw.trim().is_empty() {
            return Ok(None);
        }
        Monomial::parse(raw, n).map(Some).map_err(|e| match e {
            Error::Parse { column: c, message, .. } => Error::Parse { line, column: column + c - 1, message },
            other => {
                let lead = raw.len() - raw.trim_start().len();
                Error::Parse { line, column: column + lead, message: other.to_string() }
            }
        })
    }

    /// Monomials separated by commas (and newlines when `newlines`) until
    /// one of `terminators` or the end of input.
    fn monomial_list(&mut self, n: usize, newlines: bool, terminators: &[char]) -> Result<Vec<Monomial>> {
        let mut stops = vec![','];
        stops.extend_from_slice(terminators);
        if newlines {
            stops.push('\n');
        }
        let mut out = Vec::new();
        loop {
            self.skip_trivia(newlines);
            if let Some(m) = self.monomial(n, &stops)? {
                out.push(m);
            }
            self.skip_trivia(false);
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                Some('\n') if newlines => {
                    self.bump();
                }
                Some(c) if terminators.contains(&c) => return Ok(out),
                None => return Ok(out),
                Some('\n') => {
                    return Err(self.error("unexpected end of line; expected `,` or terminator"))
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
        }
    }
}

struct Header {
    n: usize,
    name: Option<String>,
    target: Option<Vec<Monomial>>,
}

fn parse_header(s: &mut Scanner<'_>) -> Result<Header> {
    let mut n = None;
    let mut name = None;
    let mut target_span = None;
    loop {
        s.skip_trivia(true);
        let (line, column) = (s.line, s.column);
        let Some(key) = s.header_key() else { break };
        s.expect('=')?;
        match key {
            "n" => {
                s.skip_trivia(false);
                let (l, c, raw) = s.take_until(&[';', '\n']);
                let value: usize = raw.trim().parse().map_err(|_| Error::Parse {
                    line: l,
                    column: c,
                    message: format!("expected a variable count, found `{}`", raw.trim()),
                })?;
                if value == 0 || value > MAX_VARS {
                    return Err(Error::Parse {
                        line: l,
                        column: c,
                        message: format!("variable count must lie in 1..={MAX_VARS}"),
                    });
                }
                n = Some(value);
            }
            "name" => {
                let (_, _, raw) = s.take_until(&[';', '\n']);
                name = Some(raw.trim().to_string());
            }
            _ => {
                // Parsed once n is known; remember where it starts.
                target_span = Some((s.pos, s.line, s.column));
                s.take_until(&[';']);
            }
        }
        s.expect(';').map_err(|_| Error::Parse {
            line,
            column,
            message: format!("header item `{key}=...` must end with `;`"),
        })?;
    }
    let n = n.ok_or_else(|| s.error("missing `n=<count>;` header"))?;
    let target = match target_span {
        Some((pos, line, column)) => {
            let mut sub = Scanner { src: s.src, pos, line, column };
            Some(sub.monomial_list(n, true, &[';'])?)
        }
        None => None,
    };
    Ok(Header { n, name, target })
}

impl IdealDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = Scanner::new(text);
        let header = parse_header(&mut s)?;
        if header.target.is_some() {
            return Err(s.error("`target` belongs in partition documents"));
        }
        let generators = s.monomial_list(header.n, true, &[])?;
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(IdealDocument { n: header.n, name: header.name, generators })
    }

    /// The ideal, plus one warning per generator dropped during minimalization.
    pub fn to_ideal(&self) -> Result<(Ideal, Vec<String>)> {
        let ideal = Ideal::minimal_generators(self.generators.clone())?;
        let mut warnings = Vec::new();
        for (k, g) in self.generators.iter().enumerate() {
            if self.generators[..k].contains(g) {
                warnings.push(format!("duplicate generator {g} dropped"));
            } else if !ideal.gens().contains(g) {
                let divisor = ideal.gens().iter().find(|d| d.divides_unchecked(g)).expect("covered");
                warnings.push(format!("generator {g} is a multiple of {divisor} and was dropped"));
            }
        }
        Ok((ideal, warnings))
    }

    pub fn render(ideal: &Ideal, name: Option<&str>) -> String {
        let mut out = format!("n={};", ideal.n());
        if let Some(name) = name {
            out.push_str(&format!(" name={name};"));
        }
        out.push('\n');
        let gens: Vec<String> = ideal.gens().iter().map(ToString::to_string).collect();
        out.push_str(&gens.join(", "));
        out.push('\n');
        out
    }
}

impl PartitionDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = Scanner::new(text);
        let header = parse_header(&mut s)?;
        let mut parts = Vec::new();
        loop {
            s.skip_trivia(true);
            match s.peek() {
                None => break,
                Some('[') => {
                    s.bump();
                    let part = s.monomial_list(header.n, true, &[']'])?;
                    s.expect(']')?;
                    parts.push(part);
                }
                Some(c) => return Err(s.error(format!("expected `[` to open a part, found `{c}`"))),
            }
        }
        if parts.is_empty() {
            return Err(s.error("a partition needs at least one part"));
        }
        Ok(PartitionDocument { n: header.n, name: header.name, target: header.target, parts })
    }

    /// Uses `target` when given, otherwise the radical of the ideal the
    /// parts generate.
    pub fn to_partition(&self) -> Result<SvPartition> {
        let target = match &self.target {
            Some(t) => Ideal::minimal_generators(t.clone())?,
            None => {
                let supports = self.parts.iter().flatten().map(|m| m.support().monomial()).collect();
                Ideal::minimal_generators(supports)?
            }
        };
        SvPartition::new(self.parts.clone(), target)
    }

    pub fn render(partition: &SvPartition) -> String {
        let join = |ms: &[Monomial]| ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        let mut out = format!("n={}; target={};\n", partition.target().n(), join(partition.target().gens()));
        for part in partition.parts() {
            out.push_str(&format!("[{}]\n", join(part)));
        }
        out
    }
}
