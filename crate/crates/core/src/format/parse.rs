use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BasisRef, DefinitionFile, Entry, Expr, FormatError, Line, Section, SectionKind, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Number(BigInt),
    Index(usize),
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    Arrow,
    Colon,
    Equals,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Number(n) => format!("`{n}`"),
            Tok::Index(i) => format!("`@{i}`"),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Equals => "`=`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    column: usize,
}

fn err(line: usize, column: usize, expected: &[&str], found: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.into(),
    }
}

fn is_word_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str, line: usize) -> Result<Vec<Spanned>, FormatError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '+' => Some(Tok::Plus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ':' => Some(Tok::Colon),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, column });
            i += 1;
        } else if c == '-' {
            if chars.get(i + 1) == Some(&'>') {
                out.push(Spanned {
                    tok: Tok::Arrow,
                    column,
                });
                i += 2;
            } else {
                out.push(Spanned {
                    tok: Tok::Minus,
                    column,
                });
                i += 1;
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && is_word_char(chars[i]) {
                return Err(err(line, i + 1, &["digit", "operator"], chars[i].to_string()));
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            out.push(Spanned {
                tok: Tok::Number(n),
                column,
            });
        } else if c == '@' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let idx = digits
                .parse::<usize>()
                .map_err(|_| err(line, column + 1, &["basis position"], found_at(&chars, start)))?;
            out.push(Spanned {
                tok: Tok::Index(idx),
                column,
            });
        } else if is_word_start(c) {
            let start = i;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Word(chars[start..i].iter().collect()),
                column,
            });
        } else {
            return Err(err(line, column, &["name", "number", "operator"], format!("`{c}`")));
        }
    }
    Ok(out)
}

fn found_at(chars: &[char], i: usize) -> String {
    chars
        .get(i)
        .map(|c| format!("`{c}`"))
        .unwrap_or_else(|| "end of line".into())
}

/// Cursor over the tokens of one line.
struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_column: usize,
    depth: usize,
}

/// Nesting limit for parentheses and prefix minus signs.
const MAX_DEPTH: usize = 200;

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Spanned], line: usize, end_column: usize) -> Self {
        Self {
            toks,
            pos: 0,
            line,
            end_column,
            depth: 0,
        }
    }

    fn descend(&mut self) -> Result<(), FormatError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.line, self.column(), &["shallower nesting"], self.found()));
        }
        Ok(())
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |s| s.column)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of line".to_string(), Tok::describe)
    }

    fn fail(&self, expected: &[&str]) -> FormatError {
        err(self.line, self.column(), expected, self.found())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), FormatError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&[name]))
        }
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Expr, FormatError> {
        let mut e = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.product()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.product()?));
                }
                _ => return Ok(e),
            }
        }
    }

    // product := unary (('*' | '/') unary)*
    fn product(&mut self) -> Result<Expr, FormatError> {
        let mut e = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    e = self.divide(e)?;
                }
                _ => return Ok(e),
            }
        }
    }

    fn divide(&mut self, e: Expr) -> Result<Expr, FormatError> {
        let line = self.line;
        let rhs = self.unary()?;
        if matches!(&rhs, Expr::Num(q) if q.is_zero()) {
            return Err(FormatError::ZeroDenominator { line });
        }
        Ok(Expr::Div(Box::new(e), Box::new(rhs)))
    }

    // unary := '-' unary | atom ; a minus directly before a literal folds into it
    fn unary(&mut self) -> Result<Expr, FormatError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            if let Some(Tok::Number(_)) = self.peek() {
                if let Expr::Num(q) = self.atom()? {
                    return Ok(Expr::Num(-q));
                }
            }
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.atom()
    }

    // atom := number ['/' number] | name | '(' sum ')'
    fn atom(&mut self) -> Result<Expr, FormatError> {
        match self.peek().cloned() {
            Some(Tok::Number(n)) => {
                self.pos += 1;
                let is_fraction = self.peek() == Some(&Tok::Slash)
                    && matches!(self.toks.get(self.pos + 1).map(|s| &s.tok), Some(Tok::Number(_)));
                if is_fraction {
                    self.pos += 1;
                    let Some(Tok::Number(d)) = self.bump() else {
                        unreachable!()
                    };
                    if d.is_zero() {
                        return Err(FormatError::ZeroDenominator { line: self.line });
                    }
                    return Ok(Expr::Num(BigRational::new(n, d)));
                }
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some(Tok::Word(w)) => {
                self.pos += 1;
                Ok(Expr::Param(w))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                self.descend()?;
                let e = self.sum()?;
                self.depth -= 1;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.fail(&["number", "parameter", "`(`"])),
        }
    }

    fn basis_ref(&mut self) -> Option<BasisRef> {
        let r = match self.peek()? {
            Tok::Word(w) => BasisRef::Name(w.clone()),
            Tok::Number(n) => BasisRef::Name(n.to_string()),
            Tok::Index(i) => BasisRef::Index(*i),
            _ => return None,
        };
        self.pos += 1;
        Some(r)
    }

    fn basis_tuple(&mut self) -> Vec<BasisRef> {
        let mut v = Vec::new();
        while let Some(r) = self.basis_ref() {
            v.push(r);
        }
        v
    }
}

/// Splits a right hand side into terms at `+`/`-` signs that sit at
/// parenthesis depth zero and follow an operand.
fn split_terms(toks: &[Spanned]) -> Vec<(bool, &[Spanned])> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    if let Some(Tok::Minus) = toks.first().map(|s| &s.tok) {
        negative = true;
        start = 1;
    }
    let mut i = start;
    while i < toks.len() {
        let t = &toks[i].tok;
        match t {
            Tok::LParen => depth += 1,
            Tok::RParen => depth -= 1,
            Tok::Plus | Tok::Minus if depth == 0 && i > start => {
                let prev = &toks[i - 1].tok;
                let after_operand = !matches!(prev, Tok::Star | Tok::Slash | Tok::Plus | Tok::Minus | Tok::LParen);
                if after_operand {
                    out.push((negative, &toks[start..i]));
                    negative = *t == Tok::Minus;
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    out.push((negative, &toks[start..]));
    out
}

fn parse_term(toks: &[Spanned], negative: bool, line: usize, end_column: usize) -> Result<Term, FormatError> {
    // the basis tuple follows the last top-level `*`
    let mut depth = 0i32;
    let mut last_star = None;
    for (i, s) in toks.iter().enumerate() {
        match s.tok {
            Tok::LParen => depth += 1,
            Tok::RParen => depth -= 1,
            Tok::Star if depth == 0 => last_star = Some(i),
            _ => {}
        }
    }
    let (coef, tuple_toks) = match last_star {
        None => (Expr::int(1), toks),
        Some(k) => {
            let head = &toks[..k];
            let mut segments = Vec::new();
            let mut seg_start = 0;
            let mut depth = 0i32;
            for (i, s) in head.iter().enumerate() {
                match s.tok {
                    Tok::LParen => depth += 1,
                    Tok::RParen => depth -= 1,
                    Tok::Star if depth == 0 => {
                        segments.push(&head[seg_start..i]);
                        seg_start = i + 1;
                    }
                    _ => {}
                }
            }
            segments.push(&head[seg_start..]);
            let mut coef: Option<Expr> = None;
            for seg in segments {
                let seg_end = seg.last().map_or(end_column, |s| s.column + 1);
                let mut c = Cursor::new(seg, line, seg_end);
                let e = c.sum()?;
                if !c.at_end() {
                    return Err(c.fail(&["`*`", "operator"]));
                }
                coef = Some(match coef {
                    None => e,
                    Some(prev) => Expr::Mul(Box::new(prev), Box::new(e)),
                });
            }
            (coef.expect("at least one segment"), &toks[k + 1..])
        }
    };
    let mut c = Cursor::new(tuple_toks, line, end_column);
    let outputs = c.basis_tuple();
    if outputs.is_empty() || !c.at_end() {
        return Err(c.fail(&["basis name"]));
    }
    let coef = if negative { Expr::Neg(Box::new(coef)) } else { coef };
    Ok(Term { coef, outputs })
}

fn parse_rhs(key: &str, toks: &[Spanned], line: usize, end_column: usize) -> Result<Vec<Term>, FormatError> {
    if toks.is_empty() {
        return Err(err(line, end_column, &["term", "`0`"], "end of line"));
    }
    if key == "counit" {
        let mut c = Cursor::new(toks, line, end_column);
        let e = c.sum()?;
        if !c.at_end() {
            return Err(c.fail(&["operator", "end of line"]));
        }
        return Ok(vec![Term {
            coef: e,
            outputs: Vec::new(),
        }]);
    }
    if toks.len() == 1 && toks[0].tok == Tok::Number(BigInt::zero()) {
        return Ok(Vec::new());
    }
    split_terms(toks)
        .into_iter()
        .map(|(neg, t)| {
            if t.is_empty() {
                Err(err(line, end_column, &["term"], "end of term"))
            } else {
                parse_term(t, neg, line, end_column)
            }
        })
        .collect()
}

fn parse_line(kind: SectionKind, text: &str, line: usize) -> Result<Line, FormatError> {
    let toks = lex(text, line)?;
    let end_column = text.chars().count() + 1;
    let mut c = Cursor::new(&toks, line, end_column);
    let key = match c.bump() {
        Some(Tok::Word(w)) => w,
        _ => {
            c.pos = 0;
            return Err(c.fail(&["key"]));
        }
    };
    if kind == SectionKind::Params {
        c.expect(Tok::Equals, "`=`")?;
        let value = c.sum()?;
        if !c.at_end() {
            return Err(c.fail(&["operator", "end of line"]));
        }
        return Ok(Line::Param { name: key, value, line });
    }
    c.expect(Tok::Colon, "`:`")?;
    let rest = &toks[c.pos..];
    match rest.iter().position(|s| s.tok == Tok::Arrow) {
        None => {
            let mut values = Vec::new();
            while let Some(t) = c.bump() {
                match t {
                    Tok::Word(w) => values.push(w),
                    Tok::Number(n) => values.push(n.to_string()),
                    _ => {
                        c.pos -= 1;
                        return Err(c.fail(&["name", "`->`"]));
                    }
                }
            }
            Ok(Line::Property { key, values, line })
        }
        Some(arrow) => {
            let inputs = c.basis_tuple();
            if c.pos != toks.len() - rest.len() + arrow {
                return Err(c.fail(&["basis name", "`->`"]));
            }
            c.pos += 1;
            let terms = parse_rhs(&key, &toks[c.pos..], line, end_column)?;
            Ok(Line::Entry(Entry {
                key,
                inputs,
                terms,
                line,
            }))
        }
    }
}

fn parse_header(text: &str, line: usize) -> Result<(SectionKind, String), FormatError> {
    let inner = text.trim();
    let body = inner.strip_prefix('[').ok_or_else(|| {
        err(
            line,
            1,
            &["`[`"],
            inner.chars().next().map_or("end of line".into(), |c| format!("`{c}`")),
        )
    })?;
    let Some(body) = body.strip_suffix(']') else {
        return Err(err(line, inner.chars().count() + 1, &["`]`"], "end of line"));
    };
    let words: Vec<&str> = body.split_whitespace().collect();
    let Some(kind) = words.first().and_then(|w| SectionKind::from_keyword(w)) else {
        let expected: Vec<&str> = SectionKind::ALL.iter().map(|k| k.keyword()).collect();
        return Err(err(
            line,
            2,
            &expected,
            words.first().map_or("`]`".to_string(), |w| format!("`{w}`")),
        ));
    };
    let name = match (kind, &words[1..]) {
        (SectionKind::Params, []) => String::new(),
        (SectionKind::Params, [w, ..]) => return Err(err(line, 2, &["`]`"], format!("`{w}`"))),
        (_, [name]) if name.chars().next().is_some_and(is_word_start) && name.chars().all(is_word_char) => {
            name.to_string()
        }
        (_, [name]) => return Err(err(line, 2, &["section name"], format!("`{name}`"))),
        (_, []) => return Err(err(line, body.chars().count() + 2, &["section name"], "`]`")),
        (_, [_, extra, ..]) => return Err(err(line, 2, &["`]`"], format!("`{extra}`"))),
    };
    Ok((kind, name))
}

/// Parses a definition file. Every input yields either a file or a
/// positioned diagnostic.
pub fn parse_definition(text: &str) -> Result<DefinitionFile, FormatError> {
    let mut file = DefinitionFile::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim().to_string();
            match file.sections.last_mut() {
                Some(s) => s.lines.push(Line::Comment(comment)),
                None => file.preamble.push(comment),
            }
            continue;
        }
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if trimmed.starts_with('[') {
            let (kind, name) = parse_header(content, line)?;
            file.sections.push(Section {
                kind,
                name,
                lines: Vec::new(),
                line,
            });
            continue;
        }
        let Some(section) = file.sections.last_mut() else {
            return Err(err(line, 1, &["section header", "comment"], format!("`{trimmed}`")));
        };
        let parsed = parse_line(section.kind, content, line)?;
        section.lines.push(parsed);
    }
    Ok(file)
}
