use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{GeneratorWord, Kind, Letter, Presentation, SchlafliEntry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("generator index {index} out of range (presentation has {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("exponent zero")]
    ZeroExponent,
    #[error("missing `rank` line")]
    MissingRank,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    err(line, column, ParseErrorKind::Syntax(msg.into()))
}

/// Parses the presentation text format. Relators come out freely reduced;
/// `schlafli` and `central` directives are expanded on the spot.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut rank: Option<usize> = None;
    let mut kind = Kind::Reflection;
    let mut pres: Option<Presentation> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + keyword.len() + 1;
        let col = indent + 1;

        match keyword {
            "rank" => {
                if rank.is_some() {
                    return Err(syntax(line_no, col, "duplicate `rank` line"));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line_no, rest_col, "expected a positive integer rank"))?;
                if n == 0 {
                    return Err(syntax(line_no, rest_col, "rank must be positive"));
                }
                rank = Some(n);
            }
            "kind" => {
                if pres.is_some() {
                    return Err(syntax(line_no, col, "`kind` must precede relators"));
                }
                kind = match rest.trim() {
                    "reflection" => Kind::Reflection,
                    "rotation" => Kind::Rotation,
                    other => return Err(syntax(line_no, rest_col, alloc::format!("unknown kind `{other}`"))),
                };
            }
            "schlafli" | "rel" | "central" => {
                let n = rank.ok_or_else(|| err(line_no, col, ParseErrorKind::MissingRank))?;
                if kind == Kind::Rotation && n < 2 {
                    return Err(syntax(line_no, col, "rotation presentations need rank at least 2"));
                }
                let p = pres.get_or_insert_with(|| Presentation::new(kind, n));
                match keyword {
                    "schlafli" => {
                        if p.declared_schlafli().is_some() {
                            return Err(syntax(line_no, col, "duplicate `schlafli` line"));
                        }
                        let symbol = parse_symbol(rest, line_no, rest_col)?;
                        if symbol.len() + 1 != n {
                            return Err(syntax(
                                line_no,
                                rest_col,
                                alloc::format!(
                                    "Schläfli symbol has {} entries but rank {n} needs {}",
                                    symbol.len(),
                                    n - 1
                                ),
                            ));
                        }
                        p.declare_schlafli(symbol);
                    }
                    "rel" => {
                        let w = WordParser::new(rest, line_no, rest_col - 1, kind, p.num_generators()).parse_all()?;
                        p.add_relator(w);
                    }
                    _ => {
                        let w = WordParser::new(rest, line_no, rest_col - 1, kind, p.num_generators()).parse_all()?;
                        p.add_central(&w);
                    }
                }
            }
            other => return Err(syntax(line_no, col, alloc::format!("unknown directive `{other}`"))),
        }
    }

    let n = rank.ok_or_else(|| err(last_line.max(1), 1, ParseErrorKind::MissingRank))?;
    if kind == Kind::Rotation && n < 2 {
        return Err(syntax(
            last_line.max(1),
            1,
            "rotation presentations need rank at least 2",
        ));
    }
    Ok(pres.unwrap_or_else(|| Presentation::new(kind, n)))
}

/// Parses a single word in the text syntax, for a presentation of the given
/// kind with `num_gens` generators. Errors are reported on line 1.
pub fn parse_word(text: &str, kind: Kind, num_gens: usize) -> Result<GeneratorWord, ParseError> {
    WordParser::new(text, 1, 0, kind, num_gens).parse_all()
}

fn parse_symbol(rest: &str, line: usize, col: usize) -> Result<Vec<SchlafliEntry>, ParseError> {
    let mut out = Vec::new();
    for tok in rest.split_whitespace() {
        let entry = match tok {
            "inf" | "infinity" => SchlafliEntry::Infinite,
            t => {
                let p: u32 = t
                    .parse()
                    .map_err(|_| syntax(line, col, alloc::format!("bad Schläfli entry `{t}`")))?;
                if p < 2 {
                    return Err(syntax(line, col, "Schläfli entries must be at least 2"));
                }
                SchlafliEntry::Finite(p)
            }
        };
        out.push(entry);
    }
    Ok(out)
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
    kind: Kind,
    num_gens: usize,
    _src: &'a str,
}

impl<'a> WordParser<'a> {
    fn new(src: &'a str, line: usize, col_offset: usize, kind: Kind, num_gens: usize) -> Self {
        WordParser {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col_offset,
            kind,
            num_gens,
            _src: src,
        }
    }

    fn column(&self) -> usize {
        self.col_offset + self.pos + 1
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        syntax(self.line, self.column(), msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<GeneratorWord, ParseError> {
        let w = self.parse_word()?;
        if let Some(c) = self.peek() {
            return Err(self.error(alloc::format!("unexpected `{c}`")));
        }
        if w.is_empty() && self.chars.iter().all(|c| c.is_whitespace()) {
            return Err(self.error("expected a word"));
        }
        Ok(w.free_reduce())
    }

    fn parse_word(&mut self) -> Result<GeneratorWord, ParseError> {
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c == self.kind.prefix() || c == '(' || c == '[' => {
                    let atom = self.parse_atom()?;
                    letters.extend_from_slice(atom.letters());
                }
                Some('r') | Some('s') => {
                    return Err(self.error(alloc::format!(
                        "{} presentations use `{}` generators",
                        self.kind.as_str(),
                        self.kind.prefix()
                    )))
                }
                _ => break,
            }
        }
        Ok(GeneratorWord::from_letters(letters))
    }

    fn parse_atom(&mut self) -> Result<GeneratorWord, ParseError> {
        let mut base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.parse_word()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Some('[') => {
                self.pos += 1;
                let a = self.parse_word()?;
                if self.peek() != Some(',') {
                    return Err(self.error("expected `,` in commutator"));
                }
                self.pos += 1;
                let b = self.parse_word()?;
                if self.peek() != Some(']') {
                    return Err(self.error("expected `]`"));
                }
                self.pos += 1;
                GeneratorWord::commutator(&a, &b)
            }
            _ => self.parse_generator()?,
        };
        // postfix operators bind to the atom immediately before them
        loop {
            match self.chars.get(self.pos).copied() {
                Some('-') => {
                    self.pos += 1;
                    base = base.inverse();
                }
                Some('^') => {
                    self.pos += 1;
                    let start = self.column();
                    let k = self.parse_int()?;
                    if k == 0 {
                        return Err(err(self.line, start, ParseErrorKind::ZeroExponent));
                    }
                    base = base.pow(k);
                }
                _ => break,
            }
        }
        Ok(base)
    }

    fn parse_generator(&mut self) -> Result<GeneratorWord, ParseError> {
        let start_col = self.column();
        self.pos += 1; // prefix letter
        let digits_start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return Err(syntax(self.line, start_col, "expected generator number"));
        }
        let text: String = self.chars[digits_start..self.pos].iter().collect();
        let number: usize = text
            .parse()
            .map_err(|_| syntax(self.line, start_col, "generator number too large"))?;
        let offset = self.kind.offset();
        if number < offset || number - offset >= self.num_gens {
            return Err(err(
                self.line,
                start_col,
                ParseErrorKind::GeneratorOutOfRange {
                    index: number,
                    count: self.num_gens,
                },
            ));
        }
        Ok(GeneratorWord::generator(number - offset))
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<i64>()
            .map_err(|_| syntax(self.line, self.col_offset + start + 1, "expected integer exponent"))
    }
}

impl ParseError {
    pub fn message(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::finite_symbol;
    use alloc::vec;

    #[test]
    fn triangle_group() {
        let p = parse_presentation("rank 2\nkind reflection\nschlafli 3").unwrap();
        assert_eq!(p.num_generators(), 2);
        let expected = [
            GeneratorWord::from_gens(&[0, 0]),
            GeneratorWord::from_gens(&[1, 1]),
            GeneratorWord::from_gens(&[0, 1, 0, 1, 0, 1]),
        ];
        assert_eq!(p.relators(), &expected[..]);
    }

    #[test]
    fn central_extension_input() {
        let p = parse_presentation("rank 4\nkind reflection\nschlafli 6 3 3\ncentral (r0 r1)^3").unwrap();
        let coxeter = Presentation::coxeter(&finite_symbol(&[6, 3, 3]));
        assert_eq!(p.relators().len(), coxeter.relators().len() + 4);
        let w = GeneratorWord::from_gens(&[0, 1]).pow(3);
        for j in 0..4 {
            let c = GeneratorWord::commutator(&w, &GeneratorWord::generator(j));
            assert!(p.relators().contains(&c));
        }
    }

    #[test]
    fn chiral_338_rotation_presentation() {
        let text = "rank 4\nkind rotation\n\
            rel s1^3\nrel s2^3\nrel s3^8\nrel (s1 s2)^2\nrel (s2 s3)^2\nrel (s1 s2 s3)^2\n\
            rel s3- s1 s3 s2- s1 s3^-2 s2\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.kind(), Kind::Rotation);
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.relators().len(), 7);
        assert_eq!(p.relators()[6].len(), 8);
    }

    #[test]
    fn commutator_and_inverse_syntax() {
        let p = parse_presentation("rank 3\nrel [r0 r1, r2]\nrel r0- r1-").unwrap();
        let a = GeneratorWord::from_gens(&[0, 1]);
        assert_eq!(
            p.relators()[0],
            GeneratorWord::commutator(&a, &GeneratorWord::generator(2))
        );
        assert_eq!(
            p.relators()[1],
            GeneratorWord::from_letters(vec![Letter::neg(0), Letter::neg(1)])
        );
    }

    #[test]
    fn standalone_words() {
        let w = parse_word("(r0 r1 r2)^5", Kind::Reflection, 3).unwrap();
        assert_eq!(w, GeneratorWord::from_gens(&[0, 1, 2]).pow(5));
        let w = parse_word("s1- s2", Kind::Rotation, 2).unwrap();
        assert_eq!(w, GeneratorWord::from_letters(vec![Letter::neg(0), Letter::pos(1)]));
        assert!(parse_word("r3", Kind::Reflection, 3).is_err());
    }

    #[test]
    fn missing_rank() {
        let e = parse_presentation("kind reflection\nrel r0 r0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingRank);
        assert_eq!(e.line, 2);
        assert_eq!(
            parse_presentation("# nothing\n").unwrap_err().kind,
            ParseErrorKind::MissingRank
        );
    }

    #[test]
    fn generator_out_of_range() {
        let e = parse_presentation("rank 2\nrel r0 r2").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::GeneratorOutOfRange { index: 2, count: 2 });
        assert_eq!((e.line, e.column), (2, 8));
        let e = parse_presentation("rank 3\nkind rotation\nrel s0").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::GeneratorOutOfRange { index: 0, .. }));
    }

    #[test]
    fn zero_exponent() {
        let e = parse_presentation("rank 2\nrel (r0 r1)^0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroExponent);
    }

    #[test]
    fn syntax_errors_report_position() {
        let e = parse_presentation("rank 2\nrel (r0 r1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(e.line, 2);
        assert!(parse_presentation("rank 2\nfoo r0").is_err());
        assert!(parse_presentation("rank 2\nrel s1").is_err());
        assert!(parse_presentation("rank 3\nschlafli 3").is_err());
        assert!(parse_presentation("rank 2\nschlafli 1").is_err());
    }

    #[test]
    fn infinite_entry_emits_no_braid_relator() {
        let p = parse_presentation("rank 2\nschlafli inf").unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.declared_schlafli(), Some(&[SchlafliEntry::Infinite][..]));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_presentation("# tetrahedron\n\nrank 3 # three\nschlafli 3 3\n").unwrap();
        assert_eq!(p.relators().len(), 3 + 2 + 1);
    }
}
