//! Polynomial input: either a constant-first coefficient list such as
//! `4,-6,0,1`, or an expression in `x` such as `x^4 - 7x^2 + 6x`.
//!
//! Expressions support `+ - * ^`, parentheses, implicit multiplication
//! (`6x`, `(1+1i)x`, `2(x+1)`), decimal literals and the imaginary unit `i`
//! (`3+2i`, `2.5i`). Exponents are non-negative integer literals.

use std::fmt;

use radical_core::{Complex, Polynomial};

/// Highest degree accepted from user input.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn error<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64, String),
    Imaginary,
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str, base: usize) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let pos = base + pos;
        let token = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                // exponent part, e.g. 1e-3
                if i < chars.len() && matches!(chars[i].1, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j].1, '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].1.is_ascii_digit() {
                        while j < chars.len() && chars[j].1.is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let literal: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                let value: f64 = match literal.parse() {
                    Ok(v) => v,
                    Err(_) => return error(pos, format!("invalid number `{literal}`")),
                };
                tokens.push((pos, Token::Number(value, literal)));
                continue;
            }
            'i' | 'j' => Token::Imaginary,
            'x' | 'X' => Token::Var,
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return error(pos, format!("unexpected character `{other}`")),
        };
        tokens.push((pos, token));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.index).cloned();
        self.index += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                -self.term()?
            }
            Some(Token::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                }
                Some(Token::Number(..) | Token::Imaginary | Token::Var | Token::Open) => {}
                _ => return Ok(acc),
            }
            acc = acc * self.factor()?;
            self.check_degree(&acc)?;
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.next();
        let pos = self.position();
        let exp = match self.next() {
            Some((_, Token::Number(v, literal))) => {
                if literal.contains(['.', 'e', 'E']) || v > MAX_DEGREE as f64 {
                    return error(pos, format!("exponent must be an integer in 0..={MAX_DEGREE}"));
                }
                v as u32
            }
            _ => return error(pos, "expected an integer exponent after `^`"),
        };
        let value = base.pow(exp);
        self.check_degree(&value)?;
        Ok(value)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.position();
        match self.next() {
            Some((_, Token::Number(v, _))) => Ok(Polynomial::constant(Complex::new(v, 0.0))),
            Some((_, Token::Imaginary)) => Ok(Polynomial::constant(Complex::new(0.0, 1.0))),
            Some((_, Token::Var)) => Ok(Polynomial::x()),
            Some((_, Token::Open)) => {
                let inner = self.expr()?;
                let close = self.position();
                match self.next() {
                    Some((_, Token::Close)) => Ok(inner),
                    _ => error(close, "expected `)`"),
                }
            }
            Some((_, t)) => error(pos, format!("unexpected {}", describe(&t))),
            None => error(pos, "unexpected end of input"),
        }
    }

    fn check_degree(&self, poly: &Polynomial) -> Result<(), ParseError> {
        if poly.degree() > MAX_DEGREE {
            return error(self.position(), format!("degree exceeds the cap of {MAX_DEGREE}"));
        }
        Ok(())
    }
}

fn describe(t: &Token) -> &'static str {
    match t {
        Token::Number(..) => "number",
        Token::Imaginary => "`i`",
        Token::Var => "`x`",
        Token::Plus => "`+`",
        Token::Minus => "`-`",
        Token::Star => "`*`",
        Token::Caret => "`^`",
        Token::Open => "`(`",
        Token::Close => "`)`",
    }
}

fn parse_expression(text: &str, base: usize) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text, base)?;
    let end = base + text.len();
    if tokens.is_empty() {
        return error(base, "empty input");
    }
    let mut parser = Parser { tokens, index: 0, end };
    let poly = parser.expr()?;
    if parser.index < parser.tokens.len() {
        let pos = parser.position();
        let t = parser.tokens[parser.index].1.clone();
        return error(pos, format!("unexpected {}", describe(&t)));
    }
    Ok(poly)
}

/// Parses a coefficient list (any input containing a comma) or an
/// expression in `x`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    if !text.contains(',') {
        return parse_expression(text, 0);
    }
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let value = parse_expression(item, offset)?;
        if value.degree() > 0 {
            return error(offset, "coefficient lists take constants only");
        }
        coeffs.push(value.coeff(0));
        offset += item.len() + 1;
    }
    if coeffs.len() > MAX_DEGREE + 1 {
        return error(0, format!("degree exceeds the cap of {MAX_DEGREE}"));
    }
    Polynomial::new(coeffs).map_err(|e| ParseError {
        position: 0,
        message: e.to_string(),
    })
}
