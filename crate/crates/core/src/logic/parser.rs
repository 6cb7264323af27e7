//! Concrete syntax.
//!
//! ```text
//! formula := quant | iff
//! quant   := ("forall" | "exists") ident "." formula
//! iff     := or ("<->" formula)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | quant | "(" formula ")" | atom
//! atom    := "true" | "false" | x "<" y | x "=" y | y "=" x "+" c
//!          | X "=" Y | X "(" x ")" | "@" name "(" ident ("," ident)* ")"
//! ```
//!
//! Quantifier bodies extend as far right as possible.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::formula::{kind_of_name, Formula};
use crate::automata::VarKind;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u32),
    LParen,
    RParen,
    Dot,
    Comma,
    And,
    Or,
    Not,
    Iff,
    Less,
    Eq,
    Plus,
    At,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                name.push(chars[i].1);
                i += 1;
            }
            out.push((pos, Tok::Ident(name)));
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: u32 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                let d = chars[i].1.to_digit(10).expect("digit");
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d))
                    .ok_or_else(|| syntax(pos, "number too large"))?;
                i += 1;
            }
            out.push((pos, Tok::Num(value)));
            continue;
        }
        let rest: String = chars[i..].iter().take(3).map(|&(_, c)| c).collect();
        let (tok, len) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else {
            let t = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '.' => Tok::Dot,
                ',' => Tok::Comma,
                '&' => Tok::And,
                '|' => Tok::Or,
                '!' => Tok::Not,
                '<' => Tok::Less,
                '=' => Tok::Eq,
                '+' => Tok::Plus,
                '@' => Tok::At,
                _ => return Err(syntax(pos, &alloc::format!("unexpected character `{c}`"))),
            };
            (t, 1)
        };
        out.push((pos, tok));
        i += len;
    }
    Ok(out)
}

fn syntax(pos: usize, message: &str) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

/// Parses and scope-checks a formula.
pub fn parse(text: &str) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    f.check_scope()?;
    Ok(f)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: &str) -> Error {
        syntax(self.offset(), message)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected {what}")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(name)) if !is_keyword(name) => {
                let name = name.clone();
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.error("expected identifier")),
        }
    }

    fn keyword(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Ident(name)) if is_keyword(name) => Some(name.as_str()),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        match self.keyword() {
            Some("forall") | Some("exists") => self.quant(),
            _ => self.iff(),
        }
    }

    fn quant(&mut self) -> Result<Formula> {
        let universal = self.keyword() == Some("forall");
        self.pos += 1;
        let at = self.offset();
        let x = self.ident()?;
        if kind_of_name(&x) != VarKind::First {
            return Err(syntax(
                at,
                "quantifiers bind first-order (lowercase) variables",
            ));
        }
        self.expect(&Tok::Dot, "`.` after the quantified variable")?;
        let body = Box::new(self.formula()?);
        Ok(if universal {
            Formula::Forall(x, body)
        } else {
            Formula::Exists(x, body)
        })
    }

    fn iff(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if self.eat(&Tok::Iff) {
            let right = self.formula()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut left = self.and()?;
        while self.eat(&Tok::Or) {
            let right = self.and()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while self.eat(&Tok::And) {
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        match self.keyword() {
            Some("forall") | Some("exists") => return self.quant(),
            Some("true") => {
                self.pos += 1;
                return Ok(Formula::True);
            }
            Some("false") => {
                self.pos += 1;
                return Ok(Formula::False);
            }
            _ => {}
        }
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(f);
        }
        if self.eat(&Tok::At) {
            let name = self.ident()?;
            self.expect(&Tok::LParen, "`(` after relation name")?;
            let mut args = alloc::vec![self.ident()?];
            while self.eat(&Tok::Comma) {
                args.push(self.ident()?);
            }
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(Formula::Rel(name, args));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let at = self.offset();
        let first = self.ident()?;
        match kind_of_name(&first) {
            VarKind::Second => {
                if self.eat(&Tok::LParen) {
                    let x = self.first_order()?;
                    self.expect(&Tok::RParen, "`)`")?;
                    return Ok(Formula::Member(first, x));
                }
                self.expect(&Tok::Eq, "`(` or `=` after a set variable")?;
                let at = self.offset();
                let second = self.ident()?;
                if kind_of_name(&second) != VarKind::Second {
                    return Err(syntax(at, "expected a set (capitalized) variable"));
                }
                Ok(Formula::EqSo(first, second))
            }
            VarKind::First => {
                if self.eat(&Tok::Less) {
                    let y = self.first_order()?;
                    return Ok(Formula::Less(first, y));
                }
                if !self.eat(&Tok::Eq) {
                    return Err(syntax(at, "expected `<` or `=` after a variable"));
                }
                let x = self.first_order()?;
                if self.eat(&Tok::Plus) {
                    let c = match self.peek() {
                        Some(Tok::Num(c)) => *c,
                        _ => return Err(self.error("expected a constant after `+`")),
                    };
                    self.pos += 1;
                    return Ok(if c == 0 {
                        Formula::EqFo(first, x)
                    } else {
                        Formula::OffsetEq { y: first, x, c }
                    });
                }
                Ok(Formula::EqFo(first, x))
            }
        }
    }

    fn first_order(&mut self) -> Result<String> {
        let at = self.offset();
        let x = self.ident()?;
        if kind_of_name(&x) != VarKind::First {
            return Err(syntax(at, "expected a first-order (lowercase) variable"));
        }
        Ok(x)
    }
}

fn is_keyword(name: &str) -> bool {
    matches!(name, "forall" | "exists" | "true" | "false")
}
