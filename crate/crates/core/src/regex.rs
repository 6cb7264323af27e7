//! Regular expressions over the one-track alphabet `{0, 1}`, written in the
//! textbook notation `(0 + 1)^* 1 (0 + 1)^+`.
//!
//! Used as a reference for finite-word languages: [`Regex::matches`] is a
//! direct backtracking-free evaluator that shares no code with the automata,
//! and [`Regex::to_automaton`] is a Thompson construction.
//!
//! Grammar: `alt := cat ('+' cat)*`, `cat := post*`,
//! `post := atom ('^*' | '^+' | '*')*`, `atom := 0 | 1 | (alt) | ε | ∅`.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::automata::{Builder, Finite, FiniteAutomaton, StateId, Symbol, VariableSignature};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Bit(bool),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    pub fn parse(text: &str) -> Result<Regex> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars, pos: 0 };
        let r = p.alt()?;
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(r)
    }

    /// Whether `word` (one bit per symbol) belongs to the language.
    pub fn matches(&self, word: &[bool]) -> bool {
        self.ends(word, &BTreeSet::from([0])).contains(&word.len())
    }

    /// Positions where a match of `self` can end, starting from any of `starts`.
    fn ends(&self, word: &[bool], starts: &BTreeSet<usize>) -> BTreeSet<usize> {
        match self {
            Regex::Empty => BTreeSet::new(),
            Regex::Epsilon => starts.clone(),
            Regex::Bit(b) => starts
                .iter()
                .filter(|&&i| i < word.len() && word[i] == *b)
                .map(|&i| i + 1)
                .collect(),
            Regex::Concat(parts) => parts
                .iter()
                .fold(starts.clone(), |cur, r| r.ends(word, &cur)),
            Regex::Union(parts) => parts.iter().flat_map(|r| r.ends(word, starts)).collect(),
            Regex::Star(r) => {
                let mut all = starts.clone();
                let mut frontier = starts.clone();
                while !frontier.is_empty() {
                    let next: BTreeSet<usize> = r
                        .ends(word, &frontier)
                        .into_iter()
                        .filter(|i| !all.contains(i))
                        .collect();
                    all.extend(next.iter().copied());
                    frontier = next;
                }
                all
            }
            Regex::Plus(r) => {
                let once = r.ends(word, starts);
                Regex::Star(r.clone()).ends(word, &once)
            }
        }
    }

    /// Thompson automaton over the one-track signature `(X1)`.
    pub fn to_automaton(&self) -> FiniteAutomaton {
        self.to_automaton_over(VariableSignature::new([""; 0], ["X1"]).expect("valid signature"))
    }

    /// Thompson automaton over a given one-track signature.
    pub fn to_automaton_over(&self, sig: VariableSignature) -> FiniteAutomaton {
        assert_eq!(sig.width(), 1, "regex alphabet has exactly one track");
        let mut b = Builder::<Finite>::new(sig);
        let (start, end) = self.thompson(&mut b);
        b.initial(start).accepting(end);
        b.build().expect("thompson construction is well-formed")
    }

    fn thompson(&self, b: &mut Builder<Finite>) -> (StateId, StateId) {
        let s = b.add_state();
        let e = b.add_state();
        match self {
            Regex::Empty => {}
            Regex::Epsilon => {
                b.epsilon(s, e);
            }
            Regex::Bit(bit) => {
                b.symbol(s, Symbol::new(*bit as u64, 1), e);
            }
            Regex::Concat(parts) => {
                let mut cur = s;
                for r in parts {
                    let (rs, re) = r.thompson(b);
                    b.epsilon(cur, rs);
                    cur = re;
                }
                b.epsilon(cur, e);
            }
            Regex::Union(parts) => {
                for r in parts {
                    let (rs, re) = r.thompson(b);
                    b.epsilon(s, rs).epsilon(re, e);
                }
            }
            Regex::Star(r) | Regex::Plus(r) => {
                let (rs, re) = r.thompson(b);
                b.epsilon(s, rs).epsilon(re, rs).epsilon(re, e);
                if matches!(self, Regex::Star(_)) {
                    b.epsilon(s, e);
                }
            }
        }
        (s, e)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn alt(&mut self) -> Result<Regex> {
        let mut parts = alloc::vec![self.cat()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            parts.push(self.cat()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Regex::Union(parts)
        })
    }

    fn cat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' {
                break;
            }
            parts.push(self.post()?);
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().expect("one part"),
            _ => Regex::Concat(parts),
        })
    }

    fn post(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        loop {
            match (self.peek(), self.chars.get(self.pos + 1).copied()) {
                (Some('^'), Some('*')) => {
                    self.pos += 2;
                    r = Regex::Star(Box::new(r));
                }
                (Some('^'), Some('+')) => {
                    self.pos += 2;
                    r = Regex::Plus(Box::new(r));
                }
                (Some('*'), _) => {
                    self.pos += 1;
                    r = Regex::Star(Box::new(r));
                }
                _ => return Ok(r),
            }
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        match c {
            '0' => Ok(Regex::Bit(false)),
            '1' => Ok(Regex::Bit(true)),
            'ε' => Ok(Regex::Epsilon),
            '∅' => Ok(Regex::Empty),
            '(' => {
                let r = self.alt()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("unexpected character"))
            }
        }
    }
}
