use alloc::vec::Vec;
use core::fmt;

use super::graph::{self, Adjacency};
use super::{BuchiAutomaton, Label, Symbol};
use crate::{Error, Result};

/// Ultimately periodic word `u · v^ω`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LassoWord {
    prefix: Vec<Symbol>,
    period: Vec<Symbol>,
}

impl LassoWord {
    pub fn new(prefix: Vec<Symbol>, period: Vec<Symbol>) -> Result<Self> {
        let Some(first) = period.first() else {
            return Err(Error::Malformed("lasso period must be non-empty".into()));
        };
        let width = first.width();
        if let Some(s) = prefix.iter().chain(&period).find(|s| s.width() != width) {
            return Err(Error::WidthMismatch {
                expected: width,
                found: s.width(),
            });
        }
        Ok(LassoWord { prefix, period })
    }

    /// Parses space-separated bitstrings, e.g. `("10 01", "00")`.
    pub fn parse(prefix: &str, period: &str) -> Result<Self> {
        let split =
            |s: &str| -> Result<Vec<Symbol>> { s.split_whitespace().map(Symbol::parse).collect() };
        Self::new(split(prefix)?, split(period)?)
    }

    pub fn prefix(&self) -> &[Symbol] {
        &self.prefix
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    pub fn width(&self) -> usize {
        self.period[0].width()
    }

    /// Symbol at position `n` of the infinite word.
    pub fn at(&self, n: usize) -> Symbol {
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.period[(n - self.prefix.len()) % self.period.len()]
        }
    }

    /// Equivalent lasso whose prefix has at least `len` symbols.
    pub fn unrolled(&self, len: usize) -> LassoWord {
        let mut prefix = self.prefix.clone();
        let mut offset = 0;
        while prefix.len() < len {
            prefix.push(self.period[offset]);
            offset = (offset + 1) % self.period.len();
        }
        let period = self.period[offset..]
            .iter()
            .chain(&self.period[..offset])
            .copied()
            .collect();
        LassoWord { prefix, period }
    }

    /// Applies `f` to every symbol.
    pub fn map(&self, mut f: impl FnMut(Symbol) -> Symbol) -> LassoWord {
        LassoWord {
            prefix: self.prefix.iter().map(|&s| f(s)).collect(),
            period: self.period.iter().map(|&s| f(s)).collect(),
        }
    }

    /// Inserts a first-order track at `track` reading `0^n 1 0^ω`.
    pub fn with_fo_track(&self, track: usize, n: usize) -> LassoWord {
        let w = self.unrolled(n + 1);
        LassoWord {
            prefix: w
                .prefix
                .iter()
                .enumerate()
                .map(|(j, s)| s.with_track(track, j == n))
                .collect(),
            period: w
                .period
                .iter()
                .map(|s| s.with_track(track, false))
                .collect(),
        }
    }

    /// Every lasso with `|u| <= max_u` and `1 <= |v| <= max_v` over
    /// `{0,1}^width`, shortest first.
    pub fn enumerate(width: usize, max_u: usize, max_v: usize) -> impl Iterator<Item = LassoWord> {
        (0..=max_u).flat_map(move |lu| {
            (1..=max_v).flat_map(move |lv| {
                words(width, lu).flat_map(move |u| {
                    words(width, lv).map(move |v| LassoWord {
                        prefix: u.clone(),
                        period: v,
                    })
                })
            })
        })
    }
}

/// All words of length `len` over `{0,1}^width` in lexicographic order.
pub fn words(width: usize, len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    let base = 1u64 << width;
    let total = base.checked_pow(len as u32).expect("word space too large");
    (0..total).map(move |mut code| {
        let mut w = alloc::vec![Symbol::zero(width); len];
        for slot in w.iter_mut().rev() {
            *slot = Symbol::new(code % base, width);
            code /= base;
        }
        w
    })
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, s) in self.prefix.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")(")?;
        for (j, s) in self.period.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")^w")
    }
}

/// Decides whether `a` accepts `w` by searching the product of the
/// automaton with the lasso positions for an accepting cycle that reads.
pub fn lasso_membership(a: &BuchiAutomaton, w: &LassoWord) -> Result<bool> {
    if w.width() != a.width() {
        return Err(Error::WidthMismatch {
            expected: a.width(),
            found: w.width(),
        });
    }
    let positions = w.prefix.len() + w.period.len();
    let next = |p: usize| {
        if p + 1 < positions {
            p + 1
        } else {
            w.prefix.len()
        }
    };
    let node = |q: usize, p: usize| q * positions + p;
    let succ = a.successors();
    let mut adj: Adjacency = alloc::vec![Vec::new(); a.num_states() * positions];
    for q in a.states() {
        for p in 0..positions {
            let here = w.at(p);
            let edges = &mut adj[node(q, p)];
            for &(label, dst) in &succ[q] {
                match label {
                    Label::Epsilon => edges.push((node(dst, p), false)),
                    Label::Sym(s) if s == here => edges.push((node(dst, next(p)), true)),
                    Label::Sym(_) => {}
                }
            }
        }
    }
    let roots = a.initial().iter().map(|&q| node(q, 0));
    Ok(graph::has_accepting_lasso(&adj, roots, |v| {
        a.is_accepting(v / positions)
    }))
}
