use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::automata::{LassoWord, Symbol, VariableSignature};
use crate::{Error, Result};

/// Subset of `ℕ` whose characteristic word is `prefix · period^ω`.
///
/// Equality is semantic: two representations of the same set compare equal.
#[derive(Debug, Clone, Eq)]
pub struct UltimatelyPeriodicSet {
    prefix_bits: Vec<bool>,
    period_bits: Vec<bool>,
}

impl UltimatelyPeriodicSet {
    pub fn new(prefix_bits: Vec<bool>, period_bits: Vec<bool>) -> Result<Self> {
        if period_bits.is_empty() {
            return Err(Error::Malformed("period of a set must be non-empty".into()));
        }
        Ok(UltimatelyPeriodicSet {
            prefix_bits,
            period_bits,
        })
    }

    pub fn empty() -> Self {
        UltimatelyPeriodicSet {
            prefix_bits: Vec::new(),
            period_bits: vec![false],
        }
    }

    pub fn naturals() -> Self {
        UltimatelyPeriodicSet {
            prefix_bits: Vec::new(),
            period_bits: vec![true],
        }
    }

    /// `{ n | n >= offset, n ≡ offset (mod modulus) }`.
    pub fn arithmetic(offset: usize, modulus: usize) -> Self {
        assert!(modulus > 0);
        let mut period_bits = vec![false; modulus];
        period_bits[0] = true;
        UltimatelyPeriodicSet {
            prefix_bits: vec![false; offset],
            period_bits,
        }
    }

    /// Parses the bitstring pair `("01", "1")`.
    pub fn parse(prefix: &str, period: &str) -> Result<Self> {
        let bits = |s: &str| -> Result<Vec<bool>> {
            s.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Malformed(alloc::format!("bad bit `{c}`"))),
                })
                .collect()
        };
        Self::new(bits(prefix)?, bits(period)?)
    }

    pub fn prefix_bits(&self) -> &[bool] {
        &self.prefix_bits
    }

    pub fn period_bits(&self) -> &[bool] {
        &self.period_bits
    }

    pub fn contains(&self, n: usize) -> bool {
        if n < self.prefix_bits.len() {
            self.prefix_bits[n]
        } else {
            self.period_bits[(n - self.prefix_bits.len()) % self.period_bits.len()]
        }
    }

    /// Shortest prefix and shortest period describing the same set.
    pub fn canonical(&self) -> Self {
        let p = self.period_bits.len();
        let period_len = (1..=p)
            .find(|&d| {
                p.is_multiple_of(d)
                    && (0..p).all(|j| self.period_bits[j] == self.period_bits[j % d])
            })
            .unwrap_or(p);
        let mut prefix = self.prefix_bits.clone();
        let mut period: Vec<bool> = self.period_bits[..period_len].to_vec();
        // Fold trailing prefix bits into the period while they match.
        while let Some(&last) = prefix.last() {
            if last != period[period_len - 1] {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        UltimatelyPeriodicSet {
            prefix_bits: prefix,
            period_bits: period,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period_bits.iter().all(|b| !b)
    }
}

impl PartialEq for UltimatelyPeriodicSet {
    fn eq(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.prefix_bits == b.prefix_bits && a.period_bits == b.period_bits
    }
}

fn bitstring(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for UltimatelyPeriodicSet {
    /// `{0,2,4,...} (prefix=..., period=...)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.prefix_bits.len() + 2 * self.period_bits.len();
        let members: Vec<String> = (0..shown)
            .filter(|&n| self.contains(n))
            .map(|n| n.to_string())
            .collect();
        f.write_str("{")?;
        f.write_str(&members.join(","))?;
        if !self.is_finite() {
            if !members.is_empty() {
                f.write_str(",")?;
            }
            f.write_str("...")?;
        }
        write!(
            f,
            "}} (prefix={}, period={})",
            bitstring(&self.prefix_bits),
            bitstring(&self.period_bits)
        )
    }
}

/// Values of the free variables of a formula.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Interpretation {
    pub fo_values: BTreeMap<String, usize>,
    pub so_values: BTreeMap<String, UltimatelyPeriodicSet>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fo(mut self, name: &str, value: usize) -> Self {
        self.fo_values.insert(name.to_string(), value);
        self
    }

    pub fn with_so(mut self, name: &str, set: UltimatelyPeriodicSet) -> Self {
        self.so_values.insert(name.to_string(), set);
        self
    }

    /// Domain equals the signature's variables, kind by kind.
    pub fn matches(&self, sig: &VariableSignature) -> bool {
        self.fo_values.len() == sig.fo_vars().len()
            && self.so_values.len() == sig.so_vars().len()
            && sig.fo_vars().iter().all(|v| self.fo_values.contains_key(v))
            && sig.so_vars().iter().all(|v| self.so_values.contains_key(v))
    }
}

impl fmt::Display for Interpretation {
    /// One line per variable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in &self.fo_values {
            writeln!(f, "{name} = {value}")?;
        }
        for (name, set) in &self.so_values {
            writeln!(f, "{name} = {set}")?;
        }
        Ok(())
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Unary encoding: first-order `n` becomes `0^n 1 0^ω`, a set becomes its
/// characteristic word.
pub fn encode_interpretation(i: &Interpretation, sig: &VariableSignature) -> Result<LassoWord> {
    if !i.matches(sig) {
        return Err(Error::SignatureMismatch);
    }
    let fo_len = sig
        .fo_vars()
        .iter()
        .map(|v| i.fo_values[v] + 1)
        .max()
        .unwrap_or(0);
    let so_len = sig
        .so_vars()
        .iter()
        .map(|v| i.so_values[v].prefix_bits.len())
        .max()
        .unwrap_or(0);
    let prefix_len = fo_len.max(so_len);
    let period_len = sig
        .so_vars()
        .iter()
        .map(|v| i.so_values[v].period_bits.len())
        .fold(1, lcm);
    let symbol_at = |n: usize| {
        let bits: Vec<bool> = sig
            .fo_vars()
            .iter()
            .map(|v| i.fo_values[v] == n)
            .chain(sig.so_vars().iter().map(|v| i.so_values[v].contains(n)))
            .collect();
        Symbol::from_bools(&bits)
    };
    let prefix = (0..prefix_len).map(symbol_at).collect();
    let period = (prefix_len..prefix_len + period_len)
        .map(symbol_at)
        .collect();
    LassoWord::new(prefix, period)
}

/// Inverse of [`encode_interpretation`].
pub fn decode_lasso(w: &LassoWord, sig: &VariableSignature) -> Result<Interpretation> {
    if w.width() != sig.width() {
        return Err(Error::WidthMismatch {
            expected: sig.width(),
            found: w.width(),
        });
    }
    let mut out = Interpretation::new();
    for (track, name) in sig.fo_vars().iter().enumerate() {
        let invalid = || Error::InvalidEncoding {
            track: name.clone(),
        };
        if w.period().iter().any(|s| s.bit(track)) {
            return Err(invalid());
        }
        let mut ones = w.prefix().iter().enumerate().filter(|(_, s)| s.bit(track));
        let (pos, _) = ones.next().ok_or_else(invalid)?;
        if ones.next().is_some() {
            return Err(invalid());
        }
        out.fo_values.insert(name.clone(), pos);
    }
    let k = sig.fo_count();
    for (j, name) in sig.so_vars().iter().enumerate() {
        let track = k + j;
        let set = UltimatelyPeriodicSet {
            prefix_bits: w.prefix().iter().map(|s| s.bit(track)).collect(),
            period_bits: w.period().iter().map(|s| s.bit(track)).collect(),
        };
        out.so_values.insert(name.clone(), set.canonical());
    }
    Ok(out)
}
