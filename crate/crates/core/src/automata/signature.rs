use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// First- or second-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    First,
    Second,
}

/// Ordered variable names of an automaton. Track `j` is the `j`-th
/// first-order variable when `j < k`, otherwise second-order variable `j - k`.
///
/// Equality is by the full name sequence, so automata whose tracks are
/// ordered differently never compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VariableSignature {
    fo: Vec<String>,
    so: Vec<String>,
}

impl VariableSignature {
    pub fn new<I, J, S, T>(fo: I, so: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        let sig = VariableSignature {
            fo: fo.into_iter().map(Into::into).collect(),
            so: so.into_iter().map(Into::into).collect(),
        };
        let mut seen: Vec<&str> = Vec::new();
        for name in sig.names() {
            if seen.contains(&name) {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            seen.push(name);
        }
        if sig.width() > 64 {
            return Err(Error::TooManyTracks(sig.width()));
        }
        Ok(sig)
    }

    /// Signature without any variable.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn fo_vars(&self) -> &[String] {
        &self.fo
    }

    pub fn so_vars(&self) -> &[String] {
        &self.so
    }

    /// Number of first-order variables (`k`).
    pub fn fo_count(&self) -> usize {
        self.fo.len()
    }

    pub fn width(&self) -> usize {
        self.fo.len() + self.so.len()
    }

    /// Names in track order.
    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.fo.iter().chain(self.so.iter()).map(String::as_str)
    }

    pub fn name(&self, track: usize) -> &str {
        if track < self.fo.len() {
            &self.fo[track]
        } else {
            &self.so[track - self.fo.len()]
        }
    }

    pub fn track_of(&self, name: &str) -> Option<usize> {
        self.names().position(|n| n == name)
    }

    pub fn kind_of(&self, name: &str) -> Option<VarKind> {
        self.track_of(name).map(|t| self.track_kind(t))
    }

    pub fn track_kind(&self, track: usize) -> VarKind {
        if track < self.fo.len() {
            VarKind::First
        } else {
            VarKind::Second
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.track_of(name).is_some()
    }

    /// Bit mask with a `1` on every first-order track.
    pub fn fo_mask(&self) -> u64 {
        low_bits(self.fo.len())
    }

    /// The signature with `name` removed.
    pub fn without(&self, name: &str) -> Result<Self> {
        if !self.contains(name) {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        Ok(VariableSignature {
            fo: self.fo.iter().filter(|n| *n != name).cloned().collect(),
            so: self.so.iter().filter(|n| *n != name).cloned().collect(),
        })
    }

    /// The signature with `name` inserted at `position` among the variables
    /// of its kind. Returns the new signature and the track index of `name`.
    pub fn with(&self, name: &str, kind: VarKind, position: usize) -> Result<(Self, usize)> {
        if self.contains(name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        let mut sig = self.clone();
        let track = match kind {
            VarKind::First => {
                let pos = position.min(sig.fo.len());
                sig.fo.insert(pos, name.to_string());
                pos
            }
            VarKind::Second => {
                let pos = position.min(sig.so.len());
                sig.so.insert(pos, name.to_string());
                sig.fo.len() + pos
            }
        };
        if sig.width() > 64 {
            return Err(Error::TooManyTracks(sig.width()));
        }
        Ok((sig, track))
    }

    /// Sorted first-order names followed by sorted second-order names.
    pub fn canonical(&self) -> Self {
        let mut fo = self.fo.clone();
        let mut so = self.so.clone();
        fo.sort();
        so.sort();
        VariableSignature { fo, so }
    }

    /// Union of two signatures in canonical order. Fails if a name is used
    /// with different kinds.
    pub fn union(&self, other: &Self) -> Result<Self> {
        let mut fo = self.fo.clone();
        let mut so = self.so.clone();
        for n in &other.fo {
            if so.contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
            if !fo.contains(n) {
                fo.push(n.clone());
            }
        }
        for n in &other.so {
            if fo.contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
            if !so.contains(n) {
                so.push(n.clone());
            }
        }
        Ok(VariableSignature { fo, so }.canonical())
    }
}

impl fmt::Display for VariableSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fo:{} so:{}", self.fo.join(","), self.so.join(","))
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_across_kinds() {
        assert_eq!(
            VariableSignature::new(["x"], ["x"]),
            Err(Error::DuplicateVariable("x".into()))
        );
    }

    #[test]
    fn track_layout() {
        let sig = VariableSignature::new(["x1", "x2"], ["X1"]).unwrap();
        assert_eq!(sig.width(), 3);
        assert_eq!(sig.track_of("X1"), Some(2));
        assert_eq!(sig.kind_of("x2"), Some(VarKind::First));
        assert_eq!(sig.fo_mask(), 0b11);
        let (s2, t) = sig.with("Y", VarKind::Second, 0).unwrap();
        assert_eq!(t, 2);
        assert_eq!(s2.name(3), "X1");
    }

    #[test]
    fn equality_is_by_order() {
        let a = VariableSignature::new(["x", "y"], [""; 0]).unwrap();
        let b = VariableSignature::new(["y", "x"], [""; 0]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.canonical(), b.canonical());
    }
}
