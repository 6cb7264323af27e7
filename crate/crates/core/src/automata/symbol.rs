use alloc::vec::Vec;
use core::fmt;

use super::signature::low_bits;
use crate::{Error, Result};

/// One letter of `{0,1}^w`: bit `j` is the value read on track `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    bits: u64,
    width: u8,
}

impl Symbol {
    /// Builds a symbol; bits above `width` are discarded.
    pub fn new(bits: u64, width: usize) -> Self {
        assert!(width <= 64, "symbol width {width} exceeds 64");
        Symbol {
            bits: bits & low_bits(width),
            width: width as u8,
        }
    }

    pub fn zero(width: usize) -> Self {
        Symbol::new(0, width)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let value = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j));
        Symbol::new(value, bits.len())
    }

    /// Parses a bitstring whose first character is track 0.
    pub fn parse(text: &str) -> Result<Self> {
        if text.len() > 64 {
            return Err(Error::TooManyTracks(text.len()));
        }
        let mut bits = 0u64;
        for (j, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return Err(Error::Malformed(alloc::format!("bad symbol `{text}`"))),
            }
        }
        Ok(Symbol::new(bits, text.chars().count()))
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn bit(self, track: usize) -> bool {
        self.bits >> track & 1 == 1
    }

    /// Every symbol of the given width in increasing numeric order.
    pub fn all(width: usize) -> impl Iterator<Item = Symbol> + Clone {
        assert!(
            width < 32,
            "alphabet of width {width} is too large to enumerate"
        );
        (0..1u64 << width).map(move |b| Symbol::new(b, width))
    }

    /// The symbol with `track` deleted (tracks above shift down).
    pub fn without_track(self, track: usize) -> Self {
        debug_assert!(track < self.width());
        let low = self.bits & low_bits(track);
        let high = (self.bits >> (track + 1)) << track;
        Symbol::new(low | high, self.width() - 1)
    }

    /// The symbol with a new track inserted at `track` carrying `value`.
    pub fn with_track(self, track: usize, value: bool) -> Self {
        debug_assert!(track <= self.width());
        let low = self.bits & low_bits(track);
        let high = (self.bits >> track) << (track + 1);
        Symbol::new(low | high | ((value as u64) << track), self.width() + 1)
    }

    /// Track `j` of the result is track `order[j]` of `self`.
    pub fn permuted(self, order: &[usize]) -> Self {
        let bits = order
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &src)| acc | ((self.bit(src) as u64) << j));
        Symbol::new(bits, order.len())
    }

    pub fn to_bools(self) -> Vec<bool> {
        (0..self.width()).map(|j| self.bit(j)).collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.width() {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn track_surgery() {
        let s = Symbol::parse("101").unwrap();
        assert_eq!(s.without_track(0).to_string(), "01");
        assert_eq!(s.without_track(1).to_string(), "11");
        assert_eq!(s.with_track(1, true).to_string(), "1101");
        assert_eq!(s.with_track(3, false).to_string(), "1010");
        assert_eq!(s.permuted(&[2, 1, 0]).to_string(), "101");
        assert_eq!(
            Symbol::parse("110")
                .unwrap()
                .permuted(&[2, 0, 1])
                .to_string(),
            "011"
        );
    }

    #[test]
    fn zero_width() {
        let s = Symbol::parse("").unwrap();
        assert_eq!(s.width(), 0);
        assert_eq!(Symbol::all(0).count(), 1);
        assert_eq!(Symbol::parse("1").unwrap().without_track(0), s);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Symbol::parse("10x").is_err());
    }
}
