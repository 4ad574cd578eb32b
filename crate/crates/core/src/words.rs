//! Finite-word primitives over the alphabet of nonnegative integers:
//! slicing with the padding convention, overlapping occurrence counting,
//! base-k representation and realization, conjugate, mirror, and
//! letter-wise shifts.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A finite word over the unbounded alphabet of nonnegative integers.
///
/// The empty word is valid; letters are machine integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn contains_letter(&self, letter: u32) -> bool {
        self.0.contains(&letter)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Inclusive slice `u[i, j]`, total by convention: the result is the
    /// empty word whenever `j` runs past the end or `i > j`.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        if i > j || j >= self.len() {
            return Word::empty();
        }
        Word(self.0[i..=j].to_vec())
    }

    /// Number of (possibly overlapping) occurrences of `pattern` in `self`.
    pub fn occurrences(&self, pattern: &Word) -> Result<u64, Error> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(count_occurrences(&self.0, &pattern.0))
    }

    /// Letter-wise complement `k-1-u_i`.
    pub fn conj(&self, base: u32) -> Result<Word, Error> {
        if base < 2 {
            return Err(Error::BadBase { base });
        }
        let mut out = Vec::with_capacity(self.len());
        for &letter in &self.0 {
            if letter >= base {
                return Err(Error::DigitOutOfRange { letter, base });
            }
            out.push(base - 1 - letter);
        }
        Ok(Word(out))
    }

    /// Reversal.
    pub fn mirr(&self) -> Word {
        let mut out = self.0.clone();
        out.reverse();
        Word(out)
    }

    /// Letter-wise `u + 1` or `u - 1`.
    pub fn shift_letters(&self, delta: Delta) -> Result<Word, Error> {
        let mut out = Vec::with_capacity(self.len());
        for (index, &letter) in self.0.iter().enumerate() {
            match delta {
                Delta::Up => out.push(letter.checked_add(1).ok_or(Error::Overflow)?),
                Delta::Down => {
                    if letter == 0 {
                        return Err(Error::NegativeLetter { index });
                    }
                    out.push(letter - 1);
                }
            }
        }
        Ok(Word(out))
    }
}

pub(crate) fn count_occurrences(haystack: &[u32], needle: &[u32]) -> u64 {
    if needle.is_empty() || needle.len() > haystack.len() {
        return 0;
    }
    haystack
        .windows(needle.len())
        .filter(|window| *window == needle)
        .count() as u64
}

/// Direction for [`Word::shift_letters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta {
    Up,
    Down,
}

impl From<Vec<u32>> for Word {
    fn from(letters: Vec<u32>) -> Self {
        Word(letters)
    }
}

impl From<&[u32]> for Word {
    fn from(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Word {
    fn from(letters: [u32; N]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Text form: letters joined by `.` (letters may exceed one decimal digit).
/// The empty word renders as the empty string.
impl fmt::Display for Word {
    fmt_display_body!();
}

macro_rules! fmt_display_body {
    () => {};
}
use fmt_display_body;

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split('.') {
            let letter: u32 = part.parse().map_err(|_| Error::InvalidBlock)?;
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

/// The base-k digit string of a nonnegative integer, most significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseKDigits {
    base: u32,
    digits: Word,
}

impl BaseKDigits {
    /// Wraps an existing digit word, validating every digit against the base.
    pub fn new(base: u32, digits: Word) -> Result<Self, Error> {
        if base < 2 {
            return Err(Error::BadBase { base });
        }
        for &letter in digits.letters() {
            if letter >= base {
                return Err(Error::DigitOutOfRange { letter, base });
            }
        }
        Ok(BaseKDigits { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &Word {
        &self.digits
    }

    pub fn into_word(self) -> Word {
        self.digits
    }

    pub fn value(&self) -> Result<u64, Error> {
        base_k_realize(&self.digits, self.base)
    }
}

/// `(m)_k`: most-significant-first digits without a leading zero; `(0)_k = "0"`.
pub fn base_k_repr(m: u64, base: u32) -> Result<BaseKDigits, Error> {
    if base < 2 {
        return Err(Error::BadBase { base });
    }
    let mut digits = Vec::new();
    let mut rest = m;
    loop {
        digits.push((rest % base as u64) as u32);
        rest /= base as u64;
        if rest == 0 {
            break;
        }
    }
    digits.reverse();
    Ok(BaseKDigits {
        base,
        digits: Word(digits),
    })
}

/// `[u]_k = sum u_i k^(h-i)`: polynomial evaluation of a digit word.
///
/// Leading zeros are allowed, so `([u]_k)_k` need not reproduce `u`.
/// The empty word realizes to 0.
pub fn base_k_realize(word: &Word, base: u32) -> Result<u64, Error> {
    if base < 2 {
        return Err(Error::BadBase { base });
    }
    let mut value: u64 = 0;
    for &letter in word.letters() {
        if letter >= base {
            return Err(Error::DigitOutOfRange { letter, base });
        }
        value = value
            .checked_mul(base as u64)
            .and_then(|v| v.checked_add(letter as u64))
            .ok_or(Error::Overflow)?;
    }
    Ok(value)
}

/// Formats a word as its dot-joined text form.
pub fn word_to_text(word: &Word) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, letter) in word.letters().iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        let _ = write!(out, "{letter}");
    }
    out
}
