//! Finite words over two-letter alphabets and the integer/word sequences built
//! from them.
//!
//! Two alphabets are used: bits `{0, 1}` for stitch-line encodings and turns
//! `{L, R}` for turtle boundaries. Words are immutable values; every operation
//! returns a new word. Letters are kept in reading order (left to right as
//! printed), so `"01100"` parses to a word whose first letter is `0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter of a two-letter alphabet.
pub trait Letter: Copy + Eq + Ord + fmt::Debug {
    /// The other letter of the alphabet.
    fn complement(self) -> Self;
    fn to_char(self) -> char;
    fn from_char(c: char) -> Option<Self>;
    /// Human-readable alphabet, used in parse errors.
    const ALPHABET: &'static str;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }

    pub fn is_one(self) -> bool {
        self == Bit::One
    }

    pub fn value(self) -> usize {
        self as usize
    }
}

impl Letter for Bit {
    const ALPHABET: &'static str = "0, 1";

    fn complement(self) -> Self {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }

    fn to_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Bit::Zero),
            '1' => Some(Bit::One),
            _ => None,
        }
    }
}

/// A turtle instruction: step one unit, then turn left (counterclockwise) or
/// right (clockwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Turn {
    L,
    R,
}

impl Letter for Turn {
    const ALPHABET: &'static str = "L, R";

    fn complement(self) -> Self {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }

    fn to_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'L' => Some(Turn::L),
            'R' => Some(Turn::R),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L: Letter> {
    letters: Vec<L>,
}

pub type BinaryWord = Word<Bit>;
pub type TurnWord = Word<Turn>;

impl<L: Letter> Word<L> {
    /// The empty word ε.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<L>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<L> {
        self.letters.get(i).copied()
    }

    /// Letter `i mod |w|` of the bi-infinite periodic extension.
    ///
    /// Panics on the empty word.
    pub fn cyclic(&self, i: usize) -> L {
        self.letters[i % self.letters.len()]
    }

    /// Letter-wise interchange of the two letters.
    pub fn complement(&self) -> Self {
        Word {
            letters: self.letters.iter().map(|l| l.complement()).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    /// True when the reversal equals the complement.
    pub fn is_antipalindrome(&self) -> bool {
        self.letters
            .iter()
            .zip(self.letters.iter().rev())
            .all(|(a, b)| *a == b.complement())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `k`-fold concatenation of the word with itself.
    pub fn repeat(&self, k: usize) -> Self {
        Word {
            letters: self.letters.repeat(k),
        }
    }

    /// Rotation to the left by `k` letters (the word read from position `k`).
    pub fn rotate(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.len());
        Word { letters }
    }
}

impl<L: Letter> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

impl<L: Letter> FromStr for Word<L> {
    type Err = Error;

    /// Parses a string of letters; the empty string is ε.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                L::from_char(c).ok_or(Error::InvalidLetter {
                    found: c,
                    position,
                    expected: L::ALPHABET,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl<L: Letter> Serialize for Word<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, L: Letter> Deserialize<'de> for Word<L> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Fibonacci numbers seeded `F_0 = F_1 = 1`.
///
/// Panics if the value overflows `u128` (n > 184).
pub fn fibonacci(n: u32) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..n {
        let next = a.checked_add(b).expect("fibonacci overflow");
        a = b;
        b = next;
    }
    a
}

/// Pell numbers `P_n = 2 P_{n-1} + P_{n-2}`, `P_0 = 0`, `P_1 = 1`.
///
/// Panics if the value overflows `u128` (n > 100).
pub fn pell(n: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let next = b
            .checked_mul(2)
            .and_then(|d| d.checked_add(a))
            .expect("pell overflow");
        a = b;
        b = next;
    }
    a
}

/// Pell word `u_n = ū_{n-1} · complement(reverse(u_{n-2})) · u_{n-1}` with
/// `u_0 = ε`, `u_1 = 1`. Its length is `pell(n)`.
pub fn pell_word(n: u32) -> BinaryWord {
    let mut prev = BinaryWord::empty();
    if n == 0 {
        return prev;
    }
    let mut cur = BinaryWord::from_letters(vec![Bit::One]);
    for _ in 1..n {
        let next = cur
            .complement()
            .concat(&prev.reverse().complement())
            .concat(&cur);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Fibonacci turtle word `q_n`:
/// `q_n = q_{n-1} q_{n-2}` when `n ≡ 2 (mod 3)`, otherwise
/// `q_n = q_{n-1} q̄_{n-2}`; `q_0 = ε`, `q_1 = R`.
///
/// Lengths run 0, 1, 1, 2, 3, 5, 8, ...
pub fn fib_turtle_word(n: u32) -> TurnWord {
    let mut prev = TurnWord::empty();
    if n == 0 {
        return prev;
    }
    let mut cur = TurnWord::from_letters(vec![Turn::R]);
    for k in 2..=n {
        let tail = if k % 3 == 2 {
            prev.clone()
        } else {
            prev.complement()
        };
        let next = cur.concat(&tail);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w("01100").complement(), w("10011"));
        assert_eq!(BinaryWord::empty().complement(), BinaryWord::empty());
        assert_eq!(w("1").complement(), w("0"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("01100").reverse(), w("00110"));
        assert_eq!(w("010").reverse(), w("010"));
        assert_eq!(BinaryWord::empty().reverse(), BinaryWord::empty());
    }

    #[test]
    fn palindrome_classification() {
        assert!(w("10001").is_palindrome());
        assert!(w("01").is_antipalindrome());
        let u = w("01100");
        assert!(!u.is_palindrome());
        assert!(!u.is_antipalindrome());
        // ε is both
        assert!(BinaryWord::empty().is_palindrome());
        assert!(BinaryWord::empty().is_antipalindrome());
    }

    #[test]
    fn repeat_examples() {
        assert_eq!(w("10").repeat(3), w("101010"));
        assert_eq!(BinaryWord::empty().repeat(5), BinaryWord::empty());
        assert_eq!(w("110").repeat(2), w("110110"));
    }

    #[test]
    fn parse_rejects_foreign_letters() {
        let err = "0120".parse::<BinaryWord>().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidLetter {
                found: '2',
                position: 2,
                expected: "0, 1"
            }
        );
        assert!("RLX".parse::<TurnWord>().is_err());
        assert_eq!("".parse::<BinaryWord>().unwrap(), BinaryWord::empty());
    }

    #[test]
    fn turn_words_complement() {
        let q: TurnWord = "RLL".parse().unwrap();
        assert_eq!(q.complement().to_string(), "LRR");
    }

    #[test]
    fn fibonacci_seeding() {
        assert_eq!(fibonacci(0), 1);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(5), 8);
    }

    #[test]
    fn pell_values() {
        let first: Vec<u128> = (0..=6).map(pell).collect();
        assert_eq!(first, vec![0, 1, 2, 5, 12, 29, 70]);
        assert_eq!(pell(7), 169);
        assert_eq!(pell(9), 985);
    }

    #[test]
    fn pell_word_goldens() {
        assert_eq!(pell_word(0), BinaryWord::empty());
        assert_eq!(pell_word(1), w("1"));
        assert_eq!(pell_word(2), w("01"));
        assert_eq!(pell_word(3), w("10001"));
        assert_eq!(pell_word(4), w("011100110001"));
    }

    #[test]
    fn turtle_word_goldens() {
        let q = |n| fib_turtle_word(n).to_string();
        assert_eq!(q(0), "");
        assert_eq!(q(1), "R");
        assert_eq!(q(2), "R");
        assert_eq!(q(3), "RL");
        assert_eq!(q(4), "RLL");
        assert_eq!(q(5), "RLLRL");
        assert_eq!(q(7), "RLLRLLRRLRRLR");
    }

    #[test]
    fn serde_as_plain_string() {
        let json = serde_json::to_string(&w("0110")).unwrap();
        assert_eq!(json, "\"0110\"");
        let back: BinaryWord = serde_json::from_str("\"\"").unwrap();
        assert!(back.is_empty());
        assert!(serde_json::from_str::<BinaryWord>("\"01a\"").is_err());
    }
}
