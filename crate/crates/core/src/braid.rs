//! Braid words over the standard Artin generators.
//!
//! A letter is stored as a nonzero signed integer: `i` is σ_i and `-i` is
//! σ_i⁻¹. Words are kept letter-exact; nothing here reduces them. Group
//! equality lives in [`crate::garside`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A signed Artin generator σ_i^{±1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index >= 1, "generator index starts at 1");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn from_signed(value: i32) -> Letter {
        assert!(value != 0, "letter 0 does not exist");
        Letter(value)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// +1 or -1.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    /// Same sign, index moved by `offset`.
    pub fn shifted(self, offset: usize) -> Letter {
        Letter::new(self.index() + offset, self.is_positive())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word in the braid group of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(degree: usize) -> BraidWord {
        assert!(degree >= 1);
        BraidWord { degree, letters: Vec::new() }
    }

    pub fn new(degree: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if degree == 0 {
            return Err(Error::InvalidDegree(degree));
        }
        for l in &letters {
            if l.index() >= degree {
                return Err(Error::IndexOutOfRange { index: l.signed() as i64, degree });
            }
        }
        Ok(BraidWord { degree, letters })
    }

    /// Build from signed integers, e.g. `[1, -2, 3]`.
    pub fn from_signed(degree: usize, letters: &[i32]) -> Result<BraidWord> {
        if letters.contains(&0) {
            return Err(Error::Malformed("letter 0".into()));
        }
        BraidWord::new(degree, letters.iter().map(|&v| Letter::from_signed(v)).collect())
    }

    pub fn generator(degree: usize, index: usize, positive: bool) -> Result<BraidWord> {
        if index == 0 {
            return Err(Error::IndexOutOfRange { index: 0, degree });
        }
        BraidWord::new(degree, vec![Letter::new(index, positive)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| !l.is_positive())
    }

    pub fn product(&self, other: &BraidWord) -> Result<BraidWord> {
        check_degrees(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { degree: self.degree, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { degree: self.degree, letters }
    }

    /// Letters in reverse order, signs kept.
    pub fn reverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().copied().collect();
        BraidWord { degree: self.degree, letters }
    }

    /// Every sign flipped, order kept (crossing change of the whole diagram).
    pub fn mirror(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| l.inverse()).collect();
        BraidWord { degree: self.degree, letters }
    }

    /// `self` repeated `k` times; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { degree: self.degree, letters }
    }

    /// Underlying permutation; signs are ignored.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for l in &self.letters {
            p.swap_positions(l.index() - 1);
        }
        p
    }

    /// Remove every strand whose starting position is not marked in `keep`.
    ///
    /// Crossings between two kept strands survive with their sign; all
    /// other crossings disappear. The result is a braid on the kept strands.
    pub fn keep_strands(&self, keep: &[bool]) -> Result<BraidWord> {
        if keep.len() != self.degree {
            return Err(Error::DegreeMismatch { left: keep.len(), right: self.degree });
        }
        let new_degree = keep.iter().filter(|&&k| k).count();
        if new_degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        // strand_at[pos] = starting position of the strand now at pos
        let mut strand_at: Vec<usize> = (0..self.degree).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let pos = l.index() - 1;
            let (s, t) = (strand_at[pos], strand_at[pos + 1]);
            if keep[s] && keep[t] {
                let rank = strand_at[..pos].iter().filter(|&&q| keep[q]).count();
                letters.push(Letter::new(rank + 1, l.is_positive()));
            }
            strand_at.swap(pos, pos + 1);
        }
        Ok(BraidWord { degree: new_degree, letters })
    }
}

fn check_degrees(u: &BraidWord, v: &BraidWord) -> Result<()> {
    if u.degree != v.degree {
        return Err(Error::DegreeMismatch { left: u.degree, right: v.degree });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    /// Signed integers separated by single spaces; the identity prints empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

/// Parse a braid word of the given degree.
///
/// Accepted tokens, separated by whitespace: signed integers (`1`, `-3`),
/// generator tokens (`s1`, `s2^-1`, `s1^3`), `D` for the half twist with an
/// optional power (`D^4`), and parenthesised groups with a power
/// (`(1 2 3)^4`). Any atom may carry `^k`.
pub fn parse_braid(text: &str, degree: usize) -> Result<BraidWord> {
    if degree == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut parser = Parser { chars: text.chars().collect(), pos: 0, degree };
    let letters = parser.sequence()?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(parser.malformed("unexpected ')'"));
    }
    BraidWord::new(degree, letters)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    degree: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn malformed(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Malformed(format!("{what} at offset {} in {text:?}", self.pos))
    }

    fn sequence(&mut self) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(out),
                _ => out.extend(self.item()?),
            }
        }
    }

    fn item(&mut self) -> Result<Vec<Letter>> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?;
            let word = BraidWord { degree: self.degree, letters: atom };
            return Ok(word.pow(k).letters);
        }
        if self.peek().is_some_and(|c| !c.is_whitespace() && c != '(' && c != ')') {
            return Err(self.malformed("unexpected character"));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Vec<Letter>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(self.malformed("missing ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('D') => {
                self.pos += 1;
                if self.degree < 2 {
                    return Err(Error::InvalidDegree(self.degree));
                }
                Ok(crate::garside::garside_delta(self.degree)?.letters)
            }
            Some('s') | Some('σ') => {
                self.pos += 1;
                let k = self.integer()?;
                self.letter(k).map(|l| vec![l])
            }
            Some(c) if c == '-' || c == '+' || c.is_ascii_digit() => {
                let k = self.integer()?;
                self.letter(k).map(|l| vec![l])
            }
            _ => Err(self.malformed("unexpected token")),
        }
    }

    fn letter(&self, k: i64) -> Result<Letter> {
        if k == 0 || k.unsigned_abs() as usize >= self.degree {
            return Err(Error::IndexOutOfRange { index: k, degree: self.degree });
        }
        Ok(Letter::from_signed(k as i32))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| {
            let mut e = self.malformed("expected an integer");
            if let Error::Malformed(m) = &mut e {
                m.push_str(&format!(" (got {s:?})"));
            }
            e
        })
    }
}
