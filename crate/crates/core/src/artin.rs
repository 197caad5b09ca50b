//! Free words and Artin's action of braids on the free group.
//!
//! The action of a word is computed letter by letter, left to right: the
//! automorphism of β1β2 is Artin(β2) ∘ Artin(β1), so each letter's
//! substitution is applied to the result of the letters before it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A freely reduced word in x_1, …, x_rank. Letters are signed generator
/// indices (`-2` is x_2⁻¹).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> FreeWord {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, j: usize) -> Result<FreeWord> {
        free_reduce(rank, &[j as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "free word rank mismatch");
        let mut letters = self.letters.clone();
        push_reduced(&mut letters, &other.letters);
        FreeWord { rank: self.rank, letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.product(&base);
        }
        out
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Occurrences of generator `j` (either sign).
    pub fn occurrences(&self, j: usize) -> usize {
        self.letters.iter().filter(|l| l.unsigned_abs() as usize == j).count()
    }

    /// Shortest cyclic conjugate obtained by cancelling the ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo] == -l[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord { rank: self.rank, letters: l[lo..hi].to_vec() }
    }

    /// Replace every x_j by `images[j - 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut letters = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                push_reduced(&mut letters, &img.letters);
            } else {
                push_reduced(&mut letters, &img.inverse().letters);
            }
        }
        FreeWord { rank, letters }
    }

    /// Same letters viewed in a free group of a different rank.
    pub fn with_rank(&self, rank: usize) -> Result<FreeWord> {
        free_reduce(rank, &self.letters)
    }

    /// Render with the given generator names, collapsing runs into powers.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.letters.len() {
            let l = self.letters[k];
            let mut run = 1;
            while k + run < self.letters.len() && self.letters[k + run] == l {
                run += 1;
            }
            let name = &names[l.unsigned_abs() as usize - 1];
            let exp = run as i64 * l.signum() as i64;
            parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
            k += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.rank).map(|j| format!("x{j}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

fn push_reduced(acc: &mut Vec<i32>, tail: &[i32]) {
    for &l in tail {
        if acc.last() == Some(&-l) {
            acc.pop();
        } else {
            acc.push(l);
        }
    }
}

/// Cancel adjacent inverse pairs until none remain.
pub fn free_reduce(rank: usize, letters: &[i32]) -> Result<FreeWord> {
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize > rank {
            return Err(Error::IndexOutOfRange { index: l as i64, degree: rank });
        }
    }
    let mut out = Vec::with_capacity(letters.len());
    push_reduced(&mut out, letters);
    Ok(FreeWord { rank, letters: out })
}

/// Parse `"x1 x2^-1 x1"`, the compact `"1 -2 1"`, or `"1"` for the identity.
pub fn parse_free_word(text: &str, rank: usize) -> Result<FreeWord> {
    let names: Vec<String> = (1..=rank).map(|j| format!("x{j}")).collect();
    parse_free_word_named(text, &names)
}

/// Parse a free word whose generators carry the given names. Bare integers
/// always refer to generator positions.
pub fn parse_free_word_named(text: &str, names: &[String]) -> Result<FreeWord> {
    let rank = names.len();
    let text = text.trim();
    // a lone `1` is the identity; write x_1 by name
    if text.is_empty() || text == "1" {
        return Ok(FreeWord::identity(rank));
    }
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad exponent in {tok:?}")))?;
                (b, e)
            }
            None => (tok, 1),
        };
        let signed: i64 = if let Some(pos) = names.iter().position(|n| n == base) {
            pos as i64 + 1
        } else if let Ok(v) = base.parse::<i64>() {
            v
        } else {
            return Err(Error::Malformed(format!("unknown generator {base:?}")));
        };
        if signed == 0 || signed.unsigned_abs() as usize > rank {
            return Err(Error::IndexOutOfRange { index: signed, degree: rank });
        }
        let letter = if exp < 0 { -signed } else { signed } as i32;
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    free_reduce(rank, &letters)
}

/// Image of x_j under Artin(σ_i^{sign}).
pub fn artin_generator(rank: usize, i: usize, positive: bool, j: usize) -> Result<FreeWord> {
    if i < 1 || i >= rank {
        return Err(Error::IndexOutOfRange { index: i as i64, degree: rank });
    }
    if j < 1 || j > rank {
        return Err(Error::IndexOutOfRange { index: j as i64, degree: rank });
    }
    let (xi, xi1) = (i as i32, i as i32 + 1);
    let letters: Vec<i32> = match (positive, j) {
        (_, j) if j != i && j != i + 1 => vec![j as i32],
        (true, j) if j == i => vec![xi, xi1, -xi],
        (true, _) => vec![xi],
        (false, j) if j == i => vec![xi1],
        (false, _) => vec![-xi1, xi, xi1],
    };
    free_reduce(rank, &letters)
}

/// Apply Artin(beta) to `w`.
pub fn artin_apply(beta: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    let m = beta.degree();
    if w.rank() != m {
        return Err(Error::DegreeMismatch { left: m, right: w.rank() });
    }
    let mut current = w.clone();
    let mut images: Vec<FreeWord> = (1..=m).map(|j| FreeWord::generator(m, j).unwrap()).collect();
    for l in beta.letters() {
        let i = l.index();
        let identity_i = images[i - 1].clone();
        let identity_i1 = images[i].clone();
        images[i - 1] = artin_generator(m, i, l.is_positive(), i)?;
        images[i] = artin_generator(m, i, l.is_positive(), i + 1)?;
        current = current.substitute(&images);
        images[i - 1] = identity_i;
        images[i] = identity_i1;
    }
    Ok(current)
}

/// Images of all generators x_1..x_m under Artin(beta).
pub fn artin_images(beta: &BraidWord) -> Vec<FreeWord> {
    let m = beta.degree();
    (1..=m)
        .map(|j| artin_apply(beta, &FreeWord::generator(m, j).unwrap()).expect("ranks agree"))
        .collect()
}
