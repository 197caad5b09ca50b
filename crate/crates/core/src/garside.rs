//! Garside left normal form and the word problem in the braid group.
//!
//! Simple elements (permutation braids) are stored as their permutations.
//! A word is rewritten as Δ^{-k} times a product of simple elements, then
//! the product is brought to left-weighted form one factor at a time.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Positive half twist Δ = (σ1 σ2 ⋯ σ_{m-1}) Δ_{m-1}.
pub fn garside_delta(degree: usize) -> Result<BraidWord> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    let mut letters = Vec::new();
    for top in (1..degree).rev() {
        letters.extend((1..=top).map(|i| Letter::new(i, true)));
    }
    BraidWord::new(degree, letters)
}

/// Δ^infimum · A_1 ⋯ A_r with every A_i a proper simple element
/// (neither trivial nor Δ) and each pair (A_i, A_{i+1}) left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub degree: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Canonical length (number of simple factors after Δ^infimum).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Δ^k for some k, i.e. no proper simple factors.
    pub fn delta_power(&self) -> Option<i64> {
        self.factors.is_empty().then_some(self.infimum)
    }

    /// A word for the same braid: the Δ-power first, then each factor as
    /// a positive word.
    pub fn to_word(&self) -> BraidWord {
        let mut word = if self.degree >= 2 {
            garside_delta(self.degree).expect("degree >= 2").pow(self.infimum)
        } else {
            BraidWord::identity(self.degree)
        };
        for f in &self.factors {
            word = word.product(&simple_word(f)).expect("same degree");
        }
        word
    }
}

impl fmt::Display for NormalForm {
    /// `inf <k>` followed by the factor image arrays, one-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf {}", self.infimum)?;
        for p in &self.factors {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Positive word of a permutation braid.
pub fn simple_word(p: &Permutation) -> BraidWord {
    let mut rest = p.clone();
    let mut letters = Vec::new();
    while let Some(i) = left_descent(&rest) {
        letters.push(Letter::new(i + 1, true));
        rest = transposition(rest.degree(), i).then(&rest);
    }
    BraidWord::new(p.degree(), letters).expect("indices in range")
}

fn transposition(degree: usize, pos: usize) -> Permutation {
    let mut p = Permutation::identity(degree);
    p.swap_positions(pos);
    p
}

fn delta_perm(degree: usize) -> Permutation {
    Permutation::from_images((0..degree).rev().collect()).expect("reversal")
}

/// Conjugation by Δ: σ_i ↦ σ_{m-i}.
fn flip(p: &Permutation) -> Permutation {
    let n = p.degree();
    let images = (0..n).map(|k| n - 1 - p.image(n - 1 - k)).collect();
    Permutation::from_images(images).expect("flip of a permutation")
}

/// Smallest i with σ_{i+1} a left divisor: the strands starting at i, i+1 cross.
fn left_descent(p: &Permutation) -> Option<usize> {
    (0..p.degree().saturating_sub(1)).find(|&i| p.image(i) > p.image(i + 1))
}

fn starts(p: &Permutation) -> Vec<bool> {
    (0..p.degree().saturating_sub(1)).map(|i| p.image(i) > p.image(i + 1)).collect()
}

fn finishes(p: &Permutation) -> Vec<bool> {
    starts(&p.inverse())
}

/// Make (a, b) left-weighted by moving letters from the front of `b` to the
/// back of `a`. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut moved = false;
    loop {
        let s = starts(b);
        let f = finishes(a);
        let Some(i) = (0..n.saturating_sub(1)).find(|&i| s[i] && !f[i]) else {
            return moved;
        };
        let t = transposition(n, i);
        *a = a.then(&t);
        *b = t.then(b);
        moved = true;
    }
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.degree();
    if n < 2 {
        return NormalForm { degree: n, infimum: 0, factors: Vec::new() };
    }
    let delta = delta_perm(n);

    // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}); pushing every Δ^{-1} to the front
    // conjugates the factors it passes.
    let letters = word.letters();
    let negatives = letters.iter().filter(|l| !l.is_positive()).count();
    let mut negatives_after = negatives;
    let mut simples = Vec::with_capacity(letters.len());
    for l in letters {
        let t = transposition(n, l.index() - 1);
        let s = if l.is_positive() {
            t
        } else {
            negatives_after -= 1;
            delta.then(&t)
        };
        simples.push(if negatives_after % 2 == 1 { flip(&s) } else { s });
    }

    let mut factors: Vec<Permutation> = Vec::new();
    for s in simples {
        if s.is_identity() {
            continue;
        }
        factors.push(s);
        let mut j = factors.len() - 1;
        while j > 0 {
            let (left, right) = factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while factors.last().is_some_and(|f| f.is_identity()) {
            factors.pop();
        }
    }

    let leading = factors.iter().take_while(|f| **f == delta).count();
    factors.drain(..leading);
    NormalForm { degree: n, infimum: leading as i64 - negatives as i64, factors }
}

pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch { left: u.degree(), right: v.degree() });
    }
    Ok(normal_form(u) == normal_form(v))
}

pub fn commute_check(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    braids_equal(&u.product(v)?, &v.product(u)?)
}

pub fn is_identity(u: &BraidWord) -> bool {
    normal_form(u).is_identity()
}
