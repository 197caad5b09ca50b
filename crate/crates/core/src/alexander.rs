//! Alexander polynomials of closed braids and a three-valued unknot test.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::laurent::{determinant, Laurent};

fn l(low: i64, c: &[i64]) -> Laurent {
    Laurent::from_coeffs(low, c)
}

/// Reduced Burau matrix of one letter, of size (degree - 1).
fn burau_letter(degree: usize, letter: Letter) -> Vec<Vec<Laurent>> {
    let k = degree - 1;
    let mut m: Vec<Vec<Laurent>> = (0..k)
        .map(|r| (0..k).map(|c| if r == c { Laurent::one() } else { Laurent::zero() }).collect())
        .collect();
    let i = letter.index();
    let pos = letter.is_positive();
    if k == 1 {
        m[0][0] = if pos { l(1, &[-1]) } else { l(-1, &[-1]) };
        return m;
    }
    let r = i - 1;
    if i == 1 {
        if pos {
            m[0][0] = l(1, &[-1]);
            m[1][0] = Laurent::one();
        } else {
            m[0][0] = l(-1, &[-1]);
            m[1][0] = l(-1, &[1]);
        }
    } else if i == degree - 1 {
        if pos {
            m[r - 1][r] = l(1, &[1]);
            m[r][r] = l(1, &[-1]);
        } else {
            m[r - 1][r] = Laurent::one();
            m[r][r] = l(-1, &[-1]);
        }
    } else if pos {
        m[r - 1][r] = l(1, &[1]);
        m[r][r] = l(1, &[-1]);
        m[r + 1][r] = Laurent::one();
    } else {
        m[r - 1][r] = Laurent::one();
        m[r][r] = l(-1, &[-1]);
        m[r + 1][r] = l(-1, &[1]);
    }
    m
}

fn mat_mul(a: &[Vec<Laurent>], b: &[Vec<Laurent>]) -> Vec<Vec<Laurent>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(Laurent::zero(), |acc, k| {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[i][k] * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau image of a braid word, letters multiplied in reading order.
pub fn reduced_burau(beta: &BraidWord) -> Vec<Vec<Laurent>> {
    let m = beta.degree();
    let k = m.saturating_sub(1);
    let mut acc: Vec<Vec<Laurent>> = (0..k)
        .map(|r| (0..k).map(|c| if r == c { Laurent::one() } else { Laurent::zero() }).collect())
        .collect();
    for &letter in beta.letters() {
        acc = mat_mul(&acc, &burau_letter(m, letter));
    }
    acc
}

/// Alexander polynomial of the closure of `beta`, normalised to lowest
/// degree 0 with a positive constant term.
///
/// Uses det(I - ρ(β)) = Δ(t) · (1 + t + ⋯ + t^{m-1}) for the reduced Burau
/// representation ρ.
pub fn alexander_polynomial(beta: &BraidWord) -> Result<Laurent> {
    let m = beta.degree();
    let cycles = beta.permutation().cycle_count();
    if cycles != 1 {
        return Err(Error::NotAKnot(cycles));
    }
    if m <= 1 {
        return Ok(Laurent::one());
    }
    let rho = reduced_burau(beta);
    let k = m - 1;
    let diff: Vec<Vec<Laurent>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let id = if i == j { Laurent::one() } else { Laurent::zero() };
                    &id - &rho[i][j]
                })
                .collect()
        })
        .collect();
    let det = determinant(&diff);
    let geometric = Laurent::from_coeffs(0, &vec![1; m]);
    let delta = det
        .div_exact(&geometric)
        .ok_or_else(|| Error::InvalidArgument("Burau determinant not divisible".into()))?;
    Ok(delta.normalized())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnknotVerdict {
    /// Reduced to the 1-strand braid, or a positive/negative braid of
    /// degree at most 3 with trivial Alexander polynomial.
    Unknot { reduced: BraidWord },
    /// Alexander polynomial differs from 1.
    NotUnknot { alexander: Laurent },
    Unknown { reduced: BraidWord, alexander: Laurent },
}

impl UnknotVerdict {
    pub fn is_unknot(&self) -> bool {
        matches!(self, UnknotVerdict::Unknot { .. })
    }
}

impl fmt::Display for UnknotVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknotVerdict::Unknot { .. } => f.write_str("unknot"),
            UnknotVerdict::NotUnknot { alexander } => write!(f, "not unknot (Alexander {alexander})"),
            UnknotVerdict::Unknown { .. } => f.write_str("unknown"),
        }
    }
}

/// Cancel inverse pairs, cyclically, and destabilise while σ_1 or
/// σ_{m-1} occurs exactly once.
pub fn simplify_closed_braid(beta: &BraidWord) -> BraidWord {
    let mut m = beta.degree();
    let mut w: Vec<i32> = beta.signed_letters();
    loop {
        let before = (m, w.len());
        // free and cyclic cancellation
        let mut out: Vec<i32> = Vec::with_capacity(w.len());
        for &x in &w {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        let mut lo = 0;
        let mut hi = out.len();
        while hi - lo >= 2 && out[lo] == -out[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        w = out[lo..hi].to_vec();

        if m >= 2 {
            let top = (m - 1) as i32;
            let count = |g: i32, w: &[i32]| w.iter().filter(|x| x.abs() == g).count();
            if count(1, &w) == 1 && count(top, &w) != 1 {
                // conjugate by Δ so the lonely σ_1 becomes σ_{m-1}
                w = w.iter().map(|&x| x.signum() * (m as i32 - x.abs())).collect();
            }
            if count(top, &w) == 1 {
                let p = w.iter().position(|x| x.abs() == top).unwrap();
                let rotated: Vec<i32> = w[p + 1..].iter().chain(&w[..p]).copied().collect();
                w = rotated;
                m -= 1;
            }
        }
        if (m, w.len()) == before {
            break;
        }
    }
    BraidWord::from_signed(m, &w).expect("indices stay below the degree")
}

pub fn unknot_check(beta: &BraidWord) -> Result<UnknotVerdict> {
    let cycles = beta.permutation().cycle_count();
    if cycles != 1 {
        return Err(Error::NotAKnot(cycles));
    }
    let reduced = simplify_closed_braid(beta);
    if reduced.degree() <= 1 {
        return Ok(UnknotVerdict::Unknot { reduced });
    }
    let alexander = alexander_polynomial(&reduced)?;
    if !alexander.is_one() {
        return Ok(UnknotVerdict::NotUnknot { alexander });
    }
    if reduced.degree() <= 3 && (reduced.is_positive() || reduced.is_negative()) {
        return Ok(UnknotVerdict::Unknot { reduced });
    }
    Ok(UnknotVerdict::Unknown { reduced, alexander })
}
