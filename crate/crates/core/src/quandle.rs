//! Finite quandles, braid monodromy on colour vectors, and colourings of
//! torus-covering charts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Largest colour space searched by [`torus_colorings`].
pub const COLORING_CAP: u128 = 50_000_000;

/// A quandle on `0..size` given by its operation table, `a * b` stored at
/// `a * size + b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quandle {
    size: usize,
    table: Vec<u32>,
    /// `left_div[a * size + b]` is the unique `c` with `c * b = a`.
    left_div: Vec<u32>,
}

impl Quandle {
    /// Build from an explicit table, checking the three axioms.
    pub fn from_table(size: usize, table: Vec<u32>) -> Result<Quandle> {
        if size == 0 || table.len() != size * size {
            return Err(Error::QuandleAxiom(format!("table must be {size}x{size}")));
        }
        if table.iter().any(|&v| v as usize >= size) {
            return Err(Error::QuandleAxiom("entry out of range".into()));
        }
        let mut left_div = vec![u32::MAX; size * size];
        for b in 0..size {
            for c in 0..size {
                let a = table[c * size + b] as usize;
                if left_div[a * size + b] != u32::MAX {
                    return Err(Error::QuandleAxiom(format!("right translation by {b} is not injective")));
                }
                left_div[a * size + b] = c as u32;
            }
        }
        let q = Quandle { size, table, left_div };
        q.check_axioms()?;
        Ok(q)
    }

    /// Dihedral quandle R_p: a * b = 2b - a mod p.
    pub fn dihedral(p: usize) -> Result<Quandle> {
        if p < 3 {
            return Err(Error::InvalidArgument(format!("dihedral quandle needs p >= 3, got {p}")));
        }
        let table = (0..p * p).map(|k| ((2 * (k % p) + p - k / p) % p) as u32).collect();
        Quandle::from_table(p, table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.size + b as usize]
    }

    /// The unique `c` with `c * b = a`.
    pub fn op_inv(&self, a: u32, b: u32) -> u32 {
        self.left_div[a as usize * self.size + b as usize]
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size as u32;
        for a in 0..n {
            if self.op(a, a) != a {
                return Err(Error::QuandleAxiom(format!("{a} * {a} != {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Err(Error::QuandleAxiom(format!(
                            "self-distributivity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Recolour the strands at `i - 1`, `i` across one crossing.
///
/// σ_i sends (x, y) to (y, x * y): the strand entering on the left passes
/// under and is acted on by the colour of the over-strand. σ_i⁻¹ is the
/// inverse bijection.
pub fn crossing(q: &Quandle, colors: &mut [u32], index: usize, positive: bool) {
    let (x, y) = (colors[index - 1], colors[index]);
    if positive {
        colors[index - 1] = y;
        colors[index] = q.op(x, y);
    } else {
        colors[index - 1] = q.op_inv(y, x);
        colors[index] = x;
    }
}

/// Colours at the top of `beta` given the colours at its bottom.
pub fn braid_monodromy(beta: &BraidWord, q: &Quandle, colors: &[u32]) -> Result<Vec<u32>> {
    if colors.len() != beta.degree() {
        return Err(Error::DegreeMismatch { left: beta.degree(), right: colors.len() });
    }
    if let Some(&c) = colors.iter().find(|&&c| c as usize >= q.size()) {
        return Err(Error::InvalidArgument(format!("colour {c} is not a quandle element")));
    }
    let mut out = colors.to_vec();
    for l in beta.letters() {
        crossing(q, &mut out, l.index(), l.is_positive());
    }
    Ok(out)
}

/// Colours carried by some arc of the diagrams of `a` and `b` under the
/// colouring that starts with `colors`, sorted.
pub fn colors_used(a: &BraidWord, b: &BraidWord, q: &Quandle, colors: &[u32]) -> Result<Vec<u32>> {
    let mut seen = vec![false; q.size()];
    for beta in [a, b] {
        let mut c = colors.to_vec();
        if c.len() != beta.degree() {
            return Err(Error::DegreeMismatch { left: beta.degree(), right: c.len() });
        }
        for &x in &c {
            if x as usize >= q.size() {
                return Err(Error::InvalidArgument(format!("colour {x} is not a quandle element")));
            }
            seen[x as usize] = true;
        }
        for l in beta.letters() {
            crossing(q, &mut c, l.index(), l.is_positive());
            seen[c[l.index() - 1] as usize] = true;
            seen[c[l.index()] as usize] = true;
        }
    }
    Ok((0..q.size() as u32).filter(|&x| seen[x as usize]).collect())
}

/// All colour vectors fixed by both monodromies, in lexicographic order.
pub fn torus_colorings(a: &BraidWord, b: &BraidWord, q: &Quandle) -> Result<Vec<Vec<u32>>> {
    let m = a.degree();
    if b.degree() != m {
        return Err(Error::DegreeMismatch { left: m, right: b.degree() });
    }
    let size = q.size() as u128;
    let total = size.checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > COLORING_CAP {
        return Err(Error::CapExceeded { size: total, cap: COLORING_CAP });
    }
    let total = total as u64;
    let fixed = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            // most significant digit is strand 1, so the order is lexicographic
            let mut c = vec![0u32; m];
            for slot in c.iter_mut().rev() {
                *slot = (code % size as u64) as u32;
                code /= size as u64;
            }
            let fa = braid_monodromy(a, q, &c).ok()? == c;
            (fa && braid_monodromy(b, q, &c).ok()? == c).then_some(c)
        })
        .collect();
    Ok(fixed)
}
