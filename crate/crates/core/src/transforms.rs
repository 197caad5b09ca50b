//! Chart operations on boundary-braid pairs: rotation ρ, turning τ, and the
//! membership test for the matrix group H ⊂ GL(3, ℤ).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::garside::commute_check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix3(pub [[i64; 3]; 3]);

impl IntMatrix3 {
    pub fn identity() -> IntMatrix3 {
        IntMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn determinant(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse over ℤ, when the determinant is ±1.
    pub fn inverse(&self) -> Option<IntMatrix3> {
        let d = self.determinant();
        if d.abs() != 1 {
            return None;
        }
        let m = &self.0;
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adjugate entry (i, j) is the (j, i) cofactor
                let (r0, r1) = other_two(j);
                let (c0, c1) = other_two(i);
                let minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                *cell = sign * minor * d;
            }
        }
        Some(IntMatrix3(out))
    }
}

fn other_two(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl Mul for IntMatrix3 {
    type Output = IntMatrix3;
    fn mul(self, o: IntMatrix3) -> IntMatrix3 {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        IntMatrix3(out)
    }
}

impl fmt::Display for IntMatrix3 {
    /// Rows separated by `;`, the same form [`FromStr`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join("; "))
    }
}

impl FromStr for IntMatrix3 {
    type Err = Error;

    /// `"1 0 0; 0 0 -1; 0 1 0"`, commas also accepted between entries.
    fn from_str(s: &str) -> Result<IntMatrix3> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 3 {
            return Err(Error::Malformed(format!("expected 3 rows, got {}", rows.len())));
        }
        let mut out = [[0i64; 3]; 3];
        for (i, row) in rows.iter().enumerate() {
            let entries: Vec<i64> = row
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Malformed(format!("bad matrix entry {t:?}"))))
                .collect::<Result<_>>()?;
            if entries.len() != 3 {
                return Err(Error::Malformed(format!("row {} has {} entries", i + 1, entries.len())));
            }
            out[i].copy_from_slice(&entries);
        }
        Ok(IntMatrix3(out))
    }
}

/// M ∈ H iff det M = ±1, the first row is (±1, 0, 0) and the four
/// lower-right entries sum to an even number.
pub fn h_membership(m: &IntMatrix3) -> bool {
    let r = &m.0;
    m.determinant().abs() == 1
        && r[0][0].abs() == 1
        && r[0][1] == 0
        && r[0][2] == 0
        && (r[1][1] + r[1][2] + r[2][1] + r[2][2]).rem_euclid(2) == 0
}

/// Vertical boundary braid `a`, horizontal boundary braid `b`, commuting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartData {
    pub degree: usize,
    pub a: BraidWord,
    pub b: BraidWord,
}

impl ChartData {
    pub fn new(a: BraidWord, b: BraidWord) -> Result<ChartData> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
        }
        if !commute_check(&a, &b)? {
            return Err(Error::NotCommuting);
        }
        Ok(ChartData { degree: a.degree(), a, b })
    }

    /// ```text
    /// degree 4
    /// a: 1 3
    /// b: D^2
    /// ```
    pub fn to_text(&self) -> String {
        format!("degree {}\na: {}\nb: {}\n", self.degree, self.a, self.b)
    }

    pub fn from_text(text: &str) -> Result<ChartData> {
        let mut degree = None;
        let mut a = None;
        let mut b = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("degree") {
                let d = rest.trim();
                degree = Some(d.parse().map_err(|_| Error::Malformed(format!("bad degree {d:?}")))?);
            } else if let Some(rest) = line.strip_prefix("a:") {
                a = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("b:") {
                b = Some(rest.trim().to_string());
            } else {
                return Err(Error::Malformed(format!("unexpected chart line {line:?}")));
            }
        }
        let degree: usize = degree.ok_or_else(|| Error::Malformed("missing degree line".into()))?;
        let a = a.ok_or_else(|| Error::Malformed("missing a line".into()))?;
        let b = b.ok_or_else(|| Error::Malformed("missing b line".into()))?;
        ChartData::new(parse_braid(&a, degree)?, parse_braid(&b, degree)?)
    }
}

/// Word-level reading of a quarter turn of the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum RotationConvention {
    /// (a, b) ↦ (b⁻¹, a). Always yields a commuting pair.
    #[default]
    Inverse,
    /// (a, b) ↦ (reverse(b), a). Only commuting when reverse(b) commutes
    /// with a, which fails for some pairs.
    Reverse,
}

impl FromStr for RotationConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<RotationConvention> {
        match s {
            "inverse" => Ok(RotationConvention::Inverse),
            "reverse" => Ok(RotationConvention::Reverse),
            _ => Err(Error::InvalidArgument(format!("unknown rotation convention {s:?}"))),
        }
    }
}

pub fn rho(c: &ChartData) -> Result<ChartData> {
    rho_with(c, RotationConvention::default())
}

/// Rotation under the chosen convention. A non-commuting result is
/// reported as [`Error::NotCommuting`].
pub fn rho_with(c: &ChartData, convention: RotationConvention) -> Result<ChartData> {
    let b = match convention {
        RotationConvention::Inverse => c.b.inverse(),
        RotationConvention::Reverse => c.b.reverse(),
    };
    ChartData::new(b, c.a.clone())
}

/// Turning: (a, b) ↦ (a, b·a).
pub fn tau(c: &ChartData) -> Result<ChartData> {
    let b = c.b.product(&c.a)?;
    let out = ChartData { degree: c.degree, a: c.a.clone(), b };
    debug_assert!(commute_check(&out.a, &out.b).unwrap_or(false));
    Ok(out)
}
