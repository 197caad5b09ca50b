//! Triple points of chart movies and the quandle cocycle invariant for
//! Mochizuki's 3-cocycle on R_3.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::commute_check;
use crate::movie::{slide_movie, validate_movie, ChartMovie, Move};
use crate::quandle::{braid_monodromy, crossing, torus_colorings, Quandle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriplePoint {
    pub sign: i8,
    pub colors: [u32; 3],
    /// Index of the movie step that produced it.
    pub step: usize,
}

impl fmt::Display for TriplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.colors;
        write!(f, "{}({x},{y},{z})", if self.sign > 0 { '+' } else { '-' })
    }
}

/// An element c0 + c1 t + c2 t² of ℤ[t]/(t³ - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GroupRingElement(pub [i64; 3]);

impl GroupRingElement {
    pub fn monomial(exponent: u8) -> GroupRingElement {
        let mut c = [0; 3];
        c[exponent as usize % 3] = 1;
        GroupRingElement(c)
    }

    pub fn coefficients(&self) -> [i64; 3] {
        self.0
    }
}

impl Add for GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, o: GroupRingElement) -> GroupRingElement {
        GroupRingElement([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Mul for GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, o: GroupRingElement) -> GroupRingElement {
        let mut c = [0; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[(i + j) % 3] += self.0[i] * o.0[j];
            }
        }
        GroupRingElement(c)
    }
}

impl fmt::Display for GroupRingElement {
    /// `3 + 6t^2`, `-t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => "t^2".to_string(),
            };
            let mag = c.unsigned_abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                mono
            } else {
                format!("{mag}{mono}")
            };
            if out.is_empty() {
                out = if c < 0 { format!("-{body}") } else { body };
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Exponent of θ(x, y, z) = t^{(x-y)(y-z)z(x+z)}, reduced mod 3.
pub fn mochizuki_theta(x: u32, y: u32, z: u32) -> u8 {
    let (x, y, z) = (x as i64, y as i64, z as i64);
    ((x - y) * (y - z) * z * (x + z)).rem_euclid(3) as u8
}

/// Σ sign · θ(colors), mod 3.
pub fn boltzmann_weight(triples: &[TriplePoint]) -> u8 {
    let total: i64 = triples
        .iter()
        .map(|t| t.sign as i64 * mochizuki_theta(t.colors[0], t.colors[1], t.colors[2]) as i64)
        .sum();
    total.rem_euclid(3) as u8
}

/// Signed, coloured triple points of a movie.
///
/// For a step σ_i σ_j σ_i → σ_j σ_i σ_j the colours are those carried by
/// strands i', i'+1, i'+2 (i' = min(i, j)) on the side of the window the
/// sheet normals point away from: where they enter it for positive
/// letters, where they leave it for negative ones. The sign is +1 for
/// j > i and -1 otherwise.
pub fn triple_points(mv: &ChartMovie, coloring: &[u32], q: &Quandle) -> Result<Vec<TriplePoint>> {
    if coloring.len() != mv.degree {
        return Err(Error::DegreeMismatch { left: mv.degree, right: coloring.len() });
    }
    if braid_monodromy(&mv.a, q, coloring)? != coloring
        || braid_monodromy(&mv.b, q, coloring)? != coloring
    {
        return Err(Error::ColoringNotFixed);
    }
    validate_movie(mv)?;
    let mut points = Vec::new();
    mv.replay(|step, word, mv_step| {
        let Move::R3 { position, ascending } = mv_step else { return };
        let first = word[position];
        let upto = if first.is_positive() { position } else { position + 3 };
        let mut colors = coloring.to_vec();
        for l in &word[..upto] {
            crossing(q, &mut colors, l.index(), l.is_positive());
        }
        let lo = first.index().min(word[position + 1].index()) - 1;
        let sign = if ascending { 1 } else { -1 };
        points.push(TriplePoint { sign, colors: [colors[lo], colors[lo + 1], colors[lo + 2]], step });
    })?;
    Ok(points)
}

/// Flip every crossing: the chart of the orientation-reversed mirror image.
pub fn mirror_chart(a: &BraidWord, b: &BraidWord) -> (BraidWord, BraidWord) {
    (a.mirror(), b.mirror())
}

/// Per-colouring contribution to Φ_θ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringWeight {
    pub coloring: Vec<u32>,
    pub exponent: u8,
}

/// Φ_θ = Σ over colourings of t^{weight}, with the movie generated by
/// [`slide_movie`] unless one is supplied.
pub fn cocycle_invariant(
    a: &BraidWord,
    b: &BraidWord,
    movie: Option<&ChartMovie>,
) -> Result<GroupRingElement> {
    Ok(cocycle_breakdown(a, b, movie)?.0)
}

pub fn cocycle_breakdown(
    a: &BraidWord,
    b: &BraidWord,
    movie: Option<&ChartMovie>,
) -> Result<(GroupRingElement, Vec<ColoringWeight>)> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    if a.degree() >= 2 && !commute_check(a, b)? {
        return Err(Error::NotCommuting);
    }
    let generated;
    let mv = match movie {
        Some(mv) => {
            if mv.a != *a || mv.b != *b {
                return Err(Error::InvalidArgument(
                    "movie boundary braids differ from the given pair".into(),
                ));
            }
            validate_movie(mv)?;
            mv
        }
        None => {
            generated = slide_movie(a, b)?;
            &generated
        }
    };
    let q = Quandle::dihedral(3)?;
    let mut total = GroupRingElement::default();
    let mut weights = Vec::new();
    for c in torus_colorings(a, b, &q)? {
        let e = boltzmann_weight(&triple_points(mv, &c, &q)?);
        total = total + GroupRingElement::monomial(e);
        weights.push(ColoringWeight { coloring: c, exponent: e });
    }
    Ok((total, weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_values() {
        assert_eq!(mochizuki_theta(2, 1, 2), 1);
        assert_eq!(mochizuki_theta(1, 2, 0), 0);
        for x in 0..3 {
            for z in 0..3 {
                assert_eq!(mochizuki_theta(x, x, z), 0);
                assert_eq!(mochizuki_theta(x, z, z), 0);
            }
        }
    }

    #[test]
    fn ring_arithmetic() {
        let t = GroupRingElement::monomial(1);
        assert_eq!(t * t * t, GroupRingElement::monomial(0));
        assert_eq!(GroupRingElement([3, 0, 6]).to_string(), "3 + 6t^2");
        assert_eq!(GroupRingElement([0, -1, 0]).to_string(), "-t");
        assert_eq!(GroupRingElement::default().to_string(), "0");
    }

    #[test]
    fn empty_weight() {
        assert_eq!(boltzmann_weight(&[]), 0);
    }

    #[test]
    fn one_strand_chart() {
        let e = BraidWord::identity(1);
        assert_eq!(cocycle_invariant(&e, &e, None).unwrap(), GroupRingElement([3, 0, 0]));
    }

    #[test]
    fn mirror_is_an_involution() {
        let a = BraidWord::from_signed(3, &[1, -2]).unwrap();
        let b = BraidWord::from_signed(3, &[2]).unwrap();
        let (ma, mb) = mirror_chart(&a, &b);
        assert_eq!(mirror_chart(&ma, &mb), (a, b));
    }
}
