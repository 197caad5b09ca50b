//! Ribbon certificates from cable decompositions of the boundary braids.
//!
//! With degree n·m split into m blocks of n strands, a certificate consists
//! of a tubular braid R(b) on the blocks, interior braids β_j and vertical
//! interior braids R_j(a) with
//!
//!   b = N(R(b)) · ι(β_1) ⋯ ι(β_m),    a = ι(R_1(a)) ⋯ ι(R_m(a)),
//!
//! and each R_j(a) closing to a trivial knot. Equality of these words in
//! the braid group is the operative criterion.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alexander::{unknot_check, UnknotVerdict};
use crate::braid::{parse_braid, BraidWord, Letter};
use crate::cable::{block_product, cable_lift};
use crate::error::{Error, Result};
use crate::garside::{braids_equal, commute_check, normal_form};
use crate::permutation::Permutation;

/// Default length bound for enumerated tubular braids.
pub const DEFAULT_LENGTH_CAP: usize = 16;
/// Default bound on enumerated candidate words.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableDecomposition {
    /// Strands per block.
    pub n: usize,
    /// Number of blocks.
    pub m: usize,
    /// R(b), degree m.
    pub tubular: BraidWord,
    /// β_1..β_m, degree n each.
    pub interior: Vec<BraidWord>,
    /// R_1(a)..R_m(a), degree n each.
    pub vertical: Vec<BraidWord>,
}

impl CableDecomposition {
    fn check_shape(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::InvalidArgument("block size and count must be positive".into()));
        }
        if self.tubular.degree() != self.m {
            return Err(Error::DegreeMismatch { left: self.tubular.degree(), right: self.m });
        }
        for list in [&self.interior, &self.vertical] {
            if list.len() != self.m {
                return Err(Error::InvalidArgument(format!(
                    "expected {} block braids, got {}",
                    self.m,
                    list.len()
                )));
            }
            if let Some(w) = list.iter().find(|w| w.degree() != self.n) {
                return Err(Error::DegreeMismatch { left: w.degree(), right: self.n });
            }
        }
        Ok(())
    }

    /// N(R(b)) · ∏ ι(β_j).
    pub fn horizontal_word(&self) -> Result<BraidWord> {
        cable_lift(&self.tubular, self.n)?.product(&block_product(&self.interior)?)
    }

    /// ∏ ι(R_j(a)).
    pub fn vertical_word(&self) -> Result<BraidWord> {
        block_product(&self.vertical)
    }

    /// Certificate text:
    ///
    /// ```text
    /// n 2
    /// m 2
    /// tubular: 1 1
    /// interior: 1 1
    /// interior: 1 1
    /// vertical: 1
    /// vertical: 1
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\nm {}\ntubular: {}\n", self.n, self.m, self.tubular);
        for w in &self.interior {
            out.push_str(&format!("interior: {w}\n"));
        }
        for w in &self.vertical {
            out.push_str(&format!("vertical: {w}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<CableDecomposition> {
        let mut n = None;
        let mut m = None;
        let mut tubular = None;
        let mut interior = Vec::new();
        let mut vertical = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = match line.split_once(':') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => line.split_once(' ').map(|(k, v)| (k, v.trim())).unwrap_or((line, "")),
            };
            let need = |v: Option<usize>, what: &str| {
                v.ok_or_else(|| Error::Malformed(format!("{what} must precede braid lines")))
            };
            match key {
                "n" | "m" => {
                    let v: usize = value
                        .parse()
                        .map_err(|_| Error::Malformed(format!("bad {key} value {value:?}")))?;
                    if key == "n" {
                        n = Some(v);
                    } else {
                        m = Some(v);
                    }
                }
                "tubular" => tubular = Some(parse_braid(value, need(m, "m")?)?),
                "interior" => interior.push(parse_braid(value, need(n, "n")?)?),
                "vertical" => vertical.push(parse_braid(value, need(n, "n")?)?),
                other => return Err(Error::Malformed(format!("unknown certificate key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Malformed("missing n".into()))?;
        let m = m.ok_or_else(|| Error::Malformed("missing m".into()))?;
        let tubular = tubular.ok_or_else(|| Error::Malformed("missing tubular line".into()))?;
        let d = CableDecomposition { n, m, tubular, interior, vertical };
        d.check_shape()?;
        Ok(d)
    }
}

/// Both reconstruction identities, decided by normal forms.
pub fn verify_decomposition(a: &BraidWord, b: &BraidWord, w: &CableDecomposition) -> Result<bool> {
    w.check_shape()?;
    let degree = w.n * w.m;
    for x in [a, b] {
        if x.degree() != degree {
            return Err(Error::DegreeMismatch { left: x.degree(), right: degree });
        }
    }
    Ok(braids_equal(b, &w.horizontal_word()?)? && braids_equal(a, &w.vertical_word()?)?)
}

fn block_mask(degree: usize, n: usize, block: usize) -> Vec<bool> {
    (0..degree).map(|k| k / n == block).collect()
}

fn first_of_blocks(degree: usize, n: usize) -> Vec<bool> {
    (0..degree).map(|k| k % n == 0).collect()
}

/// Canonical short word for a braid (normal form written out).
fn tidy(w: &BraidWord) -> BraidWord {
    if w.degree() < 2 {
        return BraidWord::identity(w.degree());
    }
    normal_form(w).to_word()
}

/// Interior braids for a fixed tubular candidate, if they exist.
fn complete(
    a: &BraidWord,
    b: &BraidWord,
    n: usize,
    m: usize,
    tubular: BraidWord,
    vertical: &[BraidWord],
) -> Result<Option<CableDecomposition>> {
    let degree = n * m;
    let rest = cable_lift(&tubular, n)?.inverse().product(b)?;
    let interior = (0..m)
        .map(|j| rest.keep_strands(&block_mask(degree, n, j)).map(|w| tidy(&w)))
        .collect::<Result<Vec<_>>>()?;
    let d = CableDecomposition { n, m, tubular, interior, vertical: vertical.to_vec() };
    Ok(verify_decomposition(a, b, &d)?.then_some(d))
}

/// Block-level permutation, if every block lands inside a single block.
fn block_permutation(p: &Permutation, n: usize, m: usize) -> Option<Permutation> {
    let mut images = Vec::with_capacity(m);
    for j in 0..m {
        let target = p.image(j * n) / n;
        if (0..n).any(|k| p.image(j * n + k) / n != target) {
            return None;
        }
        images.push(target);
    }
    Permutation::from_images(images)
}

/// Search for a cable decomposition with trivial R(a).
///
/// The vertical braids and the first tubular candidate come from deleting
/// strands; should that candidate fail, words realising the block-level
/// permutation of `b` are tried in order of length, then lexicographically.
/// `Ok(None)` means no witness up to `length_cap`; running out of
/// `budget` candidate words is reported as [`Error::CapExceeded`].
pub fn search_decomposition(
    a: &BraidWord,
    b: &BraidWord,
    n: usize,
    m: usize,
    length_cap: usize,
    budget: u64,
) -> Result<Option<CableDecomposition>> {
    let degree = n * m;
    if n == 0 || m == 0 || a.degree() != degree || b.degree() != degree {
        return Err(Error::InvalidArgument(format!(
            "degrees {} and {} do not split into {m} blocks of {n}",
            a.degree(),
            b.degree()
        )));
    }
    let vertical = (0..m)
        .map(|j| a.keep_strands(&block_mask(degree, n, j)).map(|w| tidy(&w)))
        .collect::<Result<Vec<_>>>()?;
    if !braids_equal(a, &block_product(&vertical)?)? {
        return Ok(None);
    }
    let Some(block_perm) = block_permutation(&b.permutation(), n, m) else {
        return Ok(None);
    };

    let first = tidy(&b.keep_strands(&first_of_blocks(degree, n))?);
    if let Some(d) = complete(a, b, n, m, first, &vertical)? {
        return Ok(Some(d));
    }

    let alphabet: Vec<i32> = (1..m as i32).flat_map(|i| [i, -i]).collect();
    let mut spent: u64 = 0;
    for len in 0..=length_cap {
        let count = (alphabet.len() as u128).pow(len as u32);
        if spent as u128 + count > budget as u128 {
            return Err(Error::CapExceeded { size: spent as u128 + count, cap: budget as u128 });
        }
        spent += count as u64;
        let found = (0..count as u64)
            .into_par_iter()
            .filter_map(|mut code| {
                let mut letters = vec![0i32; len];
                for slot in letters.iter_mut().rev() {
                    *slot = alphabet[(code % alphabet.len() as u64) as usize];
                    code /= alphabet.len() as u64;
                }
                if letters.windows(2).any(|p| p[0] == -p[1]) {
                    return None;
                }
                let w = BraidWord::new(m, letters.into_iter().map(Letter::from_signed).collect()).ok()?;
                (w.permutation() == block_perm).then_some(w)
            })
            .find_map_first(|w| complete(a, b, n, m, w, &vertical).ok().flatten());
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RibbonVerdict {
    Ribbon(CableDecomposition),
    Unknown(String),
}

impl fmt::Display for RibbonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RibbonVerdict::Ribbon(_) => f.write_str("ribbon"),
            RibbonVerdict::Unknown(reason) => write!(f, "unknown: {reason}"),
        }
    }
}

/// Ribbon when a verified decomposition exists whose vertical braids all
/// close to trivial knots; otherwise Unknown with the reason.
pub fn ribbon_verdict(
    a: &BraidWord,
    b: &BraidWord,
    n: usize,
    m: usize,
    witness: Option<&CableDecomposition>,
) -> Result<RibbonVerdict> {
    if n == 0 || m == 0 || a.degree() != n * m || b.degree() != n * m {
        return Err(Error::InvalidArgument(format!(
            "degree {} does not split into {m} blocks of {n}",
            a.degree()
        )));
    }
    if !commute_check(a, b)? {
        return Err(Error::NotCommuting);
    }
    let d = match witness {
        Some(w) => {
            if w.n != n || w.m != m {
                return Err(Error::InvalidArgument("certificate block shape differs".into()));
            }
            if !verify_decomposition(a, b, w)? {
                return Ok(RibbonVerdict::Unknown("supplied certificate does not verify".into()));
            }
            w.clone()
        }
        None => match search_decomposition(a, b, n, m, DEFAULT_LENGTH_CAP, DEFAULT_CANDIDATE_BUDGET) {
            Ok(Some(d)) => d,
            Ok(None) => {
                return Ok(RibbonVerdict::Unknown(format!(
                    "no cable decomposition with {m} blocks of {n} strands and trivial R(a)"
                )))
            }
            Err(Error::CapExceeded { size, cap }) => {
                return Ok(RibbonVerdict::Unknown(format!(
                    "decomposition search stopped at its budget ({size} > {cap} candidates)"
                )))
            }
            Err(e) => return Err(e),
        },
    };
    for (j, r) in d.vertical.iter().enumerate() {
        match unknot_check(r) {
            Ok(UnknotVerdict::Unknot { .. }) => {}
            Ok(v) => {
                return Ok(RibbonVerdict::Unknown(format!(
                    "vertical braid {} ({r}) closes to: {v}",
                    j + 1
                )))
            }
            Err(Error::NotAKnot(c)) => {
                return Ok(RibbonVerdict::Unknown(format!(
                    "vertical braid {} closes to {c} components",
                    j + 1
                )))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(RibbonVerdict::Ribbon(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, x: &[i32]) -> BraidWord {
        BraidWord::from_signed(m, x).unwrap()
    }

    fn example() -> (BraidWord, BraidWord, CableDecomposition) {
        let a = w(4, &[1, 3]);
        let b = w(4, &[1, 2, 3]).pow(4);
        let d = CableDecomposition {
            n: 2,
            m: 2,
            tubular: w(2, &[1, 1]),
            interior: vec![w(2, &[1, 1]), w(2, &[1, 1])],
            vertical: vec![w(2, &[1]), w(2, &[1])],
        };
        (a, b, d)
    }

    #[test]
    fn verifies_full_twist_witness() {
        let (a, b, d) = example();
        assert!(verify_decomposition(&a, &b, &d).unwrap());
        let mut bad = d.clone();
        bad.interior[0] = w(2, &[1]);
        assert!(!verify_decomposition(&a, &b, &bad).unwrap());
        let e = BraidWord::identity(2);
        let trivial = CableDecomposition {
            n: 1,
            m: 2,
            tubular: e.clone(),
            interior: vec![BraidWord::identity(1); 2],
            vertical: vec![BraidWord::identity(1); 2],
        };
        assert!(verify_decomposition(&e, &e, &trivial).unwrap());
    }

    #[test]
    fn search_recovers_witness() {
        let (a, b, d) = example();
        let found = search_decomposition(&a, &b, 2, 2, 16, 1000).unwrap().unwrap();
        assert_eq!(found, d);
    }

    #[test]
    fn search_on_full_twist_powers() {
        let a = w(4, &[1, 3]);
        for n in 1..=3 {
            let b = w(4, &[1, 2, 3]).pow(4 * n);
            let d = search_decomposition(&a, &b, 2, 2, 16, 1000).unwrap().unwrap();
            assert_eq!(d.tubular, w(2, &[1]).pow(2 * n));
        }
    }

    #[test]
    fn single_strand_cables() {
        // with one strand per block the vertical braid itself must be trivial
        let b = w(3, &[1, -2, 1, 1]);
        let d = search_decomposition(&BraidWord::identity(3), &b, 1, 3, 16, 1000).unwrap().unwrap();
        assert!(d.interior.iter().all(|x| x.degree() == 1 && x.is_empty()));
        assert!(braids_equal(&d.tubular, &b).unwrap());
        let b = w(3, &[1, 2]).pow(3);
        assert_eq!(search_decomposition(&w(3, &[1]), &b, 1, 3, 16, 1000).unwrap(), None);
    }

    #[test]
    fn budget_is_reported_separately() {
        // the block permutation of b is realisable, but the blocks mix
        let a = BraidWord::identity(4);
        let b = w(4, &[2, 2]);
        assert!(matches!(search_decomposition(&a, &b, 2, 2, 16, 5), Err(Error::CapExceeded { .. })));
        assert_eq!(search_decomposition(&a, &b, 2, 2, 3, 1000).unwrap(), None);
    }

    #[test]
    fn certificate_round_trip() {
        let (_, _, d) = example();
        assert_eq!(CableDecomposition::from_text(&d.to_text()).unwrap(), d);
        assert!(CableDecomposition::from_text("n 2\nm 2\ntubular: 1\n").is_err());
    }

    #[test]
    fn verdicts() {
        let (a, b, _) = example();
        assert!(matches!(ribbon_verdict(&a, &b, 2, 2, None).unwrap(), RibbonVerdict::Ribbon(_)));
        let e = BraidWord::identity(2);
        assert!(matches!(ribbon_verdict(&e, &e, 1, 2, None).unwrap(), RibbonVerdict::Ribbon(_)));
        // vertical braid σ1² closes to a two-component link
        let a2 = w(4, &[1, 1, 3, 3]);
        assert!(matches!(ribbon_verdict(&a2, &b, 2, 2, None).unwrap(), RibbonVerdict::Unknown(_)));
    }
}
