//! Link-group presentations of torus-covering links and their
//! computable invariants.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::artin::{artin_images, parse_free_word_named, FreeWord};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::{commute_check, normal_form};
use crate::smith::cokernel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
    /// A word known to be central, carried through simplification so the
    /// quotient by it is one call away.
    pub central: Option<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<GroupPresentation> {
        let g = generators.len();
        for r in &relators {
            if r.rank() != g {
                return Err(Error::DegreeMismatch { left: r.rank(), right: g });
            }
        }
        Ok(GroupPresentation { generators, relators, central: None })
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn with_central(mut self, word: FreeWord) -> GroupPresentation {
        self.central = Some(word);
        self
    }

    /// Text exchange format:
    ///
    /// ```text
    /// generators: x1 x3
    /// relator: x1^-1 x3^-1 x1 x3
    /// central: x1^2 x3^2
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.generators.join(" "));
        for r in &self.relators {
            out.push_str(&format!("relator: {}\n", r.display_with(&self.generators)));
        }
        if let Some(c) = &self.central {
            out.push_str(&format!("central: {}\n", c.display_with(&self.generators)));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<GroupPresentation> {
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        let mut central = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Malformed(format!("expected 'key: value', got {line:?}")))?;
            match key.trim() {
                "generators" => {
                    generators = Some(value.split_whitespace().map(String::from).collect())
                }
                "relator" | "central" => {
                    let names = generators
                        .as_ref()
                        .ok_or_else(|| Error::Malformed("generators line must come first".into()))?;
                    let w = parse_free_word_named(value, names)?;
                    if key.trim() == "relator" {
                        relators.push(w);
                    } else {
                        central = Some(w);
                    }
                }
                other => return Err(Error::Malformed(format!("unknown key {other:?}"))),
            }
        }
        let generators =
            generators.ok_or_else(|| Error::Malformed("missing generators line".into()))?;
        let mut p = GroupPresentation::new(generators, relators)?;
        p.central = central;
        Ok(p)
    }
}

/// Free rank plus torsion coefficients d_1 | d_2 | ….
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: &[i64]) -> AbelianInvariants {
        AbelianInvariants { free_rank, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() }
    }

    /// Number of homomorphisms onto-or-into ℤ/k.
    pub fn hom_count_to_cyclic(&self, k: u64) -> BigInt {
        let k_big = BigInt::from(k);
        let mut count = num_traits::pow(k_big.clone(), self.free_rank);
        for d in &self.torsion {
            count *= num_integer::Integer::gcd(d, &k_big);
        }
        count
    }
}

impl fmt::Display for AbelianInvariants {
    /// `Z^r + Z/d1 + Z/d2`, `Z` for rank one, `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Whether to refuse non-commuting boundary braids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommutationPolicy {
    #[default]
    Require,
    /// Build the presentation anyway; the caller decides how to warn.
    Allow,
}

/// ⟨x_1..x_m | x_j = Artin(a)(x_j) = Artin(b)(x_j)⟩ with relators
/// x_j⁻¹ · Artin(·)(x_j); trivial and repeated relators are dropped.
pub fn torus_covering_group(
    a: &BraidWord,
    b: &BraidWord,
    policy: CommutationPolicy,
) -> Result<GroupPresentation> {
    let m = a.degree();
    if b.degree() != m {
        return Err(Error::DegreeMismatch { left: m, right: b.degree() });
    }
    if policy == CommutationPolicy::Require && !commute_check(a, b)? {
        return Err(Error::NotCommuting);
    }
    let mut relators: Vec<FreeWord> = Vec::new();
    for beta in [a, b] {
        for (j, image) in artin_images(beta).into_iter().enumerate() {
            let x = FreeWord::generator(m, j + 1)?;
            let r = x.inverse().product(&image);
            if !r.is_empty() && !relators.contains(&r) {
                relators.push(r);
            }
        }
    }
    let names = (1..=m).map(|j| format!("x{j}")).collect();
    let mut p = GroupPresentation::new(names, relators)?;
    p.central = central_word(a, b);
    Ok(p)
}

/// A central element for pairs where one boundary braid is a power of Δ.
///
/// Artin(Δ²) is conjugation by P = x_1 ⋯ x_m. If b = Δ^{2k} then P^k is
/// central; if b = Δ^{2k+1}, applying the relations twice makes P^{2k+1}
/// central.
pub fn central_word(a: &BraidWord, b: &BraidWord) -> Option<FreeWord> {
    let m = a.degree();
    let boundary = FreeWord::generator(m, 1)
        .ok()
        .map(|_| (1..=m).fold(FreeWord::identity(m), |acc, j| {
            acc.product(&FreeWord::generator(m, j).unwrap())
        }))?;
    for beta in [b, a] {
        if let Some(k) = normal_form(beta).delta_power() {
            if k == 0 || m < 2 {
                continue;
            }
            let e = if k % 2 == 0 { k / 2 } else { k };
            return Some(boundary.pow(e));
        }
    }
    None
}

pub fn add_relator(p: &GroupPresentation, w: &FreeWord) -> Result<GroupPresentation> {
    if w.rank() > p.generator_count() {
        return Err(Error::DegreeMismatch { left: w.rank(), right: p.generator_count() });
    }
    let mut q = p.clone();
    let w = w.with_rank(p.generator_count())?;
    if !w.is_empty() {
        q.relators.push(w);
    }
    Ok(q)
}

/// Quotient by the carried central word, if there is one.
pub fn quotient_by_center(p: &GroupPresentation) -> Result<GroupPresentation> {
    let c = p
        .central
        .clone()
        .ok_or_else(|| Error::InvalidArgument("no central word is known for this pair".into()))?;
    add_relator(p, &c)
}

/// Eliminate generators that occur exactly once in some relator.
///
/// Shortest relators are used first; within a relator the highest-index
/// candidate goes. Relators are kept cyclically reduced, and empty or
/// duplicate relators are removed. Stops when no relator qualifies.
pub fn tietze_eliminate(p: &GroupPresentation) -> GroupPresentation {
    let mut gens = p.generators.clone();
    let mut rels: Vec<FreeWord> = Vec::new();
    for r in &p.relators {
        push_unique(&mut rels, r.cyclically_reduced());
    }
    let mut central = p.central.clone();

    loop {
        let mut order: Vec<usize> = (0..rels.len()).collect();
        order.sort_by_key(|&k| (rels[k].len(), k));
        let pick = order.into_iter().find_map(|k| {
            (1..=gens.len()).rev().find(|&j| rels[k].occurrences(j) == 1).map(|j| (k, j))
        });
        let Some((k, j)) = pick else { break };

        let r = rels.remove(k);
        let pos = r.letters().iter().position(|l| l.unsigned_abs() as usize == j).unwrap();
        // rotate so x_j^{±1} leads: x_j^e · w = 1
        let rotated: Vec<i32> =
            r.letters()[pos..].iter().chain(&r.letters()[..pos]).copied().collect();
        let rest = crate::artin::free_reduce(r.rank(), &rotated[1..]).unwrap();
        let value = if rotated[0] > 0 { rest.inverse() } else { rest };

        let g = gens.len();
        let images: Vec<FreeWord> = (1..=g)
            .map(|i| {
                let src = if i == j { value.clone() } else { FreeWord::generator(g, i).unwrap() };
                // renumber into rank g - 1
                let letters: Vec<i32> = src
                    .letters()
                    .iter()
                    .map(|&l| {
                        let idx = l.unsigned_abs() as usize;
                        let idx = if idx > j { idx - 1 } else { idx } as i32;
                        idx * l.signum()
                    })
                    .collect();
                crate::artin::free_reduce(g - 1, &letters).unwrap()
            })
            .collect();
        let old = std::mem::take(&mut rels);
        for r in old {
            push_unique(&mut rels, r.substitute(&images).cyclically_reduced());
        }
        central = central.map(|c| c.substitute(&images));
        gens.remove(j - 1);
    }

    GroupPresentation { generators: gens, relators: rels, central }
}

fn push_unique(rels: &mut Vec<FreeWord>, r: FreeWord) {
    if !r.is_empty() && !rels.contains(&r) {
        rels.push(r);
    }
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let g = p.generator_count();
    let rows: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| r.exponent_sums().into_iter().map(BigInt::from).collect())
        .collect();
    let (free_rank, torsion) = cokernel(&rows, g);
    AbelianInvariants { free_rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::free_reduce;
    use crate::braid::parse_braid;

    fn braid(text: &str, m: usize) -> BraidWord {
        parse_braid(text, m).unwrap()
    }

    #[test]
    fn spun_trefoil_group() {
        let p = torus_covering_group(&braid("1 1 1", 2), &braid("", 2), CommutationPolicy::Require)
            .unwrap();
        assert_eq!(p.generator_count(), 2);
        assert!(!p.relators.is_empty());
        assert_eq!(abelianization(&p), AbelianInvariants::new(1, &[]));
    }

    #[test]
    fn trivial_braids_give_free_group() {
        let p = torus_covering_group(&braid("", 3), &braid("", 3), CommutationPolicy::Require)
            .unwrap();
        assert_eq!(p.generator_count(), 3);
        assert!(p.relators.is_empty());
        assert_eq!(abelianization(&p), AbelianInvariants::new(3, &[]));
    }

    #[test]
    fn rejects_non_commuting() {
        let r = torus_covering_group(&braid("1", 3), &braid("2", 3), CommutationPolicy::Require);
        assert_eq!(r, Err(Error::NotCommuting));
        assert!(
            torus_covering_group(&braid("1", 3), &braid("2", 3), CommutationPolicy::Allow).is_ok()
        );
    }

    #[test]
    fn two_component_family() {
        let p = torus_covering_group(&braid("1 3", 4), &braid("D^2", 4), CommutationPolicy::Require)
            .unwrap();
        assert_eq!(abelianization(&p), AbelianInvariants::new(2, &[]));
        let q = tietze_eliminate(&p);
        assert_eq!(q.generators, vec!["x1".to_string(), "x3".to_string()]);
        assert_eq!(abelianization(&q), AbelianInvariants::new(2, &[]));
    }

    #[test]
    fn eliminate_equal_generators() {
        let p = GroupPresentation::new(
            vec!["x".into(), "y".into()],
            vec![free_reduce(2, &[1, -2]).unwrap()],
        )
        .unwrap();
        let q = tietze_eliminate(&p);
        assert_eq!(q.generators, vec!["x".to_string()]);
        assert!(q.relators.is_empty());
    }

    #[test]
    fn cyclic_invariants() {
        let p = GroupPresentation::new(vec!["x".into()], vec![free_reduce(1, &[1, 1, 1]).unwrap()])
            .unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab, AbelianInvariants::new(0, &[3]));
        assert_eq!(ab.to_string(), "Z/3");
        assert_eq!(AbelianInvariants::new(1, &[4]).to_string(), "Z + Z/4");
        assert_eq!(AbelianInvariants::new(0, &[]).to_string(), "0");
        assert_eq!(AbelianInvariants::new(2, &[]).to_string(), "Z^2");
    }

    #[test]
    fn add_relator_behaviour() {
        let p = GroupPresentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(add_relator(&p, &FreeWord::identity(2)).unwrap(), p);
        assert!(add_relator(&p, &FreeWord::identity(3)).is_err());
        let q = add_relator(&p, &free_reduce(1, &[1, 1]).unwrap()).unwrap();
        assert_eq!(q.relators.len(), 1);
        assert_eq!(q.relators[0].rank(), 2);
    }

    #[test]
    fn text_round_trip() {
        let p = torus_covering_group(&braid("1 3", 4), &braid("D^3", 4), CommutationPolicy::Require)
            .unwrap();
        let q = tietze_eliminate(&p);
        assert_eq!(GroupPresentation::from_text(&q.to_text()).unwrap(), q);
    }
}
