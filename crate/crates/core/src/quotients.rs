//! Counting homomorphisms from a finitely presented group into small
//! finite groups by exhaustive search.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;

/// Largest search space accepted, in generator-image tuples.
pub const TUPLE_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetGroup {
    Trivial,
    Symmetric(usize),
    Dihedral(usize),
    Cyclic(usize),
}

impl fmt::Display for TargetGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetGroup::Trivial => f.write_str("1"),
            TargetGroup::Symmetric(k) => write!(f, "S{k}"),
            TargetGroup::Dihedral(k) => write!(f, "D{k}"),
            TargetGroup::Cyclic(k) => write!(f, "Z{k}"),
        }
    }
}

impl FromStr for TargetGroup {
    type Err = Error;

    /// `S4`, `D5` (order 10), `Z6`, `Z/6`, and `1` or `trivial`.
    fn from_str(s: &str) -> Result<TargetGroup> {
        let s = s.trim();
        if s == "1" || s.eq_ignore_ascii_case("trivial") {
            return Ok(TargetGroup::Trivial);
        }
        let bad = || Error::UnsupportedTarget(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('/');
        let k: usize = rest.parse().map_err(|_| bad())?;
        let t = match kind.to_ascii_uppercase() {
            'S' => TargetGroup::Symmetric(k),
            'D' => TargetGroup::Dihedral(k),
            'Z' | 'C' => TargetGroup::Cyclic(k),
            _ => return Err(bad()),
        };
        t.check()?;
        Ok(t)
    }
}

impl TargetGroup {
    fn check(self) -> Result<()> {
        let ok = match self {
            TargetGroup::Trivial => true,
            TargetGroup::Symmetric(k) => (1..=5).contains(&k),
            TargetGroup::Dihedral(k) => (1..=12).contains(&k),
            TargetGroup::Cyclic(k) => (1..=10_000).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedTarget(self.to_string()))
        }
    }

    /// Generating permutations.
    fn generators(self) -> Vec<Vec<usize>> {
        let cycle = |k: usize| (0..k).map(|i| (i + 1) % k).collect::<Vec<_>>();
        match self {
            TargetGroup::Trivial => vec![vec![0]],
            TargetGroup::Symmetric(k) => {
                let mut swap: Vec<usize> = (0..k).collect();
                if k >= 2 {
                    swap.swap(0, 1);
                }
                vec![swap, cycle(k)]
            }
            TargetGroup::Dihedral(1) => vec![vec![1, 0]],
            TargetGroup::Dihedral(2) => vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
            TargetGroup::Dihedral(k) => {
                let reflection = (0..k).map(|i| (k - i) % k).collect();
                vec![cycle(k), reflection]
            }
            TargetGroup::Cyclic(k) => vec![cycle(k)],
        }
    }
}

/// A finite group as a multiplication table on 0..order; element 0 is the
/// identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    mul: Vec<u32>,
    inv: Vec<u32>,
    order: usize,
}

impl FiniteGroup {
    pub fn new(target: TargetGroup) -> Result<FiniteGroup> {
        target.check()?;
        let gens = target.generators();
        let degree = gens[0].len();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };

        let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut k = 0;
        while k < elements.len() {
            for g in &gens {
                let e = compose(&elements[k], g);
                if !index.contains_key(&e) {
                    index.insert(e.clone(), elements.len());
                    elements.push(e);
                }
            }
            k += 1;
        }
        let order = elements.len();
        let mut mul = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = index[&compose(&elements[i], &elements[j])] as u32;
            }
        }
        let inv = (0..order)
            .map(|i| (0..order).find(|&j| mul[i * order + j] == 0).unwrap() as u32)
            .collect();
        Ok(FiniteGroup { mul, inv, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    fn eval(&self, letters: &[i32], images: &[u32]) -> u32 {
        letters.iter().fold(0, |acc, &l| {
            let g = images[l.unsigned_abs() as usize - 1];
            self.m(acc, if l > 0 { g } else { self.inv[g as usize] })
        })
    }

    fn generated_order(&self, gens: &[u32]) -> usize {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.m(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    fn is_central(&self, x: u32) -> bool {
        (0..self.order as u32).all(|g| self.m(x, g) == self.m(g, x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QuotientCounts {
    pub homomorphisms: u64,
    pub epimorphisms: u64,
    /// Homomorphisms with abelian image.
    pub abelian_image: u64,
    /// Homomorphisms under which the carried central word fails to map to
    /// a central element of the image. Always zero for a genuinely central
    /// word.
    pub central_violations: u64,
}

impl std::ops::Add for QuotientCounts {
    type Output = QuotientCounts;
    fn add(self, o: QuotientCounts) -> QuotientCounts {
        QuotientCounts {
            homomorphisms: self.homomorphisms + o.homomorphisms,
            epimorphisms: self.epimorphisms + o.epimorphisms,
            abelian_image: self.abelian_image + o.abelian_image,
            central_violations: self.central_violations + o.central_violations,
        }
    }
}

pub fn finite_quotient_count(p: &GroupPresentation, target: TargetGroup) -> Result<QuotientCounts> {
    let group = FiniteGroup::new(target)?;
    let order = group.order();
    let g = p.generator_count();
    let size = (order as u128).checked_pow(g as u32).unwrap_or(u128::MAX);
    if size > TUPLE_CAP {
        return Err(Error::CapExceeded { size, cap: TUPLE_CAP });
    }
    if g == 0 {
        let ok = p.relators.iter().all(|r| r.is_empty());
        let n = ok as u64;
        return Ok(QuotientCounts {
            homomorphisms: n,
            epimorphisms: if order == 1 { n } else { 0 },
            abelian_image: n,
            central_violations: 0,
        });
    }
    let relators: Vec<&[i32]> = p.relators.iter().map(|r| r.letters()).collect();
    let central = p.central.as_ref().map(|c| c.letters().to_vec());

    let counts = (0..order as u32)
        .into_par_iter()
        .map(|first| {
            let mut c = QuotientCounts::default();
            let mut images = vec![0u32; g];
            images[0] = first;
            let rest = (order as u64).pow(g as u32 - 1);
            for mut code in 0..rest {
                for slot in images.iter_mut().skip(1) {
                    *slot = (code % order as u64) as u32;
                    code /= order as u64;
                }
                if !relators.iter().all(|r| group.eval(r, &images) == 0) {
                    continue;
                }
                c.homomorphisms += 1;
                let image_order = group.generated_order(&images);
                if image_order == order {
                    c.epimorphisms += 1;
                }
                let abelian = images
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| images[i + 1..].iter().all(|&y| group.m(x, y) == group.m(y, x)));
                if abelian {
                    c.abelian_image += 1;
                }
                if let Some(w) = &central {
                    let z = group.eval(w, &images);
                    if !images.iter().all(|&y| group.m(z, y) == group.m(y, z)) {
                        c.central_violations += 1;
                    }
                }
            }
            c
        })
        .reduce(QuotientCounts::default, |a, b| a + b);
    Ok(counts)
}

/// Order of the centre of a target group.
pub fn center_size(target: TargetGroup) -> Result<usize> {
    let g = FiniteGroup::new(target)?;
    Ok((0..g.order() as u32).filter(|&x| g.is_central(x)).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::free_reduce;

    fn pres(g: usize, rels: &[&[i32]]) -> GroupPresentation {
        GroupPresentation::new(
            (1..=g).map(|j| format!("x{j}")).collect(),
            rels.iter().map(|r| free_reduce(g, r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn orders() {
        for (t, n) in [
            (TargetGroup::Trivial, 1),
            (TargetGroup::Symmetric(3), 6),
            (TargetGroup::Symmetric(5), 120),
            (TargetGroup::Dihedral(1), 2),
            (TargetGroup::Dihedral(2), 4),
            (TargetGroup::Dihedral(5), 10),
            (TargetGroup::Cyclic(7), 7),
        ] {
            assert_eq!(FiniteGroup::new(t).unwrap().order(), n, "{t}");
        }
        assert_eq!(center_size(TargetGroup::Dihedral(4)).unwrap(), 2);
        assert_eq!(center_size(TargetGroup::Symmetric(3)).unwrap(), 1);
    }

    #[test]
    fn parse_targets() {
        assert_eq!("S4".parse::<TargetGroup>().unwrap(), TargetGroup::Symmetric(4));
        assert_eq!("Z/6".parse::<TargetGroup>().unwrap(), TargetGroup::Cyclic(6));
        assert_eq!("1".parse::<TargetGroup>().unwrap(), TargetGroup::Trivial);
        assert!("S6".parse::<TargetGroup>().is_err());
        assert!("D13".parse::<TargetGroup>().is_err());
        assert!("Q8".parse::<TargetGroup>().is_err());
    }

    #[test]
    fn trefoil_into_s3() {
        // xyx = yxy
        let p = pres(2, &[&[1, 2, 1, -2, -1, -2]]);
        let c = finite_quotient_count(&p, TargetGroup::Symmetric(3)).unwrap();
        assert_eq!(c.homomorphisms, 12);
        assert_eq!(c.epimorphisms, 6);
        assert_eq!(c.abelian_image, 6);
        let t = finite_quotient_count(&p, TargetGroup::Trivial).unwrap();
        assert_eq!(t.homomorphisms, 1);
    }

    #[test]
    fn free_group_counts() {
        let p = pres(2, &[]);
        let c = finite_quotient_count(&p, TargetGroup::Cyclic(3)).unwrap();
        assert_eq!(c.homomorphisms, 9);
        assert_eq!(c.epimorphisms, 8);
    }

    #[test]
    fn cap_is_enforced() {
        let p = pres(5, &[]);
        assert!(matches!(
            finite_quotient_count(&p, TargetGroup::Symmetric(5)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
