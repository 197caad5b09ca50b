//! Index-shift embeddings and the n-strand cabling of braids.

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Place `beta` on the strands `left_pad + 1 ..= left_pad + n` of a braid
/// of degree `left_pad + n + right_pad`.
pub fn iota_embed(beta: &BraidWord, left_pad: usize, right_pad: usize) -> BraidWord {
    let degree = left_pad + beta.degree() + right_pad;
    let letters = beta.letters().iter().map(|l| l.shifted(left_pad)).collect();
    BraidWord::new(degree, letters).expect("shifted indices stay in range")
}

/// The 2n-braid in which the first n parallel strands cross over the next
/// n as a band:
///
/// σ_n (σ_{n-1} ⋯ σ_1)(σ_{n+1} ⋯ σ_{2n-1}) · σ_n (σ_{n-1} ⋯ σ_2)(σ_{n+1} ⋯ σ_{2n-2}) ⋯ σ_n
pub fn n_prime_sigma1(n: usize) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::InvalidArgument("cable width must be at least 1".into()));
    }
    let mut letters = Vec::with_capacity(n * n);
    for k in 0..n {
        letters.push(Letter::new(n, true));
        letters.extend((k + 1..n).rev().map(|i| Letter::new(i, true)));
        letters.extend((n + 1..2 * n - k).map(|i| Letter::new(i, true)));
    }
    BraidWord::new(2 * n, letters)
}

/// Replace every strand of `beta` by n parallel strands.
///
/// σ_j lifts to the band crossing of blocks j and j+1; σ_j⁻¹ lifts to the
/// inverse of that band, which keeps the lift multiplicative.
pub fn cable_lift(beta: &BraidWord, n: usize) -> Result<BraidWord> {
    let band = n_prime_sigma1(n)?;
    let m = beta.degree();
    let mut letters = Vec::with_capacity(beta.len() * n * n);
    for l in beta.letters() {
        let j = l.index();
        let piece = iota_embed(&band, n * (j - 1), n * (m - j - 1));
        let piece = if l.is_positive() { piece } else { piece.inverse() };
        letters.extend_from_slice(piece.letters());
    }
    BraidWord::new(n * m, letters)
}

/// ∏_j ι_{n(j-1)}^{n(m-j)}(blocks[j]): independent braids on consecutive
/// blocks of n strands.
pub fn block_product(blocks: &[BraidWord]) -> Result<BraidWord> {
    let m = blocks.len();
    let Some(first) = blocks.first() else {
        return Err(Error::InvalidArgument("no blocks".into()));
    };
    let n = first.degree();
    let mut out = BraidWord::identity(n * m);
    for (j, beta) in blocks.iter().enumerate() {
        if beta.degree() != n {
            return Err(Error::DegreeMismatch { left: beta.degree(), right: n });
        }
        out = out.product(&iota_embed(beta, n * j, n * (m - j - 1)))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::braids_equal;

    fn w(deg: usize, l: &[i32]) -> BraidWord {
        BraidWord::from_signed(deg, l).unwrap()
    }

    #[test]
    fn iota_shifts() {
        let b = w(3, &[1, -2]);
        assert_eq!(iota_embed(&b, 0, 0), b);
        assert_eq!(iota_embed(&w(2, &[1, 1]), 2, 0), w(4, &[3, 3]));
        assert_eq!(iota_embed(&w(2, &[1]), 1, 1), w(4, &[2]));
    }

    #[test]
    fn band_words() {
        assert_eq!(n_prime_sigma1(1).unwrap(), w(2, &[1]));
        assert_eq!(n_prime_sigma1(2).unwrap(), w(4, &[2, 1, 3, 2]));
        assert_eq!(n_prime_sigma1(3).unwrap(), w(6, &[3, 2, 1, 4, 5, 3, 2, 4, 3]));
        assert!(n_prime_sigma1(0).is_err());
    }

    #[test]
    fn lifts() {
        assert_eq!(cable_lift(&w(2, &[1, 1]), 2).unwrap(), w(4, &[2, 1, 3, 2]).pow(2));
        assert_eq!(cable_lift(&BraidWord::identity(3), 2).unwrap(), BraidWord::identity(6));
        let trivial = cable_lift(&w(2, &[1, -1]), 2).unwrap();
        assert!(braids_equal(&trivial, &BraidWord::identity(4)).unwrap());
        assert_eq!(cable_lift(&w(3, &[2, -1]), 1).unwrap(), w(3, &[2, -1]));
    }

    #[test]
    fn band_is_a_crossing_of_cables() {
        // every strand of the left block swaps with every strand of the right block
        for n in 1..5 {
            let p = n_prime_sigma1(n).unwrap().permutation();
            for k in 0..n {
                assert_eq!(p.image(k), k + n);
                assert_eq!(p.image(k + n), k);
            }
        }
    }
}
