//! Smith normal form over the integers, exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of `rows`, with `d_1 | d_2 | …`, all
/// positive. Zero diagonal entries are omitted; the number of returned
/// entries is the rank.
pub fn smith_diagonal(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    for r in &a {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole remaining block
            let bad = (t + 1..nrows)
                .find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Free rank and torsion coefficients (each ≥ 2) of ℤ^ncols / row span.
pub fn cokernel(rows: &[Vec<BigInt>], ncols: usize) -> (usize, Vec<BigInt>) {
    let diag = smith_diagonal(rows, ncols);
    let free = ncols - diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    (free, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        let (f, t) = cokernel(&m(&[&[3]]), 1);
        assert_eq!((f, t), (0, vec![BigInt::from(3)]));
        let (f, t) = cokernel(&m(&[&[2, 0], &[0, 3]]), 2);
        assert_eq!((f, t), (0, vec![BigInt::from(6)]));
        let (f, t) = cokernel(&m(&[&[4, 4]]), 2);
        assert_eq!((f, t), (1, vec![BigInt::from(4)]));
        let (f, t) = cokernel(&[], 3);
        assert_eq!((f, t), (3, vec![]));
        let (f, t) = cokernel(&m(&[&[0, 0]]), 2);
        assert_eq!((f, t), (2, vec![]));
    }

    #[test]
    fn divisibility_chain() {
        let d = smith_diagonal(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }
}
