//! Integer Laurent polynomials in one variable t.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Σ coeffs[k] t^{low + k}. Kept trimmed: no zero coefficient at either
/// end, and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Laurent {
        Laurent::monomial(1, 0)
    }

    pub fn t() -> Laurent {
        Laurent::monomial(1, 1)
    }

    pub fn monomial(c: i64, exp: i64) -> Laurent {
        Laurent::new(exp, vec![BigInt::from(c)])
    }

    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Laurent {
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    /// From small integer coefficients starting at t^low.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Laurent {
        Laurent::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Laurent {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Substitute t ↦ t⁻¹.
    pub fn invert_variable(&self) -> Laurent {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent::new(-self.high_degree(), coeffs)
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let d = &divisor.coeffs;
        let lead = d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent::new(self.low - divisor.low, q))
    }

    /// Representative with lowest degree 0 and positive constant term.
    pub fn normalized(&self) -> Laurent {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.shift(-self.low);
        if p.coeffs[0].is_negative() {
            -p
        } else {
            p
        }
    }

    /// Sum of the coefficients, the value at t = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_degree().max(o.high_degree());
        let coeffs = (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Laurent::new(low, coeffs)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self + &(-o.clone())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::new(self.low + o.low, coeffs)
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr for Laurent {
            type Output = Laurent;
            fn $f(self, o: Laurent) -> Laurent {
                (&self).$f(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Display for Laurent {
    /// Highest power first: `t^2 - t + 1`, `3 - 2t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            let body = if var.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}{var}")
            };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<Laurent>]) -> Laurent {
    let n = matrix.len();
    if n == 0 {
        return Laurent::one();
    }
    let mut a: Vec<Vec<Laurent>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = Laurent::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Laurent::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Laurent::from_coeffs(0, &[1, -1, 1]);
        assert_eq!(p.to_string(), "t^2 - t + 1");
        let q = Laurent::from_coeffs(0, &[1, 1]);
        assert_eq!((&p * &q), Laurent::from_coeffs(0, &[1, 0, 0, 1]));
        assert_eq!((&p * &q).div_exact(&q), Some(p.clone()));
        assert_eq!(p.div_exact(&q), None);
        assert!((&p - &p).is_zero());
        assert_eq!(Laurent::from_coeffs(-1, &[-2, 3]).to_string(), "3 - 2t^-1");
        assert_eq!(Laurent::from_coeffs(-3, &[-1, 1]).normalized(), Laurent::from_coeffs(0, &[1, -1]));
    }

    #[test]
    fn small_determinants() {
        let m = vec![
            vec![Laurent::from_coeffs(0, &[0, 2]), Laurent::one()],
            vec![Laurent::one(), Laurent::from_coeffs(-1, &[1])],
        ];
        // 2t · t⁻¹ - 1 = 1
        assert!(determinant(&m).is_one());
        let z = vec![vec![Laurent::zero(), Laurent::one()], vec![Laurent::one(), Laurent::zero()]];
        assert_eq!(determinant(&z), -Laurent::one());
    }
}
