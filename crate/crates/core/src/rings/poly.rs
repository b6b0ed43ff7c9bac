use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Quotient and remainder by a divisor whose leading coefficient is ±1,
    /// so the division stays inside `Z[x]`.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::arg("division by the zero polynomial"))?;
        if !lead.abs().is_one() {
            return Err(Error::arg("divisor must have leading coefficient ±1"));
        }
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] -= &q * c;
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Exact quotient; fails if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &IntPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPolynomial::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, by exact division
/// `Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::arg("cyclotomic index must be positive"));
    }
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut table: Vec<(usize, IntPolynomial)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let x_d_minus_1 = &IntPolynomial::monomial(d) - &IntPolynomial::one();
        let below = table
            .iter()
            .filter(|(e, _)| d % e == 0)
            .fold(IntPolynomial::one(), |acc, (_, p)| &acc * p);
        table.push((d, x_d_minus_1.exact_div(&below)?));
    }
    Ok(table.pop().expect("n is its own divisor").1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn totient(n: usize) -> usize {
        (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), IntPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), IntPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            IntPolynomial::from_i64s(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let phi = cyclotomic_polynomial(105).unwrap();
        assert!(phi.coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn cyclotomic_divides_x_n_minus_one() {
        for n in 1..=64 {
            let phi = cyclotomic_polynomial(n).unwrap();
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(totient(n)), "deg Φ_{n}");
            let target = &IntPolynomial::monomial(n) - &IntPolynomial::one();
            let (_, r) = target.div_rem(&phi).unwrap();
            assert!(r.is_zero(), "Φ_{n} ∤ x^{n} - 1");
        }
    }

    #[test]
    fn division_identity() {
        let a = IntPolynomial::from_i64s(&[3, -2, 0, 5, 1, 7]);
        let b = IntPolynomial::from_i64s(&[2, 1, -1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&IntPolynomial::from_i64s(&[1, 2])).is_err());
        assert!(a.div_rem(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn zero_polynomial_sentinel_and_display() {
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]).degree(), None);
        assert_eq!(IntPolynomial::from_i64s(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(IntPolynomial::from_i64s(&[-1, 2]).to_string(), "2*x - 1");
        assert_eq!(IntPolynomial::from_i64s(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }
}
