use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{cyclotomic_polynomial, IntPolynomial};
use super::Ring;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct Modulus {
    n: usize,
    phi: IntPolynomial,
}

/// The ring `Z[ζ_n] = Z[x] / (Φ_n(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    modulus: Arc<Modulus>,
}

/// An element of `Z[ζ_n]`, stored as its reduced coefficient vector of
/// length `deg Φ_n`, lowest power first.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    modulus: Arc<Modulus>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.modulus.n == other.modulus.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl CyclotomicRing {
    pub fn new(n: usize) -> Result<Self> {
        let phi = cyclotomic_polynomial(n)?;
        Ok(CyclotomicRing {
            modulus: Arc::new(Modulus { n, phi }),
        })
    }

    pub fn order(&self) -> usize {
        self.modulus.n
    }

    /// `deg Φ_n`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.modulus.phi.coeffs().len() - 1
    }

    pub fn modulus_polynomial(&self) -> &IntPolynomial {
        &self.modulus.phi
    }

    /// Reduces an arbitrary-length coefficient vector modulo `Φ_n`.
    pub fn from_coeffs(&self, coeffs: &[BigInt]) -> Cyclotomic {
        self.reduce(coeffs.to_vec())
    }

    /// `ζ^k`.
    pub fn zeta_pow(&self, k: usize) -> Cyclotomic {
        let mut coeffs = vec![BigInt::zero(); k % self.modulus.n + 1];
        coeffs[k % self.modulus.n] = BigInt::from(1);
        self.reduce(coeffs)
    }

    pub fn zeta(&self) -> Cyclotomic {
        self.zeta_pow(1)
    }

    fn reduce(&self, mut coeffs: Vec<BigInt>) -> Cyclotomic {
        let phi = self.modulus.phi.coeffs();
        let d = phi.len() - 1;
        // Φ_n is monic, so each top coefficient cancels against a shifted copy.
        for i in (d..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let top = std::mem::take(&mut coeffs[i]);
            for (j, c) in phi[..d].iter().enumerate() {
                if !c.is_zero() {
                    coeffs[i - d + j] -= &top * c;
                }
            }
        }
        coeffs.resize(d, BigInt::zero());
        Cyclotomic {
            modulus: Arc::clone(&self.modulus),
            coeffs,
        }
    }

    fn check(&self, a: &Cyclotomic) {
        debug_assert_eq!(self.modulus.n, a.modulus.n, "element from a different cyclotomic ring");
    }
}

impl Cyclotomic {
    pub fn order(&self) -> usize {
        self.modulus.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn ring(&self) -> CyclotomicRing {
        CyclotomicRing {
            modulus: Arc::clone(&self.modulus),
        }
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.coeffs.split_first() {
            None => Some(BigInt::zero()),
            Some((c0, rest)) if rest.iter().all(Zero::is_zero) => Some(c0.clone()),
            Some(_) => None,
        }
    }

    fn same_ring(&self, other: &Cyclotomic) -> Result<()> {
        if self.modulus.n != other.modulus.n {
            return Err(Error::ModulusMismatch {
                left: self.modulus.n,
                right: other.modulus.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.same_ring(other)?;
        Ok(self.ring().add(self, other))
    }

    pub fn checked_mul(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        self.same_ring(other)?;
        Ok(self.ring().mul(self, other))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = IntPolynomial::new(self.coeffs.clone());
        let text = poly.to_string().replace('x', "ζ");
        write!(f, "{text}")
    }
}

impl Ring for CyclotomicRing {
    type Elem = Cyclotomic;

    fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            modulus: Arc::clone(&self.modulus),
            coeffs: vec![BigInt::zero(); self.degree()],
        }
    }

    fn one(&self) -> Cyclotomic {
        self.integer(&BigInt::from(1))
    }

    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        self.check(a);
        self.check(b);
        Cyclotomic {
            modulus: Arc::clone(&self.modulus),
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn add_assign(&self, acc: &mut Cyclotomic, b: &Cyclotomic) {
        self.check(acc);
        self.check(b);
        for (x, y) in acc.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
    }

    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        self.check(a);
        self.check(b);
        let d = self.degree();
        let mut out = vec![BigInt::zero(); (2 * d).saturating_sub(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            modulus: Arc::clone(&self.modulus),
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.coeffs.iter().all(Zero::is_zero)
    }

    fn integer(&self, n: &BigInt) -> Cyclotomic {
        let mut z = self.zero();
        if let Some(c0) = z.coeffs.first_mut() {
            *c0 = n.clone();
        }
        z
    }
}

/// Product in `Z[ζ_n]`; both factors must share the same `n`.
pub fn cyclo_mul(a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
    a.checked_mul(b)
}

/// `Σ_{j=1..n} ζ^{jk}` in `Z[ζ_n]`, for `1 ≤ k ≤ n`.
pub fn power_sum_at_roots(k: usize, n: usize) -> Result<Cyclotomic> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::arg(format!("power sum index {k} outside 1..={n}")));
    }
    let ring = CyclotomicRing::new(n)?;
    let mut acc = ring.zero();
    for j in 1..=n {
        ring.add_assign(&mut acc, &ring.zeta_pow(j * k));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(i: i64) -> BigInt {
        BigInt::from(i)
    }

    #[test]
    fn zeta_satisfies_phi() {
        for n in 1..=30 {
            let ring = CyclotomicRing::new(n).unwrap();
            let zeta = ring.zeta();
            let mut acc = ring.zero();
            let mut power = ring.one();
            for c in ring.modulus_polynomial().coeffs() {
                acc = ring.add(&acc, &ring.mul(&ring.integer(c), &power));
                power = ring.mul(&power, &zeta);
            }
            assert!(ring.is_zero(&acc), "Φ_{n}(ζ) ≠ 0");
            assert_eq!(ring.zeta_pow(n), ring.one());
        }
    }

    #[test]
    fn cyclo_mul_examples() {
        let r4 = CyclotomicRing::new(4).unwrap();
        let z = r4.zeta();
        assert_eq!(cyclo_mul(&z, &z).unwrap(), r4.integer(&int(-1)));

        let r3 = CyclotomicRing::new(3).unwrap();
        assert_eq!(cyclo_mul(&r3.zeta_pow(2), &r3.zeta()).unwrap(), r3.one());

        let r5 = CyclotomicRing::new(5).unwrap();
        let one_plus_zeta = r5.add(&r5.one(), &r5.zeta());
        assert_eq!(cyclo_mul(&one_plus_zeta, &r5.one()).unwrap(), one_plus_zeta);

        assert!(matches!(
            cyclo_mul(&r4.zeta(), &r5.zeta()),
            Err(Error::ModulusMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum_at_roots(1, 4).unwrap().as_integer(), Some(int(0)));
        assert_eq!(power_sum_at_roots(4, 4).unwrap().as_integer(), Some(int(4)));
        assert_eq!(power_sum_at_roots(2, 4).unwrap().as_integer(), Some(int(0)));
        assert!(power_sum_at_roots(0, 4).is_err());
        assert!(power_sum_at_roots(5, 4).is_err());
    }

    #[test]
    fn power_sum_vanishing() {
        for n in 1..=24 {
            for k in 1..n {
                assert_eq!(power_sum_at_roots(k, n).unwrap().as_integer(), Some(int(0)), "k={k} n={n}");
            }
            assert_eq!(power_sum_at_roots(n, n).unwrap().as_integer(), Some(int(n as i64)));
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let ring = CyclotomicRing::new(6).unwrap();
        // ζ^2 = ζ - 1 in Z[ζ_6]
        assert_eq!(ring.zeta_pow(2), ring.from_coeffs(&[int(-1), int(1)]));
        assert_eq!(ring.zeta_pow(2).to_string(), "ζ - 1");
        assert_eq!(ring.zeta_pow(8).coeffs().len(), 2);
        assert_eq!(ring.zeta().as_integer(), None);
    }
}
