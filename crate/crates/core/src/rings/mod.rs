//! Exact coefficient rings.
//!
//! A [`Ring`] is a context object that knows how to combine its elements.
//! Integers and rationals need no state; the cyclotomic ring carries its
//! modulus `Φ_n` so that elements can be reduced after every product.

mod cyclotomic;
mod linear;
mod poly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cyclotomic::{cyclo_mul, power_sum_at_roots, Cyclotomic, CyclotomicRing};
pub use linear::solve_linear_exact;
pub use poly::{cyclotomic_polynomial, IntPolynomial};

use crate::partition::Partition;

/// A commutative ring with exact equality.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of an integer under the unique ring map from `Z`.
    fn integer(&self, n: &BigInt) -> Self::Elem;

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// Arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add_assign(&self, acc: &mut BigInt, b: &BigInt) {
        *acc += b;
    }
}

/// Exact rationals, always in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
}

/// `p_λ(x) = ∏_{k ∈ λ} Σ_i x_i^k`; the empty partition gives 1.
pub fn eval_power_sum(lambda: &Partition, x: &[BigInt]) -> BigInt {
    lambda
        .parts()
        .iter()
        .map(|&k| x.iter().map(|xi| xi.pow(k as u32)).sum::<BigInt>())
        .product()
}
