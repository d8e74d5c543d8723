//! Coefficient fields with derivations and a translation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field carrying commuting derivations `delta_1..delta_m` and an
/// injective endomorphism `sigma`.
///
/// Implementations must be stateless: all methods are pure.
pub trait CoeffField: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// The action of `delta_k` (1-based).
    fn derive(&self, k: usize) -> Self;
    /// The action of `sigma`.
    fn shift(&self) -> Self;
    fn from_integer(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Whether the rendered form needs a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

/// Rational constants: every derivation acts as zero and `sigma` as the
/// identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QConstants(pub BigRational);

impl QConstants {
    pub fn new(num: i64, den: i64) -> Self {
        QConstants(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Debug for QConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for QConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl CoeffField for QConstants {
    fn zero() -> Self {
        QConstants(BigRational::zero())
    }
    fn one() -> Self {
        QConstants(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        QConstants(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        QConstants(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        QConstants(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        QConstants(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| QConstants(self.0.recip()))
    }
    fn derive(&self, _k: usize) -> Self {
        Self::zero()
    }
    fn shift(&self) -> Self {
        self.clone()
    }
    fn from_integer(v: i64) -> Self {
        QConstants(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<BigRational> for QConstants {
    fn from(v: BigRational) -> Self {
        QConstants(v)
    }
}
