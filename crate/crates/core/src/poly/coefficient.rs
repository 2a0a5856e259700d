use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient domain of a polynomial ring.
///
/// Integers back the u-side (orbit characters, alternants); rationals back the
/// x-side (Schur functions). The variable symbol is tied to the domain so that
/// a printed polynomial always says which side it lives on.
pub trait Coefficient: Clone + PartialEq + Eq + Debug + Display + Zero + One + Send + Sync + 'static {
    const VAR: &'static str;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / other` when the quotient stays in the domain.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn is_negative(&self) -> bool;
}

impl Coefficient for BigInt {
    const VAR: &'static str = "u";

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Coefficient for BigRational {
    const VAR: &'static str = "x";

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
