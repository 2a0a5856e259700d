use super::{Coefficient, Poly};
use crate::error::{Error, Result};

impl<C: Coefficient> Poly<C> {
    /// Returns `q` with `q * den == self`, or an error if no such `q` exists.
    ///
    /// Leading-term elimination under graded-lex order. When `den` divides
    /// `self`, every remainder's leading term is divisible by the leading term
    /// of `den`; any step where that fails proves the division inexact.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        self.check_ring(den)?;
        let (lm, lc) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m
                .checked_div(&lm)
                .ok_or_else(|| Error::InexactDivision(format!("leading monomial {m:?} not divisible by {lm:?}")))?;
            let qc = c
                .div_exact(&lc)
                .ok_or_else(|| Error::InexactDivision(format!("coefficient {c} not divisible by {lc}")))?;
            for (dm, dc) in den.terms() {
                rem.add_term(dm.mul(&qm), dc.mul_ref(&qc).neg_ref());
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::poly::UPoly;

    fn u(n: usize, i: usize) -> UPoly {
        UPoly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let num = &u(2, 0).pow(2) - &u(2, 1).pow(2);
        let den = &u(2, 0) - &u(2, 1);
        assert_eq!(num.divide_exact(&den).unwrap(), &u(2, 0) + &u(2, 1));
    }

    #[test]
    fn inexact_is_rejected() {
        let num = &u(2, 0) * &u(2, 1);
        let den = &u(2, 0) + &u(2, 1);
        assert!(matches!(num.divide_exact(&den), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn integer_coefficient_must_divide() {
        let num = u(2, 0);
        let den = u(2, 0).scale(&BigInt::from(2));
        assert!(matches!(num.divide_exact(&den), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(u(2, 0).divide_exact(&UPoly::zero(2)), Err(Error::DivisionByZero));
    }
}
