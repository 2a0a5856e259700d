use std::cmp::Ordering;
use std::fmt;

/// Exponent vector over a fixed number of variables.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the first variable, then the second, and so on. The largest monomial of a
/// polynomial under this order is its leading monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    /// The monomial `var^exp` in a ring of `nvars` variables (0-based index).
    pub fn var(nvars: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[var] = exp;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree with variable `i` (0-based) weighted by `i + 1`.
    pub fn weighted_degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial::new)
    }

    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.nvars()];
        for (i, &p) in perm.iter().enumerate() {
            e[p] = self.0[i];
        }
        Monomial::new(e)
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{var}{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::new(vec![1, 0]);
        let x2 = Monomial::new(vec![0, 1]);
        let x1sq = Monomial::new(vec![2, 0]);
        let x1x2 = Monomial::new(vec![1, 1]);
        assert!(x2 < x1);
        assert!(x1 < x1x2);
        assert!(x1x2 < x1sq);
        assert!(Monomial::one(2) < x2);
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![2, 1]);
        let b = Monomial::new(vec![1, 1]);
        assert_eq!(a.checked_div(&b), Some(Monomial::new(vec![1, 0])));
        assert_eq!(b.checked_div(&a), None);
    }
}
