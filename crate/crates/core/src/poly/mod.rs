//! Sparse multivariate polynomials with exact coefficients.
//!
//! [`XPoly`] (rational coefficients, variables `x1..x{N-1}`) carries Schur
//! functions and orbit characters after the power-sum substitution.
//! [`UPoly`] (integer coefficients, variables `u1..uN`) carries orbit
//! characters and alternants. Terms live in a `BTreeMap` keyed by graded-lex
//! [`Monomial`], so structural equality is polynomial equality.

mod coefficient;
mod division;
mod matrix;
mod monomial;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub use coefficient::{rational, Coefficient};
pub use matrix::{det, det_bareiss, det_cofactor, PolyMatrix, COFACTOR_MAX_DIM};
pub use monomial::Monomial;

pub type XPoly = Poly<BigRational>;
pub type UPoly = Poly<BigInt>;

/// Products with more term pairs than this are split across threads.
#[cfg(feature = "parallel")]
const PAR_MUL_THRESHOLD: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C: Coefficient> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The polynomial `x_{var+1}` (0-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::term(Monomial::var(nvars, var, 1), C::one())
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial ring size");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree. Must not be called on the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().expect("degree of the zero polynomial is undefined").degree()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        #[cfg(feature = "parallel")]
        if small.len() * large.len() > PAR_MUL_THRESHOLD && small.len() > 1 {
            return par_mul(small, large);
        }
        let mut out = Poly::zero(self.nvars);
        mul_into(&mut out, small.terms.iter(), large);
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul_ref(c))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.mul_ref(c))).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies the variable permutation `x_i -> x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        Poly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())))
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute_vars(&perm)
    }

    /// Invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// Replaces every variable `x_i` by `-x_i`.
    pub fn negate_vars(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.degree() % 2 == 1 { c.neg_ref() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Embeds into a ring with `nvars` variables, which must not drop any used variable.
    pub fn extend_ring(&self, nvars: usize) -> Option<Self> {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.len() > nvars && e[nvars..].iter().any(|&x| x != 0) {
                return None;
            }
            let mut v = vec![0; nvars];
            let k = e.len().min(nvars);
            v[..k].copy_from_slice(&e[..k]);
            out.terms.insert(Monomial::new(v), c.clone());
        }
        Some(out)
    }

    /// Substitutes `images[i]` for variable `i`; all images share one ring.
    pub fn substitute<D: Coefficient>(&self, images: &[Poly<D>], lift: impl Fn(&C) -> D) -> Poly<D> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<Poly<D>>> = images.iter().map(|p| vec![Poly::one(p.nvars), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, lift(c));
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (k, v) in t.terms {
                out.add_term(k, v);
            }
        }
        out
    }

    pub fn display(&self) -> PolyDisplay<'_, C> {
        PolyDisplay { poly: self, var: C::VAR }
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, C> {
        PolyDisplay { poly: self, var }
    }
}

fn mul_into<'a, C: Coefficient>(out: &mut Poly<C>, lhs: impl Iterator<Item = (&'a Monomial, &'a C)>, rhs: &Poly<C>) {
    for (ma, ca) in lhs {
        for (mb, cb) in &rhs.terms {
            out.add_term(ma.mul(mb), ca.mul_ref(cb));
        }
    }
}

#[cfg(feature = "parallel")]
fn par_mul<C: Coefficient>(small: &Poly<C>, large: &Poly<C>) -> Poly<C> {
    use rayon::prelude::*;

    let lhs: Vec<(&Monomial, &C)> = small.terms.iter().collect();
    let chunk = lhs.len().div_ceil(rayon::current_num_threads().max(1)).max(1);
    lhs.par_chunks(chunk)
        .map(|part| {
            let mut acc = Poly::zero(small.nvars);
            mul_into(&mut acc, part.iter().copied(), large);
            acc
        })
        .reduce(
            || Poly::zero(small.nvars),
            |mut a, b| {
                for (m, c) in b.terms {
                    a.add_term(m, c);
                }
                a
            },
        )
}

impl XPoly {
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64, i64)]) -> Self {
        Poly::from_terms(nvars, terms.iter().map(|(e, n, d)| (Monomial::new(e.to_vec()), rational(*n, *d))))
    }
}

impl UPoly {
    /// Lifts to rational coefficients.
    pub fn to_rational(&self) -> Poly<BigRational> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Coefficient> std::ops::$tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<C: Coefficient> std::ops::$tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> std::ops::Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }
}

pub struct PolyDisplay<'a, C: Coefficient> {
    poly: &'a Poly<C>,
    var: &'a str,
}

impl<C: Coefficient> fmt::Display for PolyDisplay<'_, C> {
    /// Leading term first; coefficients printed as `a/b*x1^2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.fmt_with(f, self.var)?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display().fmt(f)
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self.display())
    }
}
