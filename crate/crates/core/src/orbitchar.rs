//! Weyl-orbit characters as class functions.
//!
//! The orbit character of the dominant weight labelled by a partition is the
//! monomial symmetric polynomial `K_(q1..qk)(u_1..u_N)`: every distinct
//! monomial `u_{j1}^{q1} ... u_{jk}^{qk}` with distinct indices, once. These
//! are reduced to products of power sums `K(Q)` (the generators) and then
//! mapped to the x side by `K(Q) -> Q x_Q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::lattice::{next_permutation, AlgebraContext};
use crate::partition::Partition;
use crate::poly::{rational, Monomial, UPoly, XPoly};
use crate::schur::SchurContext;

pub use crate::schur::degenerate_x;

/// Rational combination of generator products `K(Q_1) ... K(Q_m)`.
///
/// Each product is keyed by its factors sorted descending; the empty key is
/// the constant 1.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorExpr {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl GeneratorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::product(Vec::new(), BigRational::one())
    }

    /// The single generator `K(q)`.
    pub fn generator(q: u32) -> Self {
        Self::product(vec![q], BigRational::one())
    }

    /// `coeff * K(factors[0]) * K(factors[1]) * ...`
    pub fn product(mut factors: Vec<u32>, coeff: BigRational) -> Self {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        let mut g = GeneratorExpr::zero();
        g.add_term(factors, coeff);
        g
    }

    fn add_term(&mut self, key: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = GeneratorExpr::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Multiplies by the generator `K(q)`.
    pub fn mul_generator(&self, q: u32) -> Self {
        let mut out = GeneratorExpr::zero();
        for (k, v) in &self.terms {
            let mut key = k.clone();
            let pos = key.iter().position(|&f| f < q).unwrap_or(key.len());
            key.insert(pos, q);
            out.add_term(key, v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GeneratorExpr::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut key: Vec<u32> = ka.iter().chain(kb.iter()).copied().collect();
                key.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(key, va * vb);
            }
        }
        out
    }
}

impl fmt::Display for GeneratorExpr {
    /// `1/2*K(3)^2 - 1/2*K(6)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| b.0.cmp(a.0)));
        for (i, (key, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if key.is_empty() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut j = 0;
            let mut first = true;
            while j < key.len() {
                let run = key[j..].iter().take_while(|&&q| q == key[j]).count();
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "K({})", key[j])?;
                if run > 1 {
                    write!(f, "^{run}")?;
                }
                j += run;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorExpr({self})")
    }
}

/// `K_(q1..qk)(u_1..u_N)` as the monomial symmetric polynomial. Zero when the
/// partition has more than N rows.
pub fn orbit_char_u(p: &Partition, ctx: AlgebraContext) -> UPoly {
    let n = ctx.n();
    if p.len() > n {
        return UPoly::zero(n);
    }
    let mut v = p.padded(n);
    v.sort_unstable();
    let mut out = UPoly::zero(n);
    loop {
        out.add_term(Monomial::new(v.clone()), BigInt::one());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

/// Expresses `K_(q1..qk)` through the generators, independently of N.
///
/// Writing `lambda = (q1) + mu` with `q1` the largest part,
/// `K(q1) K_mu = r K_lambda + sum_b c_b K_{mu with one part b raised to b + q1}`,
/// where `r` is the multiplicity of `q1` in `lambda` and `c_b` the
/// multiplicity of `b + q1` in the merged partition. Solving for `K_lambda`
/// and recursing terminates because every partition on the right is shorter.
pub fn reduce_to_generators(p: &Partition) -> GeneratorExpr {
    let mut memo = HashMap::new();
    reduce_rec(p, &mut memo)
}

fn reduce_rec(p: &Partition, memo: &mut HashMap<Partition, GeneratorExpr>) -> GeneratorExpr {
    if p.is_empty() {
        return GeneratorExpr::one();
    }
    if p.len() == 1 {
        return GeneratorExpr::generator(p.part(0));
    }
    if let Some(g) = memo.get(p) {
        return g.clone();
    }
    let parts = p.parts();
    let top = parts[0];
    let rest = Partition::from_unsorted(parts[1..].to_vec());
    let mut acc = reduce_rec(&rest, memo).mul_generator(top);
    let mut distinct: Vec<u32> = rest.parts().to_vec();
    distinct.dedup();
    for b in distinct {
        let mut merged = rest.parts().to_vec();
        let pos = merged.iter().position(|&x| x == b).expect("part present");
        merged[pos] = b + top;
        let merged = Partition::from_unsorted(merged);
        let c = merged.multiplicity(b + top) as i64;
        acc = acc.sub(&reduce_rec(&merged, memo).scale(&rational(c, 1)));
    }
    let r = p.multiplicity(top) as i64;
    let g = acc.scale(&rational(1, r));
    memo.insert(p.clone(), g.clone());
    g
}

/// Substitutes `K(Q) -> Q x_Q`, using the degenerated `x_Q` for `Q >= N`.
/// `K(0)` is taken to be 1.
pub fn generator_to_x(g: &GeneratorExpr, sctx: &SchurContext) -> XPoly {
    let nv = sctx.nvars();
    let mut out = XPoly::zero(nv);
    let mut images: HashMap<u32, XPoly> = HashMap::new();
    for (key, c) in g.terms() {
        let mut t = XPoly::constant(nv, c.clone());
        for &q in key {
            if q == 0 {
                continue;
            }
            let img = images.entry(q).or_insert_with(|| sctx.power_sum(q));
            t = &t * img;
        }
        out = &out + &t;
    }
    out
}

/// The orbit character on the x side: `generator_to_x(reduce_to_generators(p))`.
pub fn orbit_char_x(p: &Partition, sctx: &SchurContext) -> Result<XPoly> {
    Ok(generator_to_x(&reduce_to_generators(p), sctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(n: usize) -> AlgebraContext {
        AlgebraContext::new(n).unwrap()
    }

    #[test]
    fn orbit_char_u_examples() {
        assert_eq!(orbit_char_u(&p("1"), ctx(3)).to_string(), "u1 + u2 + u3");
        assert_eq!(orbit_char_u(&p("1,1,1"), ctx(3)).to_string(), "u1*u2*u3");
        let k21 = orbit_char_u(&p("2,1"), ctx(3));
        assert_eq!(k21.len(), 6);
        assert!(k21.terms().all(|(_, c)| c.is_one()));
        assert_eq!(k21.to_string(), "u1^2*u2 + u1^2*u3 + u1*u2^2 + u1*u3^2 + u2^2*u3 + u2*u3^2");
        assert!(orbit_char_u(&p("1,1,1,1"), ctx(3)).is_zero());
    }

    #[test]
    fn two_part_rules() {
        let g = reduce_to_generators(&p("3,1"));
        assert_eq!(g.to_string(), "K(3)*K(1) - K(4)");
        let g = reduce_to_generators(&p("2,2"));
        assert_eq!(g.to_string(), "1/2*K(2)^2 - 1/2*K(4)");
    }

    #[test]
    fn generator_display() {
        let g = GeneratorExpr::product(vec![1, 3, 1], rational(-2, 3)).add(&GeneratorExpr::one());
        assert_eq!(g.to_string(), "-2/3*K(3)*K(1)^2 + 1");
    }

    #[test]
    fn generator_to_x_examples() {
        let c = SchurContext::with_rank(4).unwrap();
        assert_eq!(generator_to_x(&GeneratorExpr::generator(1), &c).to_string(), "x1");
        let g = GeneratorExpr::product(vec![2, 1], BigRational::one());
        assert_eq!(generator_to_x(&g, &c).to_string(), "2*x1*x2");
        let c6 = SchurContext::with_rank(6).unwrap();
        assert!(orbit_char_x(&p("1,1,1,1,1,1"), &c6).unwrap().is_one());
        assert_eq!(orbit_char_x(&p("2,1,1,1,1,1"), &c6).unwrap().to_string(), "x1");
    }

    #[test]
    fn too_long_vanishes_on_x_side() {
        let c = SchurContext::with_rank(3).unwrap();
        for s in ["1,1,1,1", "2,1,1,1", "1,1,1,1,1"] {
            assert!(orbit_char_x(&p(s), &c).unwrap().is_zero(), "{s}");
        }
    }
}
