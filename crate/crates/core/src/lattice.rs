//! Weight-lattice bookkeeping for A_{N-1}.
//!
//! Weights are held in the basis of the N weights of the defining
//! representation (`mu_1..mu_N`, summing to zero). A weight is then an integer
//! N-vector defined up to adding a constant to every entry; the canonical
//! representative has minimum entry zero. Dominant weights are weakly
//! decreasing vectors, i.e. partitions with fewer than N rows, and the Weyl
//! group acts by permuting entries.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// The rank datum: the algebra is A_{N-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraContext {
    n: usize,
}

impl AlgebraContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(AlgebraContext { n })
    }

    /// Number of `u` indeterminates, `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Lie rank `N - 1`, also the number of independent `x` indeterminates.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn name(&self) -> String {
        format!("A{}", self.n - 1)
    }

    /// Weyl vector `lambda_1 + ... + lambda_{N-1}`.
    pub fn rho(&self) -> DominantWeight {
        DominantWeight { ctx: *self, coords: vec![1; self.rank()] }
    }
}

/// Dominant weight given by its coordinates over `lambda_1..lambda_{N-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    ctx: AlgebraContext,
    coords: Vec<u32>,
}

impl DominantWeight {
    pub fn new(ctx: AlgebraContext, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != ctx.rank() {
            return Err(Error::InvalidWeight(format!(
                "{} expects {} lambda coordinates, got {}",
                ctx.name(),
                ctx.rank(),
                coords.len()
            )));
        }
        Ok(DominantWeight { ctx, coords })
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        DominantWeight { ctx, coords: vec![0; ctx.rank()] }
    }

    /// `lambda_i`, 1-based.
    pub fn fundamental(ctx: AlgebraContext, i: usize) -> Result<Self> {
        if i == 0 || i > ctx.rank() {
            return Err(Error::InvalidWeight(format!("lambda_{i} does not exist in {}", ctx.name())));
        }
        let mut coords = vec![0; ctx.rank()];
        coords[i - 1] = 1;
        Ok(DominantWeight { ctx, coords })
    }

    /// Pads `p` to N entries, removes full columns, and reads off
    /// `lambda_i = q_i - q_{i+1}`.
    pub fn from_partition(p: &Partition, ctx: AlgebraContext) -> Result<Self> {
        let n = ctx.n();
        if p.len() > n {
            return Err(Error::TooManyRows { parts: p.parts().to_vec(), len: p.len(), n });
        }
        let q = p.padded(n);
        let coords = (0..n - 1).map(|i| q[i] - q[i + 1]).collect();
        Ok(DominantWeight { ctx, coords })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Canonical mu-exponent vector (length N, last entry zero).
    pub fn mu_vector(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.ctx.n()];
        for i in (0..self.ctx.rank()).rev() {
            v[i] = v[i + 1] + self.coords[i];
        }
        v
    }

    /// The reduced partition (fewer than N rows) labelling this weight.
    pub fn mu_partition(&self) -> Partition {
        Partition::from_unsorted(self.mu_vector())
    }

    pub fn height(&self) -> u32 {
        self.mu_vector().iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinates over the simple roots; denominators divide N.
    pub fn alpha_coords(&self) -> Vec<BigRational> {
        let n = self.ctx.n() as i64;
        let mu = self.mu_vector();
        let h: i64 = mu.iter().map(|&m| m as i64).sum();
        let mut acc = BigRational::from_integer(BigInt::from(0));
        let mut out = Vec::with_capacity(self.ctx.rank());
        for &m in &mu[..self.ctx.rank()] {
            acc += BigRational::new(BigInt::from(m as i64 * n - h), BigInt::from(n));
            out.push(acc.clone());
        }
        out
    }

    pub fn as_weight(&self) -> Weight {
        Weight::from_mu(self.mu_vector().iter().map(|&m| m as i64).collect())
    }

    /// Every distinct permutation of the mu-exponent vector, once each, in
    /// increasing lexicographic order.
    pub fn orbit_weights(&self) -> Vec<Weight> {
        let mut v: Vec<i64> = self.mu_vector().iter().map(|&m| m as i64).collect();
        v.sort_unstable();
        let mut out = vec![Weight { mu: v.clone() }];
        while next_permutation(&mut v) {
            out.push(Weight { mu: v.clone() });
        }
        out
    }

    /// `N! / prod_v (mult v)!` over the values of the mu-exponent vector.
    pub fn orbit_size(&self) -> u64 {
        multiset_permutations(&self.mu_vector())
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.ctx.name(), self.coords)
    }
}

impl fmt::Display for DominantWeight {
    /// `5λ1+λ2`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "λ{}", i + 1)?;
        }
        Ok(())
    }
}

/// An arbitrary weight as a mu-exponent vector with minimum entry zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    mu: Vec<i64>,
}

impl Weight {
    /// Canonicalizes by shifting so the minimum entry is zero.
    pub fn from_mu(mut mu: Vec<i64>) -> Self {
        if let Some(&min) = mu.iter().min() {
            for m in &mut mu {
                *m -= min;
            }
        }
        Weight { mu }
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// Coordinates over the fundamental dominant weights.
    pub fn lambda_coords(&self) -> Vec<i64> {
        self.mu.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.mu.windows(2).all(|w| w[0] >= w[1])
    }

    /// The unique dominant weight in this weight's Weyl orbit.
    pub fn dominant(&self, ctx: AlgebraContext) -> DominantWeight {
        let mut v = self.mu.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let coords = v.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
        DominantWeight { ctx, coords }
    }
}

/// One row of `Sub(Q lambda_1)`: a partition of Q with at most N rows and
/// the dominant weight it labels after removing full columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubEntry {
    pub partition: Partition,
    pub weight: DominantWeight,
}

/// `Sub(Q lambda_1)`: partitions of exactly Q with at most N rows, ordered by
/// length and then decreasing lexicographically.
pub fn sub_q_lambda1(q: u32, ctx: AlgebraContext) -> Vec<SubEntry> {
    let mut ps = partitions(q, ctx.n());
    ps.sort_by_key(Partition::len);
    ps.into_iter()
        .map(|p| {
            let weight = DominantWeight::from_partition(&p, ctx).expect("at most N rows");
            SubEntry { partition: p, weight }
        })
        .collect()
}

/// Rearranges into the next lexicographic permutation; false when `v` was the last.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn multiset_permutations(values: &[u32]) -> u64 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut result: u64 = 1;
    let mut run = 0u64;
    for (i, v) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *v { run + 1 } else { 1 };
        // result *= (i+1) / run, kept integral by multiplying first.
        result = result * (i as u64 + 1) / run;
    }
    result
}
