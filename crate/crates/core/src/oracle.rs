//! Independent ground truth for weight multiplicities.
//!
//! Nothing in this module touches Schur functions, the generator reduction
//! or the multiplicity solver; it depends only on the lattice types and the
//! polynomial container. Everything here is exponential and meant for small
//! ranks and heights.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{AlgebraContext, DominantWeight, Weight};
use crate::partition::{partitions, Partition};
use crate::poly::{Monomial, UPoly};

/// Multiplicity of every weight of one irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicityMap {
    pub highest_weight: DominantWeight,
    pub weights: BTreeMap<Weight, u64>,
}

impl WeightMultiplicityMap {
    pub fn get(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Multiplicity of a dominant weight; zero if it does not occur.
    pub fn dominant(&self, w: &DominantWeight) -> u64 {
        self.get(&w.as_weight())
    }

    /// Sum of all multiplicities, the dimension of the representation.
    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    /// Weyl invariance: every weight shares its multiplicity with the
    /// dominant weight of its orbit.
    pub fn is_weyl_invariant(&self) -> bool {
        let ctx = self.highest_weight.ctx();
        self.weights.iter().all(|(w, &m)| self.dominant(&w.dominant(ctx)) == m)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Freudenthal's recursion, top-down over the dominant weights.
///
/// Weights are N-vectors with the same coordinate sum as the highest weight,
/// so the Euclidean inner product on them differs from the Killing form only
/// by terms that cancel in every difference used below:
///
/// `(|L + rho|^2 - |mu + rho|^2) m(mu)
///     = 2 sum_{i<j} sum_{k>=1} m(mu + k(e_i - e_j)) (mu_i - mu_j + 2k)`.
pub fn freudenthal(hw: &DominantWeight) -> WeightMultiplicityMap {
    let ctx = hw.ctx();
    let n = ctx.n();
    let top: Vec<i64> = hw.mu_vector().iter().map(|&v| v as i64).collect();
    let h = top.iter().sum::<i64>() as u32;
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_norm = dot(&shifted(&top), &shifted(&top));
    let top_partition = Partition::from_unsorted(hw.mu_vector());

    // Dominant candidates: partitions of h with at most N rows, in
    // decreasing lexicographic order, which refines dominance.
    let mut dom: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for p in partitions(h, n) {
        if !top_partition.dominates(&p) {
            continue;
        }
        let mu: Vec<i64> = p.padded(n).iter().map(|&v| v as i64).collect();
        if mu == top {
            dom.insert(mu, 1);
            continue;
        }
        let mut acc: i64 = 0;
        for i in 0..n {
            for j in i + 1..n {
                let mut k = 1;
                loop {
                    let mut nu = mu.clone();
                    nu[i] += k;
                    nu[j] -= k;
                    if nu[j] < 0 {
                        break;
                    }
                    let mut key = nu.clone();
                    key.sort_unstable_by(|a, b| b.cmp(a));
                    if let Some(&m) = dom.get(&key) {
                        acc += m as i64 * (mu[i] - mu[j] + 2 * k);
                    }
                    k += 1;
                }
            }
        }
        let denom = top_norm - dot(&shifted(&mu), &shifted(&mu));
        assert!(denom > 0, "Freudenthal denominator vanished at {mu:?}");
        assert_eq!((2 * acc) % denom, 0, "Freudenthal recursion not integral at {mu:?}");
        let m = (2 * acc / denom) as u64;
        if m > 0 {
            dom.insert(mu, m);
        }
    }

    let mut weights = BTreeMap::new();
    for (mu, m) in dom {
        let w = Weight::from_mu(mu).dominant(ctx);
        for o in w.orbit_weights() {
            weights.insert(o, m);
        }
    }
    WeightMultiplicityMap { highest_weight: hw.clone(), weights }
}

/// Number of semistandard tableaux of `shape` with `content[i]` entries equal
/// to `i + 1`: rows weakly increase, columns strictly increase.
pub fn kostka(shape: &Partition, content: &[u32]) -> Result<u64> {
    if shape.weight() != content.iter().sum::<u32>() {
        return Err(Error::ContentMismatch { shape: shape.parts().to_vec(), content: content.to_vec() });
    }
    let rows = shape.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r as usize]).collect();
    let mut remaining = content.to_vec();
    let cells: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j))).collect();
    Ok(fill_tableau(&cells, 0, &mut grid, &mut remaining))
}

fn fill_tableau(cells: &[(usize, usize)], at: usize, grid: &mut [Vec<usize>], remaining: &mut [u32]) -> u64 {
    let Some(&(i, j)) = cells.get(at) else {
        return 1;
    };
    let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
    let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
    let mut count = 0;
    for v in lo_row.max(lo_col)..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        grid[i][j] = v;
        count += fill_tableau(cells, at + 1, grid, remaining);
        remaining[v] += 1;
    }
    count
}

/// Multiplicity of `w` in `R(hw)` as a Kostka number. The content is the
/// mu-vector of `w` with full columns added back until its size matches the
/// shape; weights in another congruence class, or higher than the shape, get 0.
pub fn kostka_multiplicity(hw: &DominantWeight, w: &DominantWeight) -> Result<u64> {
    let shape = hw.mu_partition();
    let n = hw.ctx().n() as u32;
    let content = w.mu_vector();
    let (hs, hc) = (shape.weight(), content.iter().sum::<u32>());
    if hc > hs || (hs - hc) % n != 0 {
        return Ok(0);
    }
    let add = (hs - hc) / n;
    let content: Vec<u32> = content.iter().map(|c| c + add).collect();
    kostka(&shape, &content)
}

/// Orbit character as the sum of `u^mu` over the Weyl orbit, by brute force
/// over all N! index permutations.
pub fn brute_orbit_char(w: &DominantWeight) -> UPoly {
    let mu = w.mu_vector();
    let n = mu.len();
    let mut seen = BTreeSet::new();
    let mut idx: Vec<usize> = (0..n).collect();
    permute_all(&mut idx, 0, &mut |perm| {
        seen.insert(perm.iter().map(|&i| mu[i]).collect::<Vec<u32>>());
    });
    UPoly::from_terms(n, seen.into_iter().map(|e| (Monomial::new(e), BigInt::one())))
}

fn permute_all(idx: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        visit(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute_all(idx, k + 1, visit);
        idx.swap(k, i);
    }
}

/// All dominant weights of height at most `max_height` (partitions with fewer
/// than N rows).
pub fn dominant_weights_up_to(max_height: u32, ctx: AlgebraContext) -> Vec<DominantWeight> {
    (0..=max_height)
        .flat_map(|h| partitions(h, ctx.rank()))
        .map(|p| DominantWeight::from_partition(&p, ctx).expect("fewer than N rows"))
        .collect()
}
