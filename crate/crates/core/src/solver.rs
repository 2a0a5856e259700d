//! Weight multiplicities from `ChR(Lambda) = S_(Q_k)`.
//!
//! The left side is `sum m(lambda) K_lambda` over `lambda` in
//! `Sub(Q lambda_1)`, each orbit character expanded in x-monomials; the right
//! side is the generalized Schur function of `Lambda`. Matching coefficients
//! monomial by monomial gives an exact linear system for the multiplicities.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lattice::{sub_q_lambda1, DominantWeight, SubEntry};
use crate::orbitchar::orbit_char_x;
use crate::partition::Partition;
use crate::poly::{Monomial, XPoly};
use crate::schur::{generalized_schur, SchurContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityEntry {
    pub weight: DominantWeight,
    /// The partition of Q this row of `Sub(Q lambda_1)` comes from.
    pub partition: Partition,
    pub multiplicity: u64,
    pub orbit_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub highest_weight: DominantWeight,
    pub entries: Vec<MultiplicityEntry>,
    pub dimension: u64,
    /// Distinct x-monomials across all columns and the right-hand side.
    pub equations: usize,
    /// Monomials in the support of the Schur function alone.
    pub rhs_support: usize,
}

impl MultiplicityTable {
    pub fn multiplicity(&self, w: &DominantWeight) -> Option<u64> {
        self.entries.iter().find(|e| &e.weight == w).map(|e| e.multiplicity)
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.multiplicity).collect()
    }

    pub fn unknowns(&self) -> usize {
        self.entries.len()
    }

    pub fn is_square(&self) -> bool {
        self.equations == self.entries.len()
    }

    /// `sum m * |W(lambda)|`.
    pub fn orbit_sum(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity * e.orbit_size).sum()
    }
}

pub fn solve_multiplicities(hw: &DominantWeight, sctx: &SchurContext) -> Result<MultiplicityTable> {
    solve_multiplicities_with(Execution::default(), hw, sctx)
}

/// Builds and solves the x-monomial system; orbit-character columns are
/// computed under `exec`.
pub fn solve_multiplicities_with(
    exec: Execution,
    hw: &DominantWeight,
    sctx: &SchurContext,
) -> Result<MultiplicityTable> {
    if hw.ctx() != sctx.ctx() {
        return Err(Error::InvalidWeight(format!("{hw:?} does not belong to {}", sctx.ctx().name())));
    }
    let rhs = generalized_schur(sctx, &hw.mu_partition());
    let system = build_system(exec, hw.height(), &rhs, sctx)?;
    let solution = solve_exact(system.rows, system.sub.len())?;
    let sub = system.sub;
    let monomials = system.monomials;

    let mut entries = Vec::with_capacity(sub.len());
    for (e, m) in sub.into_iter().zip(solution) {
        if !m.is_integer() || m.is_negative() {
            return Err(Error::InconsistentSystem(format!("multiplicity of {} in R({hw}) solved to {m}", e.weight)));
        }
        let multiplicity = m.to_integer().to_u64().expect("multiplicity fits in u64");
        let orbit_size = e.weight.orbit_size();
        entries.push(MultiplicityEntry { weight: e.weight, partition: e.partition, multiplicity, orbit_size });
    }
    if entries.iter().find(|e| &e.weight == hw).map(|e| e.multiplicity) != Some(1) {
        return Err(Error::InconsistentSystem(format!("highest weight {hw} does not have multiplicity 1")));
    }
    let table = MultiplicityTable {
        highest_weight: hw.clone(),
        dimension: dimension(hw),
        equations: monomials.len(),
        rhs_support: rhs.len(),
        entries,
    };
    if table.orbit_sum() != table.dimension {
        return Err(Error::InconsistentSystem(format!(
            "orbit sum {} differs from dimension {}",
            table.orbit_sum(),
            table.dimension
        )));
    }
    Ok(table)
}

struct System {
    sub: Vec<SubEntry>,
    monomials: Vec<Monomial>,
    rows: Vec<Vec<BigRational>>,
}

fn build_system(exec: Execution, q: u32, rhs: &XPoly, sctx: &SchurContext) -> Result<System> {
    let sub = sub_q_lambda1(q, sctx.ctx());
    let columns: Vec<XPoly> = exec.try_map(&sub, |e| orbit_char_x(&e.weight.mu_partition(), sctx))?;
    let monomials: Vec<Monomial> = columns
        .iter()
        .chain(std::iter::once(rhs))
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .rev()
        .collect();
    let rows = monomials
        .iter()
        .map(|m| columns.iter().map(|c| c.coeff(m)).chain(std::iter::once(rhs.coeff(m))).collect())
        .collect();
    Ok(System { sub, monomials, rows })
}

/// Solves `sum m(lambda) K_lambda = rhs` over `Sub(Q lambda_1)` for an
/// arbitrary right-hand side, with none of the integrality or dimension
/// checks. Useful for probing what a hand-written Schur function implies.
pub fn solve_against(q: u32, rhs: &XPoly, sctx: &SchurContext) -> Result<Vec<(SubEntry, BigRational)>> {
    let system = build_system(Execution::Sequential, q, rhs, sctx)?;
    let solution = solve_exact(system.rows, system.sub.len())?;
    Ok(system.sub.into_iter().zip(solution).collect())
}

/// Solves `A m = b` exactly for an augmented system with `unknowns` columns
/// plus the right-hand side. The solution must exist and be unique.
///
/// Rows are scaled to integers, then reduced by Bareiss fraction-free
/// elimination. Unknowns are eliminated in order of decreasing column support
/// so pivoting is reproducible.
fn solve_exact(rows: Vec<Vec<BigRational>>, unknowns: usize) -> Result<Vec<BigRational>> {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
            row.into_iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect();
    let m = a.len();
    let width = unknowns + 1;

    let mut order: Vec<usize> = (0..unknowns).collect();
    let support = |j: usize| a.iter().filter(|r| !r[j].is_zero()).count();
    let supports: Vec<usize> = (0..unknowns).map(support).collect();
    order.sort_by(|&x, &y| supports[y].cmp(&supports[x]).then(x.cmp(&y)));

    let mut prev = BigInt::one();
    let mut pivots: Vec<(usize, usize)> = Vec::with_capacity(unknowns);
    for &col in &order {
        let r = pivots.len();
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            return Err(Error::InconsistentSystem(format!(
                "singular system: unknown {col} is not determined by {m} equations"
            )));
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in 0..width {
                if j == col {
                    continue;
                }
                let v = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                let (q, rem) = v.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(Error::InconsistentSystem("fraction-free step left a remainder".into()));
                }
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push((r, col));
    }
    if let Some(i) = (pivots.len()..m).find(|&i| !a[i][unknowns].is_zero()) {
        return Err(Error::InconsistentSystem(format!(
            "right-hand side is outside the span of the orbit characters (row {i})"
        )));
    }

    let mut x = vec![BigRational::zero(); unknowns];
    for &(r, col) in pivots.iter().rev() {
        let mut acc = BigRational::from_integer(a[r][unknowns].clone());
        for &(_, other) in pivots.iter().filter(|&&(r2, _)| r2 > r) {
            acc -= BigRational::from_integer(a[r][other].clone()) * &x[other];
        }
        x[col] = acc / BigRational::from_integer(a[r][col].clone());
    }
    Ok(x)
}

/// Weyl dimension formula `prod_{i<j} (q_i - q_j + j - i) / (j - i)` over
/// the padded mu-vector.
pub fn dimension(w: &DominantWeight) -> u64 {
    let q = w.mu_vector();
    let n = q.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigUint::from(q[i] - q[j] + (j - i) as u32);
            den *= BigUint::from((j - i) as u32);
        }
    }
    let (d, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    d.to_u64().expect("dimension fits in u64")
}

/// Solves many highest weights of one rank.
pub fn solve_batch(exec: Execution, weights: &[DominantWeight], sctx: &SchurContext) -> Result<Vec<MultiplicityTable>> {
    exec.try_map(weights, |w| solve_multiplicities_with(Execution::Sequential, w, sctx))
}

/// Multiplicities keyed by weight, for comparison with the oracles.
pub fn as_map(table: &MultiplicityTable) -> BTreeMap<DominantWeight, u64> {
    table.entries.iter().map(|e| (e.weight.clone(), e.multiplicity)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::AlgebraContext;

    fn ctx(n: usize) -> AlgebraContext {
        AlgebraContext::new(n).unwrap()
    }

    #[test]
    fn dimensions() {
        let w = DominantWeight::new(ctx(6), vec![5, 1, 0, 0, 0]).unwrap();
        assert_eq!(dimension(&w), 1980);
        for n in 2..8 {
            assert_eq!(dimension(&DominantWeight::fundamental(ctx(n), 1).unwrap()), n as u64);
        }
        assert_eq!(dimension(&DominantWeight::new(ctx(3), vec![1, 1]).unwrap()), 8);
        assert_eq!(dimension(&DominantWeight::zero(ctx(4))), 1);
    }

    #[test]
    fn adjoint_a2() {
        let s = SchurContext::with_rank(3).unwrap();
        let w = DominantWeight::new(ctx(3), vec![1, 1]).unwrap();
        let t = solve_multiplicities(&w, &s).unwrap();
        // Sub(3 lambda_1): 3λ1, λ1+λ2, 0
        assert_eq!(t.multiplicities(), vec![0, 1, 2]);
        assert_eq!(t.orbit_sum(), 8);
        assert!(t.is_square());
    }

    #[test]
    fn solve_exact_rejects_inconsistent() {
        let r = |n: i64| BigRational::from_integer(n.into());
        // x = 1 and x = 2
        let rows = vec![vec![r(1), r(1)], vec![r(1), r(2)]];
        assert!(matches!(solve_exact(rows, 1), Err(Error::InconsistentSystem(_))));
        // 0 * x = 0 leaves x undetermined
        let rows = vec![vec![r(0), r(0)]];
        assert!(matches!(solve_exact(rows, 1), Err(Error::InconsistentSystem(_))));
        let rows = vec![vec![r(2), r(1), r(5)], vec![r(1), r(3), r(5)]];
        assert_eq!(solve_exact(rows, 2).unwrap(), vec![r(2), r(1)]);
    }

    #[test]
    fn wrong_rank_rejected() {
        let s = SchurContext::with_rank(4).unwrap();
        let w = DominantWeight::fundamental(ctx(3), 1).unwrap();
        assert!(solve_multiplicities(&w, &s).is_err());
    }
}
