//! The alternant side of the Weyl character formula with `e(mu_i) = u_i`.
//!
//! Alternants live in the free ring `Z[u_1..u_N]`; the relation
//! `u_1 ... u_N = 1` is never imposed here, so exact division stays in an
//! integral domain.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{next_permutation, AlgebraContext, DominantWeight};
use crate::partition::Partition;
use crate::poly::{det, Monomial, PolyMatrix, UPoly};
use crate::schur::{generalized_schur, SchurContext};
use crate::symmetric::x_to_u;

fn check_rows(p: &Partition, ctx: AlgebraContext) -> Result<()> {
    if p.len() > ctx.n() {
        return Err(Error::TooManyRows { parts: p.parts().to_vec(), len: p.len(), n: ctx.n() });
    }
    Ok(())
}

/// Shifted exponents `q_j + N - j` (1-based j) of `rho + Lambda`.
fn shifted_exponents(p: &Partition, n: usize) -> Vec<u32> {
    p.padded(n).iter().enumerate().map(|(j, &q)| q + (n - 1 - j) as u32).collect()
}

/// `A(rho + Lambda)` as the determinant of the N x N matrix `u_i^{q_j + N - j}`.
pub fn alternant_matrix(p: &Partition, ctx: AlgebraContext) -> Result<UPoly> {
    check_rows(p, ctx)?;
    let n = ctx.n();
    let exps = shifted_exponents(p, n);
    let m: PolyMatrix<BigInt> =
        (0..n).map(|i| exps.iter().map(|&e| UPoly::term(Monomial::var(n, i, e), BigInt::one())).collect()).collect();
    det(&m, n)
}

/// `A(rho + Lambda)` as the signed sum over all permutations of the shifted
/// exponent vector, the sign being the parity of the permutation that sorts
/// it back into decreasing order. Factorial cost; for cross-checks only.
pub fn alternant_sum(p: &Partition, ctx: AlgebraContext) -> Result<UPoly> {
    check_rows(p, ctx)?;
    let n = ctx.n();
    let exps = shifted_exponents(p, n);
    let mut idx: Vec<usize> = (0..n).collect();
    let mut out = UPoly::zero(n);
    loop {
        let arranged: Vec<u32> = idx.iter().map(|&i| exps[i]).collect();
        let sign = if inversions(&idx).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(Monomial::new(arranged), BigInt::from(sign));
        if !next_permutation(&mut idx) {
            break;
        }
    }
    Ok(out)
}

fn inversions(perm: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                c += 1;
            }
        }
    }
    c
}

/// `A(rho) = prod_{i<j} (u_i - u_j)`.
pub fn vandermonde(ctx: AlgebraContext) -> UPoly {
    let n = ctx.n();
    let mut acc = UPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&UPoly::var(n, i) - &UPoly::var(n, j));
        }
    }
    acc
}

/// `A(rho + Lambda) / A(rho)`, homogeneous of degree `height(Lambda)`.
pub fn weyl_character_u(w: &DominantWeight) -> Result<UPoly> {
    let ctx = w.ctx();
    let num = alternant_matrix(&w.mu_partition(), ctx)?;
    let den = alternant_matrix(&Partition::empty(), ctx)?;
    num.divide_exact(&den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub partition: Partition,
    pub n: usize,
    pub pass: bool,
    /// `D * A(rho + Lambda) - A(rho) * (D * S)` when the check fails, where D
    /// clears the denominators of the Schur function.
    pub difference: Option<UPoly>,
}

/// Checks `A(rho + Lambda) = A(rho) * S_(Q_k)` as an identity in the free
/// u-ring, with `S_(Q_k)` lifted back to a homogeneous symmetric polynomial.
///
/// A partition with more than N rows labels no weight; its alternant side is
/// zero and the check becomes `S_(Q_k) = 0`.
pub fn verify_factorization(p: &Partition, sctx: &SchurContext) -> Result<FactorizationReport> {
    let ctx = sctx.ctx();
    let s = generalized_schur(sctx, p);
    let report = |difference: Option<UPoly>| FactorizationReport {
        partition: p.clone(),
        n: ctx.n(),
        pass: difference.is_none(),
        difference,
    };
    if p.len() > ctx.n() {
        if s.is_zero() {
            return Ok(report(None));
        }
        let (lifted, _) = x_to_u(&s, p.weight(), ctx)?;
        return Ok(report(Some(lifted)));
    }
    let (lifted, d) = x_to_u(&s, p.weight(), ctx)?;
    let lhs = alternant_matrix(p, ctx)?.scale(&d);
    let rhs = &vandermonde(ctx) * &lifted;
    let diff = &lhs - &rhs;
    Ok(report((!diff.is_zero()).then_some(diff)))
}
