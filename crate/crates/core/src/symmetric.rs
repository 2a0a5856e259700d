//! Conversions between the u side and the x side of the character ring.
//!
//! A symmetric polynomial in `u_1..u_N` becomes a polynomial in
//! `x_1..x_{N-1}` once `p_Q = Q x_Q` and `u_1 ... u_N = 1` are imposed. The
//! reverse direction is made well defined by re-homogenizing: a polynomial
//! in the x's whose monomials have graded degree `Q - jN` is lifted to the
//! unique homogeneous degree-Q symmetric polynomial by multiplying each
//! monomial by `e_N^j`.
//!
//! Nothing here goes through Schur functions or the generator reduction;
//! both conversions are used to audit those routes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::AlgebraContext;
use crate::poly::{rational, UPoly, XPoly};

/// Power sum `u_1^q + ... + u_N^q`.
pub fn power_sum_u(q: u32, ctx: AlgebraContext) -> UPoly {
    let n = ctx.n();
    (0..n).fold(UPoly::zero(n), |acc, i| &acc + &UPoly::var(n, i).pow(q))
}

/// Elementary symmetric `e_k(u_1..u_N)`.
pub fn elementary_u(k: usize, ctx: AlgebraContext) -> UPoly {
    let n = ctx.n();
    // prod (1 + t u_i), keeping the coefficient of t^k.
    let mut coeffs = vec![UPoly::one(n)];
    for i in 0..n {
        let ui = UPoly::var(n, i);
        let mut next = coeffs.clone();
        next.push(UPoly::zero(n));
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + &(c * &ui);
        }
        coeffs = next;
    }
    coeffs.get(k).cloned().unwrap_or_else(|| UPoly::zero(n))
}

/// Writes a symmetric polynomial as integer combination of products of
/// `e_1..e_N`, keyed by exponent vectors over `(e_1, ..., e_N)`.
///
/// Classical leading-term elimination; fails if the input is not symmetric.
pub fn to_elementary_basis(f: &UPoly, ctx: AlgebraContext) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    let n = ctx.n();
    let e: Vec<UPoly> = (1..=n).map(|k| elementary_u(k, ctx)).collect();
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rem.leading_term() {
        let a = m.exponents();
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("polynomial is not symmetric (leading exponent {a:?})")));
        }
        let key: Vec<u32> = (0..n).map(|i| a[i] - if i + 1 < n { a[i + 1] } else { 0 }).collect();
        let c = c.clone();
        let mut t = UPoly::constant(n, c.clone());
        for (k, &ex) in key.iter().enumerate() {
            if ex > 0 {
                t = &t * &e[k].pow(ex);
            }
        }
        rem = &rem - &t;
        out.insert(key, c);
    }
    Ok(out)
}

/// `e_k` in the x indeterminates by Newton's identity
/// `k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`, `p_i = i x_i`, for `k < N`;
/// `e_N = 1`.
fn elementary_in_x(ctx: AlgebraContext) -> Vec<XPoly> {
    let nv = ctx.rank();
    let mut e = vec![XPoly::one(nv)];
    for k in 1..ctx.n() {
        let mut acc = XPoly::zero(nv);
        for i in 1..=k {
            let p_i = XPoly::var(nv, i - 1).scale(&rational(i as i64, 1));
            let t = &e[k - i] * &p_i;
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        e.push(acc.scale(&rational(1, k as i64)));
    }
    e.push(XPoly::one(nv));
    e
}

/// Symmetric u-polynomial to the x side under `u_1 ... u_N = 1`.
pub fn u_to_x(f: &UPoly, ctx: AlgebraContext) -> Result<XPoly> {
    let basis = to_elementary_basis(f, ctx)?;
    let e = elementary_in_x(ctx);
    let mut out = XPoly::zero(ctx.rank());
    for (key, c) in basis {
        let mut t = XPoly::constant(ctx.rank(), BigRational::from_integer(c));
        // e_N = 1, so the last exponent is dropped.
        for (k, &ex) in key.iter().enumerate().take(ctx.rank()) {
            if ex > 0 {
                t = &t * &e[k + 1].pow(ex);
            }
        }
        out = &out + &t;
    }
    Ok(out)
}

/// Lifts an x-polynomial to `D * F`, where F is the homogeneous degree-`degree`
/// symmetric polynomial in the u's that it represents and D > 0 clears all
/// denominators. Returns `(D * F, D)`.
pub fn x_to_u(f: &XPoly, degree: u32, ctx: AlgebraContext) -> Result<(UPoly, BigInt)> {
    let n = ctx.n() as u32;
    // x_i = p_i / i, so each monomial contributes c / prod i^{a_i} times power sums.
    let mut scaled: Vec<(Vec<u32>, u32, BigRational)> = Vec::with_capacity(f.len());
    let mut denom = BigInt::one();
    for (m, c) in f.terms() {
        let d = m.weighted_degree();
        if d > degree || !(degree - d).is_multiple_of(n) {
            return Err(Error::InvalidWeight(format!(
                "monomial {m:?} of graded degree {d} cannot be lifted to degree {degree}"
            )));
        }
        let mut factor = c.clone();
        for (i, &a) in m.exponents().iter().enumerate() {
            factor /= BigRational::from_integer(BigInt::from(i as u64 + 1).pow(a));
        }
        denom = denom.lcm(factor.denom());
        scaled.push((m.exponents().to_vec(), (degree - d) / n, factor));
    }
    let nu = ctx.n();
    let p: Vec<UPoly> = (1..n).map(|q| power_sum_u(q, ctx)).collect();
    let e_n = elementary_u(nu, ctx);
    let mut out = UPoly::zero(nu);
    for (exps, j, factor) in scaled {
        let c = (factor * BigRational::from_integer(denom.clone())).to_integer();
        if c.is_zero() {
            continue;
        }
        let mut t = UPoly::constant(nu, c);
        for (i, &a) in exps.iter().enumerate() {
            if a > 0 {
                t = &t * &p[i].pow(a);
            }
        }
        if j > 0 {
            t = &t * &e_n.pow(j);
        }
        out = &out + &t;
    }
    Ok((out, denom))
}
