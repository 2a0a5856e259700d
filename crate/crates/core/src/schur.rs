//! Elementary, degenerated and generalized Schur functions for A_{N-1}.
//!
//! `S_Q` is the degree-Q coefficient of `exp(sum_i x_i z^i)`. Under the
//! identification `p_Q = Q x_Q` it is the complete homogeneous symmetric
//! function `h_Q`, so for A_{N-1} only `x_1..x_{N-1}` are free: `x_Q` for
//! `Q >= N` is a polynomial in them (see [`degenerate_x`]), and every `S_Q`
//! with `Q >= N` degenerates accordingly. Generalized Schur functions are
//! Jacobi-Trudi determinants of elementary ones.

use std::collections::HashMap;
use std::sync::RwLock;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::AlgebraContext;
use crate::partition::Partition;
use crate::poly::{det, rational, PolyMatrix, XPoly};

/// Per-rank session holding the memoized `x_Q`, `S_Q` and `S_(Q_k)`.
///
/// Caches are keyed within one rank only and never shared across ranks.
/// Readers never block each other; a missing entry is computed outside the
/// lock and inserted afterwards.
pub struct SchurContext {
    ctx: AlgebraContext,
    x_cache: RwLock<HashMap<u32, XPoly>>,
    s_cache: RwLock<HashMap<u32, XPoly>>,
    gen_cache: RwLock<HashMap<Partition, XPoly>>,
}

fn cached<K, F>(lock: &RwLock<HashMap<K, XPoly>>, key: &K, compute: F) -> XPoly
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> XPoly,
{
    if let Some(p) = lock.read().expect("cache poisoned").get(key) {
        return p.clone();
    }
    let p = compute();
    lock.write().expect("cache poisoned").entry(key.clone()).or_insert(p).clone()
}

impl SchurContext {
    pub fn new(ctx: AlgebraContext) -> Self {
        SchurContext {
            ctx,
            x_cache: RwLock::new(HashMap::new()),
            s_cache: RwLock::new(HashMap::new()),
            gen_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_rank(n: usize) -> Result<Self> {
        Ok(Self::new(AlgebraContext::new(n)?))
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    fn n(&self) -> usize {
        self.ctx.n()
    }

    /// Number of x indeterminates, `N - 1`.
    pub fn nvars(&self) -> usize {
        self.ctx.rank()
    }

    /// `x_Q` as a polynomial in the free indeterminates, `Q >= 1`.
    pub fn x(&self, q: u32) -> XPoly {
        assert!(q >= 1, "x_0 is not an indeterminate");
        if (q as usize) < self.n() {
            XPoly::var(self.nvars(), q as usize - 1)
        } else {
            degenerate_x_unchecked(self, q)
        }
    }

    /// Power sum `p_Q = K(Q) = Q x_Q`; `p_0` is the number of variables N.
    pub fn power_sum(&self, q: u32) -> XPoly {
        if q == 0 {
            return XPoly::constant(self.nvars(), int(self.n() as i64));
        }
        self.x(q).scale(&int(q as i64))
    }

    /// Elementary symmetric `e_k = (-1)^k S_k^*`, with `e_N = 1` and `e_k = 0` past N.
    pub fn elementary_symmetric(&self, k: u32) -> XPoly {
        let k_us = k as usize;
        if k_us == self.n() {
            XPoly::one(self.nvars())
        } else if k_us > self.n() {
            XPoly::zero(self.nvars())
        } else {
            let s = star_schur(self, k as i64);
            if k % 2 == 1 {
                -&s
            } else {
                s
            }
        }
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The dependent indeterminate `x_Q`, `Q >= N`, under `u_1 ... u_N = 1`.
///
/// Newton's identity in N variables, `p_Q = sum_{k=1}^{N} (-1)^{k-1} e_k p_{Q-k}`
/// with `p_0 = N` and `e_N = 1`, then `x_Q = p_Q / Q`.
pub fn degenerate_x(q: u32, sctx: &SchurContext) -> Result<XPoly> {
    if (q as usize) < sctx.n() {
        return Err(Error::NotDegenerate { q, n: sctx.n() });
    }
    Ok(degenerate_x_unchecked(sctx, q))
}

fn degenerate_x_unchecked(sctx: &SchurContext, q: u32) -> XPoly {
    cached(&sctx.x_cache, &q, || {
        let n = sctx.n() as u32;
        let mut p = XPoly::zero(sctx.nvars());
        for k in 1..=n {
            let term = &sctx.elementary_symmetric(k) * &sctx.power_sum(q - k);
            p = if k % 2 == 1 { &p + &term } else { &p - &term };
        }
        p.scale(&rational(1, q as i64))
    })
}

/// `S_Q` for A_{N-1}: generic for `Q < N`, degenerated for `Q >= N`,
/// `S_0 = 1` and `S_Q = 0` for negative Q.
pub fn elementary_schur(sctx: &SchurContext, q: i64) -> XPoly {
    let nv = sctx.nvars();
    if q < 0 {
        return XPoly::zero(nv);
    }
    if q == 0 {
        return XPoly::one(nv);
    }
    let q = q as u32;
    cached(&sctx.s_cache, &q, || {
        if (q as usize) < sctx.n() {
            // Q S_Q = sum_{i=1}^{Q} i x_i S_{Q-i}
            let mut acc = XPoly::zero(nv);
            for i in 1..=q {
                let t = &XPoly::var(nv, i as usize - 1) * &elementary_schur(sctx, (q - i) as i64);
                acc = &acc + &t.scale(&int(i as i64));
            }
            acc.scale(&rational(1, q as i64))
        } else {
            // h_Q = sum_{k=1}^{N} (-1)^{k-1} e_k h_{Q-k}
            let mut acc = XPoly::zero(nv);
            for k in 1..=sctx.n() as u32 {
                let t = &sctx.elementary_symmetric(k) * &elementary_schur(sctx, q as i64 - k as i64);
                acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    })
}

/// `S_Q^*`: `S_Q` with every `x_i` replaced by `-x_i`.
pub fn star_schur(sctx: &SchurContext, q: i64) -> XPoly {
    elementary_schur(sctx, q).negate_vars()
}

/// Generalized Schur function: determinant of the k x k matrix with entry
/// `(i, j) = S_{q_i - i + j}`.
pub fn generalized_schur(sctx: &SchurContext, p: &Partition) -> XPoly {
    if p.len() <= 1 {
        return elementary_schur(sctx, p.weight() as i64);
    }
    cached(&sctx.gen_cache, p, || {
        let k = p.len();
        let m: PolyMatrix<BigRational> = (0..k)
            .map(|i| (0..k).map(|j| elementary_schur(sctx, p.part(i) as i64 - i as i64 + j as i64)).collect())
            .collect();
        det(&m, sctx.nvars()).expect("Jacobi-Trudi matrix is square")
    })
}

/// The generic `S_Q` in the Q indeterminates `x_1..x_Q`, with no rank attached.
pub fn generic_schur(q: u32) -> XPoly {
    let nv = (q as usize).max(1);
    let mut s = vec![XPoly::one(nv)];
    for d in 1..=q as usize {
        let mut acc = XPoly::zero(nv);
        for i in 1..=d {
            let t = &XPoly::var(nv, i - 1) * &s[d - i];
            acc = &acc + &t.scale(&int(i as i64));
        }
        s.push(acc.scale(&rational(1, d as i64)));
    }
    s.pop().expect("nonempty")
}

/// `S_Q` via the generating-function recurrence with the degenerated `x_Q`
/// substituted wherever `Q >= N`; an alternative to the Newton recursion
/// used by [`elementary_schur`].
pub fn schur_by_substitution(sctx: &SchurContext, q: u32) -> XPoly {
    if q == 0 {
        return XPoly::one(sctx.nvars());
    }
    let images: Vec<XPoly> = (1..=q).map(|i| sctx.x(i)).collect();
    generic_schur(q).substitute(&images, Clone::clone)
}

/// Graded degree of each monomial with `deg x_i = i`.
pub fn graded_degrees(p: &XPoly) -> Vec<u32> {
    let mut d: Vec<u32> = p.terms().map(|(m, _)| m.weighted_degree()).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Second-order rule `S_q1 S_q2 - S_{q1+1} S_{q2-1}`.
pub fn two_row_rule(sctx: &SchurContext, q1: u32, q2: u32) -> XPoly {
    let s = |k: i64| elementary_schur(sctx, k);
    let (a, b) = (q1 as i64, q2 as i64);
    &(&s(a) * &s(b)) - &(&s(a + 1) * &s(b - 1))
}

/// The expanded 3 x 3 minor rule for `S_(q1,q2,q3)`.
pub fn three_row_rule(sctx: &SchurContext, q1: u32, q2: u32, q3: u32) -> XPoly {
    let s = |k: i64| elementary_schur(sctx, k);
    let (a, b, c) = (q1 as i64, q2 as i64, q3 as i64);
    let first = &s(a) * &(&(&s(b) * &s(c)) - &(&s(b + 1) * &s(c - 1)));
    let second = &s(a + 1) * &(&(&s(b - 1) * &s(c)) - &(&s(b + 1) * &s(c - 2)));
    let third = &s(a + 2) * &(&(&s(b - 1) * &s(c - 1)) - &(&s(b) * &s(c - 2)));
    &(&first - &second) + &third
}

impl std::fmt::Debug for SchurContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SchurContext").field("algebra", &self.ctx.name()).finish()
    }
}
