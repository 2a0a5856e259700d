use std::collections::HashMap;

use super::{Coefficient, Poly};
use crate::error::{Error, Result};

pub type PolyMatrix<C> = Vec<Vec<Poly<C>>>;

/// Largest dimension evaluated by cofactor expansion in [`det`].
pub const COFACTOR_MAX_DIM: usize = 6;

fn check_square<C: Coefficient>(m: &[Vec<Poly<C>>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: row.len() });
    }
    Ok(n)
}

fn ring_of<C: Coefficient>(m: &[Vec<Poly<C>>], nvars: usize) -> Result<usize> {
    let ring = m.first().and_then(|r| r.first()).map_or(nvars, Poly::nvars);
    for p in m.iter().flatten() {
        if p.nvars() != ring {
            return Err(Error::RingMismatch(ring, p.nvars()));
        }
    }
    Ok(ring)
}

/// Exact determinant: cofactor expansion up to [`COFACTOR_MAX_DIM`],
/// fraction-free elimination above. `nvars` is the ring of the empty matrix.
pub fn det<C: Coefficient>(m: &[Vec<Poly<C>>], nvars: usize) -> Result<Poly<C>> {
    if check_square(m)? <= COFACTOR_MAX_DIM {
        det_cofactor(m, nvars)
    } else {
        det_bareiss(m, nvars)
    }
}

/// Laplace expansion along the first remaining row, memoized on the set of
/// columns still in play.
pub fn det_cofactor<C: Coefficient>(m: &[Vec<Poly<C>>], nvars: usize) -> Result<Poly<C>> {
    let n = check_square(m)?;
    let ring = ring_of(m, nvars)?;
    assert!(n < 64, "cofactor expansion is limited to 63 columns");
    let mut memo: HashMap<u64, Poly<C>> = HashMap::new();
    Ok(cofactor_rec(m, ring, 0, (1u64 << n) - 1, &mut memo))
}

fn cofactor_rec<C: Coefficient>(
    m: &[Vec<Poly<C>>],
    ring: usize,
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, Poly<C>>,
) -> Poly<C> {
    if row == m.len() {
        return Poly::one(ring);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Poly::zero(ring);
    let mut sign_neg = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = cofactor_rec(m, ring, row + 1, cols & !(1 << c), memo);
            let t = entry * &minor;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Bareiss fraction-free elimination; every intermediate division is exact.
pub fn det_bareiss<C: Coefficient>(m: &[Vec<Poly<C>>], nvars: usize) -> Result<Poly<C>> {
    let n = check_square(m)?;
    let ring = ring_of(m, nvars)?;
    if n == 0 {
        return Ok(Poly::one(ring));
    }
    let mut a: Vec<Vec<Poly<C>>> = m.to_vec();
    let mut negate = false;
    let mut prev = Poly::one(ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.divide_exact(&prev)?;
            }
            a[i][k] = Poly::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}
