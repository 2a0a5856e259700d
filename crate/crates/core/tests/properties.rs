use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use weyl_schur::lattice::{AlgebraContext, DominantWeight};
use weyl_schur::partition::Partition;
use weyl_schur::poly::{det, det_bareiss, det_cofactor, Monomial, Poly};
use weyl_schur::weyl::{alternant_matrix, weyl_character_u};
use weyl_schur::{UPoly, XPoly};

const NV: usize = 3;

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, NV), -4i64..=4), 0..5)
        .prop_map(|terms| UPoly::from_terms(NV, terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c)))))
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, NV), -4i64..=4, 1i64..=3), 0..5).prop_map(|terms| {
        XPoly::from_terms(
            NV,
            terms.into_iter().map(|(e, n, d)| (Monomial::new(e), BigRational::new(n.into(), d.into()))),
        )
    })
}

fn matrix(k: usize) -> impl Strategy<Value = Vec<Vec<UPoly>>> {
    prop::collection::vec(prop::collection::vec(upoly(), k), k)
}

/// Leibniz formula with explicit inversion-count signs.
fn leibniz<C: weyl_schur::poly::Coefficient>(m: &[Vec<Poly<C>>]) -> Poly<C> {
    let k = m.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut acc = Poly::zero(NV);
    heap_permutations(&mut perm, k, &mut |p| {
        let inv = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = Poly::one(NV);
        for (i, &j) in p.iter().enumerate() {
            t = &t * &m[i][j];
        }
        acc = if inv % 2 == 0 { &acc + &t } else { &acc - &t };
    });
    acc
}

fn heap_permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(p);
        return;
    }
    for i in 0..k {
        heap_permutations(p, k - 1, f);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in xpoly(), b in xpoly(), c in xpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &XPoly::one(NV), a.clone());
    }

    #[test]
    fn canonical_form_is_stable(a in upoly()) {
        let rebuilt = UPoly::from_terms(NV, a.terms().map(|(m, c)| (m.clone(), c.clone())));
        prop_assert_eq!(&rebuilt, &a);
        prop_assert!(a.terms().all(|(_, c)| *c != BigInt::from(0)));
    }

    #[test]
    fn exact_division_undoes_product(a in upoly(), b in upoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn exact_division_rational(a in xpoly(), b in xpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn det_matches_leibniz(k in 1usize..=4, seed in matrix(4)) {
        let m: Vec<Vec<UPoly>> = seed.into_iter().take(k).map(|r| r.into_iter().take(k).collect()).collect();
        let expected = leibniz(&m);
        prop_assert_eq!(det(&m, NV).unwrap(), expected.clone());
        prop_assert_eq!(det_cofactor(&m, NV).unwrap(), expected.clone());
        prop_assert_eq!(det_bareiss(&m, NV).unwrap(), expected);
    }

    #[test]
    fn alternant_is_antisymmetric(parts in prop::collection::vec(0u32..4, 1..4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let ctx = AlgebraContext::new(4).unwrap();
        let a = alternant_matrix(&Partition::from_unsorted(parts), ctx).unwrap();
        prop_assert_eq!(a.swap_vars(i, j), -&a);
    }

    #[test]
    fn character_is_symmetric(coords in prop::collection::vec(0u32..3, 3)) {
        let ctx = AlgebraContext::new(4).unwrap();
        let w = DominantWeight::new(ctx, coords).unwrap();
        prop_assert!(weyl_character_u(&w).unwrap().is_symmetric());
    }
}

#[test]
fn bareiss_beyond_cofactor_range() {
    // 7 x 7 lower-triangular plus a swap: exercises the pivot search above the
    // cofactor cutoff.
    let n = 7;
    let mut m: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => &UPoly::var(NV, i % NV) + &UPoly::one(NV),
                    std::cmp::Ordering::Greater => UPoly::constant(NV, BigInt::from((i + j) as i64)),
                    std::cmp::Ordering::Less => UPoly::zero(NV),
                })
                .collect()
        })
        .collect();
    m.swap(0, 1);
    let mut diag = UPoly::one(NV);
    for i in 0..n {
        diag = &diag * &(&UPoly::var(NV, i % NV) + &UPoly::one(NV));
    }
    assert_eq!(det(&m, NV).unwrap(), -&diag);
    assert_eq!(det_bareiss(&m, NV).unwrap(), det_cofactor(&m, NV).unwrap());
}
