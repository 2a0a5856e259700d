use weyl_schur::oracle::{freudenthal, kostka, kostka_multiplicity};
use weyl_schur::orbitchar::orbit_char_u;
use weyl_schur::partition::{partitions, Partition};
use weyl_schur::solver::{dimension, solve_multiplicities};
use weyl_schur::weyl::{verify_factorization, weyl_character_u};
use weyl_schur::{AlgebraContext, DominantWeight, SchurContext, UPoly};

fn ctx(n: usize) -> AlgebraContext {
    AlgebraContext::new(n).unwrap()
}

/// Printed multiplicities for R(5λ1+λ2) over Sub(7λ1), in printed order.
/// The last printed value is 3.
const PRINTED_FLAGSHIP: [u64; 14] = [0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 3];

#[test]
fn flagship_table() {
    let s = SchurContext::with_rank(6).unwrap();
    let hw = DominantWeight::new(ctx(6), vec![5, 1, 0, 0, 0]).unwrap();
    let t = solve_multiplicities(&hw, &s).unwrap();
    let m = t.multiplicities();
    assert_eq!(m[..13], PRINTED_FLAGSHIP[..13]);
    assert_eq!(m[13], 5);
    assert_eq!(t.dimension, 1980);
    assert_eq!(t.orbit_sum(), 1980);
    assert!(t.is_square());
    assert_eq!(t.equations, 14);

    // The printed last entry would leave the orbit sum short by 2 * 6.
    let printed_sum: u64 = PRINTED_FLAGSHIP.iter().zip(&t.entries).map(|(m, e)| m * e.orbit_size).sum();
    assert_eq!(printed_sum, 1968);

    let shape: Partition = "6,1".parse().unwrap();
    assert_eq!(kostka(&shape, &[2, 1, 1, 1, 1, 1]).unwrap(), 5);
    assert_eq!(kostka(&shape, &[3, 2, 1, 1, 0, 0]).unwrap(), 3);
    let f = freudenthal(&hw);
    for e in &t.entries {
        assert_eq!(f.dominant(&e.weight), e.multiplicity, "{}", e.weight);
        assert_eq!(kostka_multiplicity(&hw, &e.weight).unwrap(), e.multiplicity, "{}", e.weight);
    }
}

#[test]
fn symmetric_powers_are_multiplicity_free() {
    for n in 2..=6 {
        let s = SchurContext::with_rank(n).unwrap();
        for q in 1..=7 {
            let mut coords = vec![0; n - 1];
            coords[0] = q;
            let hw = DominantWeight::new(ctx(n), coords).unwrap();
            let t = solve_multiplicities(&hw, &s).unwrap();
            assert!(t.multiplicities().iter().all(|&m| m == 1), "N = {n}, {hw}: {:?}", t.multiplicities());
        }
    }
}

#[test]
fn exterior_powers_are_minuscule() {
    for n in 2..=6 {
        let s = SchurContext::with_rank(n).unwrap();
        for q in 1..n {
            let hw = DominantWeight::fundamental(ctx(n), q).unwrap();
            let t = solve_multiplicities(&hw, &s).unwrap();
            for e in &t.entries {
                assert_eq!(e.multiplicity, u64::from(e.weight == hw), "N = {n}, λ{q}, {}", e.weight);
            }
        }
    }
}

#[test]
fn character_is_sum_of_orbit_characters() {
    for n in 3..=4 {
        let s = SchurContext::with_rank(n).unwrap();
        for q in 1..=5 {
            for part in partitions(q, n - 1) {
                let hw = DominantWeight::from_partition(&part, ctx(n)).unwrap();
                let t = solve_multiplicities(&hw, &s).unwrap();
                let mut sum = UPoly::zero(n);
                for e in &t.entries {
                    sum = &sum + &orbit_char_u(&e.partition, ctx(n)).scale(&e.multiplicity.into());
                }
                assert_eq!(weyl_character_u(&hw).unwrap(), sum, "N = {n}, {hw}");
                assert_eq!(dimension(&hw), t.orbit_sum());
            }
        }
    }
}

#[test]
fn factorization_flagship_neighbours() {
    let s = SchurContext::with_rank(6).unwrap();
    for shape in ["6", "7", "6,1", "5,2", "4,3"] {
        let r = verify_factorization(&shape.parse().unwrap(), &s).unwrap();
        assert!(r.pass, "{shape}: {:?}", r.difference);
    }
}
