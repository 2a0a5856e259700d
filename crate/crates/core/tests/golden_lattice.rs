use weyl_schur::partition::{partitions, Partition};
use weyl_schur::{sub_q_lambda1, AlgebraContext, DominantWeight};

fn ctx(n: usize) -> AlgebraContext {
    AlgebraContext::new(n).unwrap()
}

/// Partitions of 7 for A_5 and their dominant weights, in the printed order.
/// The printed weight for (4,1,1,1) is 3λ2+λ4, which has height 10; the
/// conversion gives 3λ1+λ4.
const SUB_7: &[(&str, [u32; 5])] = &[
    ("7", [7, 0, 0, 0, 0]),
    ("6,1", [5, 1, 0, 0, 0]),
    ("5,2", [3, 2, 0, 0, 0]),
    ("4,3", [1, 3, 0, 0, 0]),
    ("5,1,1", [4, 0, 1, 0, 0]),
    ("4,2,1", [2, 1, 1, 0, 0]),
    ("3,3,1", [0, 2, 1, 0, 0]),
    ("3,2,2", [1, 0, 2, 0, 0]),
    ("4,1,1,1", [3, 0, 0, 1, 0]),
    ("3,2,1,1", [1, 1, 0, 1, 0]),
    ("2,2,2,1", [0, 0, 1, 1, 0]),
    ("3,1,1,1,1", [2, 0, 0, 0, 1]),
    ("2,2,1,1,1", [0, 1, 0, 0, 1]),
    ("2,1,1,1,1,1", [1, 0, 0, 0, 0]),
];

#[test]
fn sub_seven_lambda1_for_a5() {
    let sub = sub_q_lambda1(7, ctx(6));
    assert_eq!(sub.len(), SUB_7.len());
    for (entry, (shape, coords)) in sub.iter().zip(SUB_7) {
        assert_eq!(entry.partition, shape.parse::<Partition>().unwrap());
        assert_eq!(entry.weight.coords(), coords, "{shape}");
    }
    let printed = DominantWeight::new(ctx(6), vec![0, 3, 0, 1, 0]).unwrap();
    assert_eq!(printed.height(), 10);
    assert_eq!(sub[8].weight.height(), 7);
    assert_eq!(sub[8].weight.to_string(), "3λ1+λ4");
}

#[test]
fn round_trip_through_partitions() {
    for n in 2..=6 {
        for q in 0..=8 {
            for part in partitions(q, n) {
                let w = DominantWeight::from_partition(&part, ctx(n)).unwrap();
                let back = w.mu_partition();
                let full = if part.len() == n { part.part(n - 1) } else { 0 };
                let stripped: Vec<u32> = part.parts().iter().map(|x| x - full).filter(|&x| x > 0).collect();
                assert_eq!(back.parts(), stripped.as_slice(), "N = {n}, {part}");
                assert_eq!(DominantWeight::from_partition(&back, ctx(n)).unwrap(), w);
            }
        }
    }
}

#[test]
fn orbit_sizes() {
    for n in 2..=6 {
        for q in 0..=7 {
            for part in partitions(q, n - 1) {
                let w = DominantWeight::from_partition(&part, ctx(n)).unwrap();
                assert_eq!(w.orbit_weights().len() as u64, w.orbit_size());
            }
        }
    }
    let c = ctx(6);
    assert_eq!(DominantWeight::new(c, vec![5, 1, 0, 0, 0]).unwrap().orbit_size(), 30);
    assert_eq!(DominantWeight::new(c, vec![0, 0, 1, 1, 0]).unwrap().orbit_size(), 60);
    assert_eq!(DominantWeight::zero(c).orbit_size(), 1);
}

#[test]
fn sub_members_are_distinct_and_congruent() {
    for n in 2..=6usize {
        for q in 0..=9u32 {
            let sub = sub_q_lambda1(q, ctx(n));
            let mut seen = std::collections::BTreeSet::new();
            for e in &sub {
                assert!(seen.insert(e.weight.clone()), "duplicate in Sub({q}λ1), N = {n}");
                assert_eq!(e.weight.height() % n as u32, q % n as u32);
                if (q as usize) < n {
                    assert_eq!(e.weight.height(), q);
                }
            }
        }
    }
}
