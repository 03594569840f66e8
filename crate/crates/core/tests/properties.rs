use num_bigint::BigInt;
use proptest::prelude::*;

use ncpart::series::PowerSeries;
use ncpart::structures::{blocks_noncrossing, parse_partition, BlockPartition};
use ncpart::transform::{ncp_inverse, ncp_transform, Sequence};

/// Definitional crossing test: look for a < b < c < d with a, c in one
/// block and b, d in another.
fn crossing_by_quadruples(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut owner = vec![0; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &e in b {
            owner[e] = i;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    if owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// A random restricted growth string turned into blocks, each block then
/// shuffled by `perm_seed` so inner order varies too.
fn arb_partition() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=10).prop_flat_map(|n| {
        (proptest::collection::vec(0usize..10, n), any::<u64>()).prop_map(move |(raw, seed)| {
            let mut rgs = Vec::with_capacity(n);
            let mut max = 0;
            for (i, r) in raw.into_iter().enumerate() {
                let v = if i == 0 { 0 } else { r % (max + 2) };
                max = max.max(v);
                rgs.push(v);
            }
            let mut blocks = vec![Vec::new(); max + 1];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            for (j, block) in blocks.iter_mut().enumerate() {
                let len = block.len();
                block.rotate_left((seed as usize).wrapping_add(j) % len);
            }
            (n, blocks)
        })
    })
}

fn normalized_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(-6i64..=6, order.saturating_sub(1)).prop_map(move |tail| {
        let coeffs = [0i64, 1].into_iter().chain(tail);
        PowerSeries::new(coeffs, order)
    })
}

fn sequence(max_order: usize) -> impl Strategy<Value = Sequence> {
    proptest::collection::vec(-20i64..=20, 0..=max_order).prop_map(|tail| {
        let mut terms = vec![BigInt::from(1)];
        terms.extend(tail.into_iter().map(BigInt::from));
        Sequence(terms)
    })
}

proptest! {
    #[test]
    fn stack_scan_matches_quadruple_scan((n, blocks) in arb_partition()) {
        prop_assert_eq!(blocks_noncrossing(n, &blocks), !crossing_by_quadruples(n, &blocks));
    }

    #[test]
    fn partition_text_roundtrip((n, blocks) in arb_partition(), inner in any::<bool>(), outer in any::<bool>()) {
        let p = BlockPartition::new(n, blocks, inner, outer).unwrap();
        let again = parse_partition(&p.to_string(), inner, outer).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn reversion_is_an_involution(f in normalized_series(9)) {
        let g = f.reversion().unwrap();
        prop_assert_eq!(g.reversion().unwrap(), f.clone());
        prop_assert_eq!(f.compose(&g).unwrap(), PowerSeries::new([0, 1], 9));
    }

    #[test]
    fn mul_commutative_and_associative(
        a in proptest::collection::vec(-9i64..=9, 7),
        b in proptest::collection::vec(-9i64..=9, 7),
        c in proptest::collection::vec(-9i64..=9, 7),
    ) {
        let (a, b, c) = (PowerSeries::new(a, 6), PowerSeries::new(b, 6), PowerSeries::new(c, 6));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn transform_inverse_roundtrip(a in sequence(20)) {
        let b = ncp_transform(&a).unwrap();
        prop_assert_eq!(&b.terms()[0], &BigInt::from(1));
        if a.len() > 1 {
            prop_assert_eq!(&b.terms()[1], &a.terms()[1]);
        }
        prop_assert_eq!(ncp_inverse(&b).unwrap(), a.clone());
        prop_assert_eq!(ncp_transform(&ncp_inverse(&a).unwrap()).unwrap(), a);
    }
}
