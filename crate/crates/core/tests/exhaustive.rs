//! Small-n sweeps over every object of a kind.

use std::collections::HashSet;

use num_bigint::BigUint;

use ncpart::bijection;
use ncpart::count::{factorial, lah, narayana};
use ncpart::enumerate::{dyck_paths, enumerate_family, enumerate_peak_labeled, Family};
use ncpart::structures::{prodinger_from_partition, prodinger_to_partition};

fn fam(code: &str) -> Family {
    code.parse().unwrap()
}

#[test]
fn prodinger_is_a_bijection_onto_noncrossing() {
    for n in 1..=8 {
        let mut images = HashSet::new();
        for d in dyck_paths(n) {
            let p = prodinger_to_partition(&d);
            assert!(p.is_noncrossing(), "{d}");
            assert_eq!(p.num_blocks(), d.peaks());
            assert_eq!(prodinger_from_partition(&p).unwrap(), d);
            assert!(images.insert(p));
        }
        for k in 1..=n {
            let with_k = images.iter().filter(|p| p.num_blocks() == k).count();
            assert_eq!(BigUint::from(with_k), narayana(n, k), "n={n} k={k}");
        }
        let all_nc: HashSet<_> = enumerate_family(fam("ss-nc"), n).collect();
        assert_eq!(all_nc, images);
    }
}

#[test]
fn peak_labeled_count() {
    for n in 1..=7 {
        let total: BigUint = (1..=n).map(|k| factorial(k) * narayana(n, k)).sum();
        assert_eq!(BigUint::from(enumerate_peak_labeled(n).count()), total);
    }
}

#[test]
fn bijection_block_counts_follow_lah() {
    for n in 1..=6 {
        let mut by_lists = vec![0usize; n + 1];
        let mut images = HashSet::new();
        for p in enumerate_peak_labeled(n) {
            let q = bijection::forward(&p);
            assert_eq!(q.num_blocks(), n + 1 - p.path().peaks());
            by_lists[q.num_blocks()] += 1;
            assert!(images.insert(q));
        }
        for (m, &count) in by_lists.iter().enumerate().skip(1) {
            assert_eq!(BigUint::from(count), lah(n, m), "n={n} lists={m}");
        }
    }
}

#[test]
fn restricted_equals_unrestricted_below_four() {
    for f in Family::all() {
        for n in 1..=3 {
            let a: Vec<_> = enumerate_family(f, n).collect();
            let b: Vec<_> = enumerate_family(f.unrestricted(), n).collect();
            assert_eq!(a, b, "{f} n={n}");
        }
    }
}

#[test]
fn crossing_lists_of_lists_at_four() {
    let crossing: HashSet<String> = enumerate_family(fam("ll"), 4)
        .filter(|p| !p.is_noncrossing())
        .map(|p| p.to_string())
        .collect();
    // {1,3},{2,4}: two inner orders each, two block orders
    let expected: HashSet<String> = ["1,3|2,4", "1,3|4,2", "3,1|2,4", "3,1|4,2", "2,4|1,3", "4,2|1,3", "2,4|3,1", "4,2|3,1"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(crossing, expected);
}
