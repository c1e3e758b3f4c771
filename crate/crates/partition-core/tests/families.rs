use partition_core::{
    count_family, enumerate_family, partitions, satisfies_parity, Family, ParityMode, Partition,
};
use proptest::prelude::*;

// Direct reading of the definitions, applied to every partition of n.
fn oracle(family: Family, k: u32, a: u32, n: u32) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| {
            let b = p.parts();
            let m = 2 * k + 1;
            match family {
                Family::A => b.iter().all(|&x| x % m != 0 && x % m != a && x % m != m - a),
                _ => {
                    let window = (0..b.len())
                        .filter(|&i| i + (k as usize) - 1 < b.len())
                        .all(|i| b[i] - b[i + k as usize - 1] >= 2);
                    let ones = b.iter().filter(|&&x| x == 1).count() <= (a - 1) as usize;
                    let par = match family {
                        Family::W => (1..=n).all(|v| v % 2 == 1 || p.multiplicity(v) % 2 == 0),
                        Family::Wbar => (1..=n).all(|v| v % 2 == 0 || p.multiplicity(v) % 2 == 0),
                        _ => true,
                    };
                    window && ones && par
                }
            }
        })
        .collect()
}

#[test]
fn enumeration_matches_oracle() {
    for k in 2..=5 {
        for a in 1..=k {
            for n in 0..=14 {
                for fam in [Family::A, Family::B, Family::W, Family::Wbar] {
                    let got = enumerate_family(fam, k, a, n).unwrap();
                    assert_eq!(got, oracle(fam, k, a, n), "{fam} k={k} a={a} n={n}");
                    assert_eq!(count_family(fam, k, a, n).unwrap(), got.len() as u64);
                }
            }
        }
    }
}

#[test]
fn rrg_counts_small() {
    for k in 2..=4 {
        for a in 1..=k {
            for n in 0..=20 {
                assert_eq!(
                    count_family(Family::A, k, a, n).unwrap(),
                    count_family(Family::B, k, a, n).unwrap(),
                    "k={k} a={a} n={n}"
                );
            }
        }
    }
}

#[test]
fn monotone_in_a() {
    for k in 2..=5 {
        for n in 0..=16 {
            let counts: Vec<u64> = (1..=k)
                .map(|a| count_family(Family::B, k, a, n).unwrap())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] <= w[1]), "k={k} n={n}");
        }
    }
}

#[test]
fn w_with_k2_has_only_odd_parts() {
    for n in 0..=20 {
        for p in enumerate_family(Family::W, 2, 2, n).unwrap() {
            assert!(p.parts().iter().all(|x| x % 2 == 1), "{p}");
        }
    }
}

proptest! {
    #[test]
    fn enumeration_is_duplicate_free_and_valid(k in 2u32..6, a_off in 0u32..5, n in 0u32..18) {
        let a = 1 + a_off % k;
        for fam in [Family::B, Family::W, Family::Wbar] {
            let list = enumerate_family(fam, k, a, n).unwrap();
            let mut sorted = list.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), list.len());
            for p in &list {
                prop_assert_eq!(p.weight(), u64::from(n));
                prop_assert!(satisfies_parity(p, fam.parity()));
            }
            // decreasing lexicographic order
            prop_assert!(list.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn parity_none_always_holds(parts in proptest::collection::vec(1u32..9, 0..8)) {
        let p = Partition::from_unsorted(parts).unwrap();
        prop_assert!(satisfies_parity(&p, ParityMode::None));
    }
}
