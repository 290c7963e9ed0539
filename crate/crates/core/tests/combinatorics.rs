#![allow(clippy::needless_range_loop)]

mod common;

use std::cmp::Ordering;

use cm_families::laurent::LaurentPoly;
use cm_families::partition::{
    enumerate_multipartitions, enumerate_partitions, permute_components, Multipartition, Partition,
    Permutation,
};
use num_bigint::BigInt;

fn pentagonal_counts(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max as i64 {
        let mut total = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[(n - g2) as usize];
            }
        }
        p[n as usize] = total;
    }
    p
}

fn all_permutations(l: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..l).collect(), &mut out);
    out
}

fn conjugate(lam: &Partition) -> Partition {
    let parts = (1..=lam.part(1))
        .map(|c| lam.parts().iter().filter(|&&x| x >= c).count())
        .collect();
    Partition::new(parts).unwrap()
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let p = pentagonal_counts(10);
    for n in 0..=10 {
        let parts = enumerate_partitions(n);
        assert_eq!(parts.len() as i64, p[n], "n = {n}");
        assert!(parts.iter().all(|x| x.size() == n));
        assert!(parts
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
    }
}

#[test]
fn multipartition_counts_are_convolutions() {
    let p = pentagonal_counts(6);
    for l in 1..=4 {
        let mut counts = vec![1i64];
        counts.resize(7, 0);
        for _ in 0..l {
            let prev = counts.clone();
            for n in 0..=6 {
                counts[n] = (0..=n).map(|k| prev[k] * p[n - k]).sum();
            }
        }
        for n in 0..=if l <= 2 { 6 } else { 4 } {
            let all = enumerate_multipartitions(l, n);
            assert_eq!(all.len() as i64, counts[n], "l = {l}, n = {n}");
            assert!(all
                .windows(2)
                .all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
        }
    }
}

#[test]
fn contents_have_one_entry_per_node() {
    for n in 0..=10 {
        for lam in enumerate_partitions(n) {
            let contents = lam.contents();
            assert_eq!(contents.values().sum::<usize>(), n);
            let res = lam.residue();
            let total: BigInt = res.terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, BigInt::from(n));
            for (&c, &k) in &contents {
                assert_eq!(res.coeff(c), BigInt::from(k));
            }
            // Conjugation negates contents.
            let mirrored: LaurentPoly =
                LaurentPoly::from_exponents(conjugate(&lam).nodes().map(|b| -b.content()));
            assert_eq!(mirrored, res);
        }
    }
}

#[test]
fn text_encoding_roundtrips() {
    for l in 1..=3 {
        for n in 0..=4 {
            for m in enumerate_multipartitions(l, n) {
                let back: Multipartition = m.to_string().parse().unwrap();
                assert_eq!(back, m);
            }
        }
    }
}

#[test]
fn component_permutation_is_a_group_action() {
    for l in 1..=4 {
        let perms = all_permutations(l);
        for n in 0..=3 {
            for m in enumerate_multipartitions(l, n) {
                assert_eq!(
                    permute_components(&Permutation::identity(l), &m).unwrap(),
                    m
                );
                for a in &perms {
                    let am = permute_components(a, &m).unwrap();
                    for p in 0..l {
                        assert_eq!(am.component(p), m.component(a.inverse().apply(p)));
                    }
                    for b in &perms {
                        let lhs = permute_components(&a.compose(b), &m).unwrap();
                        let rhs =
                            permute_components(a, &permute_components(b, &m).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn reduced_words_rebuild_the_permutation() {
    for l in 1..=5 {
        for w in all_permutations(l) {
            let word = w.reduced_word();
            assert_eq!(Permutation::from_word(l, &word), w);
            let inversions = (0..l)
                .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
                .filter(|&(i, j)| w.apply(i) > w.apply(j))
                .count();
            assert_eq!(word.len(), inversions);
        }
    }
}
