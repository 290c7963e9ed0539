mod common;

use std::collections::{BTreeSet, HashMap};

use cm_families::beta::{beta, chi, pi_truncated, shift_seq, tau, StabilizingSequence};
use cm_families::jheart::{j_heart, j_heart_by, removable_nodes, ResidueSet};
use cm_families::laurent::LaurentPoly;
use cm_families::partition::{enumerate_multipartitions, enumerate_partitions, Node, Partition};
use cm_families::Error;
use rand::Rng;

fn random_partition(g: &mut impl Rng, max: usize) -> Partition {
    let all = enumerate_partitions(g.gen_range(0..=max));
    all[g.gen_range(0..all.len())].clone()
}

#[test]
fn beta_roundtrip() {
    for n in 0..=8 {
        for lam in enumerate_partitions(n) {
            for r in -5..=5 {
                let b = beta(&lam, r);
                assert_eq!(b.body(), &lam);
                assert_eq!(b.shift(), r);
                for extra in 0..=2 {
                    let head: Vec<i64> = (1..=lam.len() + extra).map(|i| b.entry(i)).collect();
                    assert_eq!(StabilizingSequence::from_entries(&head, r).unwrap(), b);
                }
                for below in 0..=2 {
                    let bound = b.floor() - below;
                    let set: BTreeSet<i64> = b.entries_above(bound).into_iter().collect();
                    assert_eq!(StabilizingSequence::from_set_above(&set, bound), b);
                }
                assert_eq!(shift_seq(&shift_seq(&b, 3), -3), b);
            }
        }
    }
}

#[test]
fn from_entries_rejects_bad_heads() {
    assert!(matches!(
        StabilizingSequence::from_entries(&[3, 3], 0),
        Err(Error::NotStrictlyDecreasing(_))
    ));
    assert!(matches!(
        StabilizingSequence::from_entries(&[5, -2], 0),
        Err(Error::TailNotConsecutive(_))
    ));
}

#[test]
fn res_cont_against_direct_expansion() {
    for n in 0..=8 {
        for lam in enumerate_partitions(n) {
            for r in -3..=3 {
                // (x - 1) x^r Res(x), one node at a time.
                let mut lhs = LaurentPoly::zero();
                for node in lam.nodes() {
                    lhs += &LaurentPoly::monomial(node.content() + r + 1);
                    lhs = lhs - LaurentPoly::monomial(node.content() + r);
                }
                let len = lam.len();
                for k in [len, len + 1, len + 5].into_iter().filter(|&k| k >= 1) {
                    let mut rhs = pi_truncated(&beta(&lam, r), k);
                    for a in 1..=k as i64 {
                        rhs = rhs - LaurentPoly::monomial(r + 1 - a);
                    }
                    assert_eq!(lhs, rhs, "{lam} r={r} K={k}");
                }
            }
        }
    }
}

#[test]
fn chi_stabilizes_with_summed_shift() {
    let mut g = common::rng(32);
    for _ in 0..400 {
        let l = g.gen_range(1..=5);
        let seqs: Vec<StabilizingSequence> = (0..l)
            .map(|_| beta(&random_partition(&mut g, 6), g.gen_range(-4..=4)))
            .collect();
        let total: i64 = seqs.iter().map(StabilizingSequence::shift).sum();
        let out = chi(&seqs);
        assert_eq!(out.shift(), total);
        let scan = common::chi_by_scan(&seqs, 40);
        assert!(scan.len() > out.body().len() + 10);
        for (i, &z) in scan.iter().enumerate() {
            assert_eq!(out.entry(i + 1), z);
        }
        // Past the body the scan is consecutive from the summed shift.
        for i in out.body().len() + 1..=scan.len() {
            assert_eq!(scan[i - 1], total + 1 - i as i64);
        }
    }
}

#[test]
fn chi_is_injective_on_small_tuples() {
    for l in 1..=3usize {
        let shifts: Vec<Vec<i64>> = (0..5i64.pow(l as u32))
            .map(|mut k| {
                (0..l)
                    .map(|_| {
                        let v = k % 5 - 2;
                        k /= 5;
                        v
                    })
                    .collect()
            })
            .collect();
        let mut seen: HashMap<StabilizingSequence, Vec<StabilizingSequence>> = HashMap::new();
        for n in 0..=4 {
            for m in enumerate_multipartitions(l, n) {
                for r in &shifts {
                    let seqs: Vec<StabilizingSequence> = m
                        .components()
                        .iter()
                        .zip(r)
                        .map(|(c, &s)| beta(c, s))
                        .collect();
                    let out = chi(&seqs);
                    assert_eq!(tau(r, &m).unwrap(), *out.body());
                    if let Some(prev) = seen.insert(out, seqs.clone()) {
                        assert_eq!(prev, seqs, "chi collision at l = {l}");
                    }
                }
            }
        }
    }
}

/// Every terminal partition reachable by removing `J`-removable nodes in
/// any order, found on the diagram.
fn terminal_hearts(lam: &Partition, set: &ResidueSet, out: &mut BTreeSet<Vec<usize>>) {
    let mut any = false;
    for node in lam.nodes() {
        let corner = !lam.contains(Node::new(node.row, node.col + 1))
            && !lam.contains(Node::new(node.row + 1, node.col));
        if corner && set.contains_content(node.content()) {
            any = true;
            let mut parts = lam.parts().to_vec();
            parts[node.row - 1] -= 1;
            terminal_hearts(&Partition::new(parts).unwrap(), set, out);
        }
    }
    if !any {
        out.insert(lam.parts().to_vec());
    }
}

fn all_residue_sets(l: usize) -> Vec<ResidueSet> {
    (0..1u32 << l)
        .map(|mask| ResidueSet::new(l, (0..l).filter(|j| mask >> j & 1 == 1)))
        .collect()
}

#[test]
fn jheart_matches_exhaustive_search() {
    for n in 0..=7 {
        for lam in enumerate_partitions(n) {
            for l in 1..=3 {
                for set in all_residue_sets(l) {
                    let mut found = BTreeSet::new();
                    terminal_hearts(&lam, &set, &mut found);
                    assert_eq!(found.len(), 1, "{lam} l={l}");
                    assert_eq!(
                        j_heart(&lam, &set).parts(),
                        found.first().unwrap().as_slice()
                    );
                }
                assert!(j_heart(&lam, &ResidueSet::full(l)).is_empty());
            }
        }
    }
}

#[test]
fn jheart_is_confluent_and_a_fixpoint() {
    let mut g = common::rng(5);
    for n in 0..=8 {
        for lam in enumerate_partitions(n) {
            for l in 1..=4 {
                for set in all_residue_sets(l) {
                    let heart = j_heart(&lam, &set);
                    for j in set.members() {
                        assert!(removable_nodes(&heart, *j, l).is_empty());
                    }
                    assert_eq!(j_heart(&heart, &set), heart);
                    assert!(heart.size() <= lam.size());
                    for _ in 0..20 {
                        let other = j_heart_by(&lam, &set, |rows| rows[g.gen_range(0..rows.len())]);
                        assert_eq!(other, heart, "{lam} l={l} J={:?}", set.members());
                    }
                }
                assert_eq!(j_heart(&lam, &ResidueSet::empty(l)), lam);
            }
        }
    }
}
