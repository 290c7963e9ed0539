#![allow(dead_code)]

use std::collections::BTreeSet;

use cm_families::alcove::{rational, FamilyParams, Rational};
use cm_families::beta::StabilizingSequence;
use cm_families::partition::{enumerate_multipartitions, Multipartition};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pool of entries for parameter grids: integers, halves, thirds, quarters,
/// sixths, negatives.
pub const POOL: &[(i64, i64)] = &[
    (0, 1),
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (3, 1),
    (1, 2),
    (-1, 2),
    (3, 2),
    (-3, 2),
    (5, 2),
    (1, 3),
    (2, 3),
    (-1, 3),
    (-2, 3),
    (4, 3),
    (-4, 3),
    (5, 3),
    (1, 4),
    (3, 4),
    (-3, 4),
    (5, 4),
    (1, 6),
    (5, 6),
    (-1, 6),
    (7, 6),
];

fn r(p: (i64, i64)) -> Rational {
    rational(p.0, p.1)
}

/// At least 40 distinct `H` vectors of length `l - 1`, starting with the
/// all-zero vector and hand-picked integer, half, third, negative and
/// mixed-denominator points.
pub fn grid_h(l: usize) -> Vec<Vec<Rational>> {
    let k = l - 1;
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut push = |h: Vec<Rational>, out: &mut Vec<Vec<Rational>>| {
        if seen.insert(h.clone()) {
            out.push(h);
        }
    };
    let fixed: [&[(i64, i64)]; 7] = [
        &[(0, 1)],
        &[(1, 1), (2, 1), (-1, 1)],
        &[(1, 2), (-1, 2), (3, 2)],
        &[(1, 3), (2, 3), (-1, 3)],
        &[(-1, 1), (-2, 3), (-1, 2)],
        &[(1, 2), (1, 3), (-1, 4)],
        &[(2, 1), (-1, 6), (5, 4)],
    ];
    for f in fixed {
        push((0..k).map(|i| r(f[i % f.len()])).collect(), &mut out);
    }
    if k == 1 {
        for &p in POOL {
            push(vec![r(p)], &mut out);
        }
        for den in 5..=8 {
            for num in -den..=den {
                push(vec![rational(num, den)], &mut out);
            }
        }
    } else {
        let mut g = rng(0x6c + l as u64);
        while out.len() < 44 {
            let h = (0..k)
                .map(|_| r(POOL[g.gen_range(0..POOL.len())]))
                .collect();
            push(h, &mut out);
        }
    }
    out.truncate(44);
    out
}

/// The `(l, n)` ranges of the main comparison.
pub fn main_grid_shapes() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((2, n));
    }
    for n in 1..=4 {
        out.push((3, n));
    }
    for n in 1..=3 {
        out.push((4, n));
    }
    out
}

pub fn params(l: usize, n: usize, h: &[(i64, i64)]) -> FamilyParams {
    FamilyParams::new(l, n, h.iter().map(|&p| r(p)).collect()).unwrap()
}

pub fn random_rational(g: &mut ChaCha8Rng, max_den: i64, max_abs: i64) -> Rational {
    let den = g.gen_range(1..=max_den);
    let num = g.gen_range(-max_abs * den..=max_abs * den);
    rational(num, den)
}

pub fn random_params(g: &mut ChaCha8Rng, l: usize, n: usize, max_den: i64) -> FamilyParams {
    let h = (0..l - 1).map(|_| random_rational(g, max_den, 3)).collect();
    FamilyParams::new(l, n, h).unwrap()
}

pub fn random_multipartition(g: &mut ChaCha8Rng, l: usize, n: usize) -> Multipartition {
    let all = enumerate_multipartitions(l, n);
    all[g.gen_range(0..all.len())].clone()
}

pub fn shuffle_pick<T: Copy>(g: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[g.gen_range(0..xs.len())]
}

/// `χ` by brute force: materializes `depth` entries of every sequence, maps
/// and sorts them, and keeps the part that is complete (above the largest
/// per-sequence minimum).
pub fn chi_by_scan(seqs: &[StabilizingSequence], depth: usize) -> Vec<i64> {
    let l = seqs.len() as i64;
    let mut all = Vec::new();
    let mut threshold = i64::MIN;
    for (q, c) in seqs.iter().enumerate() {
        let zs: Vec<i64> = (1..=depth)
            .map(|i| l * (c.entry(i) - 1) + q as i64 + 1)
            .collect();
        threshold = threshold.max(*zs.last().unwrap());
        all.extend(zs);
    }
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.retain(|&z| z > threshold);
    all
}
