//! β-numbers and stabilizing sequences.
//!
//! A strictly decreasing integer sequence that eventually reads
//! `r+1-i, r-i, ..` is stored as the pair `(r, λ)` with `entry(i) = λ_i + r + 1 - i`.
//! Every integer at or below `r - L(λ)` belongs to the sequence, so any
//! operation on entries only has to look at a finite head.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::{Multipartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilizingSequence {
    shift: i64,
    body: Partition,
}

impl StabilizingSequence {
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn body(&self) -> &Partition {
        &self.body
    }

    /// `entry(i)` for 1-based `i`.
    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1, "sequence indices are 1-based");
        self.body.part(i) as i64 + self.shift + 1 - i as i64
    }

    /// The largest integer `F` such that every integer `<= F` is an entry.
    pub fn floor(&self) -> i64 {
        self.shift - self.body.len() as i64
    }

    pub fn contains(&self, y: i64) -> bool {
        if y <= self.floor() {
            return true;
        }
        (1..=self.body.len()).any(|i| self.entry(i) == y)
    }

    /// All entries strictly greater than `bound`, in decreasing order.
    pub fn entries_above(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = (1..=self.body.len())
            .map(|i| self.entry(i))
            .filter(|&e| e > bound)
            .collect();
        out.extend((bound + 1..=self.floor()).rev());
        out
    }

    /// Builds the sequence consisting of `above` together with every integer
    /// `<= floor`. Elements of `above` at or below `floor` are ignored.
    pub fn from_set_above(above: &BTreeSet<i64>, floor: i64) -> Self {
        let head: Vec<i64> = above.range(floor + 1..).rev().copied().collect();
        let shift = floor + head.len() as i64;
        let mut parts: Vec<usize> = head
            .iter()
            .enumerate()
            .map(|(i, &e)| (e - shift - 1 + (i as i64 + 1)) as usize)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        StabilizingSequence {
            shift,
            body: Partition::from_parts_unchecked(parts),
        }
    }

    /// Inverse of [`beta`]: `head` is followed by `shift+1-i` for every index
    /// `i` past the head.
    pub fn from_entries(head: &[i64], shift: i64) -> Result<Self> {
        if head.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(format!("{head:?}")));
        }
        if let Some(&last) = head.last() {
            let k = head.len() as i64;
            // The next entry is shift - k.
            if last <= shift - k {
                return Err(Error::TailNotConsecutive(format!(
                    "{head:?} with shift {shift}"
                )));
            }
        }
        let mut parts: Vec<usize> = head
            .iter()
            .enumerate()
            .map(|(i, &e)| (e - shift - 1 + i as i64 + 1) as usize)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(StabilizingSequence {
            shift,
            body: Partition::from_parts_unchecked(parts),
        })
    }
}

impl fmt::Display for StabilizingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = (1..=self.body.len() + 2)
            .map(|i| self.entry(i).to_string())
            .collect();
        write!(f, "({}, ...)", head.join(", "))
    }
}

/// The `r`-shifted β-number of `λ`.
pub fn beta(lambda: &Partition, r: i64) -> StabilizingSequence {
    StabilizingSequence {
        shift: r,
        body: lambda.clone(),
    }
}

/// `S^i C`: every entry shifted by `i`.
pub fn shift_seq(c: &StabilizingSequence, i: i64) -> StabilizingSequence {
    StabilizingSequence {
        shift: c.shift + i,
        body: c.body.clone(),
    }
}

/// `Σ_{i=1}^{K} x^{C_i}`.
pub fn pi_truncated(c: &StabilizingSequence, k: usize) -> LaurentPoly {
    assert!(k >= 1, "truncation length must be positive");
    LaurentPoly::from_exponents((1..=k).map(|i| c.entry(i)))
}

/// Interleaves `l` sequences: entry `y` of the `q`-th one becomes
/// `l(y - 1) + q + 1`. The result stabilizes with respect to the sum of the
/// input shifts.
pub fn chi(seqs: &[StabilizingSequence]) -> StabilizingSequence {
    assert!(!seqs.is_empty(), "chi needs at least one sequence");
    let l = seqs.len() as i64;
    let min_floor = seqs.iter().map(StabilizingSequence::floor).min().unwrap();
    // Every integer <= l(min_floor - 1) + 1 is hit: in residue class q it is
    // the image of an integer <= min_floor.
    let floor = l * (min_floor - 1) + 1;
    let mut above = BTreeSet::new();
    for (q, c) in seqs.iter().enumerate() {
        for y in c.entries_above(min_floor - 1) {
            let z = l * (y - 1) + q as i64 + 1;
            if z > floor {
                above.insert(z);
            }
        }
    }
    StabilizingSequence::from_set_above(&above, floor)
}

/// `τ_r(Λ)`: the partition whose `Σ r_q`-shifted β-number is
/// `χ(β^{r_0}(λ^(0)), .., β^{r_{l-1}}(λ^(l-1)))`.
pub fn tau(r: &[i64], lambda: &Multipartition) -> Result<Partition> {
    if r.len() != lambda.level() {
        return Err(Error::LevelMismatch {
            expected: lambda.level(),
            found: r.len(),
        });
    }
    let seqs: Vec<StabilizingSequence> = lambda
        .components()
        .iter()
        .zip(r)
        .map(|(c, &rq)| beta(c, rq))
        .collect();
    let out = chi(&seqs);
    debug_assert_eq!(out.shift, r.iter().sum::<i64>());
    Ok(out.body)
}
