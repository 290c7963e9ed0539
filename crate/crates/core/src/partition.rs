//! Partitions, multipartitions, Young diagram nodes and their contents.
//!
//! Partitions are stored without trailing zeros; `part(i)` realizes the
//! convention `λ_i = 0` for `i > L(λ)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a list of parts. Trailing zeros are dropped;
    /// anything else that is not weakly decreasing is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("partition rows are 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.row <= self.len() && node.col <= self.part(node.row)
    }

    /// Nodes of the Young diagram in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(a, &len)| (1..=len).map(move |b| Node::new(a + 1, b)))
    }

    /// The multiset of contents `b - a`, as content -> multiplicity.
    pub fn contents(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for node in self.nodes() {
            *out.entry(node.content()).or_insert(0) += 1;
        }
        out
    }

    /// `Res_λ(x) = Σ x^{cont(b)}` over the nodes of the diagram.
    pub fn residue(&self) -> LaurentPoly {
        LaurentPoly::from_exponents(self.nodes().map(|n| n.content()))
    }

    /// Canonical order: reverse lexicographic on the part lists, so that
    /// `(4) < (3,1) < (2,2) < ...` in this ordering.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// An `l`-tuple of partitions, components indexed `0..l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Multipartition { components })
    }

    pub fn empty(l: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); l.max(1)],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// Number of components `l`.
    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Componentwise canonical order, component 0 first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.components.iter().zip(&other.components) {
            match a.canonical_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.level().cmp(&other.level())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses the `2,1|1|` encoding: components joined by `|`.
    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .trim()
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Multipartition::new(components)
    }
}

/// A permutation of `{0, .., l-1}` in one-line notation: `p ↦ images[p]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(l: usize) -> Self {
        Permutation {
            images: (0..l).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation: {images:?}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of `a` and `b` in `S_l`.
    pub fn transposition(l: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..l).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&q| self.images[q]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// A reduced word `[i_1, .., i_k]` with `self = s_{i_1} ∘ .. ∘ s_{i_k}`,
    /// where `s_i` swaps `i-1` and `i` (so `1 <= i < l`).
    pub fn reduced_word(&self) -> Vec<usize> {
        // Bubble sort the one-line notation; each adjacent swap at positions
        // (i-1, i) is a right multiplication by s_i.
        let mut images = self.images.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..images.len()).find(|&i| images[i - 1] > images[i]) {
            images.swap(i - 1, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Builds `s_{i_1} ∘ .. ∘ s_{i_k}` from a word.
    pub fn from_word(l: usize, word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(l), |acc, &i| {
            acc.compose(&Permutation::transposition(l, i - 1, i))
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", strs.join(","))
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_bounded(n, n, &mut current, &mut out);
    out
}

fn partitions_bounded(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts_unchecked(current.clone()));
        return;
    }
    for first in (1..=max.min(n)).rev() {
        current.push(first);
        partitions_bounded(n - first, first, current, out);
        current.pop();
    }
}

/// All `l`-multipartitions of `n` in canonical order: lexicographic by
/// component (component 0 first), comparing components with
/// [`Partition::canonical_cmp`].
pub fn enumerate_multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l >= 1, "level must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(l);
    multipartitions_rec(l, n, &by_size, &mut current, &mut out);
    out.sort_by(Multipartition::canonical_cmp);
    out
}

fn multipartitions_rec(
    l: usize,
    remaining: usize,
    by_size: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if current.len() == l - 1 {
        for last in &by_size[remaining] {
            current.push(last.clone());
            out.push(Multipartition {
                components: current.clone(),
            });
            current.pop();
        }
        return;
    }
    for size in 0..=remaining {
        for part in &by_size[size] {
            current.push(part.clone());
            multipartitions_rec(l, remaining - size, by_size, current, out);
            current.pop();
        }
    }
}

/// The `S_l` action on multipartitions: component `p` of the result is
/// component `w^{-1}(p)` of the input.
pub fn permute_components(w: &Permutation, lambda: &Multipartition) -> Result<Multipartition> {
    if w.degree() != lambda.level() {
        return Err(Error::LevelMismatch {
            expected: lambda.level(),
            found: w.degree(),
        });
    }
    let inv = w.inverse();
    let components = (0..w.degree())
        .map(|p| lambda.components[inv.apply(p)].clone())
        .collect();
    Ok(Multipartition { components })
}
