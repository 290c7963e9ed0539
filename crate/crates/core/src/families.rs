//! The two block partitions of `P(l, n)`.
//!
//! * Calogero-Moser: two multipartitions are equivalent iff their class
//!   multisets `C_[t]` agree for every `t`, which is the same as having equal
//!   `J`-hearts `τ_r(w(Λ))_J`. Both descriptions are computed; the second one
//!   through two independent routes.
//! * Residue: two multipartitions are equivalent iff their charged residues
//!   `Σ_i x^{m̄_i} Res_{λ^(i)}(x^d)` agree.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;

use crate::alcove::{reduce_to_alcove, AlcoveDatum, FamilyParams};
use crate::beta::{beta, chi, tau, StabilizingSequence};
use crate::error::{Error, Result};
use crate::jheart::j_heart;
use crate::laurent::LaurentPoly;
use crate::partition::{enumerate_multipartitions, permute_components, Multipartition, Partition};

/// `C^p = β^{r_p}(λ^(w^{-1}(p)))` for `p = 0..l`.
pub fn c_tuple(lambda: &Multipartition, datum: &AlcoveDatum) -> Vec<StabilizingSequence> {
    let l = datum.level();
    assert_eq!(
        lambda.level(),
        l,
        "multipartition level does not match the parameters"
    );
    let inv = datum.element.w.inverse();
    (0..l)
        .map(|p| beta(lambda.component(inv.apply(p)), datum.element.r[p]))
        .collect()
}

/// One class `C_[t]`: `count` sequences whose union contains every integer
/// `<= floor` exactly `count` times, plus the listed entries above `floor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassEntry {
    pub t: u64,
    pub count: usize,
    pub floor: i64,
    /// Entries above `floor`, with multiplicity, decreasing.
    pub entries: Vec<i64>,
}

impl ClassEntry {
    /// Raises `floor` as far as the multiset allows. After this the
    /// representation no longer depends on the cutoff it was built from.
    fn normalize(&mut self) {
        loop {
            let next = self.floor + 1;
            let have = self
                .entries
                .iter()
                .rev()
                .take_while(|&&e| e == next)
                .count();
            if have != self.count {
                break;
            }
            let keep = self.entries.len() - have;
            self.entries.truncate(keep);
            self.floor = next;
        }
    }
}

/// The multisets `C_[t]`. Class `t = 0` stands for `C_[0] = C_[d]`; only
/// nonempty classes are listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassMultiset {
    pub classes: Vec<ClassEntry>,
}

impl ClassMultiset {
    /// Re-expresses every class above a common cutoff, undoing
    /// normalization. Two values compare equal iff these raw forms agree.
    pub fn raw_above(&self, cutoff: i64) -> Vec<(u64, usize, Vec<i64>)> {
        self.classes
            .iter()
            .map(|c| {
                assert!(cutoff <= c.floor);
                let mut entries = c.entries.clone();
                for y in (cutoff + 1..=c.floor).rev() {
                    entries.extend(std::iter::repeat_n(y, c.count));
                }
                (c.t, c.count, entries)
            })
            .collect()
    }
}

impl fmt::Display for ClassMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let e: Vec<String> = c.entries.iter().map(ToString::to_string).collect();
            write!(
                f,
                "[{}] x{} <= {} + {{{}}}",
                c.t,
                c.count,
                c.floor,
                e.join(",")
            )?;
        }
        Ok(())
    }
}

/// Largest cutoff at which truncating every `C^p` loses nothing.
pub fn max_cutoff(datum: &AlcoveDatum, n: usize) -> i64 {
    datum.element.r.iter().min().copied().unwrap_or(0) - n as i64 - 2
}

/// The members of the class containing `p`, as `(t, shifted_down)`: for
/// `p ∈ I_0` the class uses `S^{-1} C^p`.
fn class_slot(datum: &AlcoveDatum, p: usize) -> (u64, bool) {
    let t = datum.class_of(p);
    if t == 0 {
        (0, true)
    } else if t == datum.d {
        (0, false)
    } else {
        (t, false)
    }
}

/// `C_[t]` for every `t`, truncated at `cutoff` (default: [`max_cutoff`]).
pub fn class_multisets(
    lambda: &Multipartition,
    datum: &AlcoveDatum,
    cutoff: Option<i64>,
) -> Result<ClassMultiset> {
    let max = max_cutoff(datum, lambda.size());
    let cutoff = cutoff.unwrap_or(max);
    if cutoff > max {
        return Err(Error::InvalidCutoff { cutoff, max });
    }
    let tuple = c_tuple(lambda, datum);
    let mut by_class: std::collections::BTreeMap<u64, ClassEntry> = Default::default();
    for (p, c) in tuple.iter().enumerate() {
        let (t, down) = class_slot(datum, p);
        let entry = by_class.entry(t).or_insert_with(|| ClassEntry {
            t,
            count: 0,
            floor: cutoff,
            entries: Vec::new(),
        });
        entry.count += 1;
        if down {
            entry
                .entries
                .extend(c.entries_above(cutoff + 1).into_iter().map(|y| y - 1));
        } else {
            entry.entries.extend(c.entries_above(cutoff));
        }
    }
    let classes = by_class
        .into_values()
        .map(|mut c| {
            c.entries.sort_unstable_by(|a, b| b.cmp(a));
            c.normalize();
            c
        })
        .collect();
    Ok(ClassMultiset { classes })
}

/// A pending move in the construction of `C̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Redistribution {
    /// Move `x` from `C^p` to `C^{p-1}` (`0 != p ∈ J`).
    Down { p: usize, x: i64 },
    /// Move `x` out of `C^0` and put `x - 1` into `C^{l-1}` (`0 ∈ I_0`).
    Wrap { x: i64 },
}

/// `C̃`: the unique tuple with the same class multisets as `C` such that
/// `C̃^p ⊆ C̃^{p-1}` for `0 != p ∈ J` and `S^{-1} C̃^0 ⊆ C̃^{l-1}` when
/// `0 ∈ I_0`.
pub fn tilde_c(lambda: &Multipartition, datum: &AlcoveDatum) -> Vec<StabilizingSequence> {
    tilde_c_by(&c_tuple(lambda, datum), datum, |moves| moves[0])
}

/// Runs the redistribution from `tuple`, letting `choose` pick the next move
/// among all currently available ones.
pub fn tilde_c_by(
    tuple: &[StabilizingSequence],
    datum: &AlcoveDatum,
    mut choose: impl FnMut(&[Redistribution]) -> Redistribution,
) -> Vec<StabilizingSequence> {
    let l = tuple.len();
    let floor = tuple
        .iter()
        .map(StabilizingSequence::floor)
        .min()
        .unwrap_or(0)
        - 1;
    let mut sets: Vec<BTreeSet<i64>> = tuple
        .iter()
        .map(|c| c.entries_above(floor).into_iter().collect())
        .collect();
    let wrap_active = datum.class_of(0) == 0;
    let contains = |s: &BTreeSet<i64>, y: i64| y <= floor || s.contains(&y);
    loop {
        let mut moves = Vec::new();
        for p in 1..l {
            if !datum.j.members().contains(&p) {
                continue;
            }
            for &x in sets[p].iter().rev() {
                if !contains(&sets[p - 1], x) {
                    moves.push(Redistribution::Down { p, x });
                }
            }
        }
        if wrap_active {
            for &x in sets[0].iter().rev() {
                if !contains(&sets[l - 1], x - 1) {
                    moves.push(Redistribution::Wrap { x });
                }
            }
        }
        if moves.is_empty() {
            break;
        }
        match choose(&moves) {
            Redistribution::Down { p, x } => {
                sets[p].remove(&x);
                sets[p - 1].insert(x);
            }
            Redistribution::Wrap { x } => {
                sets[0].remove(&x);
                sets[l - 1].insert(x - 1);
            }
        }
    }
    sets.iter()
        .map(|s| StabilizingSequence::from_set_above(s, floor))
        .collect()
}

/// The `J`-heart `τ_r(w(Λ))_J`, computed as the partition with β-number
/// `χ(C̃)` and, independently, by stripping `J`-removable nodes from
/// `τ_r(w(Λ))`. The two must agree.
pub fn jheart_of(lambda: &Multipartition, datum: &AlcoveDatum) -> Result<Partition> {
    let via_tilde = chi(&tilde_c(lambda, datum));
    let total_shift: i64 = datum.element.r.iter().sum();
    let permuted = permute_components(&datum.element.w, lambda)?;
    let via_removal = j_heart(&tau(&datum.element.r, &permuted)?, &datum.j);
    if via_tilde.shift() != total_shift || via_tilde.body() != &via_removal {
        return Err(Error::RouteDisagreement {
            multipartition: lambda.to_string(),
            via_tilde: format!("{} (shift {})", via_tilde.body(), via_tilde.shift()),
            via_removal: via_removal.to_string(),
        });
    }
    Ok(via_removal)
}

/// `Σ_i x^{charges_i} Res_{λ^(i)}(x^d)`.
pub fn charged_residue_with(lambda: &Multipartition, charges: &[i64], d: u64) -> LaurentPoly {
    assert_eq!(lambda.level(), charges.len());
    let mut out = LaurentPoly::zero();
    for (c, &m) in lambda.components().iter().zip(charges) {
        out += &c.residue().substitute_power(d).shift(m);
    }
    out
}

/// `Res^{m̄}_Λ(x^d)`.
pub fn charged_residue(lambda: &Multipartition, p: &FamilyParams) -> LaurentPoly {
    charged_residue_with(lambda, &p.mbar(), p.denominator())
}

/// `Res^{m(dθ)}_Λ(x^d) = x^{d + dH_0} Res^{m̄}_Λ(x^d)`.
pub fn bridge_identity_check(lambda: &Multipartition, p: &FamilyParams) -> bool {
    let d = p.denominator();
    let lhs = charged_residue_with(lambda, &p.mdtheta(), d);
    let offset = p.mdtheta()[0] - p.mbar()[0];
    lhs == charged_residue(lambda, p).shift(offset)
}

/// A set partition of a canonically ordered ground set. Blocks hold indices
/// into the ground set; each block is increasing and blocks are ordered by
/// their least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    ground: Vec<Multipartition>,
    blocks: Vec<Vec<usize>>,
}

impl BlockPartition {
    /// Groups the ground set by a key. Keys are computed in parallel on the
    /// current rayon pool; the result does not depend on scheduling.
    pub fn from_key<K, F>(ground: Vec<Multipartition>, key: F) -> Result<Self>
    where
        K: Hash + Eq + Send,
        F: Fn(&Multipartition) -> Result<K> + Sync,
    {
        let keys: Vec<K> = ground.par_iter().map(&key).collect::<Result<_>>()?;
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, k) in keys.into_iter().enumerate() {
            let b = *index.entry(k).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        Ok(BlockPartition { ground, blocks })
    }

    /// Builds a partition from explicit blocks of ground-set indices.
    pub fn from_blocks(ground: Vec<Multipartition>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground.len()];
        for &i in blocks.iter().flatten() {
            if i >= ground.len() || seen[i] {
                return Err(Error::InvalidParameter(
                    "blocks must be disjoint indices".into(),
                ));
            }
            seen[i] = true;
        }
        if seen.contains(&false) || blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidParameter(
                "blocks must cover the ground set".into(),
            ));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(BlockPartition { ground, blocks })
    }

    pub fn ground(&self) -> &[Multipartition] {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Blocks rendered in the text encoding.
    pub fn block_strings(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&i| self.ground[i].to_string()).collect())
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.ground.len()
    }

    /// Block number of every ground element.
    fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }
}

/// Position of two partitions of the same set in the refinement order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    ARefinesB,
    BRefinesA,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Equal => "Equal",
            Comparison::ARefinesB => "ARefinesB",
            Comparison::BRefinesA => "BRefinesA",
            Comparison::Incomparable => "Incomparable",
        })
    }
}

fn refines(a: &[usize], b: &[usize]) -> bool {
    let mut image: HashMap<usize, usize> = HashMap::new();
    a.iter()
        .zip(b)
        .all(|(&x, &y)| *image.entry(x).or_insert(y) == y)
}

pub fn compare(a: &BlockPartition, b: &BlockPartition) -> Result<Comparison> {
    if a.ground != b.ground {
        return Err(Error::GroundSetMismatch);
    }
    let (la, lb) = (a.labels(), b.labels());
    Ok(match (refines(&la, &lb), refines(&lb, &la)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::ARefinesB,
        (false, true) => Comparison::BRefinesA,
        (false, false) => Comparison::Incomparable,
    })
}

/// The Calogero-Moser partition, grouping on the class multisets.
pub fn cm_partition(p: &FamilyParams) -> BlockPartition {
    cm_partition_with(p, &reduce_to_alcove(p), None).expect("default cutoff is valid")
}

pub fn cm_partition_with(
    p: &FamilyParams,
    datum: &AlcoveDatum,
    cutoff: Option<i64>,
) -> Result<BlockPartition> {
    let ground = enumerate_multipartitions(p.level(), p.size());
    BlockPartition::from_key(ground, |m| class_multisets(m, datum, cutoff))
}

/// The Calogero-Moser partition, grouping on `J`-hearts. Fails if the two
/// `J`-heart routes ever disagree.
pub fn cm_partition_via_jhearts(p: &FamilyParams, datum: &AlcoveDatum) -> Result<BlockPartition> {
    let ground = enumerate_multipartitions(p.level(), p.size());
    BlockPartition::from_key(ground, |m| jheart_of(m, datum))
}

/// Fibers of the charged residue `Res^{m̄}_Λ(x^d)`.
pub fn rouquier_residue_partition(p: &FamilyParams) -> BlockPartition {
    let ground = enumerate_multipartitions(p.level(), p.size());
    BlockPartition::from_key(ground, |m| Ok(charged_residue(m, p))).expect("infallible key")
}
