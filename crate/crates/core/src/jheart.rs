//! `j`-removable nodes and `J`-hearts.
//!
//! Removal is done on the β-set: the node at the end of row `a` has content
//! `β_a - 1`, it is removable iff `β_{a+1} < β_a - 1`, and removing it
//! replaces `β_a` by `β_a - 1`.

use std::collections::BTreeSet;

use crate::partition::{Node, Partition};

/// A residue set `J ⊆ {0, .., l-1}` together with its modulus `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    l: usize,
    members: BTreeSet<usize>,
}

impl ResidueSet {
    pub fn new(l: usize, members: impl IntoIterator<Item = usize>) -> Self {
        assert!(l >= 1, "modulus must be positive");
        let members: BTreeSet<usize> = members.into_iter().collect();
        assert!(members.iter().all(|&j| j < l), "residues must lie in 0..l");
        ResidueSet { l, members }
    }

    pub fn empty(l: usize) -> Self {
        ResidueSet::new(l, [])
    }

    pub fn full(l: usize) -> Self {
        ResidueSet::new(l, 0..l)
    }

    pub fn modulus(&self) -> usize {
        self.l
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains_content(&self, content: i64) -> bool {
        self.members
            .contains(&(content.rem_euclid(self.l as i64) as usize))
    }
}

/// Removable nodes of `λ` whose content is `≡ j (mod l)`, by row.
pub fn removable_nodes(lambda: &Partition, j: usize, l: usize) -> Vec<Node> {
    assert!(l >= 1 && j < l);
    let beta = beta_head(lambda);
    rows_removable(&beta, &ResidueSet::new(l, [j]))
        .into_iter()
        .map(|a| Node::new(a, lambda.part(a)))
        .collect()
}

/// The `J`-heart: remove `J`-removable nodes until none are left, always
/// taking the one in the smallest row.
pub fn j_heart(lambda: &Partition, residues: &ResidueSet) -> Partition {
    j_heart_by(lambda, residues, |rows| rows[0])
}

/// Like [`j_heart`] but `choose` picks which of the currently removable rows
/// to strip next. `choose` receives the nonempty list of candidate rows.
pub fn j_heart_by(
    lambda: &Partition,
    residues: &ResidueSet,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Partition {
    let mut beta = beta_head(lambda);
    loop {
        let rows = rows_removable(&beta, residues);
        if rows.is_empty() {
            break;
        }
        let a = choose(&rows);
        debug_assert!(rows.contains(&a));
        beta[a - 1] -= 1;
    }
    partition_from_beta_head(&beta)
}

/// `β(λ)_1, .., β(λ)_{L+1}` at charge 0; the entry after the last row is
/// kept so that the removability test of row `L` can look one step down.
fn beta_head(lambda: &Partition) -> Vec<i64> {
    (1..=lambda.len() + 1)
        .map(|i| lambda.part(i) as i64 + 1 - i as i64)
        .collect()
}

fn partition_from_beta_head(beta: &[i64]) -> Partition {
    let mut parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b + i as i64) as usize)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::from_parts_unchecked(parts)
}

/// 1-based rows `a` whose last node is removable with content in `J`.
fn rows_removable(beta: &[i64], residues: &ResidueSet) -> Vec<usize> {
    // The final stored entry belongs to an empty row, never removable.
    (0..beta.len().saturating_sub(1))
        .filter(|&i| beta[i + 1] < beta[i] - 1 && residues.contains_content(beta[i] - 1))
        .map(|i| i + 1)
        .collect()
}
