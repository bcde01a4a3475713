use crate::error::{Error, Result};
use crate::partitions::{Node, Partition};

/// Ladders slope up-right with horizontal step 1 and vertical step p-1, so
/// (i,j) and (i-(p-1), j+1) share a ladder. Numbering starts at 1 for (1,1).
pub fn ladder_index(node: Node, p: u32) -> u32 {
    assert!(p >= 2);
    assert!(node.row >= 1 && node.col >= 1);
    (node.row + (p as usize - 1) * (node.col - 1)) as u32
}

/// Node counts per ladder, index r stored at position r-1, trailing zeros
/// stripped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LadderProfile {
    counts: Vec<u32>,
}

impl LadderProfile {
    fn from_counts(mut counts: Vec<u32>) -> LadderProfile {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        LadderProfile { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, r: u32) -> u32 {
        if r == 0 {
            return 0;
        }
        self.counts.get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn max_ladder(&self) -> u32 {
        self.counts.len() as u32
    }
}

pub fn ladder_numbers(lambda: &Partition, p: u32) -> LadderProfile {
    let mut counts = Vec::new();
    for node in lambda.nodes() {
        let r = ladder_index(node, p) as usize;
        if counts.len() < r {
            counts.resize(r, 0);
        }
        counts[r - 1] += 1;
    }
    LadderProfile::from_counts(counts)
}

/// Slide the nodes of each ladder to its topmost positions. The result is
/// the unique p-regular partition with the same ladder profile.
pub fn regularize(lambda: &Partition, p: u32) -> Partition {
    let profile = ladder_numbers(lambda, p);
    let mut row_len = vec![0u32; lambda.size() as usize + 1];
    for r in 1..=profile.max_ladder() {
        let c = profile.count(r);
        let j_max = (r - 1) / (p - 1) + 1;
        for k in 0..c {
            let j = j_max - k;
            let i = (r - (p - 1) * (j - 1)) as usize;
            row_len[i - 1] += 1;
        }
    }
    let regularized =
        Partition::new(row_len).expect("ladder nodes slide up into a partition shape");
    debug_assert!(regularized.is_p_regular(p));
    debug_assert_eq!(ladder_numbers(&regularized, p), profile);
    regularized
}

/// Strict ladder order: compare profiles at the largest ladder where they
/// differ, more nodes there wins. Total on p-regular partitions of equal
/// size; partitions with equal profiles compare false both ways.
pub fn ladder_gt(lambda: &Partition, mu: &Partition, p: u32) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lhs: lambda.size() as usize, rhs: mu.size() as usize });
    }
    let a = ladder_numbers(lambda, p);
    let b = ladder_numbers(mu, p);
    let top = a.max_ladder().max(b.max_ladder());
    for r in (1..=top).rev() {
        if a.count(r) != b.count(r) {
            return Ok(a.count(r) > b.count(r));
        }
    }
    Ok(false)
}
