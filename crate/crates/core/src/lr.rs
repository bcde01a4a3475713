use crate::abacus::{p_core, BlockId, RouquierDecomposition};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::BTreeMap;

/// Littlewood-Richardson coefficient: skew semistandard fillings of eps/rho
/// with content nu whose reverse reading word is a lattice word.
pub fn lr_coefficient(eps: &Partition, rho: &Partition, nu: &Partition) -> Result<u64> {
    if rho.size() + nu.size() != eps.size() {
        return Err(Error::SizeMismatch {
            lhs: (rho.size() + nu.size()) as usize,
            rhs: eps.size() as usize,
        });
    }
    if !eps.contains(rho) {
        return Ok(0);
    }
    let rows = eps.len();
    let m = nu.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (rho.part(r)..eps.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut grid = vec![BTreeMap::new(); rows];
    let mut counts = vec![0u32; m + 1];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        eps: &Partition,
        rho: &Partition,
        nu: &Partition,
        m: usize,
        counts: &mut Vec<u32>,
        grid: &mut Vec<BTreeMap<usize, usize>>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=m {
            if counts[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] >= counts[v - 1] {
                continue;
            }
            if (c as u32) + 1 < eps.part(r) {
                if let Some(&right) = grid[r].get(&(c + 1)) {
                    if v > right {
                        continue;
                    }
                }
            }
            if r > 0 && (c as u32) < eps.part(r - 1) && (c as u32) >= rho.part(r - 1) {
                let above = grid[r - 1][&c];
                if v <= above {
                    continue;
                }
            }
            counts[v] += 1;
            grid[r].insert(c, v);
            total += go(idx + 1, cells, eps, rho, nu, m, counts, grid);
            grid[r].remove(&c);
            counts[v] -= 1;
        }
        total
    }
    Ok(go(0, &cells, eps, rho, nu, m, &mut counts, &mut grid))
}

/// Partitions obtained from rho by adding a vertical strip of exactly c
/// cells, in descending order.
pub fn column_pieri(rho: &Partition, c: u32) -> Vec<Partition> {
    let max_rows = rho.len() + c as usize;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(max_rows);
    fn go(row: usize, max_rows: usize, remaining: u32, rho: &Partition, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 && row >= rho.len() {
            out.push(Partition::new(current.clone()).expect("strip rows stay weakly decreasing"));
            return;
        }
        if row >= max_rows {
            return;
        }
        let prev = if row == 0 { u32::MAX } else { current[row - 1] };
        for add in (0..=remaining.min(1)).rev() {
            let len = rho.part(row) + add;
            if len > prev || len == 0 {
                continue;
            }
            current.push(len);
            go(row + 1, max_rows, remaining - add, rho, current, out);
            current.pop();
        }
    }
    go(0, max_rows, c, rho, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Multiset of Specht factor labels appearing in one filtration, all of the
/// same degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiltrationMultiset {
    degree: u32,
    entries: BTreeMap<Partition, u64>,
}

impl FiltrationMultiset {
    pub fn new(degree: u32) -> FiltrationMultiset {
        FiltrationMultiset { degree, entries: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn add(&mut self, part: Partition, mult: u64) {
        assert_eq!(part.size(), self.degree, "entry degree mismatch");
        if mult > 0 {
            *self.entries.entry(part).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, part: &Partition) -> u64 {
        self.entries.get(part).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<Partition, u64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

impl Serialize for FiltrationMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Entry<'a> {
            partition: &'a Partition,
            mult: u64,
        }
        let entries: Vec<Entry> =
            self.entries.iter().map(|(p, &m)| Entry { partition: p, mult: m }).collect();
        let mut s = serializer.serialize_struct("FiltrationMultiset", 2)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// Keep only the factors lying in the given block.
pub fn block_truncate(ms: &FiltrationMultiset, block: &BlockId) -> FiltrationMultiset {
    let mut out = FiltrationMultiset::new(ms.degree());
    if block.degree() != ms.degree() {
        return out;
    }
    for (part, &mult) in ms.entries() {
        if p_core(part, block.p()) == *block.core() {
            out.add(part.clone(), mult);
        }
    }
    out
}

/// Specht factors of the block cut of an induction along c vertical p-hooks:
/// strips of p*c cells whose result stays over the block's core.
pub fn vertical_hook_inductions(
    rho: &Partition,
    c: u32,
    block: &BlockId,
) -> Result<FiltrationMultiset> {
    let p = block.p();
    let target = rho.size() + p * c;
    if block.degree() != target {
        return Err(Error::BlockMismatch(format!(
            "inducing {} by {} hooks of size {} lands in degree {}, block has degree {}",
            rho,
            c,
            p,
            target,
            block.degree()
        )));
    }
    let mut ms = FiltrationMultiset::new(target);
    for eps in column_pieri(rho, p * c) {
        ms.add(eps, 1);
    }
    Ok(block_truncate(&ms, block))
}

/// Adding c vertical p-hooks to the first column is the only factor that
/// survives its block cut. Verified against the strip enumeration.
pub fn first_column_induction(rho: &Partition, c: u32, p: u32) -> Result<Partition> {
    assert!(p >= 2);
    let mut cols = rho.conjugate().parts().to_vec();
    if cols.is_empty() {
        cols.push(p * c);
    } else {
        cols[0] += p * c;
    }
    let eps = Partition::new(cols)?.conjugate();
    let block = BlockId::new(p, p_core(&eps, p), (eps.size() - p_core(&eps, p).size()) / p)?;
    let ms = vertical_hook_inductions(rho, c, &block)?;
    if ms.len() != 1 || ms.mult(&eps) != 1 {
        return Err(Error::Internal(format!(
            "first-column induction of {} by {} is not the singleton {}: got {:?}",
            rho, c, eps, ms
        )));
    }
    Ok(eps)
}

/// Iterated signed inductions from sigma, cut to the growing chain of blocks
/// over the same core. The target partition must appear exactly once.
pub fn pipeline_filtration(dec: &RouquierDecomposition) -> Result<FiltrationMultiset> {
    let p = dec.p;
    let mut cum_weight = dec.mu.size();
    let mut ms = FiltrationMultiset::new(dec.sigma.size());
    ms.add(dec.sigma.clone(), 1);
    for i in 0..dec.tau.len() {
        let c = dec.tau.part(i);
        cum_weight += c;
        let block = BlockId::new(p, dec.core.clone(), cum_weight)?;
        let mut next = FiltrationMultiset::new(ms.degree() + p * c);
        for (rho, &mult) in ms.entries() {
            let sub = vertical_hook_inductions(rho, c, &block)?;
            for (eps, &k) in sub.entries() {
                next.add(eps.clone(), mult * k);
            }
        }
        ms = next;
    }
    if ms.mult(&dec.lambda) != 1 {
        return Err(Error::Internal(format!(
            "{} should appear exactly once in its pipeline filtration, got {}",
            dec.lambda,
            ms.mult(&dec.lambda)
        )));
    }
    Ok(ms)
}
