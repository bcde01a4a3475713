use crate::error::{Error, Result};
use crate::gfalg::is_prime;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Integer partition with weakly decreasing positive parts.
/// Trailing zeros are stripped on construction, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Diagram node, 1-based: row i, column j.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

pub fn residue(n: Node, p: u32) -> u32 {
    assert!(p >= 2, "modulus must be at least 2");
    let r = (n.col as i64 - n.row as i64).rem_euclid(p as i64);
    r as u32
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{:?} has an interior zero", parts)));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part, 0-based, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&x| x as usize > j).count() as u32).collect();
        Partition { parts }
    }

    /// Dominance order: every leading partial sum of self at least matches other's.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { lhs: self.size() as usize, rhs: other.size() as usize });
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Containment of Young diagrams, componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn is_p_regular(&self, p: u32) -> bool {
        assert!(p >= 2, "modulus must be at least 2");
        !self.parts.windows(p as usize).any(|w| w[0] == w[p as usize - 1])
    }

    pub fn is_p_restricted(&self, p: u32) -> bool {
        assert!(p >= 2, "modulus must be at least 2");
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) <= p - 1)
    }

    /// Componentwise sum self + p * mu.
    pub fn add_scaled(&self, mu: &Partition, p: u32) -> Result<Partition> {
        let n = self.len().max(mu.len());
        let parts: Vec<u32> = (0..n).map(|i| self.part(i) + p * mu.part(i)).collect();
        Partition::new(parts).map_err(|_| {
            Error::Shape(format!("{} + {}*{} is not a partition", self, p, mu))
        })
    }

    /// Unique split self = tau + p*mu with tau p-restricted, built from the last row up.
    pub fn p_adic_split(&self, p: u32) -> (Partition, Partition) {
        assert!(p >= 2, "modulus must be at least 2");
        let s = self.len();
        let mut tau = vec![0u32; s];
        let mut next = 0u32;
        for i in (0..s).rev() {
            tau[i] = next + (self.parts[i] - next) % p;
            next = tau[i];
        }
        let mu: Vec<u32> = (0..s).map(|i| (self.parts[i] - tau[i]) / p).collect();
        (Partition::new(tau).unwrap(), Partition::new(mu).unwrap())
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &part) in self.parts.iter().enumerate() {
            for j in 1..=part as usize {
                out.push(Node { row: i + 1, col: j });
            }
        }
        out
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let here = self.part(i);
            if i == 0 || self.part(i - 1) > here {
                out.push(Node { row: i + 1, col: here as usize + 1 });
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                out.push(Node { row: i + 1, col: self.parts[i] as usize });
            }
        }
        out
    }

    pub fn hook_length(&self, n: Node) -> u32 {
        let arm = self.part(n.row - 1) - n.col as u32;
        let leg = self.conjugate().part(n.col - 1) - n.row as u32;
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook length formula; saturates on overflow.
    pub fn standard_tableau_count(&self) -> u128 {
        let d = self.size();
        let mut num = 1u128;
        for k in 1..=d as u128 {
            num = match num.checked_mul(k) {
                Some(v) => v,
                None => return u128::MAX,
            };
        }
        for n in self.nodes() {
            num /= self.hook_length(n) as u128;
        }
        num
    }
}

impl std::ops::Index<usize> for Partition {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        static ZERO: u32 = 0;
        self.parts.get(i).unwrap_or(&ZERO)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let joined: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", joined.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// All partitions of d, in descending lexicographic order.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        let hi = remaining.min(max);
        for next in (1..=hi).rev() {
            stack.push(next);
            rec(remaining - next, next, stack, out);
            stack.pop();
        }
    }
    rec(d, d, &mut stack, &mut out);
    out
}

/// d! / (parts[0]! * parts[1]! * ...) as an exact u128; saturates on overflow.
pub fn multinomial(d: u32, parts: &[u32]) -> u128 {
    assert!(parts.iter().sum::<u32>() == d, "parts must sum to the total");
    let mut result = 1u128;
    let mut n = 0u64;
    for &part in parts {
        for k in 1..=part as u64 {
            n += 1;
            result = match result.checked_mul(n as u128) {
                Some(v) => v / k as u128,
                None => return u128::MAX,
            };
        }
    }
    result
}

/// Boundary cells in path order from (1, first part) down to the last row.
fn rim_path(lambda: &Partition) -> Vec<Node> {
    if lambda.is_empty() {
        return Vec::new();
    }
    let mut cells = Vec::new();
    let (mut i, mut j) = (1usize, lambda.part(0) as usize);
    loop {
        cells.push(Node { row: i, col: j });
        if lambda.part(i) as usize >= j {
            i += 1;
        } else if j > 1 {
            j -= 1;
        } else {
            break;
        }
    }
    cells
}

/// The p-rim: p-cell segments of the rim, each new segment starting in the
/// row below the previous segment's end.
fn p_rim(lambda: &Partition, p: u32) -> Vec<Node> {
    let path = rim_path(lambda);
    let mut selected = Vec::new();
    let mut idx = 0usize;
    while idx < path.len() {
        let end = (idx + p as usize).min(path.len());
        selected.extend_from_slice(&path[idx..end]);
        if end == path.len() {
            break;
        }
        let last_row = path[end - 1].row;
        match path[end..].iter().position(|c| c.row > last_row) {
            Some(k) => idx = end + k,
            None => break,
        }
    }
    selected
}

fn remove_cells(lambda: &Partition, cells: &[Node]) -> Result<Partition> {
    let mut parts: Vec<u32> = lambda.parts.clone();
    for c in cells {
        parts[c.row - 1] -= 1;
    }
    Partition::new(parts).map_err(|_| Error::Internal(format!("rim removal from {} left a non-partition", lambda)))
}

/// Columns (a_i, r_i): p-rim size and row count at each peeling step.
pub fn mullineux_symbol(lambda: &Partition, p: u32) -> Vec<(u32, u32)> {
    assert!(p >= 2);
    let mut cur = lambda.clone();
    let mut cols = Vec::new();
    while !cur.is_empty() {
        let rim = p_rim(&cur, p);
        cols.push((rim.len() as u32, cur.len() as u32));
        cur = remove_cells(&cur, &rim).expect("p-rim removal stays a partition");
    }
    cols
}

/// Mullineux map on p-regular partitions: the involution with
/// D^lambda tensor sgn isomorphic to D^(image). Computed by transforming the
/// Mullineux symbol and locating the unique p-regular partition that carries it.
pub fn mullineux(lambda: &Partition, p: u32) -> Result<Partition> {
    assert!(p >= 3 && is_prime(p), "modulus must be an odd prime");
    if !lambda.is_p_regular(p) {
        return Err(Error::NotPRegular { partition: lambda.to_string(), p });
    }
    if lambda.is_empty() {
        return Ok(Partition::empty());
    }
    let target: Vec<(u32, u32)> = mullineux_symbol(lambda, p)
        .into_iter()
        .map(|(a, r)| {
            let eps = if a % p == 0 { 0 } else { 1 };
            (a, a - r + eps)
        })
        .collect();
    let mut hits = partitions_of(lambda.size())
        .into_iter()
        .filter(|nu| nu.is_p_regular(p) && mullineux_symbol(nu, p) == target);
    let image = hits
        .next()
        .ok_or_else(|| Error::Internal(format!("no partition carries the Mullineux symbol of {}", lambda)))?;
    if hits.next().is_some() {
        return Err(Error::Internal(format!("Mullineux symbol of {} is ambiguous", lambda)));
    }
    Ok(image)
}
