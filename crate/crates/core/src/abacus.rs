use crate::error::{Error, Result};
use crate::partitions::{residue, Partition};
use serde::Serialize;

/// Beta-numbers of a partition laid out on p runners. Position x sits on
/// runner x mod p; positions are kept sorted ascending.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AbacusDisplay {
    pub p: u32,
    pub beads: usize,
    pub positions: Vec<usize>,
}

/// Smallest valid bead count for this partition: a positive multiple of p
/// covering every part.
pub fn normalized_beads(lambda: &Partition, p: u32) -> usize {
    let p = p as usize;
    (lambda.len().div_ceil(p) * p).max(p)
}

impl AbacusDisplay {
    pub fn from_partition(lambda: &Partition, p: u32, beads: usize) -> Result<AbacusDisplay> {
        assert!(p >= 2, "at least two runners");
        if beads == 0 || beads % p as usize != 0 {
            return Err(Error::BeadConfig(format!("{} beads is not a positive multiple of {}", beads, p)));
        }
        if beads < lambda.len() {
            return Err(Error::BeadConfig(format!("{} beads cannot hold {} parts", beads, lambda.len())));
        }
        let positions: Vec<usize> =
            (0..beads).rev().map(|i| lambda.part(i) as usize + beads - 1 - i).collect();
        Ok(AbacusDisplay { p, beads, positions })
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u32> = self
            .positions
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &beta)| (beta - (self.beads - 1 - i)) as u32)
            .collect();
        Partition::new(parts).expect("beta-numbers decode to a partition")
    }

    pub fn runner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.p as usize];
        for &x in &self.positions {
            counts[x % self.p as usize] += 1;
        }
        counts
    }

    /// Rows of beads per runner, ascending by row within each runner.
    pub fn runner_rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.p as usize];
        for &x in &self.positions {
            rows[x % self.p as usize].push(x / self.p as usize);
        }
        rows
    }

    /// Slide every bead as far down its runner as it goes.
    pub fn core_display(&self) -> AbacusDisplay {
        let p = self.p as usize;
        let mut positions = Vec::with_capacity(self.beads);
        for (runner, rows) in self.runner_rows().iter().enumerate() {
            for (slot, _) in rows.iter().enumerate() {
                positions.push(slot * p + runner);
            }
        }
        positions.sort_unstable();
        AbacusDisplay { p: self.p, beads: self.beads, positions }
    }

    pub fn render(&self) -> String {
        let p = self.p as usize;
        let max_pos = self.positions.last().copied().unwrap_or(0);
        let nrows = (self.beads.div_ceil(p)).max(max_pos / p + 1);
        let mut out = String::new();
        for r in 0..nrows {
            let row: Vec<&str> =
                (0..p).map(|c| if self.positions.binary_search(&(r * p + c)).is_ok() { "●" } else { "·" }).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn p_core(lambda: &Partition, p: u32) -> Partition {
    let display = AbacusDisplay::from_partition(lambda, p, normalized_beads(lambda, p)).unwrap();
    display.core_display().to_partition()
}

pub fn p_weight(lambda: &Partition, p: u32) -> u32 {
    (lambda.size() - p_core(lambda, p).size()) / p
}

/// Quotient component i read off runner i, using the normalized bead count.
pub fn p_quotient(lambda: &Partition, p: u32) -> Vec<Partition> {
    let display = AbacusDisplay::from_partition(lambda, p, normalized_beads(lambda, p)).unwrap();
    display
        .runner_rows()
        .iter()
        .map(|rows| {
            let n = rows.len();
            let parts: Vec<u32> = rows.iter().rev().enumerate().map(|(i, &r)| (r - (n - 1 - i)) as u32).collect();
            Partition::new(parts).expect("runner rows decode to a partition")
        })
        .collect()
}

pub fn residue_content(lambda: &Partition, p: u32) -> Vec<u32> {
    let mut counts = vec![0u32; p as usize];
    for n in lambda.nodes() {
        counts[residue(n, p) as usize] += 1;
    }
    counts
}

pub fn same_block(lambda: &Partition, mu: &Partition, p: u32) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { lhs: lambda.size() as usize, rhs: mu.size() as usize });
    }
    Ok(p_core(lambda, p) == p_core(mu, p))
}

/// Block of k Sigma_d labelled by its p-core and weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockId {
    p: u32,
    core: Partition,
    weight: u32,
}

impl BlockId {
    pub fn new(p: u32, core: Partition, weight: u32) -> Result<BlockId> {
        assert!(p >= 2);
        if p_core(&core, p) != core {
            return Err(Error::Shape(format!("{} is not a {}-core", core, p)));
        }
        Ok(BlockId { p, core, weight })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn degree(&self) -> u32 {
        self.core.size() + self.p * self.weight
    }
}

/// Runner bead counts must grow by at least w-1 along consecutive runners.
/// The count differences do not depend on which valid bead multiple is used.
pub fn is_rouquier(block: &BlockId, beads: usize) -> bool {
    let display = AbacusDisplay::from_partition(block.core(), block.p(), beads)
        .expect("bead count must be valid for the core");
    let counts = display.runner_counts();
    counts.windows(2).all(|w| w[1] as i64 >= w[0] as i64 + block.weight() as i64 - 1)
}

pub fn is_rouquier_normalized(block: &BlockId) -> bool {
    is_rouquier(block, normalized_beads(block.core(), block.p()))
}

/// The partition data tying lambda to its Rouquier block: horizontal hook
/// content mu on the last runner, vertical hook content tau on runner 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RouquierDecomposition {
    pub p: u32,
    pub lambda: Partition,
    pub core: Partition,
    pub weight: u32,
    pub lambda_tilde: Partition,
    pub mu: Partition,
    pub tau: Partition,
    pub sigma: Partition,
}

pub fn rouquier_decompose(lambda: &Partition, p: u32) -> Result<RouquierDecomposition> {
    assert!(p >= 3, "needs at least three runners");
    let core = p_core(lambda, p);
    let weight = p_weight(lambda, p);
    let block = BlockId::new(p, core.clone(), weight)?;
    if !is_rouquier_normalized(&block) {
        return Err(Error::NotRouquier(format!("core {} at weight {}", core, weight)));
    }
    let quotient = p_quotient(lambda, p);
    for (i, comp) in quotient.iter().enumerate().take(p as usize - 1).skip(1) {
        if !comp.is_empty() {
            return Err(Error::MiddleQuotient(format!(
                "{} has component {} on runner {}",
                lambda, comp, i
            )));
        }
    }
    let mu = quotient[p as usize - 1].clone();
    let tau = quotient[0].conjugate();
    if !mu.is_p_regular(p) {
        return Err(Error::NotPRegular { partition: mu.to_string(), p });
    }
    if !tau.is_p_regular(p) {
        return Err(Error::NotPRegular { partition: tau.to_string(), p });
    }
    let lambda_tilde = core.conjugate().add_scaled(&tau, p)?.conjugate();
    let sigma = core.add_scaled(&mu, p)?;
    let dec = RouquierDecomposition {
        p,
        lambda: lambda.clone(),
        core,
        weight,
        lambda_tilde,
        mu,
        tau,
        sigma,
    };
    if dec.lambda_tilde.add_scaled(&dec.mu, p)? != *lambda
        || !dec.lambda_tilde.is_p_restricted(p)
        || dec.weight != dec.mu.size() + dec.tau.size()
    {
        return Err(Error::Internal(format!("decomposition identities fail for {}", lambda)));
    }
    Ok(dec)
}
