use super::GroupRep;
use crate::error::{Error, Result};
use crate::gfalg::{inv_mod, random_algebra_element, rng_from_seed, Matrix};

const MAX_ATTEMPTS: usize = 120;
const MAX_KERNEL_LINES: usize = 512;

/// Row echelon accumulator for spinning.
struct Echelon {
    p: u32,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(p: u32) -> Echelon {
        Echelon { p, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Reduce against the basis; returns the reduced vector when independent.
    fn insert(&mut self, mut v: Vec<u8>) -> Option<Vec<u8>> {
        let p = self.p as u64;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv] as u64;
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = ((*x as u64 + (p - c) * r as u64) % p) as u8;
            }
        }
        let piv = v.iter().position(|&x| x != 0)?;
        let inv = inv_mod(v[piv] as u32, self.p) as u64;
        for x in v.iter_mut() {
            *x = ((*x as u64 * inv) % p) as u8;
        }
        self.rows.push(v.clone());
        self.pivots.push(piv);
        Some(v)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Dimension of the submodule generated by a vector.
fn spin_dim(gens: &[Matrix], seed: &[u8], full: usize, p: u32) -> usize {
    let mut ech = Echelon::new(p);
    let mut queue = Vec::new();
    if let Some(v) = ech.insert(seed.to_vec()) {
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        if ech.dim() == full {
            break;
        }
        for g in gens {
            if let Some(w) = ech.insert(g.mul_vec(&v)) {
                queue.push(w);
            }
        }
    }
    ech.dim()
}

/// One representative per line of the span, leading coefficient one.
fn projective_lines(basis: &[Vec<u8>], p: u32) -> Vec<Vec<u8>> {
    let k = basis.len();
    let n = basis[0].len();
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; k];
    fn go(
        idx: usize,
        leading: bool,
        coeffs: &mut Vec<u32>,
        basis: &[Vec<u8>],
        n: usize,
        p: u32,
        out: &mut Vec<Vec<u8>>,
    ) {
        if idx == coeffs.len() {
            if !leading {
                return;
            }
            let mut v = vec![0u64; n];
            for (c, b) in coeffs.iter().zip(basis) {
                for (x, &e) in v.iter_mut().zip(b) {
                    *x += *c as u64 * e as u64;
                }
            }
            out.push(v.into_iter().map(|x| (x % p as u64) as u8).collect());
            return;
        }
        if !leading {
            coeffs[idx] = 0;
            go(idx + 1, false, coeffs, basis, n, p, out);
            coeffs[idx] = 1;
            go(idx + 1, true, coeffs, basis, n, p, out);
        } else {
            for c in 0..p {
                coeffs[idx] = c;
                go(idx + 1, true, coeffs, basis, n, p, out);
            }
        }
        coeffs[idx] = 0;
    }
    go(0, false, &mut coeffs, basis, n, p, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeatAxeOutcome {
    pub irreducible: bool,
    /// Every endomorphism is scalar; certified by a nullity one witness.
    pub end_field_trivial: bool,
}

/// Norton's test on random algebra elements. A singular element decides:
/// a kernel line spinning to a proper submodule certifies reducibility, and
/// if every kernel line spins onto the module and one dual kernel vector
/// spins onto the dual, no proper submodule can exist.
pub fn meataxe_analysis(rep: &GroupRep, seed: u64) -> Result<MeatAxeOutcome> {
    let n = rep.dim;
    if n == 0 {
        return Ok(MeatAxeOutcome { irreducible: false, end_field_trivial: true });
    }
    if n == 1 {
        return Ok(MeatAxeOutcome { irreducible: true, end_field_trivial: true });
    }
    if rep.gens.is_empty() {
        return Ok(MeatAxeOutcome { irreducible: false, end_field_trivial: false });
    }
    let p = rep.modulus;
    let gens_t: Vec<Matrix> = rep.gens.iter().map(Matrix::transpose).collect();
    let mut rng = rng_from_seed(seed);
    let mut verdict: Option<MeatAxeOutcome> = None;
    for _ in 0..MAX_ATTEMPTS {
        let theta = random_algebra_element(&rep.gens, &mut rng, 4, 6)?;
        let kernel = theta.nullspace();
        let k = kernel.len();
        if k == 0 {
            continue;
        }
        if let Some(out) = verdict.as_mut() {
            // irreducibility already settled, keep looking for a nullity
            // one witness to pin the endomorphism field
            if k == 1 {
                out.end_field_trivial = true;
                return Ok(*out);
            }
            continue;
        }
        let line_count = (p as u128)
            .checked_pow(k as u32)
            .map(|q| (q - 1) / (p as u128 - 1))
            .unwrap_or(u128::MAX);
        if line_count > MAX_KERNEL_LINES as u128 {
            continue;
        }
        let mut reducible = false;
        for v in projective_lines(&kernel, p) {
            if spin_dim(&rep.gens, &v, n, p) < n {
                reducible = true;
                break;
            }
        }
        if !reducible {
            let dual_kernel = theta.transpose().nullspace();
            assert_eq!(dual_kernel.len(), k);
            if spin_dim(&gens_t, &dual_kernel[0], n, p) < n {
                reducible = true;
            }
        }
        let out = MeatAxeOutcome { irreducible: !reducible, end_field_trivial: k == 1 };
        if reducible || k == 1 {
            return Ok(out);
        }
        verdict = Some(out);
    }
    verdict.ok_or_else(|| {
        Error::Inconclusive(format!(
            "no usable singular algebra element in {} attempts",
            MAX_ATTEMPTS
        ))
    })
}

pub fn meataxe_irreducible(rep: &GroupRep, seed: u64) -> Result<bool> {
    meataxe_analysis(rep, seed).map(|o| o.irreducible)
}

/// Basis of the space of module homs a -> b, as matrices acting on column
/// vectors.
pub fn hom_basis(a: &GroupRep, b: &GroupRep) -> Vec<Matrix> {
    assert_eq!(a.modulus, b.modulus, "mixed moduli");
    assert_eq!(a.degree, b.degree, "different groups");
    let (na, nb) = (a.dim, b.dim);
    if na == 0 || nb == 0 {
        return Vec::new();
    }
    let p = a.modulus;
    let unknowns = na * nb;
    if a.gens.is_empty() {
        return (0..unknowns)
            .map(|u| Matrix::from_fn(nb, na, p, |i, j| u32::from(i * na + j == u)))
            .collect();
    }
    let mut system = Matrix::new(a.gens.len() * unknowns, unknowns, p);
    for (g, (ga, gb)) in a.gens.iter().zip(&b.gens).enumerate() {
        for i in 0..nb {
            for j in 0..na {
                let row = g * unknowns + i * na + j;
                for k in 0..na {
                    let cur = system.get(row, i * na + k);
                    system.set(row, i * na + k, (cur + ga.get(k, j)) % p);
                }
                for k in 0..nb {
                    let cur = system.get(row, k * na + j);
                    system.set(row, k * na + j, (cur + p - gb.get(i, k)) % p);
                }
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(nb, na, p, |i, j| v[i * na + j] as u32))
        .collect()
}

/// Whether the irreducible module s occurs as a direct summand of m, by
/// searching for a nonzero composite s -> m -> s among hom basis pairs.
pub fn is_summand_irred(s: &GroupRep, m: &GroupRep) -> bool {
    let into = hom_basis(s, m);
    if into.is_empty() {
        return false;
    }
    let outof = hom_basis(m, s);
    outof.iter().any(|f| into.iter().any(|g| !f.mul(g).is_zero()))
}

/// Isomorphism test through invertible homs. For irreducible inputs any
/// nonzero hom works; for the general case combinations are sampled, with
/// full enumeration when the hom space is small.
pub fn is_isomorphic_irred(a: &GroupRep, b: &GroupRep, seed: u64) -> Result<bool> {
    if a.dim != b.dim {
        return Ok(false);
    }
    let homs = hom_basis(a, b);
    if homs.is_empty() {
        return Ok(false);
    }
    if homs.iter().any(|h| h.inverse().is_ok()) {
        return Ok(true);
    }
    let p = a.modulus;
    let h = homs.len() as u32;
    let combos = if h <= 8 { (p as u128).pow(h) } else { u128::MAX };
    if combos <= 6561 {
        let mut coeffs = vec![0u32; homs.len()];
        for idx in 1..combos {
            let mut x = idx;
            for c in coeffs.iter_mut() {
                *c = (x % p as u128) as u32;
                x /= p as u128;
            }
            let combo = homs
                .iter()
                .zip(&coeffs)
                .fold(Matrix::new(a.dim, a.dim, p), |acc, (m, &c)| acc.add(&m.scale(c)));
            if combo.inverse().is_ok() {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    use rand_chacha::rand_core::RngCore;
    let mut rng = rng_from_seed(seed);
    for _ in 0..256 {
        let combo = homs.iter().fold(Matrix::new(a.dim, a.dim, p), |acc, m| {
            acc.add(&m.scale(rng.next_u32() % p))
        });
        if combo.inverse().is_ok() {
            return Ok(true);
        }
    }
    Err(Error::Inconclusive(
        "hom space is nonzero but no invertible combination was found".into(),
    ))
}
