use super::GroupRep;
use crate::error::{Error, Result};
use crate::gfalg::Matrix;
use crate::partitions::{multinomial, Partition};
use std::collections::{HashSet, VecDeque};

fn block_list(alpha: &Partition, beta: &Partition) -> Vec<(u32, bool)> {
    let mut blocks: Vec<(u32, bool)> = alpha.parts().iter().map(|&a| (a, false)).collect();
    blocks.extend(beta.parts().iter().map(|&b| (b, true)));
    blocks
}

/// All arrangements of the block multiset as words position -> block id,
/// in ascending lexicographic order.
fn enumerate_words(blocks: &[(u32, bool)]) -> Vec<Vec<u8>> {
    let d: u32 = blocks.iter().map(|b| b.0).sum();
    let mut counts: Vec<u32> = blocks.iter().map(|b| b.0).collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(d as usize);
    fn go(left: u32, counts: &mut Vec<u32>, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(word.clone());
            return;
        }
        for b in 0..counts.len() {
            if counts[b] == 0 {
                continue;
            }
            counts[b] -= 1;
            word.push(b as u8);
            go(left - 1, counts, word, out);
            word.pop();
            counts[b] += 1;
        }
    }
    go(d, &mut counts, &mut word, &mut out);
    out
}

/// Induced module from trivial on the alpha blocks and sign on the beta
/// blocks. Basis vectors are the block arrangements; a transposition inside
/// a signed block negates, inside an unsigned block fixes, and across blocks
/// permutes with coefficient one.
pub fn signed_perm_rep(alpha: &Partition, beta: &Partition, p: u32) -> GroupRep {
    let blocks = block_list(alpha, beta);
    let d = alpha.size() + beta.size();
    let words = enumerate_words(&blocks);
    let n = words.len();
    let sizes: Vec<u32> = blocks.iter().map(|b| b.0).collect();
    assert_eq!(n as u128, multinomial(d, &sizes));
    let mut gens = Vec::new();
    for j in 1..d as usize {
        let mut m = Matrix::new(n, n, p);
        for (wi, w) in words.iter().enumerate() {
            let (a, b) = (w[j - 1], w[j]);
            if a == b {
                let coeff = if blocks[a as usize].1 { p - 1 } else { 1 };
                m.set(wi, wi, coeff);
            } else {
                let mut swapped = w.clone();
                swapped.swap(j - 1, j);
                let target = words.binary_search(&swapped).expect("swap stays in the orbit");
                m.set(target, wi, 1);
            }
        }
        gens.push(m);
    }
    GroupRep { degree: d, dim: n, modulus: p, gens }
}

/// Signed permutation module kept symbolic: only the block data is stored,
/// and hom spaces into or out of it are computed through the Young subgroup,
/// never through matrices of the full module.
pub struct SignedPermModule {
    p: u32,
    d: u32,
    blocks: Vec<(u32, bool)>,
}

impl SignedPermModule {
    pub fn new(alpha: &Partition, beta: &Partition, p: u32) -> SignedPermModule {
        SignedPermModule { p, d: alpha.size() + beta.size(), blocks: block_list(alpha, beta) }
    }

    pub fn dim(&self) -> u128 {
        let sizes: Vec<u32> = self.blocks.iter().map(|b| b.0).collect();
        multinomial(self.d, &sizes)
    }

    fn base_word(&self) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.d as usize);
        for (b, &(size, _)) in self.blocks.iter().enumerate() {
            word.extend(std::iter::repeat(b as u8).take(size as usize));
        }
        word
    }

    /// Transposition indices interior to one block, with the block's sign.
    fn young_generators(&self) -> Vec<(usize, bool)> {
        let mut gens = Vec::new();
        let mut start = 0usize;
        for &(size, signed) in &self.blocks {
            for j in start + 1..start + size as usize {
                gens.push((j, signed));
            }
            start += size as usize;
        }
        gens
    }

    /// Vectors on which the Young subgroup acts by its sign pattern. These
    /// are the images of the base coset under homs from this module.
    pub fn semi_invariant_vectors(&self, rep: &GroupRep) -> Vec<Vec<u8>> {
        assert_eq!(rep.degree, self.d, "degree mismatch");
        self.semi_invariants(rep, false)
    }

    /// Functionals transforming by the sign pattern: restrictions to the
    /// base coset of homs into this module.
    pub fn semi_invariant_functionals(&self, rep: &GroupRep) -> Vec<Vec<u8>> {
        assert_eq!(rep.degree, self.d, "degree mismatch");
        self.semi_invariants(rep, true)
    }

    fn semi_invariants(&self, rep: &GroupRep, transposed: bool) -> Vec<Vec<u8>> {
        assert_eq!(rep.modulus, self.p, "modulus mismatch");
        let ygens = self.young_generators();
        let n = rep.dim;
        if ygens.is_empty() {
            return (0..n)
                .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
                .collect();
        }
        let p = rep.modulus;
        let stacked = Matrix::from_fn(ygens.len() * n, n, p, |row, col| {
            let (j, signed) = ygens[row / n];
            let r = row % n;
            let g = if transposed { rep.gen(j).get(col, r) } else { rep.gen(j).get(r, col) };
            let eps = if signed { p - 1 } else { 1 };
            (g + if r == col { p - eps } else { 0 }) % p
        });
        stacked.nullspace()
    }

    /// Whether an irreducible module splits off as a direct summand. Walks
    /// the coset graph once, transporting each semi-invariant vector and
    /// functional, and accumulates the hom composites. With a trivial
    /// endomorphism field every composite is scalar, so only the leading
    /// entry is tracked; otherwise full matrices are formed.
    pub fn contains_summand(
        &self,
        rep: &GroupRep,
        end_field_trivial: bool,
        budget: u128,
    ) -> Result<bool> {
        let dim = self.dim();
        if dim > budget {
            return Err(Error::BudgetExceeded { needed: dim, budget });
        }
        let vecs = self.semi_invariant_vectors(rep);
        if vecs.is_empty() {
            return Ok(false);
        }
        let fnls = self.semi_invariant_functionals(rep);
        if fnls.is_empty() {
            return Ok(false);
        }
        let p = rep.modulus as u64;
        let n = rep.dim;
        let mut scalars = vec![vec![0u64; fnls.len()]; vecs.len()];
        let mut full = vec![vec![vec![0u64; n * n]; fnls.len()]; if end_field_trivial { 0 } else { vecs.len() }];
        let mut contribute = |us: &[Vec<u8>], rs: &[Vec<u8>]| {
            for (i, u) in us.iter().enumerate() {
                for (j, r) in rs.iter().enumerate() {
                    if end_field_trivial {
                        scalars[i][j] = (scalars[i][j] + u[0] as u64 * r[0] as u64) % p;
                    } else {
                        let acc = &mut full[i][j];
                        for (a, &ua) in u.iter().enumerate() {
                            if ua == 0 {
                                continue;
                            }
                            for (b, &rb) in r.iter().enumerate() {
                                acc[a * n + b] = (acc[a * n + b] + ua as u64 * rb as u64) % p;
                            }
                        }
                    }
                }
            }
        };
        let start = self.base_word();
        let mut visited = HashSet::new();
        visited.insert(start.clone());
        contribute(&vecs, &fnls);
        let mut queue = VecDeque::new();
        queue.push_back((start, vecs, fnls));
        while let Some((word, us, rs)) = queue.pop_front() {
            for j in 1..self.d as usize {
                if word[j - 1] == word[j] {
                    continue;
                }
                let mut next = word.clone();
                next.swap(j - 1, j);
                if !visited.insert(next.clone()) {
                    continue;
                }
                let us2: Vec<Vec<u8>> = us.iter().map(|u| rep.gen(j).mul_vec(u)).collect();
                let rs2: Vec<Vec<u8>> = rs.iter().map(|r| rep.gen(j).left_mul_vec(r)).collect();
                contribute(&us2, &rs2);
                queue.push_back((next, us2, rs2));
            }
        }
        if end_field_trivial {
            Ok(scalars.iter().any(|row| row.iter().any(|&c| c != 0)))
        } else {
            Ok(full.iter().any(|row| row.iter().any(|m| m.iter().any(|&c| c != 0))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht::{perm_module, specht_rep};

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_matrices() {
        let sgn = signed_perm_rep(&Partition::empty(), &pt("3"), 3);
        assert_eq!(sgn.dim, 1);
        assert_eq!(sgn.gens[0], Matrix::from_rows(3, &[vec![2]]));
        assert_eq!(sgn.gens[1], Matrix::from_rows(3, &[vec![2]]));
        let triv = signed_perm_rep(&pt("3"), &Partition::empty(), 3);
        assert_eq!(triv.dim, 1);
        assert_eq!(triv.gens[0], Matrix::from_rows(3, &[vec![1]]));
        let m = signed_perm_rep(&pt("2"), &pt("1"), 3);
        assert_eq!(m.dim, 3);
        assert!(m.check_relations());
        let mixed = signed_perm_rep(&pt("2,1"), &pt("2"), 3);
        assert_eq!(mixed.dim, 30);
        assert!(mixed.check_relations());
    }

    #[test]
    fn perm_words_sorted() {
        let m = perm_module(&pt("2,1"), 5);
        assert!(m.check_relations());
        for g in &m.gens {
            for i in 0..m.dim {
                let ones: u32 = (0..m.dim).map(|j| g.get(i, j)).sum();
                assert_eq!(ones, 1);
            }
        }
    }

    #[test]
    fn summand_detection() {
        let s21 = specht_rep(&pt("2,1"), 5);
        let m = SignedPermModule::new(&pt("2,1"), &Partition::empty(), 5);
        assert!(m.contains_summand(&s21, true, 1000).unwrap());
        assert!(m.contains_summand(&s21, false, 1000).unwrap());

        let triv = specht_rep(&pt("3"), 3);
        let m = SignedPermModule::new(&pt("2,1"), &Partition::empty(), 3);
        assert!(!m.contains_summand(&triv, true, 1000).unwrap());

        let triv5 = specht_rep(&pt("3"), 5);
        let m5 = SignedPermModule::new(&pt("2,1"), &Partition::empty(), 5);
        assert!(m5.contains_summand(&triv5, true, 1000).unwrap());

        let sign3 = specht_rep(&pt("1,1,1"), 3);
        let reg = SignedPermModule::new(&Partition::empty(), &pt("1,1,1"), 3);
        assert!(!reg.contains_summand(&sign3, true, 1000).unwrap());
        let sgn_block = SignedPermModule::new(&Partition::empty(), &pt("3"), 3);
        assert!(sgn_block.contains_summand(&sign3, true, 1000).unwrap());

        let err = reg.contains_summand(&sign3, true, 2);
        assert!(matches!(err, Err(Error::BudgetExceeded { needed: 6, budget: 2 })));
    }

    #[test]
    fn semi_invariant_spaces() {
        let s = specht_rep(&pt("2,1"), 5);
        let m = SignedPermModule::new(&pt("2,1"), &Partition::empty(), 5);
        assert_eq!(m.semi_invariant_vectors(&s).len(), 1);
        assert_eq!(m.semi_invariant_functionals(&s).len(), 1);
        let free = SignedPermModule::new(&pt("1,1,1"), &Partition::empty(), 5);
        assert_eq!(free.semi_invariant_vectors(&s).len(), 2);
    }
}
