mod construct;
mod meataxe;
mod signed;

pub use construct::{gram_matrix, simple_head_regular, specht_rep, standard_tableaux};
pub use meataxe::{
    hom_basis, is_isomorphic_irred, is_summand_irred, meataxe_analysis, meataxe_irreducible,
    MeatAxeOutcome,
};
pub use signed::{signed_perm_rep, SignedPermModule};

use crate::gfalg::Matrix;
use crate::partitions::Partition;

/// Matrices for the adjacent transpositions s_1..s_{d-1}, acting on column
/// vectors. A group element g = s_{i1}..s_ik acts as gens[i1-1]*..*gens[ik-1].
#[derive(Clone, Debug)]
pub struct GroupRep {
    pub degree: u32,
    pub dim: usize,
    pub modulus: u32,
    pub gens: Vec<Matrix>,
}

impl GroupRep {
    pub fn gen(&self, i: usize) -> &Matrix {
        assert!(i >= 1 && i < self.degree as usize, "transposition index out of range");
        &self.gens[i - 1]
    }

    /// Coxeter relations for the symmetric group, checked by brute
    /// multiplication.
    pub fn check_relations(&self) -> bool {
        let n = self.gens.len();
        if n + 1 != self.degree.max(1) as usize {
            return false;
        }
        let id = Matrix::identity(self.dim, self.modulus);
        for a in 0..n {
            if self.gens[a].rows() != self.dim || self.gens[a].cols() != self.dim {
                return false;
            }
            if self.gens[a].mul(&self.gens[a]) != id {
                return false;
            }
            for b in a + 1..n {
                let ab = self.gens[a].mul(&self.gens[b]);
                let ok = if b == a + 1 {
                    ab.mul(&ab).mul(&ab) == id
                } else {
                    ab.mul(&ab) == id
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Twist by the sign character: every transposition acts with an extra -1.
pub fn tensor_sign(rep: &GroupRep) -> GroupRep {
    GroupRep {
        degree: rep.degree,
        dim: rep.dim,
        modulus: rep.modulus,
        gens: rep.gens.iter().map(|g| g.scale(rep.modulus - 1)).collect(),
    }
}

/// Contragredient module. Transpositions are involutions, so transposing
/// each generator is enough.
pub fn dual_rep(rep: &GroupRep) -> GroupRep {
    GroupRep {
        degree: rep.degree,
        dim: rep.dim,
        modulus: rep.modulus,
        gens: rep.gens.iter().map(Matrix::transpose).collect(),
    }
}

/// Young permutation module: the action on row tabloids of shape lambda.
pub fn perm_module(lambda: &Partition, p: u32) -> GroupRep {
    signed_perm_rep(lambda, &Partition::empty(), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn perm_module_dims() {
        assert_eq!(perm_module(&pt("3"), 3).dim, 1);
        assert_eq!(perm_module(&pt("1,1,1"), 3).dim, 6);
        assert_eq!(perm_module(&pt("2,1"), 3).dim, 3);
        assert_eq!(perm_module(&pt("2,2"), 5).dim, 6);
        for s in ["3", "1,1,1", "2,1", "2,2"] {
            assert!(perm_module(&pt(s), 3).check_relations());
        }
    }

    #[test]
    fn sign_twist_and_dual() {
        let m = perm_module(&pt("2,1"), 3);
        let tw = tensor_sign(&m);
        assert!(tw.check_relations());
        assert_eq!(tensor_sign(&tw).gens, m.gens);
        let du = dual_rep(&m);
        assert!(du.check_relations());
        assert_eq!(dual_rep(&du).gens, m.gens);
    }
}
