//! Irreducibility dispatch and signed Young module identification.
//!
//! Every Specht module over GF(p), p odd, is routed to the cheapest decision
//! procedure that applies: the Gram rank test for p-regular shapes, the same
//! test on the conjugate for p-restricted ones, the quotient criterion inside
//! Rouquier blocks, and the meataxe as a last resort. On top of the verdict
//! sits the verifier, which hunts for a signed permutation module containing
//! the Specht module as a summand and reports the certificate.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::abacus::{is_rouquier_normalized, p_core, p_weight, rouquier_decompose, BlockId};
use crate::error::{Error, Result};
use crate::lr::{pipeline_filtration, FiltrationMultiset};
use crate::partitions::{multinomial, mullineux, partitions_of, Partition};
use crate::specht::{meataxe_analysis, specht_rep, SignedPermModule};
use crate::specht::{gram_matrix, meataxe_irreducible};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GramRegular,
    GramRestrictedConjugate,
    RouquierCriterion,
    MeatAxe,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::GramRegular => "gram-regular",
            Method::GramRestrictedConjugate => "gram-restricted-conjugate",
            Method::RouquierCriterion => "rouquier-criterion",
            Method::MeatAxe => "meataxe",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredVerdict {
    pub partition: Partition,
    pub p: u32,
    pub irreducible: bool,
    pub method: Method,
    /// Only the randomized method records its seed.
    pub seed: Option<u64>,
}

fn empty() -> Partition {
    Partition::new(Vec::new()).expect("empty partition is valid")
}

fn scaled(beta: &Partition, p: u32) -> Partition {
    let parts = beta.parts().iter().map(|&x| x * p).collect();
    Partition::new(parts).expect("scaling preserves the ordering")
}

/// Gram rank test: the bilinear form on a Specht module has zero radical
/// exactly when the module is irreducible, provided the shape is p-regular.
fn gram_full_rank(lambda: &Partition, p: u32, budget: u128) -> Result<bool> {
    let dim = lambda.standard_tableau_count();
    if dim > budget {
        return Err(Error::BudgetExceeded { needed: dim, budget });
    }
    let g = gram_matrix(lambda, p);
    Ok(g.rank() == dim as usize)
}

/// Quotient-side criterion for a shape whose block is Rouquier: irreducible
/// exactly when the middle quotient components vanish, the outer components
/// are regular in the required sense, and both leaf Specht modules are
/// themselves irreducible.
fn rouquier_verdict(lambda: &Partition, p: u32, budget: u128, seed: u64) -> Result<bool> {
    match rouquier_decompose(lambda, p) {
        Ok(dec) => {
            let left = irreducible_specht(&dec.tau.conjugate(), p, budget, seed)?;
            let right = irreducible_specht(&dec.mu, p, budget, seed)?;
            Ok(left.irreducible && right.irreducible)
        }
        Err(Error::MiddleQuotient(_)) | Err(Error::NotPRegular { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Decide irreducibility of the Specht module for `lambda` over GF(p).
///
/// The budget caps the dimension of any matrix work; purely combinatorial
/// routes ignore it. The seed is consumed only by the meataxe fallback.
pub fn irreducible_specht(
    lambda: &Partition,
    p: u32,
    budget: u128,
    seed: u64,
) -> Result<IrredVerdict> {
    assert!(crate::gfalg::is_prime(p) && p >= 3, "odd prime modulus required");
    let verdict = |irreducible, method, seed| IrredVerdict {
        partition: lambda.clone(),
        p,
        irreducible,
        method,
        seed,
    };
    if lambda.is_p_regular(p) {
        let ok = gram_full_rank(lambda, p, budget)?;
        return Ok(verdict(ok, Method::GramRegular, None));
    }
    if lambda.is_p_restricted(p) {
        let ok = gram_full_rank(&lambda.conjugate(), p, budget)?;
        return Ok(verdict(ok, Method::GramRestrictedConjugate, None));
    }
    let block = BlockId::new(p, p_core(lambda, p), p_weight(lambda, p))?;
    if is_rouquier_normalized(&block) {
        let ok = rouquier_verdict(lambda, p, budget, seed)?;
        return Ok(verdict(ok, Method::RouquierCriterion, None));
    }
    let dim = lambda.standard_tableau_count();
    if dim > budget {
        return Err(Error::BudgetExceeded { needed: dim, budget });
    }
    let rep = specht_rep(lambda, p);
    let ok = meataxe_irreducible(&rep, seed)?;
    Ok(verdict(ok, Method::MeatAxe, Some(seed)))
}

/// List every shape in a Rouquier block whose Specht module is irreducible,
/// largest first. Shapes are rebuilt from the pairs of leaf partitions that
/// survive the leaf irreducibility tests.
pub fn classify_rouquier_block(block: &BlockId, budget: u128) -> Result<Vec<Partition>> {
    let p = block.p();
    assert!(crate::gfalg::is_prime(p) && p >= 3, "odd prime modulus required");
    if !is_rouquier_normalized(block) {
        return Err(Error::NotRouquier(format!(
            "core {} at weight {}",
            block.core(),
            block.weight()
        )));
    }
    let w = block.weight();
    let mut out = Vec::new();
    for a in 0..=w {
        for mu in partitions_of(a) {
            if !mu.is_p_regular(p) || !irreducible_specht(&mu, p, budget, 0)?.irreducible {
                continue;
            }
            let sigma = block.core().add_scaled(&mu, p)?;
            for tau in partitions_of(w - a) {
                if !tau.is_p_regular(p) {
                    continue;
                }
                if !irreducible_specht(&tau.conjugate(), p, budget, 0)?.irreducible {
                    continue;
                }
                let lambda = sigma.conjugate().add_scaled(&tau, p)?.conjugate();
                out.push(lambda);
            }
        }
    }
    out.sort();
    out.reverse();
    Ok(out)
}

/// Label of a signed Young module Y(alpha | p*mu). For mixed shapes the
/// correct label is not determined by any known closed form, so the shape
/// itself is echoed back with `known` unset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedYoungLabel {
    pub lambda_part: Partition,
    pub mu_part: Partition,
    pub known: bool,
}

fn label_for_irreducible(lambda: &Partition, p: u32) -> Result<SignedYoungLabel> {
    if lambda.is_p_regular(p) {
        return Ok(SignedYoungLabel {
            lambda_part: lambda.clone(),
            mu_part: empty(),
            known: true,
        });
    }
    if lambda.is_p_restricted(p) {
        let (tau, mu) = lambda.conjugate().p_adic_split(p);
        let alpha = mullineux(&tau.conjugate(), p)?.conjugate();
        return Ok(SignedYoungLabel { lambda_part: alpha, mu_part: mu, known: true });
    }
    Ok(SignedYoungLabel { lambda_part: lambda.clone(), mu_part: empty(), known: false })
}

/// Predicted signed Young label for an irreducible Specht module. Errors
/// with [`Error::Reducible`] when the module is not irreducible.
pub fn signed_young_label(
    lambda: &Partition,
    p: u32,
    budget: u128,
    seed: u64,
) -> Result<SignedYoungLabel> {
    let verdict = irreducible_specht(lambda, p, budget, seed)?;
    if !verdict.irreducible {
        return Err(Error::Reducible(lambda.to_string()));
    }
    label_for_irreducible(lambda, p)
}

/// A signed permutation module M(alpha | p_beta) verified to contain the
/// Specht module as a direct summand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub alpha: Partition,
    pub p_beta: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Inconclusive,
    Refuted,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub partition: Partition,
    pub p: u32,
    pub irreducible: bool,
    pub method: Method,
    pub filtration: Option<FiltrationMultiset>,
    pub certificate: Option<Certificate>,
    pub status: Status,
    pub seed: u64,
    /// Candidate modules actually searched; excluded from serialization so
    /// reports stay byte-identical across budget settings that agree.
    pub summand_checks: u32,
    /// Candidates skipped because their dimension exceeded the budget.
    pub skipped_candidates: u32,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let extra = usize::from(self.filtration.is_some()) + usize::from(self.certificate.is_some());
        let mut st = s.serialize_struct("VerificationReport", 6 + extra)?;
        st.serialize_field("partition", &self.partition)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("irreducible", &self.irreducible)?;
        st.serialize_field("method", &self.method)?;
        if let Some(f) = &self.filtration {
            st.serialize_field("filtration", f)?;
        }
        if let Some(c) = &self.certificate {
            st.serialize_field("certificate", c)?;
        }
        st.serialize_field("status", &self.status)?;
        st.serialize_field("seed", &self.seed)?;
        st.end()
    }
}

/// Candidate labels (alpha, beta) with |alpha| + p|beta| = d, cheapest
/// modules first. The predicted label, when one exists, is moved to the
/// front regardless of its dimension.
fn candidate_labels(lambda: &Partition, p: u32) -> Vec<(Partition, Partition)> {
    let d = lambda.size();
    let mut all: Vec<(u128, Partition, Partition)> = Vec::new();
    for b in 0..=d / p {
        for beta in partitions_of(b) {
            let mut sizes: Vec<u32> = Vec::new();
            for alpha in partitions_of(d - p * b) {
                sizes.clear();
                sizes.extend_from_slice(alpha.parts());
                sizes.extend(beta.parts().iter().map(|&x| x * p));
                let dim = multinomial(d, &sizes);
                all.push((dim, alpha, beta.clone()));
            }
        }
    }
    all.sort();
    let mut ordered: Vec<(Partition, Partition)> = Vec::with_capacity(all.len());
    if let Ok(label) = label_for_irreducible(lambda, p) {
        if label.known {
            ordered.push((label.lambda_part, label.mu_part));
        }
    }
    for (_, alpha, beta) in all {
        if !ordered.contains(&(alpha.clone(), beta.clone())) {
            ordered.push((alpha, beta));
        }
    }
    ordered
}

/// Check that an irreducible Specht module is a direct summand of some
/// signed permutation module, searching candidate labels in order of cost.
pub fn verify_main_theorem(
    lambda: &Partition,
    p: u32,
    budget: u128,
    seed: u64,
) -> Result<VerificationReport> {
    let verdict = irreducible_specht(lambda, p, budget, seed)?;
    if !verdict.irreducible {
        return Err(Error::Reducible(lambda.to_string()));
    }
    let dim = lambda.standard_tableau_count();
    if dim > budget {
        return Err(Error::BudgetExceeded { needed: dim, budget });
    }
    let rep = specht_rep(lambda, p);
    let axe = meataxe_analysis(&rep, seed)?;
    if !axe.irreducible {
        return Err(Error::Internal(format!(
            "meataxe disagrees with {} on {}",
            verdict.method, lambda
        )));
    }
    let filtration = match rouquier_decompose(lambda, p) {
        Ok(dec) => Some(pipeline_filtration(&dec)?),
        Err(_) => None,
    };
    let mut certificate = None;
    let mut summand_checks = 0u32;
    let mut skipped = 0u32;
    for (alpha, beta) in candidate_labels(lambda, p) {
        let p_beta = scaled(&beta, p);
        let module = SignedPermModule::new(&alpha, &p_beta, p);
        if module.dim() > budget {
            skipped += 1;
            continue;
        }
        summand_checks += 1;
        if module.contains_summand(&rep, axe.end_field_trivial, budget)? {
            certificate = Some(Certificate { alpha, p_beta });
            break;
        }
    }
    let status = if certificate.is_some() {
        Status::Verified
    } else if skipped > 0 {
        Status::Inconclusive
    } else {
        Status::Refuted
    };
    Ok(VerificationReport {
        partition: lambda.clone(),
        p,
        irreducible: true,
        method: verdict.method,
        filtration,
        certificate,
        status,
        seed,
        summand_checks,
        skipped_candidates: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specht::specht_rep;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    const BUDGET: u128 = 2000;

    #[test]
    fn verdict_fixtures() {
        let v = irreducible_specht(&pt(&[6, 1, 1]), 3, BUDGET, 0).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.method, Method::GramRegular);
        assert_eq!(v.seed, None);

        let v = irreducible_specht(&pt(&[2, 1]), 3, BUDGET, 0).unwrap();
        assert!(!v.irreducible);
        assert_eq!(v.method, Method::GramRegular);

        let v = irreducible_specht(&pt(&[2, 1]), 5, BUDGET, 0).unwrap();
        assert!(v.irreducible);

        let v = irreducible_specht(&pt(&[1, 1, 1]), 3, BUDGET, 0).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.method, Method::GramRestrictedConjugate);

        let v = irreducible_specht(&pt(&[3, 1, 1, 1, 1, 1]), 3, BUDGET, 0).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.method, Method::GramRestrictedConjugate);

        let v = irreducible_specht(&pt(&[]), 3, BUDGET, 0).unwrap();
        assert!(v.irreducible);

        let err = irreducible_specht(&pt(&[3, 1]), 3, 2, 0).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 3, budget: 2 }));
    }

    #[test]
    fn mixed_shapes_use_block_criterion() {
        // Hook with a long tail: in the Rouquier block with core (3,1,1) at
        // weight 2, neither regular nor restricted, leaves both trivial.
        let lam = pt(&[6, 1, 1, 1, 1, 1]);
        assert!(!lam.is_p_regular(3) && !lam.is_p_restricted(3));
        let v = irreducible_specht(&lam, 3, BUDGET, 0).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.method, Method::RouquierCriterion);
        assert_eq!(v.seed, None);

        // Cross-check with the meataxe on the 252-dimensional module.
        let rep = specht_rep(&lam, 3);
        assert_eq!(rep.dim, 252);
        assert!(meataxe_irreducible(&rep, 7).unwrap());

        // The criterion ignores the dimension budget entirely.
        let big = pt(&[9, 4, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(!big.is_p_regular(3) && !big.is_p_restricted(3));
        let v = irreducible_specht(&big, 3, 10, 0).unwrap();
        assert!(v.irreducible);
        assert_eq!(v.method, Method::RouquierCriterion);
    }

    #[test]
    fn meataxe_fallback_for_non_rouquier_blocks() {
        // (4,1,1,1) at p=3 sits in the weight 2 block with core (1), which
        // fails the runner condition, and is neither regular nor restricted.
        let lam = pt(&[4, 1, 1, 1]);
        assert!(!lam.is_p_regular(3) && !lam.is_p_restricted(3));
        let v = irreducible_specht(&lam, 3, BUDGET, 11).unwrap();
        assert_eq!(v.method, Method::MeatAxe);
        assert_eq!(v.seed, Some(11));
        assert!(v.irreducible);
    }

    #[test]
    fn dispatch_matches_meataxe() {
        for d in 0..=7u32 {
            for lam in partitions_of(d) {
                for p in [3u32, 5] {
                    let v = irreducible_specht(&lam, p, BUDGET, 5).unwrap();
                    let axe = meataxe_irreducible(&specht_rep(&lam, p), 5).unwrap();
                    assert_eq!(v.irreducible, axe, "{} at p={}", lam, p);
                }
            }
        }
    }

    #[test]
    fn block_classification() {
        let block = BlockId::new(3, pt(&[3, 1, 1]), 1).unwrap();
        let got = classify_rouquier_block(&block, BUDGET).unwrap();
        assert_eq!(got, vec![pt(&[6, 1, 1]), pt(&[3, 1, 1, 1, 1, 1])]);

        let trivial = BlockId::new(3, pt(&[3, 1, 1]), 0).unwrap();
        assert_eq!(classify_rouquier_block(&trivial, BUDGET).unwrap(), vec![pt(&[3, 1, 1])]);

        let bad = BlockId::new(3, pt(&[1]), 1).unwrap();
        assert!(matches!(classify_rouquier_block(&bad, BUDGET), Err(Error::NotRouquier(_))));
    }

    #[test]
    fn block_classification_weight_three() {
        // Self-conjugate core whose runner counts grow by two. Of the pairs
        // with |mu| + |tau| = 3, the column (1,1,1) fails regularity on
        // either side and the (2,1) leaf is reducible at p=3, leaving six.
        let core = pt(&[6, 4, 2, 2, 1, 1]);
        let block = BlockId::new(3, core.clone(), 3).unwrap();
        let got = classify_rouquier_block(&block, BUDGET).unwrap();
        assert_eq!(got.len(), 6);
        assert!(got.contains(&pt(&[15, 4, 2, 2, 1, 1])));
        assert!(got.contains(&pt(&[6, 4, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])));
        for lam in &got {
            assert_eq!(p_core(lam, 3), core);
            assert_eq!(p_weight(lam, 3), 3);
            let dec = rouquier_decompose(lam, 3).unwrap();
            assert_eq!(dec.mu.size() + dec.tau.size(), 3);
            for leaf in [&dec.mu, &dec.tau] {
                assert!(leaf.is_p_regular(3));
                assert_ne!(*leaf, pt(&[2, 1]));
            }
        }
    }

    #[test]
    fn label_fixtures() {
        let l = signed_young_label(&pt(&[6, 1, 1]), 3, BUDGET, 0).unwrap();
        assert_eq!(l, SignedYoungLabel { lambda_part: pt(&[6, 1, 1]), mu_part: pt(&[]), known: true });

        let l = signed_young_label(&pt(&[3, 1, 1, 1, 1, 1]), 3, BUDGET, 0).unwrap();
        assert_eq!(l, SignedYoungLabel { lambda_part: pt(&[3, 1, 1]), mu_part: pt(&[1]), known: true });

        let l = signed_young_label(&pt(&[1; 8]), 3, BUDGET, 0).unwrap();
        assert_eq!(l, SignedYoungLabel { lambda_part: pt(&[1, 1]), mu_part: pt(&[2]), known: true });

        let l = signed_young_label(&pt(&[6, 1, 1, 1, 1, 1]), 3, BUDGET, 0).unwrap();
        assert!(!l.known);

        assert!(matches!(
            signed_young_label(&pt(&[2, 1]), 3, BUDGET, 0),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn candidate_order_prefers_known_label() {
        let cands = candidate_labels(&pt(&[1; 8]), 3);
        assert_eq!(cands[0], (pt(&[1, 1]), pt(&[2])));
        // Every admissible pair shows up exactly once.
        let mut seen = cands.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), cands.len());
        for (alpha, beta) in &cands {
            assert_eq!(alpha.size() + 3 * beta.size(), 8);
        }
    }

    #[test]
    fn verify_trivial_and_sign() {
        let rep = verify_main_theorem(&pt(&[4]), 3, BUDGET, 0).unwrap();
        assert_eq!(rep.status, Status::Verified);
        assert_eq!(rep.summand_checks, 1);
        let cert = rep.certificate.clone().unwrap();
        assert_eq!(cert.alpha, pt(&[4]));
        assert_eq!(cert.p_beta, pt(&[]));
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            json,
            "{\"partition\":\"4\",\"p\":3,\"irreducible\":true,\"method\":\"gram-regular\",\
             \"certificate\":{\"alpha\":\"4\",\"p_beta\":\"-\"},\"status\":\"verified\",\"seed\":0}"
        );

        let rep = verify_main_theorem(&pt(&[1, 1, 1]), 3, BUDGET, 0).unwrap();
        assert_eq!(rep.status, Status::Verified);
        let cert = rep.certificate.unwrap();
        assert_eq!(cert.alpha, pt(&[]));
        assert_eq!(cert.p_beta, pt(&[3]));

        assert!(matches!(
            verify_main_theorem(&pt(&[2, 1]), 3, BUDGET, 0),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn verify_reports_skipped_candidates() {
        // Budget 3 admits the verdict on the 3-dimensional module but rules
        // out every candidate of dimension four or more.
        let rep = verify_main_theorem(&pt(&[3, 1]), 3, 3, 0).unwrap();
        assert_eq!(rep.status, Status::Inconclusive);
        assert!(rep.certificate.is_none());
        assert!(rep.skipped_candidates > 0);
        assert_eq!(rep.summand_checks, 1);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"status\":\"inconclusive\""));
        assert!(!json.contains("certificate"));
    }

    #[test]
    fn verify_is_deterministic() {
        let a = verify_main_theorem(&pt(&[3, 1]), 3, BUDGET, 42).unwrap();
        let b = verify_main_theorem(&pt(&[3, 1]), 3, BUDGET, 42).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.status, Status::Verified);
    }

    #[test]
    fn verify_attaches_filtration_inside_rouquier_blocks() {
        let rep = verify_main_theorem(&pt(&[6, 1, 1]), 3, BUDGET, 0).unwrap();
        let filt = rep.filtration.as_ref().unwrap();
        assert_eq!(filt.mult(&pt(&[6, 1, 1])), 1);
        assert_eq!(rep.status, Status::Verified);

        let rep = verify_main_theorem(&pt(&[4]), 3, BUDGET, 0).unwrap();
        assert!(rep.filtration.is_none());
    }
}
