//! Independent oracles for the integration suites. Everything here is
//! deliberately naive: Schur polynomials by direct semistandard tableau
//! enumeration, cores by rim hook stripping on the diagram. None of it
//! shares code with the library routines it checks.

use std::collections::HashMap;

use spechtkit::Partition;

#[allow(dead_code)]
pub fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Polynomial in n variables as exponent vector -> coefficient.
pub type Poly = HashMap<Vec<u32>, i64>;

struct Filler<'a> {
    shape: &'a [usize],
    n: u8,
    tab: Vec<Vec<u8>>,
    weight: Vec<u32>,
    out: Poly,
}

impl Filler<'_> {
    fn go(&mut self, r: usize, c: usize) {
        if r == self.shape.len() {
            *self.out.entry(self.weight.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < self.shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let left = if c > 0 { self.tab[r][c - 1] } else { 1 };
        let above = if r > 0 { self.tab[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=self.n {
            self.tab[r][c] = v;
            self.weight[(v - 1) as usize] += 1;
            self.go(nr, nc);
            self.weight[(v - 1) as usize] -= 1;
        }
    }
}

/// Schur polynomial of the shape in n variables, one monomial per
/// semistandard tableau with entries up to n.
pub fn schur_poly(lambda: &Partition, n: usize) -> Poly {
    let shape: Vec<usize> = lambda.parts().iter().map(|&x| x as usize).collect();
    if shape.is_empty() {
        return HashMap::from([(vec![0; n], 1)]);
    }
    if shape.len() > n {
        return HashMap::new();
    }
    let mut filler = Filler {
        shape: &shape,
        n: n as u8,
        tab: shape.iter().map(|&w| vec![0; w]).collect(),
        weight: vec![0; n],
        out: HashMap::new(),
    };
    filler.go(0, 0);
    filler.out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out
}

/// Expand a symmetric polynomial in the Schur basis by peeling the
/// lexicographically greatest monomial, whose exponent vector must be a
/// partition.
pub fn schur_expand(poly: &Poly, n: usize) -> HashMap<Partition, i64> {
    let mut rest = poly.clone();
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    let mut out = HashMap::new();
    loop {
        rest.retain(|_, c| *c != 0);
        let Some(lead) = rest.keys().max().cloned() else { break };
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "polynomial is not symmetric");
        let coeff = rest[&lead];
        let lam = Partition::new(lead).unwrap();
        let s = cache.entry(lam.clone()).or_insert_with(|| schur_poly(&lam, n));
        for (e, k) in s {
            *rest.entry(e.clone()).or_insert(0) -= coeff * *k;
        }
        out.insert(lam, coeff);
    }
    out
}

/// Multiplicities of every Schur polynomial in the product for rho and nu,
/// computed entirely through polynomial arithmetic.
pub fn lr_expansion_oracle(rho: &Partition, nu: &Partition) -> HashMap<Partition, i64> {
    let n = (rho.size() + nu.size()) as usize;
    if n == 0 {
        return HashMap::from([(Partition::empty(), 1)]);
    }
    schur_expand(&poly_mul(&schur_poly(rho, n), &schur_poly(nu, n)), n)
}

/// Core by repeatedly tearing off rim hooks of length p from the diagram.
/// The shift rule: removing the hook anchored at (i, j) with leg l replaces
/// rows i..=i+l by the next row minus one, and the last by j-1.
#[allow(dead_code)]
pub fn rim_hook_core(lambda: &Partition, p: u32) -> Partition {
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    'search: loop {
        let m = parts.len();
        for i in 0..m {
            for j in 1..=parts[i] {
                let arm = parts[i] - j;
                let leg = (i + 1..m).filter(|&k| parts[k] >= j).count();
                if arm + leg as u32 + 1 == p {
                    for k in i..i + leg {
                        parts[k] = parts[k + 1] - 1;
                    }
                    parts[i + leg] = j - 1;
                    parts.retain(|&x| x > 0);
                    continue 'search;
                }
            }
        }
        break;
    }
    Partition::new(parts).unwrap()
}
