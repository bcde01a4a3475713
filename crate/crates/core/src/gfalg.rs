use crate::error::{Error, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(a % p != 0, "zero has no inverse");
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// Dense row-major matrix over GF(p). Entries are kept reduced mod p.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    data: Vec<u8>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {}", self.rows, self.cols, self.modulus)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, modulus: u32) -> Matrix {
        assert!(is_prime(modulus) && modulus < 256, "modulus must be a prime below 256");
        Matrix { rows, cols, modulus, data: vec![0; rows * cols] }
    }

    pub fn from_rows(modulus: u32, rows: &[Vec<u32>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::new(rows.len(), cols, modulus);
        for (i, r) in rows.iter().enumerate() {
            assert!(r.len() == cols, "ragged rows");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, modulus: u32, mut f: impl FnMut(usize, usize) -> u32) -> Matrix {
        let mut m = Matrix::new(rows, cols, modulus);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn identity(n: usize, modulus: u32) -> Matrix {
        let mut m = Matrix::new(n, n, modulus);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j] as u32
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = (v % self.modulus) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols && self.modulus == other.modulus);
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = ((*a as u32 + b as u32) % self.modulus) as u8;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols && self.modulus == other.modulus);
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = ((*a as u32 + self.modulus - b as u32) % self.modulus) as u8;
        }
        out
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let c = c % self.modulus;
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = ((*a as u32 * c) % self.modulus) as u8;
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.modulus == other.modulus, "modulus mismatch");
        assert!(self.cols == other.rows, "dimension mismatch in product");
        let p = self.modulus as u64;
        let mut out = Matrix::new(self.rows, other.cols, self.modulus);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.data[i * out.cols + j] = (x % p) as u8;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert!(v.len() == self.cols);
        let p = self.modulus as u64;
        (0..self.rows)
            .map(|i| {
                let acc: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (acc % p) as u8
            })
            .collect()
    }

    pub fn left_mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert!(v.len() == self.rows);
        let p = self.modulus as u64;
        let mut out = vec![0u64; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += vi as u64 * a as u64;
            }
        }
        out.into_iter().map(|x| (x % p) as u8).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::new(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * out.cols + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.cols);
        head[a * self.cols..(a + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    fn scale_row(&mut self, i: usize, c: u32) {
        let p = self.modulus;
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = ((*x as u32 * c) % p) as u8;
        }
    }

    /// row_i -= f * row_r
    fn row_sub_scaled(&mut self, i: usize, r: usize, f: u32) {
        let p = self.modulus;
        let neg = (p - f % p) % p;
        let (ri, rr) = if i < r {
            let (head, tail) = self.data.split_at_mut(r * self.cols);
            (&mut head[i * self.cols..(i + 1) * self.cols], &tail[..self.cols])
        } else {
            let (head, tail) = self.data.split_at_mut(i * self.cols);
            (&mut tail[..self.cols], &head[r * self.cols..(r + 1) * self.cols])
        };
        for (x, &y) in ri.iter_mut().zip(rr.iter()) {
            *x = ((*x as u32 + neg * y as u32) % p) as u8;
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = inv_mod(m.get(r, c), m.modulus);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r && m.get(i, c) != 0 {
                    let f = m.get(i, c);
                    m.row_sub_scaled(i, r, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let (m, pivots) = self.rref();
        let p = self.modulus;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = ((p - m.get(r, f)) % p) as u8;
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution X of self * X = rhs, free variables set to zero.
    /// None when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert!(rhs.rows == self.rows && rhs.modulus == self.modulus);
        let n = self.cols;
        let mut aug = Matrix::new(self.rows, n + rhs.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..n {
                aug.data[i * aug.cols + j] = self.data[i * n + j];
            }
            for j in 0..rhs.cols {
                aug.data[i * aug.cols + n + j] = rhs.data[i * rhs.cols + j];
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::new(n, rhs.cols, self.modulus);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = red.data[r * red.cols + n + j];
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        self.solve(&Matrix::identity(self.rows, self.modulus)).ok_or(Error::Singular)
    }

    pub fn det(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let p = self.modulus;
        let mut m = self.clone();
        let mut det = 1u64;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| m.get(i, c) != 0) else { return Ok(0) };
            if pr != c {
                m.swap_rows(c, pr);
                det = det * (p - 1) as u64 % p as u64;
            }
            det = det * m.get(c, c) as u64 % p as u64;
            let inv = inv_mod(m.get(c, c), p);
            m.scale_row(c, inv);
            for i in c + 1..m.rows {
                if m.get(i, c) != 0 {
                    let f = m.get(i, c);
                    m.row_sub_scaled(i, c, f);
                }
            }
        }
        Ok(det as u32)
    }
}

/// Product of the listed generators, left to right. The empty word is the identity.
pub fn matrix_word(gens: &[Matrix], word: &[usize]) -> Result<Matrix> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = gens[0].rows();
    let mut acc = Matrix::identity(n, gens[0].modulus());
    for &w in word {
        acc = acc.mul(&gens[w]);
    }
    Ok(acc)
}

/// Random element of the algebra spanned by words in the generators:
/// a short sum of scaled random words. Group words alone are invertible,
/// so singular elements only show up through sums.
pub fn random_algebra_element(
    gens: &[Matrix],
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    max_word_len: usize,
) -> Result<Matrix> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let p = gens[0].modulus();
    let n = gens[0].rows();
    let terms = 2 + (rng.next_u32() as usize) % max_terms.saturating_sub(1).max(1);
    let mut acc = Matrix::new(n, n, p);
    for _ in 0..terms {
        let len = (rng.next_u32() as usize) % (max_word_len + 1);
        let word: Vec<usize> = (0..len).map(|_| (rng.next_u32() as usize) % gens.len()).collect();
        let coeff = 1 + rng.next_u32() % (p - 1);
        acc = acc.add(&matrix_word(gens, &word)?.scale(coeff));
    }
    Ok(acc)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed-deterministic random algebra element with default shape parameters.
pub fn random_matrix_word(gens: &[Matrix], seed: u64) -> Result<Matrix> {
    let mut rng = rng_from_seed(seed);
    random_algebra_element(gens, &mut rng, 4, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(251));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(4) && !is_prime(9) && !is_prime(91));
    }

    #[test]
    fn scalar_inverse() {
        for p in [3u32, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(3, &[vec![1, 2], vec![2, 1]]);
        assert_eq!(m.rank(), 1);
        let n = Matrix::from_rows(3, &[vec![1, 1]]);
        assert_eq!(n.nullspace(), vec![vec![2, 1]]);
        for v in m.nullspace() {
            assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn determinants() {
        let m3 = Matrix::from_rows(3, &[vec![2, 1], vec![1, 2]]);
        assert_eq!(m3.det().unwrap(), 0);
        let m5 = Matrix::from_rows(5, &[vec![2, 1], vec![1, 2]]);
        assert_eq!(m5.det().unwrap(), 3);
        assert!(Matrix::new(2, 3, 3).det().is_err());
        assert_eq!(Matrix::identity(4, 7).det().unwrap(), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows(5, &[vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3, 5));
        assert_eq!(inv.mul(&a), Matrix::identity(3, 5));
        let b = Matrix::from_rows(5, &[vec![1], vec![2], vec![3]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let sing = Matrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert!(matches!(sing.inverse(), Err(Error::Singular)));

        let id = Matrix::identity(3, 5);
        assert_eq!(id.solve(&b).unwrap(), b);
        let zero = Matrix::new(1, 1, 3);
        let one = Matrix::from_rows(3, &[vec![1]]);
        assert!(zero.solve(&one).is_none());
        let under = Matrix::from_rows(3, &[vec![1, 1]]);
        let t = Matrix::from_rows(3, &[vec![2]]);
        let x = under.solve(&t).unwrap();
        assert_eq!(under.mul(&x), t);
    }

    #[test]
    fn rref_shape() {
        let m = Matrix::from_rows(7, &[vec![0, 2, 1], vec![0, 4, 2], vec![1, 1, 1]]);
        let (red, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        for (r, &c) in pivots.iter().enumerate() {
            assert_eq!(red.get(r, c), 1);
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn words_and_algebra_elements() {
        let g = vec![
            Matrix::from_rows(3, &[vec![0, 1], vec![1, 0]]),
            Matrix::from_rows(3, &[vec![1, 1], vec![0, 1]]),
        ];
        assert_eq!(matrix_word(&g, &[]).unwrap(), Matrix::identity(2, 3));
        let w = matrix_word(&g, &[0, 1]).unwrap();
        assert_eq!(w, g[0].mul(&g[1]));
        assert!(matches!(matrix_word(&[], &[0]), Err(Error::EmptyGenerators)));

        let mut r1 = rng_from_seed(42);
        let mut r2 = rng_from_seed(42);
        let a1 = random_algebra_element(&g, &mut r1, 4, 3).unwrap();
        let a2 = random_algebra_element(&g, &mut r2, 4, 3).unwrap();
        assert_eq!(a1, a2);
        assert_eq!(random_matrix_word(&g, 7).unwrap(), random_matrix_word(&g, 7).unwrap());
        let distinct = (0..8u64).any(|s| random_matrix_word(&g, s).unwrap() != random_matrix_word(&g, s + 8).unwrap());
        assert!(distinct);
    }

    #[test]
    fn arithmetic_mod_p() {
        let a = Matrix::from_rows(3, &[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_rows(3, &[vec![2, 2], vec![1, 0]]);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.scale(3).is_zero(), true);
        assert_eq!(a.transpose().transpose(), a);
    }
}
