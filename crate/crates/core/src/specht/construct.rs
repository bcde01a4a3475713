use super::GroupRep;
use crate::gfalg::Matrix;
use crate::partitions::Partition;

/// Row fillings of lambda with 1..d increasing along rows and down columns,
/// generated in a fixed order by placing each value at every legal corner.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<u32>>> {
    let d = lambda.size();
    let rows = lambda.len();
    let mut out = Vec::new();
    let mut fill = vec![0u32; rows];
    let mut tab: Vec<Vec<u32>> = vec![Vec::new(); rows];
    fn place(
        k: u32,
        d: u32,
        lambda: &Partition,
        fill: &mut Vec<u32>,
        tab: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if k > d {
            out.push(tab.clone());
            return;
        }
        for r in 0..fill.len() {
            if fill[r] < lambda.part(r) && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                tab[r].push(k);
                place(k + 1, d, lambda, fill, tab, out);
                tab[r].pop();
                fill[r] -= 1;
            }
        }
    }
    place(1, d, lambda, &mut fill, &mut tab, &mut out);
    out
}

/// Row index of every value in a tableau, indexed by value-1.
fn row_map(tab: &[Vec<u32>], d: usize) -> Vec<u8> {
    let mut rows = vec![0u8; d];
    for (r, row) in tab.iter().enumerate() {
        for &v in row {
            rows[v as usize - 1] = r as u8;
        }
    }
    rows
}

/// Coefficient of the tabloid with the given row assignment in the
/// polytabloid of tab. At most one column permutation of tab can reach a
/// fixed tabloid; the result is its sign, or 0 when the row multiset of some
/// column is not exactly one value per row.
fn forced_coeff(rows_u: &[u8], tab: &[Vec<u32>]) -> i32 {
    let ncols = tab.first().map_or(0, |r| r.len());
    let mut sign = 1;
    let mut target = [0u8; 64];
    for c in 0..ncols {
        let h = tab.iter().take_while(|row| row.len() > c).count();
        let mut seen = 0u64;
        for (i, row) in tab.iter().take(h).enumerate() {
            let r = rows_u[row[c] as usize - 1];
            if r as usize >= h || seen & (1 << r) != 0 {
                return 0;
            }
            seen |= 1 << r;
            target[i] = r;
        }
        for i in 0..h {
            for j in i + 1..h {
                if target[i] > target[j] {
                    sign = -sign;
                }
            }
        }
    }
    sign
}

fn swap_values(tab: &[Vec<u32>], k: u32) -> Vec<Vec<u32>> {
    tab.iter()
        .map(|row| {
            row.iter()
                .map(|&v| if v == k { k + 1 } else if v == k + 1 { k } else { v })
                .collect()
        })
        .collect()
}

/// Specht module in the standard polytabloid basis. The matrix of tabloid
/// coordinates of polytabloids is unimodular, so acting on a polytabloid and
/// projecting back through it recovers the action matrix.
pub fn specht_rep(lambda: &Partition, p: u32) -> GroupRep {
    let d = lambda.size();
    let tabs = standard_tableaux(lambda);
    let n = tabs.len();
    let maps: Vec<Vec<u8>> = tabs.iter().map(|t| row_map(t, d as usize)).collect();
    let to_entry = |v: i32| v.rem_euclid(p as i32) as u32;
    let basis = Matrix::from_fn(n, n, p, |s, t| to_entry(forced_coeff(&maps[s], &tabs[t])));
    let basis_inv = basis.inverse().expect("polytabloid coordinate matrix is unimodular");
    let gens = (1..d)
        .map(|k| {
            let moved: Vec<Vec<Vec<u32>>> = tabs.iter().map(|t| swap_values(t, k)).collect();
            let action =
                Matrix::from_fn(n, n, p, |s, t| to_entry(forced_coeff(&maps[s], &moved[t])));
            basis_inv.mul(&action)
        })
        .collect();
    GroupRep { degree: d, dim: n, modulus: p, gens }
}

struct ColumnWalk<'a> {
    cols: &'a [Vec<u32>],
    tabs: &'a [Vec<Vec<u32>>],
    rows_u: Vec<u8>,
    sums: Vec<i64>,
}

impl ColumnWalk<'_> {
    /// Enumerate column permutations of one tableau. Position i of column c
    /// is sent to an unused row r; parity grows by the used rows above r.
    fn go(&mut self, c: usize, i: usize, used: u64, sign: i64) {
        if c == self.cols.len() {
            for (s, tab) in self.tabs.iter().enumerate() {
                self.sums[s] += sign * forced_coeff(&self.rows_u, tab) as i64;
            }
            return;
        }
        let col = &self.cols[c];
        if i == col.len() {
            self.go(c + 1, 0, 0, sign);
            return;
        }
        for r in 0..col.len() {
            if used & (1 << r) != 0 {
                continue;
            }
            let flips = (used >> (r + 1)).count_ones();
            let s = if flips % 2 == 0 { sign } else { -sign };
            self.rows_u[col[i] as usize - 1] = r as u8;
            self.go(c, i + 1, used | (1 << r), s);
        }
    }
}

/// Gram matrix of the bilinear form with orthonormal tabloids, in the
/// standard polytabloid basis.
pub fn gram_matrix(lambda: &Partition, p: u32) -> Matrix {
    let d = lambda.size() as usize;
    let tabs = standard_tableaux(lambda);
    let n = tabs.len();
    let mut entries = vec![vec![0i64; n]; n];
    for (t, cells) in entries.iter_mut().enumerate() {
        let ncols = tabs[t].first().map_or(0, |r| r.len());
        let cols: Vec<Vec<u32>> = (0..ncols)
            .map(|c| tabs[t].iter().filter_map(|row| row.get(c).copied()).collect())
            .collect();
        let mut walk =
            ColumnWalk { cols: &cols, tabs: &tabs, rows_u: vec![0u8; d], sums: vec![0i64; n] };
        walk.go(0, 0, 0, 1);
        *cells = walk.sums;
    }
    Matrix::from_fn(n, n, p, |s, t| entries[t][s].rem_euclid(p as i64) as u32)
}

/// Head of the Specht module for p-regular lambda: quotient by the radical
/// of the bilinear form.
pub fn simple_head_regular(lambda: &Partition, p: u32) -> GroupRep {
    assert!(lambda.is_p_regular(p));
    let s = specht_rep(lambda, p);
    let gram = gram_matrix(lambda, p);
    let rad = gram.nullspace();
    if rad.is_empty() {
        return s;
    }
    let n = s.dim;
    let r = Matrix::from_fn(rad.len(), n, p, |i, j| rad[i][j] as u32);
    let (rr, pivots) = r.rref();
    let cols: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let m = cols.len();
    let proj = Matrix::from_fn(m, n, p, |ci, j| {
        if j == cols[ci] {
            1
        } else if let Some(k) = pivots.iter().position(|&pv| pv == j) {
            (p - rr.get(k, cols[ci])) % p
        } else {
            0
        }
    });
    let section = Matrix::from_fn(n, m, p, |j, ci| u32::from(j == cols[ci]));
    let gens = s.gens.iter().map(|a| proj.mul(a).mul(&section)).collect();
    GroupRep { degree: s.degree, dim: m, modulus: p, gens }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn tableau_counts_match_hook_formula() {
        for d in 0..=6 {
            for lam in partitions_of(d) {
                let count = standard_tableaux(&lam).len() as u128;
                assert_eq!(count, lam.standard_tableau_count(), "shape {}", lam);
            }
        }
    }

    #[test]
    fn small_action_matrices() {
        let s = specht_rep(&pt("2,1"), 3);
        assert_eq!(s.dim, 2);
        assert_eq!(s.gens[0], Matrix::from_rows(3, &[vec![1, 0], vec![2, 2]]));
        let s5 = specht_rep(&pt("2,1"), 5);
        assert_eq!(s5.gens[0], Matrix::from_rows(5, &[vec![1, 0], vec![4, 4]]));
        assert_eq!(specht_rep(&pt("4"), 3).dim, 1);
        assert_eq!(specht_rep(&pt("1,1,1,1"), 3).dim, 1);
        assert_eq!(specht_rep(&pt("1,1,1,1"), 3).gens[0], Matrix::from_rows(3, &[vec![2]]));
        assert_eq!(specht_rep(&pt("3,1"), 3).dim, 3);
        assert_eq!(specht_rep(&pt("2,2"), 3).dim, 2);
    }

    #[test]
    fn coxeter_relations_hold() {
        for d in 2..=5 {
            for lam in partitions_of(d) {
                for p in [3u32, 5] {
                    assert!(specht_rep(&lam, p).check_relations(), "shape {} mod {}", lam, p);
                }
            }
        }
    }

    #[test]
    fn gram_fixtures() {
        let g = gram_matrix(&pt("2,1"), 3);
        assert_eq!(g, Matrix::from_rows(3, &[vec![2, 1], vec![1, 2]]));
        assert_eq!(g.det().unwrap(), 0);
        assert_eq!(gram_matrix(&pt("2,1"), 5).det().unwrap(), 3);
        assert_eq!(gram_matrix(&pt("4"), 3), Matrix::from_rows(3, &[vec![1]]));
        assert_eq!(gram_matrix(&pt("1,1,1"), 3), Matrix::from_rows(3, &[vec![0]]));
        assert_eq!(gram_matrix(&pt("1,1,1"), 5), Matrix::from_rows(5, &[vec![1]]));
    }

    #[test]
    fn gram_is_invariant() {
        for d in 2..=5 {
            for lam in partitions_of(d) {
                let s = specht_rep(&lam, 3);
                let g = gram_matrix(&lam, 3);
                assert_eq!(g.transpose(), g);
                for a in &s.gens {
                    assert_eq!(a.transpose().mul(&g).mul(a), g, "shape {}", lam);
                }
            }
        }
    }

    #[test]
    fn heads() {
        let head = simple_head_regular(&pt("2,1"), 3);
        assert_eq!(head.dim, 1);
        assert_eq!(head.gens[0], Matrix::from_rows(3, &[vec![2]]));
        assert_eq!(head.gens[1], Matrix::from_rows(3, &[vec![2]]));
        assert_eq!(simple_head_regular(&pt("2,1"), 5).dim, 2);
        assert_eq!(simple_head_regular(&pt("3,1"), 3).dim, 3);
        for d in 1..=6 {
            for lam in partitions_of(d) {
                if !lam.is_p_regular(3) {
                    continue;
                }
                let head = simple_head_regular(&lam, 3);
                assert_eq!(head.dim, gram_matrix(&lam, 3).rank());
                assert!(head.check_relations(), "shape {}", lam);
            }
        }
    }
}
