//! Exact linear algebra over the rationals. Determinants go through a
//! fraction-free Bareiss elimination on a denominator-cleared integer copy;
//! kernels and solves come from a rational Gauss-Jordan reduction and are
//! returned content-normalized so identical inputs give identical bytes.

use super::{primitive_rational_vector, Field, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(nrows: usize, ncols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), nrows * ncols, "shape mismatch");
        RatMatrix { nrows, ncols, data }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        RatMatrix::new(nrows, ncols, vec![Rat::zero(); nrows * ncols])
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        RatMatrix::new(nrows, ncols, data)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.ncols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.ncols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    /// Determinant of a square matrix via Bareiss on an integer copy.
    /// Every intermediate division in the elimination is exact.
    pub fn det(&self) -> Rat {
        assert_eq!(self.nrows, self.ncols, "determinant of non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return Rat::one();
        }
        let mut scale = Int::one();
        let mut m: Vec<Vec<Int>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut den = Int::one();
            for c in 0..n {
                den = den.lcm(self.at(r, c).denom());
            }
            scale *= &den;
            m.push(
                (0..n)
                    .map(|c| self.at(r, c).numer() * (&den / self.at(r, c).denom()))
                    .collect(),
            );
        }
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = Rat::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            det = -det;
        }
        det
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(p) = (r..m.nrows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.ncols {
                let t = m.data[p * m.ncols + j].clone();
                m.data[p * m.ncols + j] = m.data[r * m.ncols + j].clone();
                m.data[r * m.ncols + j] = t;
            }
            let inv = m.at(r, c).clone();
            for j in 0..m.ncols {
                let t = m.at(r, j) / &inv;
                *m.at_mut(r, j) = t;
            }
            for i in 0..m.nrows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.ncols {
                        let t = m.at(i, j) - &f * m.at(r, j);
                        *m.at_mut(i, j) = t;
                    }
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

    /// Basis of the right kernel as content-1 integer vectors with positive
    /// leading entry, one per free column, ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rr, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.ncols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.ncols {
            if pivot_set[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.ncols];
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rr.at(row, f);
            }
            basis.push(primitive_rational_vector(&v));
        }
        basis
    }

    /// One exact solution of `self * x = rhs` if the system is consistent,
    /// with all free variables set to zero.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.nrows);
        let mut aug = RatMatrix::zero(self.nrows, self.ncols + 1);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.ncols) = rhs[r].clone();
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.ncols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.at(row, self.ncols).clone();
        }
        Some(x)
    }
}

/// Determinant over any field by plain Gaussian elimination. Used for the
/// incidence tests that must also run over a quadratic extension.
pub fn det_field<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    for r in rows {
        assert_eq!(r.len(), n, "determinant of non-square matrix");
    }
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det = det * m[k][k].clone();
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone() / pivot.clone();
            for j in k..n {
                let t = m[i][j].clone() - f.clone() * m[k][j].clone();
                m[i][j] = t;
            }
        }
    }
    det
}

/// Basis of the right kernel over any field, one vector per free column.
/// Pivot entries are filled from the reduced rows, free entries are unit.
pub fn kernel_field<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let nrows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = m[r][j].clone() / pivot.clone();
        }
        for i in 0..nrows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..ncols {
                m[i][j] = m[i][j].clone() - f.clone() * m[r][j].clone();
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for f in 0..ncols {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[f] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][f].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn m3(vals: [i64; 9]) -> RatMatrix {
        RatMatrix::new(3, 3, vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = m3([2, 1, 0, 1, 3, 4, 0, 5, 6]);
        assert_eq!(m.det(), rat(2 * (18 - 20) - 1 * 6));
        assert_eq!(m3([1, 2, 3, 2, 4, 6, 0, 1, 1]).det(), rat(0));
    }

    #[test]
    fn det_handles_fractions_and_swaps() {
        let m = RatMatrix::new(
            2,
            2,
            vec![rat(0), ratio(1, 2), ratio(1, 3), rat(5)],
        );
        assert_eq!(m.det(), ratio(-1, 6));
    }

    #[test]
    fn kernel_vectors_annihilate_and_are_primitive() {
        let m = RatMatrix::from_rows(&[
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..m.nrows() {
                let s: Rat = (0..3).map(|c| m.at(r, c) * &v[c]).sum();
                assert!(s == rat(0));
            }
            assert!(v.iter().all(|x| x.denom() == &crate::algebra::int(1)));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_finds_particular_solution() {
        let m = RatMatrix::from_rows(&[
            vec![rat(1), rat(1)],
            vec![rat(1), rat(-1)],
        ]);
        let x = m.solve(&[rat(4), rat(0)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(2)]);
        let inconsistent = RatMatrix::from_rows(&[vec![rat(1)], vec![rat(1)]]);
        assert!(inconsistent.solve(&[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn field_det_agrees_with_rational_det() {
        let rows = vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(3), rat(4)],
            vec![rat(0), rat(5), rat(6)],
        ];
        assert_eq!(det_field(&rows), m3([2, 1, 0, 1, 3, 4, 0, 5, 6]).det());
    }
}
