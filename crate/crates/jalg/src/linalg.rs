//! Dense exact linear algebra over the rationals: reduced row echelon form,
//! kernels, solving, and symmetric pivoting for positive-definiteness.

use crate::scalar::{rat, Rat};
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Mat {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rat] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Rat::zero();
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if !a.is_zero() && !v[j].is_zero() {
                    acc += a * &v[j];
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn add_scaled(&mut self, rhs: &Mat, s: &Rat) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = {
                let lead = self[(r, c)].clone();
                lead.recip()
            };
            for j in c..self.cols {
                let v = self[(r, j)].clone() * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = self[(r, j)].clone() * &f;
                        self[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space `{v : M v = 0}`, canonicalized.
    pub fn kernel(&self) -> RowSpace {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = rat(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        RowSpace::from_spanning(self.cols, basis)
    }

    /// Column space as a canonical row space (rows are column-space vectors).
    pub fn column_space(&self) -> RowSpace {
        RowSpace::from_spanning(self.rows, self.transpose().rows_vec())
    }

    /// Solve `M x = rhs` exactly; `None` when inconsistent. When the solution
    /// is not unique, free variables are set to zero.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, rhs.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Pivot sequence of the symmetric (LDLᵀ) elimination, stopping at the
    /// first non-positive pivot. The matrix is positive definite iff the
    /// returned flag is true; otherwise the last listed pivot is ≤ 0 or a
    /// structural zero was hit.
    pub fn symmetric_pivots(&self) -> (bool, Vec<Rat>) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let d = a[(k, k)].clone();
            pivots.push(d.clone());
            if d <= Rat::zero() {
                return (false, pivots);
            }
            for i in (k + 1)..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone() / &d;
                for j in k..n {
                    let v = a[(k, j)].clone() * &f;
                    a[(i, j)] -= v;
                }
            }
        }
        (true, pivots)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// A linear subspace of ℚⁿ in canonical form: the row-reduced echelon basis.
/// Two `RowSpace`s are equal iff their matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    ambient: usize,
    basis: Mat,
}

impl RowSpace {
    pub fn from_spanning(ambient: usize, rows: Vec<Vec<Rat>>) -> Self {
        if rows.is_empty() {
            return RowSpace {
                ambient,
                basis: Mat::zeros(0, ambient),
            };
        }
        let mut m = Mat::from_rows(rows);
        let pivots = m.rref();
        let dim = pivots.len();
        let mut basis = Mat::zeros(dim, ambient);
        for i in 0..dim {
            basis.row_mut(i).clone_from_slice(m.row(i));
        }
        RowSpace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        RowSpace::from_spanning(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        RowSpace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.rows_vec()
    }

    /// Residual of `v` after reduction against the basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for i in 0..self.basis.nrows() {
            let lead = (0..self.ambient).find(|&j| !self.basis[(i, j)].is_zero());
            if let Some(c) = lead {
                if !r[c].is_zero() {
                    let f = r[c].clone();
                    for j in c..self.ambient {
                        let v = self.basis[(i, j)].clone() * &f;
                        r[j] -= v;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        RowSpace::from_spanning(self.ambient, rows)
    }

    pub fn intersect(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        let k = self.dim();
        let m = other.dim();
        if k == 0 || m == 0 {
            return RowSpace::zero(self.ambient);
        }
        // x = Aᵀλ = Bᵀμ  ⟺  (λ, μ) ∈ ker [Aᵀ | -Bᵀ]
        let mut stacked = Mat::zeros(self.ambient, k + m);
        for i in 0..k {
            for j in 0..self.ambient {
                stacked[(j, i)] = self.basis[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..self.ambient {
                stacked[(j, k + i)] = -other.basis[(i, j)].clone();
            }
        }
        let ker = stacked.kernel();
        let rows = ker
            .basis_rows()
            .into_iter()
            .map(|lm| {
                let mut x = vec![Rat::zero(); self.ambient];
                for (i, c) in lm[..k].iter().enumerate() {
                    if !c.is_zero() {
                        for j in 0..self.ambient {
                            let v = self.basis[(i, j)].clone() * c;
                            x[j] += v;
                        }
                    }
                }
                x
            })
            .collect();
        RowSpace::from_spanning(self.ambient, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a.row(0), &[rat(1), rat(0), rat(1)]);
        assert_eq!(a.row(1), &[rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let ker = a.kernel();
        assert_eq!(ker.dim(), 1);
        for row in ker.basis_rows() {
            assert!(a.apply(&row).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_exact() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[rat(5), rat(10)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
        let sing = m(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn symmetric_pivots_detect_definiteness() {
        let pd = m(&[&[2, 1], &[1, 3]]);
        assert!(pd.symmetric_pivots().0);
        let indef = m(&[&[0, 1], &[1, 0]]);
        let (ok, pivots) = indef.symmetric_pivots();
        assert!(!ok);
        assert!(pivots.last().unwrap() <= &Rat::zero());
    }

    #[test]
    fn rowspace_canonical_equality() {
        let a = RowSpace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(2), rat(0)]]);
        let b = RowSpace::from_spanning(3, vec![vec![rat(3), rat(0), rat(0)], vec![rat(5), rat(7), rat(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[ratio(1, 2), rat(-4), rat(0)]));
        assert!(!a.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn intersect_planes() {
        let a = RowSpace::from_spanning(3, vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = RowSpace::from_spanning(3, vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[rat(0), rat(1), rat(0)]));
    }
}
