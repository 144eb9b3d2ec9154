//! Dense exact rational matrices and the bounded regularity predicates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Rational::from_integer(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    /// Stacks `blocks` vertically; all must have the same column count.
    pub fn vstack(blocks: &[&RationalMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "column mismatch in vstack");
            entries.extend_from_slice(&b.entries);
            rows += b.rows;
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s[(a, b)] = self[(i, j)].clone();
            }
        }
        s
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(Rational::is_integer)
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::ONE;
        }
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = Rational::ONE;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Rational::ZERO,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &v / &prev;
                }
                a[i][k] = Rational::ZERO;
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = vec![Rational::ZERO; n];
                r[i] = Rational::ONE;
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].recip();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                if !x.is_zero() {
                    *x = &*x * &pivot;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        a[r][j] = a[r][j].sub_mul(&factor, &a[col][j]);
                    }
                    if !inv[col][j].is_zero() {
                        inv[r][j] = inv[r][j].sub_mul(&factor, &inv[col][j]);
                    }
                }
            }
        }
        Some(Self {
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Visits every square submatrix with side `1..=cap`, stopping when `visit`
    /// returns `false`. Returns whether the walk ran to completion.
    ///
    /// Submatrices with an all-zero row or column are skipped: they are
    /// singular and every predicate here accepts singular submatrices.
    fn for_each_square_submatrix(
        &self,
        cap: usize,
        mut visit: impl FnMut(&RationalMatrix) -> bool,
    ) -> bool {
        let side = cap.min(self.rows).min(self.cols);
        for k in 1..=side {
            let mut rows: Vec<usize> = (0..k).collect();
            loop {
                let mut cols: Vec<usize> = (0..k).collect();
                loop {
                    let zero_line = rows
                        .iter()
                        .any(|&i| cols.iter().all(|&j| self[(i, j)].is_zero()))
                        || cols
                            .iter()
                            .any(|&j| rows.iter().all(|&i| self[(i, j)].is_zero()));
                    if !zero_line && !visit(&self.submatrix(&rows, &cols)) {
                        return false;
                    }
                    if !next_combination(&mut cols, self.cols) {
                        break;
                    }
                }
                if !next_combination(&mut rows, self.rows) {
                    break;
                }
            }
        }
        true
    }
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Whether every square submatrix with side at most `size_cap` has
/// determinant in {-1, 0, 1}.
///
/// This is a bounded check. It is exhaustive exactly when
/// `size_cap >= min(rows, cols)`.
pub fn is_totally_unimodular(m: &RationalMatrix, size_cap: usize) -> bool {
    m.for_each_square_submatrix(size_cap, |r| {
        let d = r.determinant();
        d.is_zero() || d == Rational::ONE || d == -Rational::ONE
    })
}

/// Whether `k * R^-1` is integral for every nonsingular square submatrix `R`
/// with side at most `size_cap`. Bounded like [`is_totally_unimodular`].
pub fn is_k_regular(m: &RationalMatrix, k: u32, size_cap: usize) -> bool {
    assert!(k > 0, "k must be positive");
    let k = Rational::from_integer(k as i64);
    m.for_each_square_submatrix(size_cap, |r| match r.inverse() {
        None => true,
        Some(inv) => inv.entries.iter().all(|x| (x * &k).is_integer()),
    })
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion, for cross-checking Bareiss on small matrices.
    fn laplace_det(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::ONE;
        }
        let mut acc = Rational::ZERO;
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let term = &m[(0, j)] * &laplace_det(&m.submatrix(&rows, &cols));
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let m = RationalMatrix::from_integers(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(m.determinant(), Rational::from_integer(-2));
        assert!(!is_totally_unimodular(&m, 2));
        assert!(is_totally_unimodular(&m, 1));
        assert_eq!(RationalMatrix::identity(0).determinant(), Rational::ONE);
        let p = RationalMatrix::from_integers(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(p.determinant(), -Rational::ONE);
    }

    #[test]
    fn identity_is_one_regular() {
        assert!(is_k_regular(&RationalMatrix::identity(4), 1, 4));
        assert!(is_totally_unimodular(&RationalMatrix::identity(4), 4));
        // [[2]] has inverse 1/2: 2-regular, not 1-regular.
        let two = RationalMatrix::from_integers(&[vec![2]]);
        assert!(!is_k_regular(&two, 1, 1));
        assert!(is_k_regular(&two, 2, 1));
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, n), n)
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_laplace(rows in small_matrix()) {
            let m = RationalMatrix::from_integers(&rows);
            prop_assert_eq!(m.determinant(), laplace_det(&m));
        }

        #[test]
        fn inverse_is_inverse(rows in small_matrix()) {
            let m = RationalMatrix::from_integers(&rows);
            match m.inverse() {
                None => prop_assert!(m.determinant().is_zero()),
                Some(inv) => {
                    let n = m.rows();
                    for j in 0..n {
                        let col: Vec<Rational> = (0..n).map(|i| inv[(i, j)].clone()).collect();
                        let e = m.mul_vec(&col);
                        for (i, x) in e.iter().enumerate() {
                            prop_assert_eq!(x.clone(), if i == j { Rational::ONE } else { Rational::ZERO });
                        }
                    }
                }
            }
        }

        // TU implies 1-regular; k-regular M gives 1-regular M/k.
        #[test]
        fn regularity_relations(rows in small_matrix(), k in 1u32..4) {
            let m = RationalMatrix::from_integers(&rows);
            let cap = m.rows();
            if is_totally_unimodular(&m, cap) {
                prop_assert!(is_k_regular(&m, 1, cap));
            }
            if is_k_regular(&m, k, cap) {
                let scaled = m.scaled(&Rational::new(1, k as i64));
                prop_assert!(is_k_regular(&scaled, 1, cap));
            }
        }
    }
}
