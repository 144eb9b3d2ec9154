//! Dense linear algebra over GF(2).

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;

/// Row-major bit matrix; entries are taken mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Rank {
    pub rank: usize,
    /// Rows of the input forming a row basis, in increasing order.
    pub row_basis: Vec<usize>,
    /// Pivot columns of the reduced matrix: a column basis of the input.
    pub col_basis: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x & 1 == 1);
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.bits[i * self.words_per_row + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] ^= v;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s.set(a, b, self.get(i, j));
            }
        }
        s
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| x[j] && self.get(i, j)).count() % 2 == 1)
            .collect()
    }

    /// Rank together with a row basis and a column basis.
    ///
    /// Row reduction runs on a copy that remembers, for every reduced row,
    /// which original rows were combined into it; a row that becomes zero is
    /// dependent on the rows already kept.
    pub fn rank(&self) -> Gf2Rank {
        let mut work = self.clone();
        let mut row_basis = Vec::new();
        let mut col_basis = Vec::new();
        // Process rows in order: keep row i iff it is independent of rows < i.
        // Each kept row is stored reduced, with a distinct pivot column.
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (pivot col, reduced row index)
        for i in 0..self.rows {
            for &(col, r) in &pivots {
                if work.get(i, col) {
                    work.xor_row_into(r, i);
                }
            }
            let lead = first_set(work.row(i), self.cols);
            if let Some(col) = lead {
                // Keep earlier kept rows free of the new pivot column.
                for &(_, r) in &pivots {
                    if work.get(r, col) {
                        work.xor_row_into(i, r);
                    }
                }
                pivots.push((col, i));
                row_basis.push(i);
                col_basis.push(col);
            }
        }
        col_basis.sort_unstable();
        Gf2Rank {
            rank: row_basis.len(),
            row_basis,
            col_basis,
        }
    }

    /// Solves `self * x = b`; `None` if inconsistent. Free variables are zero.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        // Augmented matrix with `b` as the last column.
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols, bi);
        }
        let mut pivot_row = 0;
        let mut pivot_cols = Vec::new();
        for col in 0..self.cols {
            let Some(r) = (pivot_row..self.rows).find(|&r| aug.get(r, col)) else {
                continue;
            };
            aug.swap_rows(r, pivot_row);
            for other in 0..self.rows {
                if other != pivot_row && aug.get(other, col) {
                    aug.xor_row_into(pivot_row, other);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        if (pivot_row..self.rows).any(|r| aug.get(r, self.cols)) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (r, &col) in pivot_cols.iter().enumerate() {
            x[col] = aug.get(r, self.cols);
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.bits.swap(a * w + k, b * w + k);
        }
    }

    /// Builds the matrix whose column `j` is the indicator of `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[BitSet]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for i in col.iter() {
                m.set(i, j, true);
            }
        }
        m
    }
}

fn first_set(words: &[u64], cols: usize) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
        .filter(|&c| c < cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.gen_bool(0.5));
            }
        }
        m
    }

    /// Largest independent row subset by checking every subset: a subset is
    /// independent iff no nonempty sub-subset sums to zero.
    fn brute_force_rank(m: &Gf2Matrix) -> usize {
        let rows: Vec<u64> = (0..m.rows())
            .map(|i| (0..m.cols()).fold(0u64, |acc, j| acc | (m.get(i, j) as u64) << j))
            .collect();
        let mut best = 0;
        for subset in 0u32..(1 << rows.len()) {
            let independent = (1..=subset).all(|sub| {
                sub & !subset != 0
                    || (0..rows.len())
                        .filter(|&i| sub >> i & 1 == 1)
                        .fold(0, |acc, i| acc ^ rows[i])
                        != 0
            });
            if independent {
                best = best.max(subset.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn trivial_ranks() {
        assert_eq!(Gf2Matrix::zeros(3, 4).rank().rank, 0);
        assert_eq!(Gf2Matrix::identity(4).rank().rank, 4);
        let x = Gf2Matrix::identity(4).solve(&[true; 4]).unwrap();
        assert_eq!(x, vec![true; 4]);
    }

    #[test]
    fn incidence_style_rank_matches_brute_force() {
        // Vertex-edge incidence of the graph a-b, b-c, a-c, c-d, b-d mod 2,
        // restricted to vertices a, b, c.
        let m = Gf2Matrix::from_rows(&[
            vec![1, 0, 1, 0, 0],
            vec![1, 1, 0, 0, 1],
            vec![0, 1, 1, 1, 0],
        ]);
        let r = m.rank();
        assert_eq!(r.rank, brute_force_rank(&m));
        assert_eq!(r.rank, 3);
        assert_eq!(m.submatrix(&r.row_basis, &r.col_basis).rank().rank, 3);
    }

    #[test]
    fn zero_rhs_gives_zero_solution() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut found = 0;
        while found < 20 {
            let n = random_matrix(&mut rng, 6, 6);
            if n.rank().rank == 6 {
                found += 1;
                assert_eq!(n.solve(&[false; 6]).unwrap(), vec![false; 6]);
                let x = n.solve(&[true; 6]).unwrap();
                assert_eq!(n.mul_vec(&x), vec![true; 6]);
            }
        }
    }

    #[test]
    fn inconsistent_system() {
        let m = Gf2Matrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.solve(&[true, false]), None);
        assert!(m.solve(&[true, true]).is_some());
    }

    proptest! {
        #[test]
        fn rank_properties(seed in any::<u64>(), rows in 0usize..7, cols in 0usize..9) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols);
            let r = m.rank();
            prop_assert_eq!(r.rank, m.transpose().rank().rank);
            prop_assert_eq!(r.rank, brute_force_rank(&m));
            prop_assert_eq!(r.col_basis.len(), r.rank);
            // The basis rows and columns meet in a nonsingular block.
            prop_assert_eq!(m.submatrix(&r.row_basis, &r.col_basis).rank().rank, r.rank);
        }

        #[test]
        fn solve_residual(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols);
            let b: Vec<bool> = (0..rows).map(|_| rng.gen_bool(0.5)).collect();
            match m.solve(&b) {
                Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
                None => {
                    // Inconsistent iff appending b raises the rank.
                    let mut aug = Gf2Matrix::zeros(rows, cols + 1);
                    for (i, &bi) in b.iter().enumerate() {
                        for j in 0..cols { aug.set(i, j, m.get(i, j)); }
                        aug.set(i, cols, bi);
                    }
                    prop_assert!(aug.rank().rank > m.rank().rank);
                }
            }
        }
    }
}
