//! Exact rational simplex for `maximize c.x subject to A x <= b, x >= 0`.
//!
//! Dense tableau, Bland's rule on the fixed column order (smallest entering
//! index with positive reduced cost, ratio ties broken by smallest basic
//! index). Phase 1 runs only when some `b_i < 0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub a: RationalMatrix,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(a: RationalMatrix, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if a.rows() != b.len() || a.cols() != c.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "LP dimensions: A is {}x{}, b has {}, c has {}",
                a.rows(),
                a.cols(),
                b.len(),
                c.len()
            )));
        }
        Ok(Self { a, b, c })
    }

    /// `minimize b.y s.t. A^T y >= c, y >= 0`, written as
    /// `maximize -b.y s.t. -A^T y <= -c, y >= 0`.
    pub fn dual(&self) -> LinearProgram {
        LinearProgram {
            a: self.a.transpose().scaled(&-Rational::ONE),
            b: self.c.iter().map(|x| -x).collect(),
            c: self.b.iter().map(|x| -x).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl LpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub primal: Vec<Rational>,
    /// Dual prices read off the optimal tableau.
    pub dual: Vec<Rational>,
    pub objective: Rational,
    /// Basic variables: `j < n` structural, `n + i` the slack of row `i`.
    pub primal_basis: Vec<usize>,
    /// Complementary basis of the dual: `i < m` for `y_i`, `m + j` for the
    /// surplus of dual row `j`.
    pub dual_basis: Vec<usize>,
    pub pivots: usize,
}

impl LpSolution {
    fn non_optimal(status: LpStatus, pivots: usize) -> Self {
        Self {
            status,
            primal: Vec::new(),
            dual: Vec::new(),
            objective: Rational::ZERO,
            primal_basis: Vec::new(),
            dual_basis: Vec::new(),
            pivots,
        }
    }
}

/// Vertex of the explicit dual polyhedron `{y >= 0 : A^T y >= c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSolution {
    pub y: Vec<Rational>,
    /// `b.y`, equal to the primal optimum.
    pub objective: Rational,
    /// Basis of the dual program in its own variable numbering.
    pub basis: Vec<usize>,
}

struct Tableau {
    /// Constraint rows, each `width + 1` long with the right-hand side last.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
    pivots: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let nz: Vec<usize> = (0..=self.width)
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let pivot_row = core::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &nz {
                row[j] = row[j].sub_mul(&factor, &pivot_row[j]);
            }
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for &j in &nz {
                self.cost[j] = self.cost[j].sub_mul(&factor, &pivot_row[j]);
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Runs Bland's rule over the columns allowed by `enterable`.
    fn run(&mut self, enterable: impl Fn(usize) -> bool) -> Outcome {
        loop {
            let Some(col) = (0..self.width).find(|&j| enterable(j) && self.cost[j].is_positive())
            else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[col];
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return Outcome::Unbounded,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }

    fn reprice(&mut self, costs: &[Rational]) {
        let mut cost: Vec<Rational> = costs.to_vec();
        cost.push(Rational::ZERO);
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[bv];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=self.width {
                if !row[j].is_zero() {
                    cost[j] = cost[j].sub_mul(cb, &row[j]);
                }
            }
        }
        self.cost = cost;
    }
}

/// Solves `lp`; when optimal both the primal and the tableau dual are basic.
pub fn solve(lp: &LinearProgram) -> LpSolution {
    let (m, n) = (lp.a.rows(), lp.a.cols());
    let negated: Vec<bool> = lp.b.iter().map(Rational::is_negative).collect();
    let artificials: Vec<usize> = (0..m).filter(|&i| negated[i]).collect();
    let width = n + m + artificials.len();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_of_row = vec![usize::MAX; m];
    for (k, &i) in artificials.iter().enumerate() {
        art_of_row[i] = n + m + k;
    }
    for i in 0..m {
        let mut row = vec![Rational::ZERO; width + 1];
        for (j, x) in row.iter_mut().take(n).enumerate() {
            *x = lp.a[(i, j)].clone();
        }
        row[n + i] = Rational::ONE;
        row[width] = lp.b[i].clone();
        if negated[i] {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x = -core::mem::take(x);
                }
            }
            row[art_of_row[i]] = Rational::ONE;
            basis.push(art_of_row[i]);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        cost: Vec::new(),
        basis,
        width,
        pivots: 0,
    };
    let is_art = |j: usize| j >= n + m;

    if !artificials.is_empty() {
        let mut phase1 = vec![Rational::ZERO; width];
        for x in &mut phase1[n + m..] {
            *x = -Rational::ONE;
        }
        t.reprice(&phase1);
        // Phase 1 is bounded above by zero.
        let _ = t.run(|_| true);
        if t.cost[width].is_positive() {
            return LpSolution::non_optimal(LpStatus::Infeasible, t.pivots);
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if is_art(t.basis[r]) {
                if let Some(j) = (0..n + m).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, j);
                }
            }
        }
    }

    let mut costs = vec![Rational::ZERO; width];
    costs[..n].clone_from_slice(&lp.c);
    t.reprice(&costs);
    if let Outcome::Unbounded = t.run(|j| !is_art(j)) {
        return LpSolution::non_optimal(LpStatus::Unbounded, t.pivots);
    }

    let mut primal = vec![Rational::ZERO; n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if bv < n {
            primal[bv] = row[width].clone();
        }
    }
    let dual: Vec<Rational> = (0..m).map(|i| -t.cost[n + i].clone()).collect();
    let objective = -t.cost[width].clone();
    let mut primal_basis: Vec<usize> = t.basis.iter().copied().filter(|&j| !is_art(j)).collect();
    primal_basis.sort_unstable();
    let mut in_basis = vec![false; n + m];
    for &j in &primal_basis {
        in_basis[j] = true;
    }
    // y_i pairs with slack n+i, dual surplus j pairs with x_j.
    let mut dual_basis: Vec<usize> = (0..m)
        .filter(|&i| !in_basis[n + i])
        .chain((0..n).filter(|&j| !in_basis[j]).map(|j| m + j))
        .collect();
    dual_basis.sort_unstable();
    LpSolution {
        status: LpStatus::Optimal,
        primal,
        dual,
        objective,
        primal_basis,
        dual_basis,
        pivots: t.pivots,
    }
}

/// Solves the explicit dual program for a vertex of its own polyhedron.
///
/// Errors with the primal status when the primal has no optimum.
pub fn solve_dual_basic(lp: &LinearProgram) -> Result<DualSolution> {
    let sol = solve(&lp.dual());
    if sol.status != LpStatus::Optimal {
        let primal = solve(lp);
        let status = if primal.status == LpStatus::Optimal {
            // Cannot happen by LP duality.
            return Err(Error::Integrality(alloc::string::String::from(
                "dual has no optimum although the primal does",
            )));
        } else {
            primal.status
        };
        return Err(Error::LpStatus(status.as_str()));
    }
    Ok(DualSolution {
        y: sol.primal,
        objective: -sol.objective,
        basis: sol.primal_basis,
    })
}

/// Exact optimality certificate: primal and dual feasibility and equal
/// objective values.
pub fn check_optimal_pair(lp: &LinearProgram, x: &[Rational], y: &[Rational]) -> bool {
    let ax = lp.a.mul_vec(x);
    let aty = lp.a.transpose().mul_vec(y);
    let primal_ok = x.iter().all(|v| !v.is_negative()) && ax.iter().zip(&lp.b).all(|(l, r)| l <= r);
    let dual_ok = y.iter().all(|v| !v.is_negative()) && aty.iter().zip(&lp.c).all(|(l, r)| l >= r);
    let cx: Rational = lp.c.iter().zip(x).map(|(a, b)| a * b).sum();
    let by: Rational = lp.b.iter().zip(y).map(|(a, b)| a * b).sum();
    primal_ok && dual_ok && cx == by
}

/// `x_j > 0 => (A^T y - c)_j = 0` and `y_i > 0 => (b - A x)_i = 0`.
pub fn complementary_slackness(lp: &LinearProgram, x: &[Rational], y: &[Rational]) -> bool {
    let ax = lp.a.mul_vec(x);
    let aty = lp.a.transpose().mul_vec(y);
    x.iter()
        .zip(aty.iter().zip(&lp.c))
        .all(|(xj, (l, c))| !xj.is_positive() || l == c)
        && y.iter()
            .zip(ax.iter().zip(&lp.b))
            .all(|(yi, (l, b))| !yi.is_positive() || l == b)
}
