//! Smith normal form over the integers.
//!
//! The transforms `U` and `V` with `U A V = D` are not stored as matrices;
//! the elementary operations are logged instead and replayed on vectors.
//! That is all the solvers need: `U b` for the right-hand side, a single row
//! of `U` for an obstruction certificate, and `V y` for a witness.

use serde::Serialize;

use super::{gcd_i128, IntMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
enum Op {
    Swap(usize, usize),
    /// `line[target] += factor * line[source]`
    Add { target: usize, source: usize, factor: i128 },
    Neg(usize),
}

/// A certificate that `A x = b` has no integral solution (or none modulo
/// some `m`): a functional `u` with `uᵀA ≡ 0 (mod modulus)` while
/// `uᵀb ≢ 0 (mod modulus)`. A modulus of zero means exact equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralObstruction {
    pub index: usize,
    pub elementary_divisor: i128,
    pub modulus: i128,
    /// Sparse `(row, coefficient)` pairs of `u`.
    pub functional: Vec<(usize, i128)>,
    pub residue: i128,
}

impl IntegralObstruction {
    fn reduce(v: i128, m: i128) -> i128 {
        if m == 0 {
            v
        } else {
            v.rem_euclid(m)
        }
    }

    /// Re-checks the certificate against the original system.
    pub fn verify(&self, a: &IntMatrix, b: &[i64]) -> bool {
        let m = self.modulus;
        let mut ub: i128 = 0;
        let mut ua = vec![0i128; a.cols()];
        for &(row, coef) in &self.functional {
            ub += coef * b[row] as i128;
            for (j, acc) in ua.iter_mut().enumerate() {
                *acc += coef * a.get(row, j) as i128;
            }
        }
        ua.iter().all(|v| Self::reduce(*v, m) == 0) && Self::reduce(ub, m) != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solution(Vec<i128>),
    Obstructed(IntegralObstruction),
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    rows: usize,
    cols: usize,
    divisors: Vec<i128>,
    row_ops: Vec<Op>,
    col_ops: Vec<Op>,
}

fn checked_axpy(dst: &mut i128, factor: i128, src: i128) -> Result<()> {
    let prod = factor.checked_mul(src).ok_or(Error::Overflow("smith normal form"))?;
    *dst = dst.checked_add(prod).ok_or(Error::Overflow("smith normal form"))?;
    Ok(())
}

struct Work {
    m: Vec<Vec<i128>>,
    rows: usize,
    cols: usize,
    row_ops: Vec<Op>,
    col_ops: Vec<Op>,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap(a, b);
            self.row_ops.push(Op::Swap(a, b));
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for row in &mut self.m {
                row.swap(a, b);
            }
            self.col_ops.push(Op::Swap(a, b));
        }
    }

    fn add_row(&mut self, target: usize, source: usize, factor: i128) -> Result<()> {
        let src = self.m[source].clone();
        for (d, s) in self.m[target].iter_mut().zip(&src) {
            if *s != 0 {
                checked_axpy(d, factor, *s)?;
            }
        }
        self.row_ops.push(Op::Add { target, source, factor });
        Ok(())
    }

    fn add_col(&mut self, target: usize, source: usize, factor: i128) -> Result<()> {
        for row in &mut self.m {
            let s = row[source];
            if s != 0 {
                checked_axpy(&mut row[target], factor, s)?;
            }
        }
        self.col_ops.push(Op::Add { target, source, factor });
        Ok(())
    }

    fn neg_row(&mut self, a: usize) {
        for v in &mut self.m[a] {
            *v = -*v;
        }
        self.row_ops.push(Op::Neg(a));
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.m[i][j].abs();
                if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, i, j));
                    if v == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column `t` except for the pivot, keeping the pivot the
    /// smallest entry seen so far.
    fn clear_cross(&mut self, t: usize) -> Result<()> {
        loop {
            let p = self.m[t][t];
            for i in t + 1..self.rows {
                let v = self.m[i][t];
                if v != 0 && v / p != 0 {
                    self.add_row(i, t, -(v / p))?;
                }
            }
            for j in t + 1..self.cols {
                let v = self.m[t][j];
                if v != 0 && v / p != 0 {
                    self.add_col(j, t, -(v / p))?;
                }
            }
            let col_min = (t + 1..self.rows)
                .filter(|&i| self.m[i][t] != 0)
                .min_by_key(|&i| self.m[i][t].abs());
            let row_min = (t + 1..self.cols)
                .filter(|&j| self.m[t][j] != 0)
                .min_by_key(|&j| self.m[t][j].abs());
            match (col_min, row_min) {
                (None, None) => return Ok(()),
                (Some(i), None) => self.swap_rows(t, i),
                (None, Some(j)) => self.swap_cols(t, j),
                (Some(i), Some(j)) => {
                    if self.m[i][t].abs() <= self.m[t][j].abs() {
                        self.swap_rows(t, i)
                    } else {
                        self.swap_cols(t, j)
                    }
                }
            }
        }
    }
}

impl SmithForm {
    pub fn compute(a: &IntMatrix) -> Result<Self> {
        let mut w = Work {
            m: (0..a.rows()).map(|i| a.row(i).iter().map(|&v| v as i128).collect()).collect(),
            rows: a.rows(),
            cols: a.cols(),
            row_ops: Vec::new(),
            col_ops: Vec::new(),
        };
        let mut divisors = Vec::new();
        let mut t = 0;
        while t < w.rows.min(w.cols) {
            let Some((pi, pj)) = w.find_pivot(t) else { break };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            loop {
                w.clear_cross(t)?;
                let p = w.m[t][t];
                let bad = (t + 1..w.rows).find(|&i| w.m[i][t + 1..].iter().any(|v| v % p != 0));
                match bad {
                    Some(i) => w.add_row(t, i, 1)?,
                    None => break,
                }
            }
            if w.m[t][t] < 0 {
                w.neg_row(t);
            }
            divisors.push(w.m[t][t]);
            t += 1;
        }
        Ok(Self { rows: w.rows, cols: w.cols, divisors, row_ops: w.row_ops, col_ops: w.col_ops })
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Nonzero elementary divisors, each dividing the next.
    pub fn elementary_divisors(&self) -> &[i128] {
        &self.divisors
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn apply_u(&self, b: &mut [i128]) -> Result<()> {
        for op in &self.row_ops {
            match *op {
                Op::Swap(x, y) => b.swap(x, y),
                Op::Add { target, source, factor } => {
                    let s = b[source];
                    checked_axpy(&mut b[target], factor, s)?;
                }
                Op::Neg(x) => b[x] = -b[x],
            }
        }
        Ok(())
    }

    /// Row `i` of `U`, as a sparse list.
    fn u_row(&self, i: usize) -> Result<Vec<(usize, i128)>> {
        let mut v = vec![0i128; self.rows];
        v[i] = 1;
        for op in self.row_ops.iter().rev() {
            match *op {
                Op::Swap(x, y) => v.swap(x, y),
                Op::Add { target, source, factor } => {
                    let t = v[target];
                    checked_axpy(&mut v[source], factor, t)?;
                }
                Op::Neg(x) => v[x] = -v[x],
            }
        }
        Ok(v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect())
    }

    fn apply_v(&self, y: &mut [i128]) -> Result<()> {
        for op in self.col_ops.iter().rev() {
            match *op {
                Op::Swap(x, z) => y.swap(x, z),
                Op::Add { target, source, factor } => {
                    let t = y[target];
                    checked_axpy(&mut y[source], factor, t)?;
                }
                Op::Neg(x) => y[x] = -y[x],
            }
        }
        Ok(())
    }

    fn obstruction(&self, index: usize, modulus: i128, residue: i128) -> Result<IntegralObstruction> {
        Ok(IntegralObstruction {
            index,
            elementary_divisor: self.divisors.get(index).copied().unwrap_or(0),
            modulus,
            functional: self.u_row(index)?,
            residue,
        })
    }

    /// Decides `A x = b` over the integers.
    pub fn solve(&self, b: &[i64]) -> Result<SolveOutcome> {
        assert_eq!(b.len(), self.rows);
        let mut ub: Vec<i128> = b.iter().map(|&v| v as i128).collect();
        self.apply_u(&mut ub)?;
        let mut y = vec![0i128; self.cols];
        for (i, &d) in self.divisors.iter().enumerate() {
            if ub[i] % d != 0 {
                return Ok(SolveOutcome::Obstructed(self.obstruction(i, d, ub[i])?));
            }
            y[i] = ub[i] / d;
        }
        if let Some(i) = (self.rank()..self.rows).find(|&i| ub[i] != 0) {
            return Ok(SolveOutcome::Obstructed(self.obstruction(i, 0, ub[i])?));
        }
        self.apply_v(&mut y)?;
        Ok(SolveOutcome::Solution(y))
    }

    /// Decides `A x ≡ b (mod m)`; solutions are reduced into `[0, m)`.
    pub fn solve_mod(&self, b: &[i64], m: i128) -> Result<SolveOutcome> {
        assert!(m > 1);
        let mut ub: Vec<i128> = b.iter().map(|&v| v as i128).collect();
        self.apply_u(&mut ub)?;
        for v in &mut ub {
            *v = v.rem_euclid(m);
        }
        let mut y = vec![0i128; self.cols];
        for (i, &d) in self.divisors.iter().enumerate() {
            let g = gcd_i128(d, m);
            if ub[i] % g != 0 {
                let residue = ub[i].rem_euclid(g);
                return Ok(SolveOutcome::Obstructed(self.obstruction(i, g, residue)?));
            }
            let mg = m / g;
            y[i] = if mg == 1 { 0 } else { ((ub[i] / g) * mod_inverse((d / g).rem_euclid(mg), mg)).rem_euclid(mg) };
        }
        if let Some(i) = (self.rank()..self.rows).find(|&i| ub[i] != 0) {
            return Ok(SolveOutcome::Obstructed(self.obstruction(i, m, ub[i])?));
        }
        self.apply_v(&mut y)?;
        for v in &mut y {
            *v = v.rem_euclid(m);
        }
        Ok(SolveOutcome::Solution(y))
    }
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "not invertible");
    old_s.rem_euclid(m)
}
