use super::ring::BaseRing;
use crate::error::{Error, Result};

/// `R[x]/(xⁿ + a_{n−1}xⁿ⁻¹ + … + a₀)` in the basis `1, x, …, xⁿ⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralAlgebra<R> {
    pub n: usize,
    /// `a₀, …, a_{n−1}`
    pub coeffs: Vec<R>,
}

pub fn spectral_from_coeffs<R: BaseRing>(n: usize, coeffs: Vec<R>) -> Result<SpectralAlgebra<R>> {
    if n == 0 {
        return Err(Error::Precondition("a spectral cover has degree at least 1".into()));
    }
    if coeffs.len() != n {
        return Err(Error::Precondition(format!("expected {n} coefficients, got {}", coeffs.len())));
    }
    Ok(SpectralAlgebra { n, coeffs })
}

impl<R: BaseRing> SpectralAlgebra<R> {
    /// The generator `x` (for `n = 1` this is `−a₀`).
    pub fn x(&self) -> Vec<R> {
        self.power_of_x(1)
    }

    pub fn one(&self) -> Vec<R> {
        self.power_of_x(0)
    }

    pub fn power_of_x(&self, k: usize) -> Vec<R> {
        let mut v = vec![R::zero(); self.n];
        v[0] = R::one();
        for _ in 0..k {
            v = self.mul_by_x(&v);
        }
        v
    }

    fn mul_by_x(&self, v: &[R]) -> Vec<R> {
        let top = v[self.n - 1].clone();
        let mut out = vec![R::zero(); self.n];
        for k in 1..self.n {
            out[k] = v[k - 1].clone();
        }
        for k in 0..self.n {
            out[k] = out[k].sub(&top.mul(&self.coeffs[k]));
        }
        out
    }

    pub fn mul(&self, a: &[R], b: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.n];
        let mut xb = b.to_vec();
        for ak in a {
            for (o, v) in out.iter_mut().zip(&xb) {
                *o = o.add(&ak.mul(v));
            }
            xb = self.mul_by_x(&xb);
        }
        out
    }

    /// Matrix of multiplication by `f`, `m[i][j]` = coefficient of `xⁱ` in `f·xʲ`.
    pub fn multiplication_matrix(&self, f: &[R]) -> Vec<Vec<R>> {
        let cols: Vec<Vec<R>> = (0..self.n).map(|j| self.mul(f, &self.power_of_x(j))).collect();
        (0..self.n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }
}

/// Monic characteristic polynomial `det(Y − M)` by Faddeev–LeVerrier,
/// coefficients `c₀, …, c_{n−1}` (the leading 1 omitted).
pub fn characteristic_polynomial<R: BaseRing>(m: &[Vec<R>]) -> Vec<R> {
    let n = m.len();
    let matmul = |a: &[Vec<R>], b: &[Vec<R>]| -> Vec<Vec<R>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(R::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
            .collect()
    };
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    let mut mk: Vec<Vec<R>> = vec![vec![R::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        mk = next;
        let amk = matmul(m, &mk);
        let trace = (0..n).fold(R::zero(), |acc, i| acc.add(&amk[i][i]));
        coeffs[n - k] = trace.neg().div_int(k as i64);
    }
    coeffs.truncate(n);
    coeffs
}
