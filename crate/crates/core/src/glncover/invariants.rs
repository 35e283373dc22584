use num_traits::Zero;
use serde::Serialize;

use super::spectral::{characteristic_polynomial, spectral_from_coeffs, SpectralAlgebra};
use super::splitting::{transposition, SplittingAlgebra};
use crate::error::{Error, Result};
use crate::linalg::rational::{QMatrix, Q};

/// A subalgebra given by a basis (coordinates in the ambient algebra) and
/// its own structure constants.
#[derive(Clone, Debug)]
pub struct InvariantAlgebra {
    pub basis: Vec<Vec<Q>>,
    /// `structure[i][j]`: coordinates of `basis_i · basis_j` in `basis`.
    pub structure: Vec<Vec<Vec<Q>>>,
}

impl InvariantAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn columns_matrix(cols: &[Vec<Q>], rows: usize) -> QMatrix {
    QMatrix::from_columns(cols, rows)
}

/// Elements fixed by every permutation in `generators`, with the induced
/// multiplication.
pub fn invariant_subalgebra(alg: &SplittingAlgebra<Q>, generators: &[Vec<usize>]) -> Result<InvariantAlgebra> {
    let d = alg.dim();
    let mut stacked = QMatrix::zeros(0, d);
    for g in generators {
        let p = alg.perm_index(g);
        let cols: Vec<Vec<Q>> = (0..d)
            .map(|b| {
                let mut e = vec![Q::zero(); d];
                e[b] = Q::from_integer(1.into());
                let mut img = alg.act(p, &e);
                img[b] -= Q::from_integer(1.into());
                img
            })
            .collect();
        stacked = stacked.vstack(&columns_matrix(&cols, d));
    }
    let basis = if generators.is_empty() {
        (0..d)
            .map(|b| {
                let mut e = vec![Q::zero(); d];
                e[b] = Q::from_integer(1.into());
                e
            })
            .collect()
    } else {
        stacked.kernel()
    };
    let span = columns_matrix(&basis, d);
    let mut structure = Vec::with_capacity(basis.len());
    for u in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for v in &basis {
            let prod = alg.mul(u, v);
            row.push(span.solve(&prod).ok_or_else(|| Error::Internal("fixed subspace is not closed under products".into()))?);
        }
        structure.push(row);
    }
    Ok(InvariantAlgebra { basis, structure })
}

/// Generators of the stabilizer of the first root: transpositions of
/// neighbouring indices among `1..n`.
pub fn stabilizer_of_first(n: usize) -> Vec<Vec<usize>> {
    (1..n.saturating_sub(1)).map(|i| transposition(n, i, i + 1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub n: usize,
    /// The stabilizer invariants have rank `n` and `xᵏ ↦ x₁ᵏ` is an
    /// algebra isomorphism from the spectral algebra.
    pub spectral_recovered: bool,
    /// The splitting algebra rebuilt from the invariants is equivariantly
    /// isomorphic to the original.
    pub cameral_recovered: bool,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.spectral_recovered && self.cameral_recovered
    }
}

/// Spectral → cameral → spectral and cameral → spectral → cameral.
pub fn roundtrip_check(spec: &SpectralAlgebra<Q>) -> Result<RoundtripReport> {
    let n = spec.n;
    let alg = SplittingAlgebra::new(spec);
    let inv = invariant_subalgebra(&alg, &stabilizer_of_first(n))?;

    // (i) 1, x₁, …, x₁ⁿ⁻¹ span the invariants and multiply like 1, x, …, xⁿ⁻¹
    let x1 = alg.x(0);
    let powers: Vec<Vec<Q>> = (0..n).map(|k| alg.pow(&x1, k)).collect();
    let span = QMatrix::from_columns(&inv.basis, alg.dim());
    let in_invariants = powers.iter().all(|p| span.solve(p).is_some());
    let independent = QMatrix::from_columns(&powers, alg.dim()).rank() == n;
    let image = |coords: &[Q]| -> Vec<Q> {
        powers.iter().zip(coords).fold(vec![Q::zero(); alg.dim()], |acc, (p, c)| alg.add(&acc, &alg.scale(c, p)))
    };
    let multiplicative = (0..n).all(|i| {
        (0..n).all(|j| {
            let prod = spec.mul(&spec.power_of_x(i), &spec.power_of_x(j));
            image(&prod) == alg.mul(&powers[i], &powers[j])
        })
    });
    let spectral_recovered = inv.dim() == n && in_invariants && independent && multiplicative;

    // (ii) rebuild from the invariant algebra's own data
    let x1_in_inv = span.solve(&x1).ok_or_else(|| Error::Internal("x₁ is not invariant".into()))?;
    let mult: Vec<Vec<Q>> = (0..inv.dim())
        .map(|i| {
            (0..inv.dim())
                .map(|j| {
                    // coefficient of basis_i in x₁·basis_j
                    (0..inv.dim()).fold(Q::zero(), |acc, k| acc + &x1_in_inv[k] * &inv.structure[k][j][i])
                })
                .collect()
        })
        .collect();
    let rebuilt_coeffs = characteristic_polynomial(&mult);
    let rebuilt = SplittingAlgebra::new(&spectral_from_coeffs(n, rebuilt_coeffs)?);
    let cameral_recovered = (0..n).any(|j| equivariant_iso(&rebuilt, &alg, j));
    Ok(RoundtripReport { n, spectral_recovered, cameral_recovered })
}

/// Tries `φ(x'_i) = (1 i)·x_j` and checks that `φ` is a bijective,
/// multiplicative, `S_n`-equivariant linear map.
fn equivariant_iso(src: &SplittingAlgebra<Q>, dst: &SplittingAlgebra<Q>, j: usize) -> bool {
    let n = src.n;
    if src.dim() != dst.dim() {
        return false;
    }
    let xj = dst.x(j);
    let images: Vec<Vec<Q>> = (0..n).map(|i| dst.act_by(&transposition(n, 0, i), &xj)).collect();
    let phi: Vec<Vec<Q>> = src
        .basis()
        .iter()
        .map(|e| e.iter().zip(&images).fold(dst.one(), |acc, (&k, y)| dst.mul(&acc, &dst.pow(y, k))))
        .collect();
    if QMatrix::from_columns(&phi, dst.dim()).rank() != dst.dim() {
        return false;
    }
    let apply = |v: &[Q]| -> Vec<Q> {
        phi.iter().zip(v).fold(vec![Q::zero(); dst.dim()], |acc, (col, c)| dst.add(&acc, &dst.scale(c, col)))
    };
    let d = src.dim();
    let table = src.multiplication_table();
    let multiplicative = (0..d).all(|a| (0..d).all(|b| apply(&table[a * d + b]) == dst.mul(&phi[a], &phi[b])));
    let equivariant = (0..n.saturating_sub(1)).all(|i| {
        let t = transposition(n, i, i + 1);
        (0..d).all(|b| {
            let mut e = vec![Q::zero(); d];
            e[b] = Q::from_integer(1.into());
            apply(&src.act_by(&t, &e)) == dst.act_by(&t, &phi[b])
        })
    });
    multiplicative && equivariant
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiInvariantReport {
    /// `dim {g : σg = −g}`
    pub anti_dim: usize,
    /// `dim (invariants · (x_i − x_j))`
    pub generated_dim: usize,
}

impl AntiInvariantReport {
    pub fn principal(&self) -> bool {
        self.anti_dim == self.generated_dim
    }
}

/// Whether the `−1` eigenspace of the transposition `(i j)` is generated by
/// `x_i − x_j` over the `(i j)`-invariants.
pub fn anti_invariant_module(alg: &SplittingAlgebra<Q>, i: usize, j: usize) -> Result<AntiInvariantReport> {
    if alg.n < 2 || i == j || i >= alg.n || j >= alg.n {
        return Err(Error::Precondition(format!("({i} {j}) is not a transposition in S_{}", alg.n)));
    }
    let d = alg.dim();
    let sigma = transposition(alg.n, i, j);
    let p = alg.perm_index(&sigma);
    let unit = |b: usize| {
        let mut e = vec![Q::zero(); d];
        e[b] = Q::from_integer(1.into());
        e
    };
    let images: Vec<Vec<Q>> = (0..d).map(|b| alg.act(p, &unit(b))).collect();
    let shifted = |sign: i64| {
        let cols: Vec<Vec<Q>> = (0..d)
            .map(|b| {
                let mut c = images[b].clone();
                c[b] += Q::from_integer(sign.into());
                c
            })
            .collect();
        QMatrix::from_columns(&cols, d)
    };
    let anti = shifted(1).kernel();
    let inv = shifted(-1).kernel();
    let diff = alg.sub(&alg.x(i), &alg.x(j));
    let generated: Vec<Vec<Q>> = inv.iter().map(|u| alg.mul(u, &diff)).collect();
    Ok(AntiInvariantReport { anti_dim: anti.len(), generated_dim: QMatrix::from_columns(&generated, d).rank() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn spec(c: &[i64]) -> SpectralAlgebra<Q> {
        spectral_from_coeffs(c.len(), c.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn invariant_dimensions() {
        let a = SplittingAlgebra::new(&spec(&[2, -3]));
        assert_eq!(invariant_subalgebra(&a, &[vec![1, 0]]).unwrap().dim(), 1);
        assert_eq!(invariant_subalgebra(&a, &[]).unwrap().dim(), 2);
        let b = SplittingAlgebra::new(&spec(&[1, 4, -2]));
        assert_eq!(invariant_subalgebra(&b, &stabilizer_of_first(3)).unwrap().dim(), 3);
    }

    #[test]
    fn roundtrips() {
        for c in [vec![2, -3], vec![0, 0], vec![1, 4, -2], vec![0, 0, 0], vec![5]] {
            assert!(roundtrip_check(&spec(&c)).unwrap().passed(), "{c:?}");
        }
    }

    #[test]
    fn anti_invariants_are_principal() {
        let a = SplittingAlgebra::new(&spec(&[2, -3]));
        assert!(anti_invariant_module(&a, 0, 1).unwrap().principal());
        let b = SplittingAlgebra::new(&spec(&[0, 0]));
        let r = anti_invariant_module(&b, 0, 1).unwrap();
        assert_eq!((r.anti_dim, r.generated_dim), (1, 1));
        let c = SplittingAlgebra::new(&spec(&[0, 0, 0]));
        assert!(anti_invariant_module(&c, 0, 1).unwrap().principal());
        assert!(anti_invariant_module(&c, 0, 0).is_err());
    }
}
