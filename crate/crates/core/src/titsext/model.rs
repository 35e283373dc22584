use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::{q, q_frac, QMatrix};
use crate::linalg::{solve_gf2, IntMatrix};
use crate::rootdata::{Family, RootDatum};

/// How a `±1` diagonal matrix is read as an element of `X_* ⊗ Z/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusReader {
    /// The torus acts on basis vector `k` through the character `weights[k]`
    /// (character coordinates); signs are decoded by solving mod 2.
    Weights(Vec<Vec<i64>>),
    /// Diagonal matrices are taken modulo scalars; coordinates are the
    /// pairings with `projection` rows (the simple roots, in `GL` coordinates).
    ModScalars { projection: Vec<Vec<i64>> },
}

/// Signed-permutation lifts `n_i` of the simple reflections in a faithful
/// matrix model of `N(T)`.
#[derive(Clone, Debug)]
pub struct MonomialModel {
    pub dim: usize,
    pub generators: Vec<IntMatrix>,
    pub reader: TorusReader,
    /// Exponents of the simple coroots on the basis vectors: `α̌_i(c)` is
    /// `diag(c^{e_k})` with `e = coroot_exponents[i]`.
    pub coroot_exponents: Vec<Vec<i64>>,
    pub label: String,
}

impl MonomialModel {
    /// Reads a `±1` diagonal matrix as a class in `X_* ⊗ Z/2`.
    pub fn read_torus(&self, m: &IntMatrix) -> Result<Vec<u8>> {
        if !m.is_diagonal() || m.diagonal().iter().any(|d| d.abs() != 1) {
            return Err(Error::Internal(format!("{m:?} is not a ±1 diagonal matrix")));
        }
        let signs: Vec<i64> = m.diagonal().iter().map(|&d| i64::from(d == -1)).collect();
        match &self.reader {
            TorusReader::Weights(w) => solve_gf2(w, &signs)
                .ok_or_else(|| Error::Internal(format!("{signs:?} is not in the image of X_*(-1)"))),
            TorusReader::ModScalars { projection } => Ok(projection
                .iter()
                .map(|row| (row.iter().zip(&signs).map(|(a, b)| a * b).sum::<i64>().rem_euclid(2)) as u8)
                .collect()),
        }
    }

    /// `α̌_i(−1)` as a diagonal matrix.
    pub fn coroot_at_minus_one(&self, i: usize) -> IntMatrix {
        let d: Vec<i64> = self.coroot_exponents[i].iter().map(|e| if e.rem_euclid(2) == 1 { -1 } else { 1 }).collect();
        IntMatrix::from_diagonal(&d)
    }

    /// Copy of the model with generator `i` replaced.
    pub fn with_generator(&self, i: usize, n: IntMatrix) -> MonomialModel {
        let mut out = self.clone();
        out.generators[i] = n;
        out
    }
}

fn elementary(dim: usize, entries: &[(usize, usize, i64)]) -> QMatrix {
    let mut m = QMatrix::zeros(dim, dim);
    for &(i, j, v) in entries {
        m.data[i][j] += q(v);
    }
    m
}

fn sub(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.data[i][j] -= &b.data[i][j];
        }
    }
    out
}

fn scale(a: &QMatrix, k: &crate::linalg::rational::Q) -> QMatrix {
    let mut out = a.clone();
    for row in &mut out.data {
        for v in row {
            *v *= k;
        }
    }
    out
}

fn is_zero(a: &QMatrix) -> bool {
    a.data.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// `exp` of a nilpotent matrix.
fn exp_nilpotent(n: &QMatrix) -> QMatrix {
    let mut out = QMatrix::identity(n.rows);
    let mut term = QMatrix::identity(n.rows);
    let mut k = 1i64;
    loop {
        term = scale(&term.mul(n), &q_frac(1, k));
        if is_zero(&term) {
            return out;
        }
        for i in 0..n.rows {
            for j in 0..n.cols {
                out.data[i][j] += &term.data[i][j];
            }
        }
        k += 1;
        assert!(k <= n.rows as i64 + 1, "matrix is not nilpotent");
    }
}

/// `exp(e) exp(−f) exp(e)` where `f` has entries `1/e_ij` at the transposed
/// positions, normalized so that `[[e, f], e] = 2e`.
fn chevalley_lift(e: &QMatrix) -> Result<IntMatrix> {
    let mut f0 = QMatrix::zeros(e.cols, e.rows);
    for i in 0..e.rows {
        for j in 0..e.cols {
            if !e.data[i][j].is_zero() {
                f0.data[j][i] = e.data[i][j].recip();
            }
        }
    }
    let h0 = sub(&e.mul(&f0), &f0.mul(e));
    let he = sub(&h0.mul(e), &e.mul(&h0));
    let (i, j) = (0..e.rows)
        .flat_map(|i| (0..e.cols).map(move |j| (i, j)))
        .find(|&(i, j)| !e.data[i][j].is_zero())
        .ok_or_else(|| Error::Internal("zero root vector".into()))?;
    let c = &he.data[i][j] / &e.data[i][j];
    let f = scale(&f0, &(q(2) / c));
    let ee = exp_nilpotent(e);
    let n = ee.mul(&exp_nilpotent(&scale(&f, &q(-1)))).mul(&ee);
    let mut out = IntMatrix::zeros(n.rows, n.cols);
    for r in 0..n.rows {
        for s in 0..n.cols {
            let v = &n.data[r][s];
            if !v.denom().is_one() {
                return Err(Error::Internal("Chevalley lift is not integral".into()));
            }
            out.set(r, s, i64::try_from(v.to_integer()).map_err(|_| Error::Overflow("chevalley lift"))?);
        }
    }
    if !out.is_signed_permutation() {
        return Err(Error::Internal(format!("Chevalley lift {out:?} is not monomial")));
    }
    Ok(out)
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Chevalley generators of the built-in classical families in their
/// defining representation (`GL(n)` matrices modulo scalars for `PGL(n)`).
pub fn chevalley_generators(datum: &RootDatum) -> Result<MonomialModel> {
    let tag = datum.type_tag().ok_or_else(|| Error::NoModel(datum.label()))?;
    let n = tag.n;
    // (dimension, root vectors e_i, weights of basis vectors in the
    // standard Z^k coordinates of the family)
    let (dim, roots, std_weights): (usize, Vec<QMatrix>, Vec<Vec<i64>>) = match tag.family {
        Family::GL | Family::SL | Family::PGL => {
            let roots = (0..n - 1).map(|i| elementary(n, &[(i, i + 1, 1)])).collect();
            (n, roots, (0..n).map(|k| unit(n, k)).collect())
        }
        Family::Sp => {
            let k = n / 2;
            let mut roots: Vec<QMatrix> =
                (0..k - 1).map(|i| elementary(n, &[(i, i + 1, 1), (k + i + 1, k + i, -1)])).collect();
            roots.push(elementary(n, &[(k - 1, 2 * k - 1, 1)]));
            let weights = (0..k).map(|i| unit(k, i)).chain((0..k).map(|i| unit(k, i).iter().map(|v| -v).collect())).collect();
            (n, roots, weights)
        }
        Family::SO => {
            let k = n / 2;
            let mut roots: Vec<QMatrix> =
                (0..k - 1).map(|i| elementary(n, &[(i, i + 1, 1), (k + i + 1, k + i, -1)])).collect();
            let mut weights: Vec<Vec<i64>> =
                (0..k).map(|i| unit(k, i)).chain((0..k).map(|i| unit(k, i).iter().map(|v| -v).collect())).collect();
            if n % 2 == 1 {
                // v_0 at index 2k with B(v_0, v_0) = 1/2, so the lift is
                // integral.
                roots.push(elementary(n, &[(k - 1, 2 * k, 1), (2 * k, 2 * k - 1, -2)]));
                weights.push(vec![0; k]);
            } else {
                roots.push(elementary(n, &[(k - 2, 2 * k - 1, 1), (k - 1, 2 * k - 2, -1)]));
            }
            (n, roots, weights)
        }
    };
    let generators = roots.iter().map(chevalley_lift).collect::<Result<Vec<_>>>()?;

    let (reader, coroot_exponents) = match tag.family {
        Family::GL | Family::Sp | Family::SO => {
            let exps = datum.simple_coroots().iter().map(|c| std_weights.iter().map(|w| dot(w, c)).collect()).collect();
            (TorusReader::Weights(std_weights), exps)
        }
        Family::SL => {
            // Character coordinates dual to the simple-coroot basis.
            let weights: Vec<Vec<i64>> = (0..n)
                .map(|k| (0..n - 1).map(|i| i64::from(k == i) - i64::from(k == i + 1)).collect())
                .collect();
            let exps = datum.simple_coroots().iter().map(|c| weights.iter().map(|w| dot(w, c)).collect()).collect();
            (TorusReader::Weights(weights), exps)
        }
        Family::PGL => {
            let simple: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| (0..n).map(|k| i64::from(k == i) - i64::from(k == i + 1)).collect())
                .collect();
            (TorusReader::ModScalars { projection: simple.clone() }, simple)
        }
    };
    Ok(MonomialModel { dim, generators, reader, coroot_exponents, label: tag.to_string() })
}

/// `α̌_i(c)·n_i` for `c = ±1`.
pub fn lift_rescale(model: &MonomialModel, i: usize, c_sign: i64) -> Result<IntMatrix> {
    match c_sign {
        1 => Ok(model.generators[i].clone()),
        -1 => Ok(model.coroot_at_minus_one(i).mul(&model.generators[i])),
        _ => Err(Error::Precondition("c_sign must be ±1".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_classical;

    #[test]
    fn sl2_generator() {
        let m = chevalley_generators(&build_classical(Family::SL, 2).unwrap()).unwrap();
        assert_eq!(m.generators[0], IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]));
        let sq = m.generators[0].mul(&m.generators[0]);
        assert_eq!(sq, IntMatrix::identity(2).scale(-1));
        assert_eq!(m.read_torus(&sq).unwrap(), vec![1]);
    }

    #[test]
    fn pgl2_square_reads_trivially() {
        let m = chevalley_generators(&build_classical(Family::PGL, 2).unwrap()).unwrap();
        let sq = m.generators[0].mul(&m.generators[0]);
        assert_eq!(m.read_torus(&sq).unwrap(), vec![0]);
    }

    #[test]
    fn rescaled_lift() {
        let m = chevalley_generators(&build_classical(Family::SL, 2).unwrap()).unwrap();
        assert_eq!(lift_rescale(&m, 0, 1).unwrap(), m.generators[0]);
        assert_eq!(lift_rescale(&m, 0, -1).unwrap(), m.generators[0].scale(-1));
        assert!(lift_rescale(&m, 0, 2).is_err());
    }

    #[test]
    fn custom_datum_has_no_model() {
        let d = RootDatum::new(1, vec![vec![2]], vec![vec![1]], None).unwrap();
        assert!(matches!(chevalley_generators(&d), Err(Error::NoModel(_))));
    }
}
