use super::ring::BaseRing;
use super::spectral::{characteristic_polynomial, SpectralAlgebra};
use super::splitting::{transposition, SplittingAlgebra};

/// Compares the characteristic polynomial of multiplication by `f` on the
/// spectral algebra with `∏_i (Y − f(x_i))` expanded in the splitting
/// algebra.
pub fn charpoly_condition<R: BaseRing>(spec: &SpectralAlgebra<R>, alg: &SplittingAlgebra<R>, f: &[R]) -> bool {
    let n = spec.n;
    let lhs = characteristic_polynomial(&spec.multiplication_matrix(f));
    // f(x₁) = Σ f_k x₁^k, then f(x_i) = (1 i)·f(x₁)
    let x1 = alg.x(0);
    let f1 = f.iter().enumerate().fold(vec![R::zero(); alg.dim()], |acc, (k, c)| alg.add(&acc, &alg.scale(c, &alg.pow(&x1, k))));
    // coefficients in the splitting algebra, low degree first
    let mut prod: Vec<Vec<R>> = vec![alg.one()];
    for i in 0..n {
        let root = alg.act_by(&transposition(n, 0, i), &f1);
        let mut next = vec![vec![R::zero(); alg.dim()]; prod.len() + 1];
        for (k, c) in prod.iter().enumerate() {
            next[k + 1] = alg.add(&next[k + 1], c);
            next[k] = alg.sub(&next[k], &alg.mul(&root, c));
        }
        prod = next;
    }
    (0..n).all(|k| prod[k] == alg.scalar(lhs[k].clone())) && prod[n] == alg.one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glncover::ring::QPoly;
    use crate::glncover::spectral_from_coeffs;
    use crate::linalg::rational::q;

    #[test]
    fn quadratic() {
        let spec = spectral_from_coeffs(2, vec![q(2), q(-3)]).unwrap();
        let alg = SplittingAlgebra::new(&spec);
        assert!(charpoly_condition(&spec, &alg, &spec.x()));
        assert!(charpoly_condition(&spec, &alg, &spec.one()));
        assert_eq!(characteristic_polynomial(&spec.multiplication_matrix(&spec.one())), vec![q(1), q(-2)]);
    }

    #[test]
    fn cubic_square() {
        let spec = spectral_from_coeffs(3, vec![q(3), q(-1), q(2)]).unwrap();
        let alg = SplittingAlgebra::new(&spec);
        let x2 = spec.mul(&spec.x(), &spec.x());
        assert!(charpoly_condition(&spec, &alg, &x2));
        // a wrong element of the right shape fails
        let bad = SplittingAlgebra::new(&spectral_from_coeffs(3, vec![q(3), q(-1), q(1)]).unwrap());
        assert!(!charpoly_condition(&spec, &bad, &x2));
    }

    #[test]
    fn polynomial_base() {
        let t = QPoly::t();
        let spec = spectral_from_coeffs(2, vec![t.clone(), QPoly::from_int(1)]).unwrap();
        let alg = SplittingAlgebra::new(&spec);
        let f = vec![t.clone(), QPoly::from_int(2)];
        assert!(charpoly_condition(&spec, &alg, &f));
    }
}
