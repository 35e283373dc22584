use std::collections::{BTreeMap, HashMap};

use super::ring::BaseRing;
use super::spectral::SpectralAlgebra;

/// Polynomials in `x₁, …, x_n` as exponent vector → coefficient.
pub type MPoly<R> = BTreeMap<Vec<usize>, R>;

/// All permutations of `0..n` in lexicographic order (identity first).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    loop {
        let mut p = out.last().unwrap().clone();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { return out };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p);
    }
}

/// `(σ∘τ)(i) = σ(τ(i))`
pub fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t]).collect()
}

pub fn transposition(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(i, j);
    p
}

/// The universal algebra of orderings of the roots of a monic polynomial:
/// `R[x₁, …, x_n]` modulo the relations making `∏(Y − x_i)` the given
/// polynomial, in the monomial basis `x^e` with `e_k ≤ n − 1 − k`.
#[derive(Clone, Debug)]
pub struct SplittingAlgebra<R> {
    pub n: usize,
    pub coeffs: Vec<R>,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// `rules[k]` holds the non-leading coefficients of `p_{k+1}(Y)`; the
    /// relation is `x_k^{n−k} = −Σ_j rules[k][j] x_k^j`.
    rules: Vec<Vec<MPoly<R>>>,
    table: Vec<Vec<R>>,
    perms: Vec<Vec<usize>>,
    /// `action[p][b]`: coordinates of `σ_p(basis b)`.
    action: Vec<Vec<Vec<R>>>,
}

fn mpoly_add<R: BaseRing>(p: &mut MPoly<R>, e: Vec<usize>, c: R) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(e);
    match entry {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let v = o.get().add(&c);
            if v.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = v;
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

struct Reducer<'a, R> {
    n: usize,
    rules: &'a [Vec<MPoly<R>>],
    index: &'a HashMap<Vec<usize>, usize>,
    dim: usize,
    memo: HashMap<Vec<usize>, Vec<R>>,
}

impl<R: BaseRing> Reducer<'_, R> {
    fn monomial(&mut self, e: &[usize]) -> Vec<R> {
        if let Some(&i) = self.index.get(e) {
            let mut v = vec![R::zero(); self.dim];
            v[i] = R::one();
            return v;
        }
        if let Some(v) = self.memo.get(e) {
            return v.clone();
        }
        // largest variable above its bound; rewriting it only introduces
        // smaller variables
        let k = (0..self.n).rev().find(|&k| e[k] > self.n - 1 - k).expect("monomial outside the basis");
        let d = self.n - k;
        let mut rest = e.to_vec();
        rest[k] -= d;
        let mut out = vec![R::zero(); self.dim];
        for (j, c) in self.rules[k].iter().enumerate() {
            for (m, coef) in c {
                let mut f: Vec<usize> = rest.iter().zip(m).map(|(a, b)| a + b).collect();
                f[k] += j;
                let sub = self.monomial(&f);
                for (o, s) in out.iter_mut().zip(&sub) {
                    *o = o.sub(&coef.mul(s));
                }
            }
        }
        self.memo.insert(e.to_vec(), out.clone());
        out
    }

    fn poly(&mut self, p: &MPoly<R>) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim];
        for (e, c) in p {
            let v = self.monomial(e);
            for (o, s) in out.iter_mut().zip(&v) {
                *o = o.add(&c.mul(s));
            }
        }
        out
    }
}

impl<R: BaseRing> SplittingAlgebra<R> {
    pub fn new(spec: &SpectralAlgebra<R>) -> Self {
        let n = spec.n;
        let mut basis: Vec<Vec<usize>> = vec![vec![]];
        for k in 0..n {
            basis = basis
                .into_iter()
                .flat_map(|prefix| {
                    (0..n - k).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();

        // p_1 = the spectral polynomial; p_{k+1} = (p_k(Y) − p_k(x_k)) / (Y − x_k)
        let mut rules: Vec<Vec<MPoly<R>>> = Vec::with_capacity(n);
        let mut current: Vec<MPoly<R>> = spec
            .coeffs
            .iter()
            .map(|c| {
                let mut p = MPoly::new();
                mpoly_add(&mut p, vec![0; n], c.clone());
                p
            })
            .collect();
        let unit = |k: usize| {
            let mut e = vec![0; n];
            e[k] = 1;
            e
        };
        for k in 0..n {
            rules.push(current.clone());
            let deg = current.len();
            if deg == 1 {
                break;
            }
            // synthetic division of Y^deg + Σ current[j] Y^j by (Y − x_k)
            let mut quotient: Vec<MPoly<R>> = vec![MPoly::new(); deg];
            let mut one = MPoly::new();
            mpoly_add(&mut one, vec![0; n], R::one());
            quotient[deg - 1] = one;
            for j in (1..deg).rev() {
                let mut q = current[j].clone();
                for (e, c) in &quotient[j] {
                    let f: Vec<usize> = e.iter().zip(&unit(k)).map(|(a, b)| a + b).collect();
                    mpoly_add(&mut q, f, c.clone());
                }
                quotient[j - 1] = q;
            }
            current = quotient[..deg - 1].to_vec();
        }

        let dim = basis.len();
        let mut reducer = Reducer { n, rules: &rules, index: &index, dim, memo: HashMap::new() };
        let mut table = Vec::with_capacity(dim * dim);
        for a in &basis {
            for b in &basis {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                table.push(reducer.monomial(&e));
            }
        }
        let perms = permutations(n);
        let action = perms
            .iter()
            .map(|p| {
                basis
                    .iter()
                    .map(|e| {
                        let mut f = vec![0; n];
                        for (i, &ei) in e.iter().enumerate() {
                            f[p[i]] += ei;
                        }
                        reducer.monomial(&f)
                    })
                    .collect()
            })
            .collect();
        drop(reducer);
        SplittingAlgebra { n, coeffs: spec.coeffs.clone(), basis, index, rules, table, perms, action }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn perm_index(&self, p: &[usize]) -> usize {
        self.perms.iter().position(|q| q == p).expect("permutation of the right size")
    }

    /// Structure constants, row-major over basis pairs.
    pub fn multiplication_table(&self) -> &[Vec<R>] {
        &self.table
    }

    /// Coordinates of a polynomial in the monomial basis.
    pub fn normal_form(&self, p: &MPoly<R>) -> Vec<R> {
        let mut reducer = Reducer { n: self.n, rules: &self.rules, index: &self.index, dim: self.dim(), memo: HashMap::new() };
        reducer.poly(p)
    }

    pub fn one(&self) -> Vec<R> {
        self.scalar(R::one())
    }

    pub fn scalar(&self, c: R) -> Vec<R> {
        let mut v = vec![R::zero(); self.dim()];
        v[0] = c;
        v
    }

    /// The root `x_k` (0-based).
    pub fn x(&self, k: usize) -> Vec<R> {
        let mut e = vec![0; self.n];
        e[k] = 1;
        self.normal_form(&MPoly::from([(e, R::one())]))
    }

    pub fn add(&self, a: &[R], b: &[R]) -> Vec<R> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &[R], b: &[R]) -> Vec<R> {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn scale(&self, c: &R, a: &[R]) -> Vec<R> {
        a.iter().map(|x| c.mul(x)).collect()
    }

    pub fn mul(&self, a: &[R], b: &[R]) -> Vec<R> {
        let d = self.dim();
        let mut out = vec![R::zero(); d];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = ai.mul(bj);
                for (o, t) in out.iter_mut().zip(&self.table[i * d + j]) {
                    if !t.is_zero() {
                        *o = o.add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[R], k: usize) -> Vec<R> {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `σ(a)` for the permutation with index `p`.
    pub fn act(&self, p: usize, a: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim()];
        for (b, ab) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (o, t) in out.iter_mut().zip(&self.action[p][b]) {
                *o = o.add(&ab.mul(t));
            }
        }
        out
    }

    /// `σ(a)` for an explicit permutation.
    pub fn act_by(&self, sigma: &[usize], a: &[R]) -> Vec<R> {
        self.act(self.perm_index(sigma), a)
    }

    /// `e_i(x₁, …, x_n)` in normal form, for `i = 1..=n`.
    pub fn elementary_symmetric(&self, i: usize) -> Vec<R> {
        let mut p = MPoly::new();
        for subset in 0u32..(1 << self.n) {
            if subset.count_ones() as usize == i {
                let e: Vec<usize> = (0..self.n).map(|k| ((subset >> k) & 1) as usize).collect();
                mpoly_add(&mut p, e, R::one());
            }
        }
        self.normal_form(&p)
    }

    /// `e_i(x) = (−1)^i a_{n−i}` for every `i`.
    pub fn symmetric_identities_hold(&self) -> bool {
        (1..=self.n).all(|i| {
            let a = &self.coeffs[self.n - i];
            let want = if i % 2 == 0 { a.clone() } else { a.neg() };
            self.elementary_symmetric(i) == self.scalar(want)
        })
    }

    /// Maps every coefficient through a ring homomorphism.
    pub fn specialize<S: BaseRing>(&self, f: impl Fn(&R) -> S) -> SplittingAlgebra<S> {
        let spec = SpectralAlgebra { n: self.n, coeffs: self.coeffs.iter().map(&f).collect() };
        SplittingAlgebra::new(&spec)
    }

    /// The element as a polynomial in the roots.
    pub fn as_poly(&self, a: &[R]) -> MPoly<R> {
        let mut p = MPoly::new();
        for (e, c) in self.basis.iter().zip(a) {
            mpoly_add(&mut p, e.clone(), c.clone());
        }
        p
    }
}

/// `splitting_algebra` in free-function form.
pub fn splitting_algebra<R: BaseRing>(spec: &SpectralAlgebra<R>) -> SplittingAlgebra<R> {
    SplittingAlgebra::new(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glncover::ring::QPoly;
    use crate::glncover::spectral_from_coeffs;
    use crate::linalg::rational::{q, Q};
    use proptest::prelude::*;

    fn alg(coeffs: &[i64]) -> SplittingAlgebra<Q> {
        SplittingAlgebra::new(&spectral_from_coeffs(coeffs.len(), coeffs.iter().map(|&c| q(c)).collect()).unwrap())
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[0], vec![0, 1, 2]);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn quadratic_example() {
        let a = alg(&[2, -3]);
        assert_eq!(a.dim(), 2);
        let x1 = a.x(0);
        assert_eq!(a.mul(&x1, &x1), vec![q(-2), q(3)]);
        assert_eq!(a.act_by(&[1, 0], &x1), vec![q(3), q(-1)]);
        assert_eq!(a.elementary_symmetric(2), a.scalar(q(2)));
    }

    #[test]
    fn nilpotent_examples() {
        let a = alg(&[0, 0]);
        assert_eq!(a.act_by(&[1, 0], &a.x(0)), vec![q(0), q(-1)]);
        let b = alg(&[0, 0, 0]);
        assert_eq!(b.dim(), 6);
        for k in 0..3 {
            assert!(b.pow(&b.x(k), 5).iter().all(|c| c == &q(0)));
        }
    }

    #[test]
    fn ranks_and_identities() {
        for coeffs in [vec![1], vec![2, -3], vec![1, 0, -2], vec![3, 1, -1, 2]] {
            let a = alg(&coeffs);
            assert_eq!(a.dim(), (1..=coeffs.len()).product::<usize>());
            assert!(a.symmetric_identities_hold());
        }
    }

    #[test]
    fn polynomial_base_specializes() {
        let t = QPoly::t();
        let spec = spectral_from_coeffs(3, vec![t.clone(), QPoly::from_int(-1), t.mul(&t)]).unwrap();
        let a = SplittingAlgebra::new(&spec);
        assert!(a.symmetric_identities_hold());
        for c in [-2i64, 0, 3] {
            let at = q(c);
            let special = a.specialize(|p| p.eval(&at));
            let direct = alg(&[c, -1, c * c]);
            assert_eq!(special.multiplication_table(), direct.multiplication_table());
            let x = a.x(2);
            let xs: Vec<Q> = a.mul(&x, &x).iter().map(|p| p.eval(&at)).collect();
            assert_eq!(xs, direct.mul(&direct.x(2), &direct.x(2)));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn action_respects_products(
            coeffs in proptest::collection::vec(-4i64..5, 3),
            u in proptest::collection::vec(-3i64..4, 6),
            v in proptest::collection::vec(-3i64..4, 6),
            p in 0usize..6,
        ) {
            let a = alg(&coeffs);
            let u: Vec<Q> = u.into_iter().map(q).collect();
            let v: Vec<Q> = v.into_iter().map(q).collect();
            prop_assert_eq!(a.act(p, &a.mul(&u, &v)), a.mul(&a.act(p, &u), &a.act(p, &v)));
        }
    }
}
