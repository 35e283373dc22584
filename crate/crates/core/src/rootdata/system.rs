use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::One;

use super::{dot, RootDatum};
use crate::error::{Error, Result};
use crate::linalg::rational::{q, QMatrix};
use crate::linalg::IntMatrix;

/// Default cap on Weyl group enumeration.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 1_000_000;

/// An element of the Weyl group. The cocharacter matrix is the identity of
/// the element; the word is one reduced expression witnessing it.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: IntMatrix,
    root_matrix: IntMatrix,
    word: Vec<usize>,
}

impl WeylElement {
    /// Action on the cocharacter lattice.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Action on the character lattice (contragredient of `matrix`).
    pub fn root_matrix(&self) -> &IntMatrix {
        &self.root_matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

/// A root datum together with its positive roots and enumerated Weyl group.
#[derive(Debug)]
pub struct RootSystem {
    datum: RootDatum,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    root_lookup: HashMap<Vec<i64>, (usize, bool)>,
    elements: Vec<WeylElement>,
    lookup: HashMap<IntMatrix, usize>,
    table: OnceLock<(Vec<usize>, Vec<usize>)>,
}

/// `s_i` on cocharacters: `λ ↦ λ − <α_i, λ> α̌_i`.
fn coroot_reflection(datum: &RootDatum, i: usize) -> IntMatrix {
    let r = datum.rank();
    IntMatrix::identity(r).sub(&IntMatrix::outer(&datum.simple_coroots()[i], &datum.simple_roots()[i]))
}

/// `s_i` on characters: `μ ↦ μ − <μ, α̌_i> α_i`.
fn root_reflection(datum: &RootDatum, i: usize) -> IntMatrix {
    let r = datum.rank();
    IntMatrix::identity(r).sub(&IntMatrix::outer(&datum.simple_roots()[i], &datum.simple_coroots()[i]))
}

fn height_functional(datum: &RootDatum) -> Result<Vec<i64>> {
    let rows = datum.simple_roots().iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    let a = QMatrix::from_rows(rows);
    let ones = vec![q(1); datum.semisimple_rank()];
    let h = if datum.semisimple_rank() == 0 {
        vec![q(0); datum.rank()]
    } else {
        a.solve(&ones).ok_or_else(|| Error::InvalidDatum("simple roots are linearly dependent".into()))?
    };
    let den = h.iter().fold(num_bigint::BigInt::one(), |l, x| l.lcm(x.denom()));
    h.iter()
        .map(|x| {
            let v = x * num_rational::BigRational::from_integer(den.clone());
            i64::try_from(v.to_integer()).map_err(|_| Error::Overflow("height functional"))
        })
        .collect()
}

impl RootSystem {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        Self::with_bound(datum, super::DEFAULT_MAX_GROUP_ORDER)
    }

    pub fn with_bound(datum: &RootDatum, max_order: usize) -> Result<Self> {
        let height = height_functional(datum)?;
        let s = datum.semisimple_rank();
        let refl: Vec<IntMatrix> = (0..s).map(|i| coroot_reflection(datum, i)).collect();
        let root_refl: Vec<IntMatrix> = (0..s).map(|i| root_reflection(datum, i)).collect();

        // Orbit of (simple root, simple coroot) pairs.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..s {
            let pair = (datum.simple_roots()[i].clone(), datum.simple_coroots()[i].clone());
            seen.insert(pair.0.clone(), pair.1.clone());
            queue.push_back(pair);
        }
        while let Some((root, coroot)) = queue.pop_front() {
            for i in 0..s {
                let r = root_refl[i].mul_vec(&root);
                if !seen.contains_key(&r) {
                    if seen.len() >= max_order {
                        return Err(Error::NotFiniteType(max_order));
                    }
                    let c = refl[i].mul_vec(&coroot);
                    seen.insert(r.clone(), c.clone());
                    queue.push_back((r, c));
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>)> =
            seen.into_iter().filter(|(r, _)| dot(r, &height) > 0).collect();
        positive.sort_by(|a, b| dot(&a.0, &height).cmp(&dot(&b.0, &height)).then_with(|| b.0.cmp(&a.0)));
        let roots: Vec<Vec<i64>> = positive.iter().map(|p| p.0.clone()).collect();
        let coroots: Vec<Vec<i64>> = positive.iter().map(|p| p.1.clone()).collect();
        let mut root_lookup = HashMap::new();
        for (k, r) in roots.iter().enumerate() {
            root_lookup.insert(r.clone(), (k, true));
            root_lookup.insert(r.iter().map(|v| -v).collect(), (k, false));
        }

        // Breadth-first enumeration gives shortest, hence reduced, words.
        let r = datum.rank();
        let mut elements = vec![WeylElement {
            matrix: IntMatrix::identity(r),
            root_matrix: IntMatrix::identity(r),
            word: Vec::new(),
        }];
        let mut lookup = HashMap::from([(IntMatrix::identity(r), 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for i in 0..s {
                let m = elements[head].matrix.mul(&refl[i]);
                if lookup.contains_key(&m) {
                    continue;
                }
                if elements.len() >= max_order {
                    return Err(Error::NotFiniteType(max_order));
                }
                let rm = elements[head].root_matrix.mul(&root_refl[i]);
                let mut word = elements[head].word.clone();
                word.push(i);
                lookup.insert(m.clone(), elements.len());
                elements.push(WeylElement { matrix: m, root_matrix: rm, word });
            }
            head += 1;
        }

        Ok(Self {
            datum: datum.clone(),
            roots,
            coroots,
            root_lookup,
            elements,
            lookup,
            table: OnceLock::new(),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Positive roots, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Coroots of the positive roots, in the same order.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Index of `±root` among the positive roots and whether the sign is `+`.
    pub fn root_index(&self, root: &[i64]) -> Option<(usize, bool)> {
        self.root_lookup.get(root).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.root_index(&self.datum.simple_roots()[i]).expect("simple roots are roots").0
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, matrix: &IntMatrix) -> Option<usize> {
        self.lookup.get(matrix).copied()
    }

    /// Index of the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.index_of(&coroot_reflection(&self.datum, i)).expect("simple reflections are enumerated")
    }

    fn tables(&self) -> &(Vec<usize>, Vec<usize>) {
        self.table.get_or_init(|| {
            let m = self.order();
            let mut mul = vec![0; m * m];
            let mut inv = vec![0; m];
            for a in 0..m {
                for b in 0..m {
                    let p = self.elements[a].matrix.mul(&self.elements[b].matrix);
                    let c = self.lookup[&p];
                    mul[a * m + b] = c;
                    if c == 0 {
                        inv[a] = b;
                    }
                }
            }
            (mul, inv)
        })
    }

    /// Full multiplication table, row-major, `mul[a * |W| + b] = a·b`.
    pub fn multiplication_table(&self) -> &[usize] {
        &self.tables().0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.tables().0[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.tables().1[a]
    }

    pub fn apply_to_root(&self, w: usize, root: &[i64]) -> Vec<i64> {
        self.elements[w].root_matrix.mul_vec(root)
    }

    pub fn apply_to_cocharacter(&self, w: usize, v: &[i64]) -> Vec<i64> {
        self.elements[w].matrix.mul_vec(v)
    }

    /// `{α ∈ Δ⁺ : wα ∈ −Δ⁺}` as indices into [`Self::positive_roots`].
    pub fn inversion_set(&self, w: usize) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&k| {
                let image = self.apply_to_root(w, &self.roots[k]);
                !self.root_index(&image).expect("W permutes roots").1
            })
            .collect()
    }

    pub fn longest_element(&self) -> usize {
        (0..self.order()).max_by_key(|&w| self.elements[w].length()).unwrap_or(0)
    }

    /// Evaluates a word in simple reflections.
    pub fn element_from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity(), |acc, &i| self.mul(acc, self.simple_reflection(i)))
    }

    /// Cochar matrices of W are unimodular; this also checks that the
    /// root action is the contragredient of the cocharacter action.
    pub fn check_contragredient(&self) -> bool {
        self.elements.iter().all(|e| e.root_matrix.transpose().mul(&e.matrix).is_identity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::new(&build_classical(f, n).unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(sys(Family::SL, 2).positive_roots().len(), 1);
        assert_eq!(sys(Family::SL, 3).positive_roots().len(), 3);
        assert_eq!(sys(Family::Sp, 4).positive_roots().len(), 4);
        assert_eq!(sys(Family::GL, 3).positive_roots().len(), 3);
        assert_eq!(sys(Family::SO, 7).positive_roots().len(), 9);
        assert_eq!(sys(Family::SO, 8).positive_roots().len(), 12);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(sys(Family::SL, 2).order(), 2);
        assert_eq!(sys(Family::SL, 3).order(), 6);
        assert_eq!(sys(Family::SO, 5).order(), 8);
        assert_eq!(sys(Family::GL, 3).order(), 6);
        assert_eq!(sys(Family::Sp, 6).order(), 48);
        assert_eq!(sys(Family::SO, 8).order(), 192);
    }

    #[test]
    fn inversion_sets() {
        let s = sys(Family::SL, 3);
        assert!(s.inversion_set(s.identity()).is_empty());
        for i in 0..2 {
            let si = s.simple_reflection(i);
            assert_eq!(s.inversion_set(si), vec![s.simple_root_index(i)]);
        }
        assert_eq!(s.inversion_set(s.longest_element()).len(), 3);
        for w in 0..s.order() {
            assert_eq!(s.inversion_set(w).len(), s.element(w).length());
        }
        assert!(s.check_contragredient());
    }

    #[test]
    fn bound_is_enforced() {
        let d = build_classical(Family::SL, 4).unwrap();
        assert_eq!(RootSystem::with_bound(&d, 10).unwrap_err(), Error::NotFiniteType(10));
    }
}
