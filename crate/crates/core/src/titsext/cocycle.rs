use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::MonomialModel;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rootdata::RootSystem;

/// An element of `X_* ⊗ Z/2` in cocharacter coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TorusClass2(pub Vec<u8>);

impl TorusClass2 {
    pub fn zero(rank: usize) -> Self {
        TorusClass2(vec![0; rank])
    }

    /// Reduction mod 2 of an integral cocharacter.
    pub fn from_cocharacter(v: &[i64]) -> Self {
        TorusClass2(v.iter().map(|x| x.rem_euclid(2) as u8).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        TorusClass2(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    /// `w · self`, through the cocharacter matrix of `w` mod 2.
    pub fn act(&self, system: &RootSystem, w: usize) -> Self {
        let v: Vec<i64> = self.0.iter().map(|&b| i64::from(b)).collect();
        Self::from_cocharacter(&system.apply_to_cocharacter(w, &v))
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&b| i64::from(b)).collect()
    }
}

impl fmt::Debug for TorusClass2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Product of the model generators along the stored reduced word of `w`.
pub fn tits_section(model: &MonomialModel, system: &RootSystem, w: usize) -> IntMatrix {
    section_of_word(model, system.element(w).word())
}

pub(crate) fn section_of_word(model: &MonomialModel, word: &[usize]) -> IntMatrix {
    word.iter().fold(IntMatrix::identity(model.dim), |acc, &i| acc.mul(&model.generators[i]))
}

/// Inverse of a signed permutation matrix.
fn monomial_inverse(m: &IntMatrix) -> IntMatrix {
    m.transpose()
}

/// `n_{w1} n_{w2} n_{w1 w2}^{-1}`, read in `X_* ⊗ Z/2`.
pub fn cocycle(model: &MonomialModel, system: &RootSystem, w1: usize, w2: usize) -> Result<TorusClass2> {
    let c = tits_section(model, system, w1)
        .mul(&tits_section(model, system, w2))
        .mul(&monomial_inverse(&tits_section(model, system, system.mul(w1, w2))));
    model.read_torus(&c).map(TorusClass2).map_err(|e| match e {
        Error::Internal(msg) => Error::Internal(format!("cocycle({w1}, {w2}): {msg}")),
        other => other,
    })
}

/// Sum of `(w1 w2 α)^∨` mod 2 over positive `α` with `w2 α < 0` and
/// `w1 w2 α > 0`.
///
/// Each such `α` is a root where the reduced words of `w1` and `w2` cancel
/// against each other; the cancellation contributes the square of a lift,
/// conjugated to the position it ends up in.
pub fn closed_form_cocycle(system: &RootSystem, w1: usize, w2: usize) -> TorusClass2 {
    let w12 = system.mul(w1, w2);
    let mut acc = vec![0i64; system.rank()];
    for (a, root) in system.positive_roots().iter().enumerate() {
        let r2 = system.apply_to_root(w2, root);
        let (_, pos2) = system.root_index(&r2).expect("W permutes roots");
        if pos2 {
            continue;
        }
        let r12 = system.apply_to_root(w12, root);
        let (_, pos12) = system.root_index(&r12).expect("W permutes roots");
        if !pos12 {
            continue;
        }
        let moved = system.apply_to_cocharacter(w12, &system.coroots()[a]);
        for (x, y) in acc.iter_mut().zip(&moved) {
            *x += y;
        }
    }
    TorusClass2::from_cocharacter(&acc)
}

/// The literal form: `α^∨` itself rather than its translate.
#[cfg(test)]
fn untranslated_closed_form(system: &RootSystem, w1: usize, w2: usize) -> TorusClass2 {
    let w12 = system.mul(w1, w2);
    let mut acc = vec![0i64; system.rank()];
    for (a, root) in system.positive_roots().iter().enumerate() {
        let neg2 = !system.root_index(&system.apply_to_root(w2, root)).unwrap().1;
        let pos12 = system.root_index(&system.apply_to_root(w12, root)).unwrap().1;
        if neg2 && pos12 {
            for (x, y) in acc.iter_mut().zip(&system.coroots()[a]) {
                *x += y;
            }
        }
    }
    TorusClass2::from_cocharacter(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};
    use crate::titsext::chevalley_generators;

    fn setups() -> Vec<(Family, usize)> {
        use Family::*;
        vec![
            (SL, 2), (SL, 3), (SL, 4), (GL, 2), (GL, 3), (PGL, 2), (PGL, 3), (PGL, 4),
            (Sp, 4), (Sp, 6), (SO, 4), (SO, 5), (SO, 6), (SO, 7),
        ]
    }

    #[test]
    fn squares_read_as_coroots() {
        for (f, n) in setups() {
            let d = build_classical(f, n).unwrap();
            let m = chevalley_generators(&d).unwrap();
            for i in 0..d.semisimple_rank() {
                let sq = m.generators[i].mul(&m.generators[i]);
                assert_eq!(sq, m.coroot_at_minus_one(i), "{f}({n}) generator {i}");
                assert_eq!(
                    m.read_torus(&sq).unwrap(),
                    TorusClass2::from_cocharacter(&d.simple_coroots()[i]).0,
                    "{f}({n}) generator {i}"
                );
            }
        }
    }

    #[test]
    fn conjugation_matches_reflections() {
        // n_i t n_i^{-1} for t = diag of a generic cocharacter evaluated
        // through exponents; compare exponent vectors.
        for (f, n) in setups() {
            let d = build_classical(f, n).unwrap();
            let sys = RootSystem::new(&d).unwrap();
            let m = chevalley_generators(&d).unwrap();
            let crate::titsext::TorusReader::Weights(weights) = &m.reader else { continue };
            for i in 0..d.semisimple_rank() {
                let g = &m.generators[i];
                for v in (0..d.rank()).map(|j| (0..d.rank()).map(|k| i64::from(k == j)).collect::<Vec<_>>()) {
                    let exps: Vec<i64> = weights.iter().map(|w| w.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
                    let image = sys.apply_to_cocharacter(sys.simple_reflection(i), &v);
                    let want: Vec<i64> = weights.iter().map(|w| w.iter().zip(&image).map(|(a, b)| a * b).sum()).collect();
                    // (g t g^{-1}) has exponent exps[σ^{-1}(r)] at position r where g e_s = ± e_σ(s).
                    let mut got = vec![0; m.dim];
                    for s in 0..m.dim {
                        let r = (0..m.dim).find(|&r| g.get(r, s) != 0).unwrap();
                        got[r] = exps[s];
                    }
                    assert_eq!(got, want, "{f}({n}) s_{i}");
                }
            }
        }
    }

    #[test]
    fn reduced_word_independence() {
        for (f, n) in [(Family::SL, 3), (Family::SL, 4), (Family::Sp, 6), (Family::SO, 7), (Family::PGL, 4)] {
            let d = build_classical(f, n).unwrap();
            let sys = RootSystem::new(&d).unwrap();
            let m = chevalley_generators(&d).unwrap();
            // enumerate all words of length <= 4 and keep the reduced ones
            let r = d.semisimple_rank();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..4 {
                let next: Vec<Vec<usize>> = words
                    .iter()
                    .filter(|w| w.len() == words.last().unwrap().len())
                    .flat_map(|w| (0..r).map(move |i| [w.clone(), vec![i]].concat()))
                    .collect();
                words.extend(next);
            }
            for w in words {
                let e = sys.element_from_word(&w);
                if sys.element(e).length() != w.len() {
                    continue;
                }
                assert_eq!(section_of_word(&m, &w), tits_section(&m, &sys, e), "{f}({n}) word {w:?}");
            }
        }
    }

    #[test]
    fn two_cocycle_identity() {
        for (f, n) in [(Family::SL, 3), (Family::SL, 4), (Family::Sp, 4), (Family::SO, 5), (Family::PGL, 3), (Family::GL, 3)] {
            let d = build_classical(f, n).unwrap();
            let sys = RootSystem::new(&d).unwrap();
            let m = chevalley_generators(&d).unwrap();
            let mg = sys.order();
            let table: Vec<Vec<TorusClass2>> =
                (0..mg).map(|a| (0..mg).map(|b| cocycle(&m, &sys, a, b).unwrap()).collect()).collect();
            for a in 0..mg {
                for b in 0..mg {
                    for c in 0..mg {
                        let lhs = table[b][c].act(&sys, a).add(&table[sys.mul(a, b)][c]);
                        let rhs = table[a][sys.mul(b, c)].add(&table[a][b]);
                        assert_eq!(lhs, rhs, "{f}({n}) ({a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_cocycle_values() {
        let d = build_classical(Family::SL, 2).unwrap();
        let sys = RootSystem::new(&d).unwrap();
        let m = chevalley_generators(&d).unwrap();
        assert_eq!(cocycle(&m, &sys, 1, 1).unwrap(), TorusClass2(vec![1]));
        assert_eq!(closed_form_cocycle(&sys, 1, 1), TorusClass2(vec![1]));
        assert!(cocycle(&m, &sys, 0, 1).unwrap().is_zero());
    }

    #[test]
    fn length_additive_pairs_vanish() {
        let d = build_classical(Family::Sp, 6).unwrap();
        let sys = RootSystem::new(&d).unwrap();
        let m = chevalley_generators(&d).unwrap();
        for a in 0..sys.order() {
            for b in 0..sys.order() {
                if sys.element(sys.mul(a, b)).length() == sys.element(a).length() + sys.element(b).length() {
                    assert!(cocycle(&m, &sys, a, b).unwrap().is_zero());
                    assert!(closed_form_cocycle(&sys, a, b).is_zero());
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_models() {
        for (f, n) in setups() {
            let d = build_classical(f, n).unwrap();
            let sys = RootSystem::new(&d).unwrap();
            let m = chevalley_generators(&d).unwrap();
            for a in 0..sys.order() {
                for b in 0..sys.order() {
                    assert_eq!(closed_form_cocycle(&sys, a, b), cocycle(&m, &sys, a, b).unwrap(), "{f}({n}) ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn untranslated_coroot_sum_is_not_the_cocycle() {
        let d = build_classical(Family::SL, 3).unwrap();
        let sys = RootSystem::new(&d).unwrap();
        let m = chevalley_generators(&d).unwrap();
        let bad = (0..sys.order())
            .flat_map(|a| (0..sys.order()).map(move |b| (a, b)))
            .filter(|&(a, b)| untranslated_closed_form(&sys, a, b) != cocycle(&m, &sys, a, b).unwrap())
            .count();
        assert_eq!(bad, 10);
    }
}
