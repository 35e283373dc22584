use std::collections::BTreeMap;

use serde::Serialize;

use super::RootSystem;
use crate::error::{Error, Result};

/// A formal sum `Σ v_α·[D^α]` over positive roots, where each weight `v_α`
/// is a cocharacter. Keys are positive-root indices of the ambient system.
///
/// A term indexed by a negative root `−β` is filed under `β` with its vector
/// unchanged: `D^{−β} = D^β` and the coroot of `−β` is `−β̌`, so the sign is
/// already carried by the vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorootDivisor {
    terms: BTreeMap<usize, Vec<i64>>,
}

impl CorootDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `v·[D^root]` where `root` may be positive or negative.
    pub fn add_term(&mut self, system: &RootSystem, root: &[i64], v: &[i64]) {
        let (k, _) = system.root_index(root).expect("divisor keys must be roots");
        self.add_indexed(k, v);
    }

    pub fn add_indexed(&mut self, k: usize, v: &[i64]) {
        let entry = self.terms.entry(k).or_insert_with(|| vec![0; v.len()]);
        for (e, x) in entry.iter_mut().zip(v) {
            *e += x;
        }
        if entry.iter().all(|e| *e == 0) {
            self.terms.remove(&k);
        }
    }

    pub fn get(&self, k: usize) -> Option<&[i64]> {
        self.terms.get(&k).map(Vec::as_slice)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &[i64])> {
        self.terms.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum(&self, other: &CorootDivisor) -> CorootDivisor {
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_indexed(k, v);
        }
        out
    }
}

/// `Σ_{α ∈ Inv(w)} α̌·[α]`.
pub fn ram_divisor(system: &RootSystem, w: usize) -> CorootDivisor {
    let mut d = CorootDivisor::new();
    for k in system.inversion_set(w) {
        d.add_indexed(k, &system.coroots()[k]);
    }
    d
}

/// Pullback along `w` combined with conjugation of the torus: each term
/// `α ↦ v` becomes `w⁻¹α ↦ w⁻¹v`.
pub fn twisted_pullback(system: &RootSystem, w: usize, d: &CorootDivisor) -> CorootDivisor {
    let winv = system.inverse(w);
    let mut out = CorootDivisor::new();
    for (k, v) in d.terms() {
        let root = system.apply_to_root(winv, &system.positive_roots()[k]);
        let vec = system.apply_to_cocharacter(winv, v);
        out.add_term(system, &root, &vec);
    }
    out
}

/// `ram(w1·w2) = w2^*(ram(w1)) + ram(w2)`.
pub fn check_ram_cocycle(system: &RootSystem, w1: usize, w2: usize) -> bool {
    let lhs = ram_divisor(system, system.mul(w1, w2));
    let rhs = twisted_pullback(system, w2, &ram_divisor(system, w1)).sum(&ram_divisor(system, w2));
    lhs == rhs
}

/// For `w(α_i) = α_j`, checks `s_i^*(ram(w)) = ram(w)`.
pub fn rtriviality_shadow(system: &RootSystem, w: usize, i: usize, j: usize) -> Result<bool> {
    let simple = system.datum().simple_roots();
    if i >= simple.len() || j >= simple.len() {
        return Err(Error::Precondition("simple root index out of range".into()));
    }
    if system.apply_to_root(w, &simple[i]) != simple[j] {
        return Err(Error::Precondition(format!("w does not map alpha_{i} to alpha_{j}")));
    }
    let d = ram_divisor(system, w);
    Ok(twisted_pullback(system, system.simple_reflection(i), &d) == d)
}

/// Outcome of scanning the cocycle identity over pairs and the shadow check
/// over admissible triples `(w, i, j)` with `w(α_i) = α_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamScan {
    pub datum: String,
    pub pairs: usize,
    pub failing_pairs: usize,
    pub first_failure: Option<(usize, usize)>,
    pub admissible_triples: usize,
    pub shadow_failures: usize,
}

impl RamScan {
    pub fn passed(&self) -> bool {
        self.failing_pairs == 0 && self.shadow_failures == 0
    }
}

/// Scans all pairs and triples drawn from `elements`.
pub fn ram_scan(system: &RootSystem, elements: &[usize]) -> Result<RamScan> {
    let mut scan = RamScan {
        datum: system.datum().label(),
        pairs: elements.len() * elements.len(),
        failing_pairs: 0,
        first_failure: None,
        admissible_triples: 0,
        shadow_failures: 0,
    };
    for &a in elements {
        for &b in elements {
            if !check_ram_cocycle(system, a, b) {
                scan.failing_pairs += 1;
                scan.first_failure.get_or_insert((a, b));
            }
        }
    }
    let simple = system.datum().simple_roots();
    for &w in elements {
        for (i, ai) in simple.iter().enumerate() {
            let image = system.apply_to_root(w, ai);
            if let Some(j) = simple.iter().position(|aj| *aj == image) {
                scan.admissible_triples += 1;
                if !rtriviality_shadow(system, w, i, j)? {
                    scan.shadow_failures += 1;
                }
            }
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::new(&build_classical(f, n).unwrap()).unwrap()
    }

    #[test]
    fn simple_reflection_divisor() {
        let s = sys(Family::SL, 3);
        for i in 0..2 {
            let si = s.simple_reflection(i);
            let d = ram_divisor(&s, si);
            let k = s.simple_root_index(i);
            assert_eq!(d.terms().collect::<Vec<_>>(), vec![(k, s.datum().simple_coroots()[i].as_slice())]);
        }
        assert!(ram_divisor(&s, s.identity()).is_zero());
        let w0 = ram_divisor(&s, s.longest_element());
        for k in 0..3 {
            assert_eq!(w0.get(k), Some(s.coroots()[k].as_slice()));
        }
    }

    #[test]
    fn pullback_by_identity_and_reflection() {
        let s = sys(Family::SL, 2);
        let d = ram_divisor(&s, 1);
        assert_eq!(twisted_pullback(&s, s.identity(), &d), d);
        // s^*(α̌·[α]) = (−α̌)·[α].
        let pulled = twisted_pullback(&s, 1, &d);
        assert_eq!(pulled.get(0), Some(&[-1][..]));
        assert!(pulled.sum(&d).is_zero());
    }

    #[test]
    fn pullback_moves_keys_in_sl3() {
        let s = sys(Family::SL, 3);
        let s1 = s.simple_reflection(0);
        let mut d = CorootDivisor::new();
        d.add_term(&s, &s.datum().simple_roots()[1], &s.datum().simple_coroots()[1]);
        let pulled = twisted_pullback(&s, s1, &d);
        let alpha12: Vec<i64> = s.datum().simple_roots()[0]
            .iter()
            .zip(&s.datum().simple_roots()[1])
            .map(|(a, b)| a + b)
            .collect();
        let (k, _) = s.root_index(&alpha12).unwrap();
        let coroot = s.apply_to_cocharacter(s1, &s.datum().simple_coroots()[1]);
        assert_eq!(pulled.terms().collect::<Vec<_>>(), vec![(k, coroot.as_slice())]);
    }

    #[test]
    fn cocycle_on_sl2_and_sl3() {
        let s2 = sys(Family::SL, 2);
        assert!(check_ram_cocycle(&s2, 1, 1));
        let s3 = sys(Family::SL, 3);
        for a in 0..6 {
            for b in 0..6 {
                assert!(check_ram_cocycle(&s3, a, b));
            }
        }
    }

    #[test]
    fn rtriviality_precondition() {
        let s = sys(Family::SL, 3);
        assert!(rtriviality_shadow(&s, s.identity(), 0, 0).unwrap());
        assert!(rtriviality_shadow(&s, s.identity(), 0, 1).is_err());
    }
}
