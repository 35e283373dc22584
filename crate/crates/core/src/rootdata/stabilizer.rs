use std::collections::BTreeSet;

use super::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, QMatrix};

fn closed_subset(system: &RootSystem, subgroup: &[usize]) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = subgroup.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::Precondition("empty subgroup".into()));
    }
    for &a in &set {
        for &b in &set {
            if !set.contains(&system.mul(a, b)) {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(set)
}

fn generated(system: &RootSystem, gens: &[usize]) -> BTreeSet<usize> {
    let mut set = BTreeSet::from([system.identity()]);
    let mut frontier = vec![system.identity()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = system.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// A reflection fixes a hyperplane pointwise: an involution whose `M − I`
/// has rank one.
fn is_reflection(m: &IntMatrix) -> bool {
    if m.is_identity() || !m.mul(m).is_identity() {
        return false;
    }
    let diff = m.sub(&IntMatrix::identity(m.rows()));
    QMatrix::from_int(&diff).rank() == 1
}

/// True iff the subgroup is generated by the reflections it contains.
pub fn cameral_stabilizer_ok(system: &RootSystem, subgroup: &[usize]) -> Result<bool> {
    let set = closed_subset(system, subgroup)?;
    let reflections: Vec<usize> =
        set.iter().copied().filter(|&w| is_reflection(system.element(w).matrix())).collect();
    Ok(generated(system, &reflections) == set)
}

/// The stricter reading: the subgroup is conjugate to a standard parabolic
/// subgroup `W_J` for some set `J` of simple reflections.
pub fn is_parabolic_conjugate(system: &RootSystem, subgroup: &[usize]) -> Result<bool> {
    let set = closed_subset(system, subgroup)?;
    let s = system.datum().semisimple_rank();
    for mask in 0u32..(1 << s) {
        let gens: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).map(|i| system.simple_reflection(i)).collect();
        let parabolic = generated(system, &gens);
        if parabolic.len() != set.len() {
            continue;
        }
        for g in 0..system.order() {
            let ginv = system.inverse(g);
            let conj: BTreeSet<usize> = parabolic.iter().map(|&p| system.mul(system.mul(g, p), ginv)).collect();
            if conj == set {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    #[test]
    fn s3_subgroups() {
        let s = RootSystem::new(&build_classical(Family::GL, 3).unwrap()).unwrap();
        let s1 = s.simple_reflection(0);
        assert!(cameral_stabilizer_ok(&s, &[s.identity(), s1]).unwrap());
        let rot = s.mul(s1, s.simple_reflection(1));
        let cyclic = vec![s.identity(), rot, s.mul(rot, rot)];
        assert!(!cameral_stabilizer_ok(&s, &cyclic).unwrap());
        assert!(!is_parabolic_conjugate(&s, &cyclic).unwrap());
        let all: Vec<usize> = (0..s.order()).collect();
        assert!(cameral_stabilizer_ok(&s, &all).unwrap());
        assert!(is_parabolic_conjugate(&s, &all).unwrap());
        assert_eq!(cameral_stabilizer_ok(&s, &[s.identity(), rot]), Err(Error::NotClosed));
    }

    #[test]
    fn readings_differ_in_b2() {
        // In W(B2) the subgroup generated by the two commuting reflections
        // s_{e1} and s_{e2} is reflection-generated but not conjugate to a
        // standard parabolic.
        let s = RootSystem::new(&build_classical(Family::SO, 5).unwrap()).unwrap();
        let refl: Vec<usize> = (0..s.order()).filter(|&w| is_reflection(s.element(w).matrix())).collect();
        let target = refl
            .iter()
            .flat_map(|&a| refl.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| {
                a != b && s.mul(a, b) == s.mul(b, a) && {
                    let g = generated(&s, &[a, b]);
                    g.len() == 4 && !is_parabolic_conjugate(&s, &g.iter().copied().collect::<Vec<_>>()).unwrap()
                }
            });
        let (a, b) = target.expect("a non-parabolic reflection subgroup exists in B2");
        let g: Vec<usize> = generated(&s, &[a, b]).into_iter().collect();
        assert!(cameral_stabilizer_ok(&s, &g).unwrap());
    }
}
