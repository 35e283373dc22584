use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rootdata::RootSystem;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    generators: Option<Vec<usize>>,
    /// Position of each element among the non-identity elements.
    nonid_pos: Vec<Option<usize>>,
    nonid: Vec<usize>,
}

/// Tables up to this order are checked for associativity exhaustively;
/// larger ones on a deterministic sample of triples.
const FULL_ASSOCIATIVITY_CHECK: usize = 128;

impl FiniteGroupTable {
    /// `mul[a * order + b] = a·b`.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 || mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(Error::Precondition("malformed multiplication table".into()));
        }
        let m = order;
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| mul[e * m + a] == a && mul[a * m + e] == a))
            .ok_or_else(|| Error::Precondition("table has no identity".into()))?;
        let mut inv = vec![usize::MAX; m];
        for a in 0..m {
            let b = (0..m)
                .find(|&b| mul[a * m + b] == identity)
                .ok_or_else(|| Error::Precondition(format!("element {a} has no inverse")))?;
            if mul[b * m + a] != identity {
                return Err(Error::Precondition(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = b;
        }
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if m <= FULL_ASSOCIATIVITY_CHECK {
            Box::new((0..m).flat_map(move |a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c)))))
        } else {
            Box::new((0..4096usize).map(move |k| ((k * 7919) % m, (k * 104_729 + 1) % m, (k * 1_299_709 + 2) % m)))
        };
        for (a, b, c) in triples {
            if mul[mul[a * m + b] * m + c] != mul[a * m + mul[b * m + c]] {
                return Err(Error::Precondition(format!("table is not associative at ({a}, {b}, {c})")));
            }
        }
        let nonid: Vec<usize> = (0..m).filter(|&g| g != identity).collect();
        let mut nonid_pos = vec![None; m];
        for (p, &g) in nonid.iter().enumerate() {
            nonid_pos[g] = Some(p);
        }
        Ok(FiniteGroupTable { order, mul, inv, identity, generators: None, nonid_pos, nonid })
    }

    pub fn from_weyl(system: &RootSystem) -> Self {
        let mut g = Self::from_table(system.order(), system.multiplication_table().to_vec())
            .expect("Weyl group tables are groups");
        g.generators = Some((0..system.datum().semisimple_rank()).map(|i| system.simple_reflection(i)).collect());
        g
    }

    /// `Z/n` with element `k` meaning `k` mod `n`.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let mut g = Self::from_table(n, mul).expect("cyclic table");
        g.generators = Some(if n > 1 { vec![1] } else { vec![] });
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub(crate) fn nonid(&self) -> &[usize] {
        &self.nonid
    }

    pub(crate) fn nonid_pos(&self, g: usize) -> Option<usize> {
        self.nonid_pos[g]
    }

    /// Closure of a set of elements under multiplication.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Table of a subgroup together with its embedding (subgroup index to
    /// group index). Element 0 of the subgroup is the identity.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroupTable, Vec<usize>)> {
        let mut emb: Vec<usize> = elements.iter().copied().filter(|&g| g != self.identity).collect();
        emb.sort_unstable();
        emb.dedup();
        emb.insert(0, self.identity);
        let mut back = vec![usize::MAX; self.order];
        for (k, &g) in emb.iter().enumerate() {
            back[g] = k;
        }
        let k = emb.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &emb {
            for &b in &emb {
                let p = back[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotClosed);
                }
                mul.push(p);
            }
        }
        Ok((FiniteGroupTable::from_table(k, mul)?, emb))
    }

    /// A Sylow 2-subgroup, grown one index-2 step at a time: a 2-subgroup
    /// `P` that is not Sylow has some `g ∈ N(P) \ P` with `g² ∈ P`, and
    /// `⟨P, g⟩` has order `2|P|`.
    pub fn sylow2(&self) -> (FiniteGroupTable, Vec<usize>) {
        let target = 1usize << self.order.trailing_zeros();
        let mut p: Vec<usize> = vec![self.identity];
        let mut gens: Vec<usize> = Vec::new();
        while p.len() < target {
            let member: BTreeSet<usize> = p.iter().copied().collect();
            let g = (0..self.order)
                .filter(|g| !member.contains(g))
                .find(|&g| {
                    member.contains(&self.mul(g, g))
                        && p.iter().all(|&x| member.contains(&self.mul(self.mul(g, x), self.inverse(g))))
                })
                .expect("a non-Sylow 2-subgroup has a normalizing element of order 2 modulo it");
            gens.push(g);
            p = self.generated_subgroup(&gens);
        }
        let (mut table, emb) = self.subgroup(&p).expect("generated subgroups are closed");
        let back = |g: usize| emb.iter().position(|&x| x == g).expect("generator lies in subgroup");
        table.generators = Some(gens.iter().map(|&g| back(g)).collect());
        (table, emb)
    }
}
