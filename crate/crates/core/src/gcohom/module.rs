use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rootdata::RootSystem;

use super::FiniteGroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Lattice,
    /// `(Z/m)^r`
    Torsion(i64),
    Rational,
}

/// `Z^r`, `(Z/m)^r` or `Q^r` with an integral action of a finite group.
#[derive(Clone, Debug)]
pub struct GModule {
    pub kind: ModuleKind,
    pub rank: usize,
    pub action: Vec<IntMatrix>,
}

impl GModule {
    pub fn new(group: &FiniteGroupTable, kind: ModuleKind, rank: usize, action: Vec<IntMatrix>) -> Result<Self> {
        if let ModuleKind::Torsion(m) = kind {
            if m < 2 {
                return Err(Error::ModuleMismatch(format!("torsion modulus {m} < 2")));
            }
        }
        if action.len() != group.order() || action.iter().any(|a| a.rows() != rank || a.cols() != rank) {
            return Err(Error::ModuleMismatch("action matrices do not match group order and rank".into()));
        }
        let module = GModule { kind, rank, action };
        if !module.action(group.identity()).is_identity() {
            return Err(Error::ModuleMismatch("identity does not act trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if !module.same(&module.action[a].mul(&module.action[b]), &module.action[group.mul(a, b)]) {
                    return Err(Error::ModuleMismatch(format!("action is not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(module)
    }

    /// Cocharacters of the datum with the Weyl group action.
    pub fn cocharacters(system: &RootSystem, kind: ModuleKind) -> Result<Self> {
        let group = FiniteGroupTable::from_weyl(system);
        let action = system.elements().iter().map(|w| w.matrix().clone()).collect();
        GModule::new(&group, kind, system.rank(), action)
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn with_kind(&self, kind: ModuleKind) -> Self {
        GModule { kind, ..self.clone() }
    }

    /// Restriction along a subgroup embedding.
    pub fn restrict(&self, embedding: &[usize]) -> Self {
        GModule { kind: self.kind, rank: self.rank, action: embedding.iter().map(|&g| self.action[g].clone()).collect() }
    }

    pub(crate) fn reduce(&self, v: i64) -> i64 {
        match self.kind {
            ModuleKind::Torsion(m) => v.rem_euclid(m),
            _ => v,
        }
    }

    fn same(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        a.as_slice().iter().zip(b.as_slice()).all(|(x, y)| self.reduce(x - y) == 0)
    }
}
