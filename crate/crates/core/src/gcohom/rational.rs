use serde::Serialize;

use super::cochain::coboundary_matrix;
use super::{FiniteGroupTable, GModule};
use crate::error::Result;
use crate::linalg::rational::QMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Report {
    pub group_order: usize,
    pub rank: usize,
    /// Dimension of the space of 1-cocycles.
    pub cocycle_dim: usize,
    /// Number of basis cocycles for which `dφ = z` was solved exactly.
    pub solved: usize,
}

impl H1Report {
    pub fn vanishes(&self) -> bool {
        self.solved == self.cocycle_dim
    }
}

/// Solves `dφ = z` over `Q` for every basis vector `z` of `Z¹(G, Q^r)`.
pub fn h1_rational(group: &FiniteGroupTable, module: &GModule) -> Result<H1Report> {
    let d0 = QMatrix::from_int(&coboundary_matrix(group, module, 0)?);
    let d1 = QMatrix::from_int(&coboundary_matrix(group, module, 1)?);
    let basis = d1.kernel();
    let solved = basis.iter().filter(|z| d0.solve(z).is_some_and(|phi| d0.mul_vec(&phi) == **z)).count();
    Ok(H1Report { group_order: group.order(), rank: module.rank, cocycle_dim: basis.len(), solved })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcohom::ModuleKind;
    use crate::linalg::IntMatrix;
    use crate::rootdata::{build_classical, Family, RootSystem};

    #[test]
    fn reflection_modules() {
        for (f, n, dim) in [(Family::SL, 2, 1), (Family::SL, 3, 2), (Family::Sp, 4, 2)] {
            let sys = RootSystem::new(&build_classical(f, n).unwrap()).unwrap();
            let g = FiniteGroupTable::from_weyl(&sys);
            let m = GModule::cocharacters(&sys, ModuleKind::Rational).unwrap();
            let r = h1_rational(&g, &m).unwrap();
            // crossed homomorphisms have dimension |G|·r − dim M^G = r here
            assert_eq!(r.cocycle_dim, dim);
            assert!(r.vanishes());
        }
    }

    #[test]
    fn trivial_module_has_no_cocycles() {
        let g = FiniteGroupTable::cyclic(4);
        let m = GModule::new(&g, ModuleKind::Rational, 1, vec![IntMatrix::identity(1); 4]).unwrap();
        let r = h1_rational(&g, &m).unwrap();
        assert_eq!(r.cocycle_dim, 0);
        assert!(r.vanishes());
    }
}
