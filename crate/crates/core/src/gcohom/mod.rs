//! Cohomology of finite groups in low degrees via normalized bar cochains,
//! and the splitting decision for `1 → T → N → W → 1`.

mod cochain;
mod extension;
mod group;
mod module;
mod rational;

pub use cochain::{
    coboundary, coboundary_matrix, ensure_cocycle, is_coboundary, restrict, Certificate, CoboundaryDecision, Cochain,
    Witness, MAX_SYSTEM_ENTRIES,
};
pub use extension::{
    bockstein_to_h3, decide_n_class, decide_n_class_bounded, split_witness, tits_cochain, CocycleSource, NClassReport,
    SplitWitness, TowerStep, Verdict,
};
pub use group::FiniteGroupTable;
pub use module::{GModule, ModuleKind};
pub use rational::{h1_rational, H1Report};
