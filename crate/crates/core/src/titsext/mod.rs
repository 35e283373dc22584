//! Matrix models of the normalizer `N(T)` and the cocycle of its Tits
//! section, with values in `X_* ⊗ Z/2`.

mod cocycle;
mod model;

pub use cocycle::{closed_form_cocycle, cocycle, tits_section, TorusClass2};
pub use model::{chevalley_generators, lift_rescale, MonomialModel, TorusReader};
