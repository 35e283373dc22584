//! Rank-one checks over finite fields: the cameral double cover is a
//! hyperelliptic curve `y² = f(x)` and line bundles are divisor classes in
//! Mumford form.

mod curve;
mod experiment;
mod field;
mod pic;
pub mod poly;

pub use curve::{HyperCurve, MumfordDivisor};
pub use experiment::{irreducible_factor_count, run_rank1, Rank1Report, DEFAULT_MAX_ENUM};
pub use field::{Fq, MAX_FIELD_ORDER};
pub use pic::{condition_star_quotient, pgl2_image_size, torsor_check, two_torsion, PicClass};
