//! Exact-arithmetic machinery for the abelianization of Higgs bundles at desk
//! scale: root data and Weyl groups, the Tits extension class in `H²(W, T)`,
//! the `GL(n)` spectral/cameral correspondence, rank-one torsors over finite
//! fields and Hitchin-base dimension counts.

pub mod acceptance;
pub mod error;
pub mod gcohom;
pub mod glncover;
pub mod hitchin;
pub mod titsext;
pub mod linalg;
pub mod oracle;
pub mod rank1;
pub mod rootdata;

pub use error::{Error, Result};
