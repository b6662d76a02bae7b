//! Relative local cohomology of bigraded monomial quotients.
//!
//! The ring is `S = K[x1..xm, y1..yn]` with `P = (x)` and `Q = (y)`. For a
//! module `A/B` of monomial ideals this crate computes which `H^i_T` vanish
//! for `T ∈ {P, Q, P+Q}`, builds dimension filtrations of Stanley–Reisner
//! rings with respect to `T`, and decides the Cohen–Macaulay,
//! sequentially Cohen–Macaulay and approximately Cohen–Macaulay properties
//! relative to `T`.
//!
//! ```
//! use seqcm::{cech, fixtures, FieldSpec};
//!
//! let rp2 = fixtures::rp2();
//! let ring = rp2.ring();
//! let module = cech::QuotientModule::cyclic(rp2);
//! let profile = cech::cohomology_profile(&module, ring.q(), FieldSpec::RATIONALS).unwrap();
//! assert_eq!((profile.grade(), profile.cd()), (Some(1), Some(3)));
//! ```

pub mod cech;
pub mod combinatorics;
pub mod error;
pub mod filtration;
pub mod fixtures;
pub mod homology;
pub mod linalg;

pub use combinatorics::{GeneralMonomialIdeal, MonomialIdeal, MonomialPrime, RingSpec, SquarefreeIdeal, Torsion, VarSet};
pub use error::{Error, Result};
pub use linalg::FieldSpec;
