//! Rank-generating functions of partitions inside Ferrers shapes.
//!
//! For a strict shape `λ`, [`genfun::rgf_shifted`] counts strict partitions
//! whose shifted diagram fits inside the shifted diagram of `λ`, graded by
//! size. [`genfun::rgf_straight`] does the same for arbitrary partitions in
//! an ordinary diagram. Around those sit sequence diagnostics
//! ([`polyseq`]), shape families ([`shapes`]), the `f(a, c)` table and its
//! bivariate series ([`qstruct`]), the ballot-word correspondence
//! ([`bijection`]), finite-range claim checks ([`verify`]) and resumable
//! conjecture scans ([`explore`]).
//!
//! ```
//! use shifted_rgf::{genfun::rgf_shifted, shapes::StrictShape};
//!
//! let shape: StrictShape = "4,2,1".parse().unwrap();
//! let f = rgf_shifted(&shape);
//! assert_eq!(f.coeff_strings().join(","), "1,1,1,2,2,2,2,1");
//! assert!(f.diagnose().unwrap().unimodal);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

mod bigser;
mod error;

pub mod bijection;
pub mod cli;
pub mod explore;
pub mod genfun;
pub mod polyseq;
pub mod qstruct;
pub mod shapes;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use polyseq::{IntPoly, SeqDiagnostics};
pub use shapes::{Shape, ShapeFamily, StraightShape, StrictShape};
pub use verdict::{ClaimVerdict, Witness};
