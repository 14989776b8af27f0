//! Exact generalized inverses in unital rings with involution.
//!
//! Three concrete `*`-rings are provided: `Z_n` with the identity
//! involution, `M_k(Z_p)` with transposition, and `M_k(Q(i))` with
//! conjugate transposition. On top of them the crate computes inner,
//! {1,3}, {1,4}, group and Moore–Penrose inverses, decides the existence
//! criteria in [`theorems`], and sweeps whole finite rings to check that
//! each criterion holds exactly on the Moore–Penrose invertible elements.

pub mod backends;
pub mod element;
pub mod error;
pub mod ginverse;
pub mod linalg;
pub mod matrix;
pub mod ring;
pub mod scalar;
pub mod theorems;

pub use backends::{enumerate, Backend, LinearProblem, MatQi, MatZp, Shape, ZMod, DEFAULT_CAP};
pub use element::{format_element, parse_element, AnyRing, Element, ElementValue};
pub use error::{Error, Result};
pub use ginverse::{InverseKind, InverseResult, PenroseCheck};
pub use matrix::SquareMatrix;
pub use ring::{classify, ElementFlags, Involution, RingDescriptor, StarRing};
pub use scalar::GaussianRational;
pub use theorems::sweep::{verify_theorem, SweepOptions, TheoremId, VerificationReport};
pub use theorems::Witness;
