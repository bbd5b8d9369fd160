//! Exact computations in the elementary orthogonal groups of
//! Dickson–Siegel–Eichler–Roy (DSER) over commutative rings with 2 invertible.
//!
//! The crate provides:
//!
//! * [`rings`]: an exact ring tower (`Z`, `Q`, `Z/n`, Laurent polynomials,
//!   localizations, polynomial extensions) with canonical forms;
//! * [`matrix`] and [`quadform`]: dense matrices, quadratic spaces and the
//!   ambient forms `φ ⊥ ψ̃_m`;
//! * [`generators`]: Roy's generators `E_α`, `E*_β`, classical `oe_kl`,
//!   torus and swap elements, and words in them;
//! * [`rewrite`]: translation between DSER and classical generators,
//!   conjugation normalization and the splitting of `O(h)` over local rings;
//! * [`localglobal`]: the polynomial side (evaluation kernels, dilation,
//!   local membership over a comaximal cover);
//! * [`certificate`] and [`suites`]: self-verifying JSON certificates and the
//!   identity suites behind the `dser` command-line tool.

pub mod certificate;
pub mod error;
pub mod generators;
pub mod localglobal;
pub mod matrix;
pub mod quadform;
pub mod rewrite;
pub mod rings;
pub mod suites;

pub use error::{Error, Result};
pub use generators::{Letter, Word};
pub use matrix::Matrix;
pub use quadform::{AmbientForm, Ordering, QuadraticSpace};
pub use rings::{parse_ring, Elem, Ring, RingElement};
