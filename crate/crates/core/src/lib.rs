//! Exact-arithmetic multiple orthogonal polynomials and their rational
//! spectral transforms.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. The main layers are:
//!
//! - [`rat`], [`poly`], [`roots`], [`linalg`]: exact scalars, dense univariate
//!   polynomials, root multisets, and fraction-free determinant/solve kernels.
//! - [`functional`]: moment functionals as lazily generated moment sequences,
//!   including Christoffel-multiplied and recursion-defined rational
//!   perturbations carrying free moments.
//! - [`index`], [`system`]: multi-indices and systems of functionals, with the
//!   moment-matrix solver for type I vectors and type II polynomials and the
//!   normality/perfectness tests. This layer is the oracle: it only ever
//!   solves moment systems directly.
//! - [`seq`]: paths, frames, and admissible multi-index sequences.
//! - [`transform`]: the bordered-determinant construction of type I and
//!   type II polynomials for a rationally perturbed system, with second-kind
//!   values, lcm reduction, derivative rows for repeated roots, and
//!   virtual-column handling for small indices.

pub mod functional;
pub mod index;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod seq;
pub mod system;
pub mod transform;

pub use functional::{FreeMomentArity, MomentFunctional};
pub use index::MultiIndex;
pub use linalg::Mat;
pub use poly::{NonzeroRemainder, Poly};
pub use rat::Rat;
pub use roots::RootList;
pub use seq::{Direction, IndexSeq, TieBreak};
pub use system::{System, TypeIIPoly, TypeIVector};


