//! Determinantal construction of type I and type II polynomials for
//! rationally perturbed systems.
//!
//! A [`TransformSpec`] perturbs each component functional by a rational
//! factor: `psi_j * mu~_j = phi_j * mu_j`, with the free moments of each
//! `mu~_j` chosen explicitly. The construction funnels arbitrary per-component
//! numerators and denominators through a common polynomial (an lcm on one
//! side, see [`reduce`]), evaluates bordering polynomials of the original
//! system along an admissible index sequence, and divides a bordered
//! determinant exactly by the common numerator. Repeated roots contribute
//! derivative rows; indices outside the valid range contribute dedicated
//! virtual columns filled by explicit power rules.
//!
//! Raw outputs come paired with the normalizing minor `D_n`; division
//! happens only on request so that `D_n = 0` (exactly: the perturbed system
//! is not normal at `n`) stays observable.

mod formula;
mod reduce;
mod second_kind;
mod verify;

pub use formula::{
    type1_sequence, type1_transform, type2_sequence, type2_transform,
    type2_transform_uvarov_simplified, SeqKind, TypeITransform, TypeIITransform,
};
pub use reduce::{
    geronimus_for, make_transformed_system, reduce_type1, reduce_type2, ReducedTypeI,
    ReducedTypeII, TransformSide,
};
pub use second_kind::{b_values, q_values, q_values_uvarov_simplified};
pub use verify::{verify_transform, CheckResult, TransformOutput, VerifyReport};

use thiserror::Error;

use crate::functional::FreeMomentArity;
use crate::index::MultiIndex;
use crate::poly::NonzeroRemainder;
use crate::rat::Rat;
use crate::roots::RootList;
use crate::system::OracleError;

/// Per-component rational perturbation data: numerator roots `phi`,
/// denominator roots `psi`, and the `deg psi` free moments of the
/// perturbed functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPerturbation {
    pub phi: RootList,
    pub psi: RootList,
    pub free: Vec<Rat>,
}

impl ComponentPerturbation {
    pub fn identity() -> ComponentPerturbation {
        ComponentPerturbation {
            phi: RootList::empty(),
            psi: RootList::empty(),
            free: Vec::new(),
        }
    }

    /// Pure numerator multiplication (no denominator, no free moments).
    pub fn christoffel(phi: RootList) -> ComponentPerturbation {
        ComponentPerturbation {
            phi,
            psi: RootList::empty(),
            free: Vec::new(),
        }
    }

    /// Pure denominator division with the given free moments.
    pub fn geronimus(psi: RootList, free: Vec<Rat>) -> ComponentPerturbation {
        ComponentPerturbation {
            phi: RootList::empty(),
            psi,
            free,
        }
    }
}

/// A full perturbation of an `r`-component system. Numerator and denominator
/// roots may overlap arbitrarily, which is how pure point masses arise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformSpec {
    components: Vec<ComponentPerturbation>,
}

impl TransformSpec {
    pub fn new(components: Vec<ComponentPerturbation>) -> TransformSpec {
        assert!(!components.is_empty(), "TransformSpec: r must be at least 1");
        TransformSpec { components }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, j: usize) -> &ComponentPerturbation {
        &self.components[j]
    }

    pub fn components(&self) -> &[ComponentPerturbation] {
        &self.components
    }
}

/// Free-moment choices for the auxiliary inverse functionals entering the
/// second-kind values. Any choice yields the same normalized output; the
/// default is all zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum GeronimusChoices {
    #[default]
    Zeros,
    /// One free-moment list per component; lengths must match the degree of
    /// the polynomial being inverted.
    Explicit(Vec<Vec<Rat>>),
}

impl GeronimusChoices {
    /// Resolves to one list per component given the required arities.
    pub(crate) fn resolve(&self, arities: &[usize]) -> Result<Vec<Vec<Rat>>, TransformError> {
        match self {
            GeronimusChoices::Zeros => {
                Ok(arities.iter().map(|&a| vec![Rat::zero(); a]).collect())
            }
            GeronimusChoices::Explicit(lists) => {
                if lists.len() != arities.len() {
                    return Err(TransformError::ArityMismatch {
                        expected: arities.len(),
                        got: lists.len(),
                    });
                }
                for (j, (list, &a)) in lists.iter().zip(arities).enumerate() {
                    if list.len() != a {
                        return Err(TransformError::ChoiceArity {
                            component: j,
                            expected: a,
                            got: list.len(),
                        });
                    }
                }
                Ok(lists.clone())
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error(transparent)]
    FreeMomentArity(#[from] FreeMomentArity),
    #[error("geronimus choice for component {component} has arity {got}, expected {expected}")]
    ChoiceArity {
        component: usize,
        expected: usize,
        got: usize,
    },
    #[error("component count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("sequence is not admissible from {from} towards {to}")]
    NotAdmissible { from: MultiIndex, to: MultiIndex },
    #[error("sequence must start at an index with |m| = {expected_total}, got {got}")]
    SeqStart { expected_total: usize, got: MultiIndex },
    #[error("sequence has length {got}, expected {expected}")]
    SeqLength { expected: usize, got: usize },
    #[error("sequence direction is wrong for this construction")]
    WrongDirection,
    #[error("spec is not an Uvarov perturbation: {0}")]
    NotUvarov(String),
    #[error(transparent)]
    NonzeroRemainder(#[from] NonzeroRemainder),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
