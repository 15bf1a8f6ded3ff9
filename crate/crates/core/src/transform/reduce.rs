//! Funneling a general per-component perturbation through a common
//! polynomial, plus construction of the perturbed system and of the
//! auxiliary inverse functionals.
//!
//! The type I construction needs one common denominator: with
//! `psi = lcm(psi_1, ..., psi_r)` and `phi*_j = phi_j * psi / psi_j` the
//! perturbed functionals satisfy `psi * mu~_j = phi*_j * mu_j`. The type II
//! construction dually needs one common numerator `phi = lcm(phi_1, ...,
//! phi_r)` with `psi*_j = psi_j * phi / phi_j`.

use crate::functional::MomentFunctional;
use crate::roots::RootList;
use crate::system::System;

use super::{GeronimusChoices, TransformError, TransformSpec};

/// Common-denominator form: `psi * mu~_j = phi*_j * mu_j`.
#[derive(Clone, Debug)]
pub struct ReducedTypeI {
    pub psi: RootList,
    pub phi_star: Vec<RootList>,
}

/// Common-numerator form: `psi*_j * mu~_j = phi * mu_j`.
#[derive(Clone, Debug)]
pub struct ReducedTypeII {
    pub phi: RootList,
    pub psi_star: Vec<RootList>,
}

/// Which construction an auxiliary inverse functional is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformSide {
    TypeI,
    TypeII,
}

pub fn reduce_type1(spec: &TransformSpec) -> ReducedTypeI {
    let psi = spec
        .components()
        .iter()
        .fold(RootList::empty(), |acc, c| acc.lcm(&c.psi));
    let phi_star = spec
        .components()
        .iter()
        .map(|c| {
            let cofactor = psi
                .quotient(&c.psi)
                .expect("lcm contains every component denominator");
            c.phi.product(&cofactor)
        })
        .collect();
    ReducedTypeI { psi, phi_star }
}

pub fn reduce_type2(spec: &TransformSpec) -> ReducedTypeII {
    let phi = spec
        .components()
        .iter()
        .fold(RootList::empty(), |acc, c| acc.lcm(&c.phi));
    let psi_star = spec
        .components()
        .iter()
        .map(|c| {
            let cofactor = phi
                .quotient(&c.phi)
                .expect("lcm contains every component numerator");
            c.psi.product(&cofactor)
        })
        .collect();
    ReducedTypeII { phi, psi_star }
}

/// Builds the perturbed system: `mu~_j` is the rational perturbation of
/// `mu_j` with the spec's roots and free moments.
pub fn make_transformed_system(
    s: &System,
    spec: &TransformSpec,
) -> Result<System, TransformError> {
    if spec.r() != s.r() {
        return Err(TransformError::ArityMismatch {
            expected: s.r(),
            got: spec.r(),
        });
    }
    let functionals = s
        .functionals()
        .iter()
        .zip(spec.components())
        .map(|(f, c)| {
            MomentFunctional::rational_perturb(f.clone(), &c.phi, &c.psi, c.free.clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(System::new(functionals))
}

/// The auxiliary inverse functionals `mu^_j` with `phi*_j * mu^_j = mu~_j`
/// (type I) or `phi * mu^_j = mu~_j` (type II). Each is a rational
/// perturbation of `mu~_j` by a pure denominator, so the choice of its
/// leading free moments is exactly the freedom the construction tolerates.
pub fn geronimus_for(
    s: &System,
    spec: &TransformSpec,
    side: TransformSide,
    choice: &GeronimusChoices,
) -> Result<Vec<MomentFunctional>, TransformError> {
    let transformed = make_transformed_system(s, spec)?;
    let inverted: Vec<RootList> = match side {
        TransformSide::TypeI => reduce_type1(spec).phi_star,
        TransformSide::TypeII => {
            let phi = reduce_type2(spec).phi;
            vec![phi; spec.r()]
        }
    };
    let arities: Vec<usize> = inverted.iter().map(RootList::total_degree).collect();
    let free = choice.resolve(&arities)?;
    transformed
        .functionals()
        .iter()
        .zip(inverted.iter().zip(free))
        .map(|(f, (psi, free_j))| {
            MomentFunctional::rational_perturb(f.clone(), &RootList::empty(), psi, free_j)
                .map_err(TransformError::from)
        })
        .collect()
}
