//! Moment functionals as lazily generated moment sequences.
//!
//! A [`MomentFunctional`] is determined by its moments `nu_0, nu_1, ...` and
//! acts on polynomials by linearity. Sources include explicit moment lists,
//! interval Lebesgue measure, point masses, scaling/sum combinators,
//! Christoffel multiplication by a monic polynomial, and the recursion-defined
//! rational perturbation `psi * mu_tilde = phi * mu` whose first `deg psi`
//! moments are free parameters.
//!
//! Moment caches are internally synchronized: concurrent `moment(k)` calls on
//! shared clones are safe and always return identical values. Clones share
//! the same cache.

use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::poly::Poly;
use crate::rat::Rat;
use crate::roots::RootList;

/// A linear functional on polynomials, `p -> sum_i coeff_i(p) * nu_i`,
/// with memoized exact moments.
#[derive(Clone)]
pub struct MomentFunctional {
    inner: Arc<Inner>,
}

struct Inner {
    source: Source,
    cache: Mutex<Vec<Rat>>,
}

enum Source {
    /// Finite moment list; moments beyond the list are zero.
    Explicit(Vec<Rat>),
    /// Lebesgue measure on `[a, b]`: `nu_k = (b^{k+1} - a^{k+1}) / (k+1)`.
    Lebesgue { a: Rat, b: Rat },
    /// `sum_i c_i delta_{w_i}`: `nu_k = sum_i c_i w_i^k`.
    PointMasses(Vec<(Rat, Rat)>),
    Scaled {
        factor: Rat,
        base: MomentFunctional,
    },
    Sum(MomentFunctional, MomentFunctional),
    /// `nu_k = base[phi(x) x^k]` for monic `phi`.
    Christoffel {
        base: MomentFunctional,
        phi: Poly,
    },
    /// The functional `mu_tilde` with `psi * mu_tilde = phi * mu` (both
    /// monic), first `deg psi` moments given by `free`, the rest determined
    /// by the recursion
    /// `nu~_{p+M} = base[phi x^p] - sum_{i<M} psi_i nu~_{p+i}`.
    RationalPerturb {
        base: MomentFunctional,
        phi: Poly,
        psi: Poly,
        free: Vec<Rat>,
    },
}

/// The free-moment list length does not match the degree it must cover.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("free moment arity mismatch: expected {expected}, got {got}")]
pub struct FreeMomentArity {
    pub expected: usize,
    pub got: usize,
}

impl MomentFunctional {
    fn from_source(source: Source) -> MomentFunctional {
        MomentFunctional {
            inner: Arc::new(Inner {
                source,
                cache: Mutex::new(Vec::new()),
            }),
        }
    }

    /// Functional with the given moments; moments beyond the list are zero.
    pub fn explicit(moments: Vec<Rat>) -> MomentFunctional {
        MomentFunctional::from_source(Source::Explicit(moments))
    }

    /// Lebesgue measure on the interval `[a, b]`.
    pub fn lebesgue(a: Rat, b: Rat) -> MomentFunctional {
        MomentFunctional::from_source(Source::Lebesgue { a, b })
    }

    /// `sum c * delta_w` over the given `(location, weight)` pairs.
    pub fn point_masses(masses: Vec<(Rat, Rat)>) -> MomentFunctional {
        MomentFunctional::from_source(Source::PointMasses(masses))
    }

    pub fn scaled(factor: Rat, base: MomentFunctional) -> MomentFunctional {
        MomentFunctional::from_source(Source::Scaled { factor, base })
    }

    pub fn sum(lhs: MomentFunctional, rhs: MomentFunctional) -> MomentFunctional {
        MomentFunctional::from_source(Source::Sum(lhs, rhs))
    }

    /// Multiplication by the monic polynomial with roots `phi`:
    /// `nu^_k = base[phi(x) x^k]`.
    pub fn christoffel_of(base: MomentFunctional, phi: &RootList) -> MomentFunctional {
        MomentFunctional::from_source(Source::Christoffel {
            base,
            phi: phi.to_poly(),
        })
    }

    /// The rational perturbation `psi * mu_tilde = phi * base` with the
    /// first `deg psi` moments fixed to `free`. An empty `psi` is the pure
    /// Christoffel case and takes no free moments.
    pub fn rational_perturb(
        base: MomentFunctional,
        phi: &RootList,
        psi: &RootList,
        free: Vec<Rat>,
    ) -> Result<MomentFunctional, FreeMomentArity> {
        let expected = psi.total_degree();
        if free.len() != expected {
            return Err(FreeMomentArity {
                expected,
                got: free.len(),
            });
        }
        Ok(MomentFunctional::from_source(Source::RationalPerturb {
            base,
            phi: phi.to_poly(),
            psi: psi.to_poly(),
            free,
        }))
    }

    /// `base` plus point masses at pairwise-distinct locations.
    pub fn uvarov_of(base: MomentFunctional, masses: Vec<(Rat, Rat)>) -> MomentFunctional {
        for (i, (w, _)) in masses.iter().enumerate() {
            assert!(
                masses[..i].iter().all(|(v, _)| v != w),
                "uvarov_of: duplicate mass location {w}"
            );
        }
        if masses.is_empty() {
            return base;
        }
        MomentFunctional::sum(base, MomentFunctional::point_masses(masses))
    }

    /// The exact `k`-th moment, memoized.
    pub fn moment(&self, k: usize) -> Rat {
        let mut cache = self.inner.cache.lock().unwrap();
        while cache.len() <= k {
            let next = self.compute_moment(&cache);
            cache.push(next);
        }
        cache[k].clone()
    }

    /// Computes moment `cache.len()` given all earlier moments.
    fn compute_moment(&self, cache: &[Rat]) -> Rat {
        let k = cache.len();
        match &self.inner.source {
            Source::Explicit(moments) => moments.get(k).cloned().unwrap_or_else(Rat::zero),
            Source::Lebesgue { a, b } => {
                let e = (k + 1) as u32;
                (&b.pow(e) - &a.pow(e)) / Rat::from_int((k + 1) as i64)
            }
            Source::PointMasses(masses) => masses
                .iter()
                .fold(Rat::zero(), |acc, (w, c)| &acc + &(c * &w.pow(k as u32))),
            Source::Scaled { factor, base } => factor * &base.moment(k),
            Source::Sum(lhs, rhs) => &lhs.moment(k) + &rhs.moment(k),
            Source::Christoffel { base, phi } => {
                base.apply(&(phi * &Poly::monomial(k, Rat::one())))
            }
            Source::RationalPerturb {
                base,
                phi,
                psi,
                free,
            } => {
                let m = free.len();
                if k < m {
                    return free[k].clone();
                }
                let p = k - m;
                let mut acc = base.apply(&(phi * &Poly::monomial(p, Rat::one())));
                for i in 0..m {
                    acc = &acc - &(&psi.coeff(i) * &cache[p + i]);
                }
                acc
            }
        }
    }

    /// Applies the functional to a polynomial: `sum_i c_i * nu_i`.
    pub fn apply(&self, p: &Poly) -> Rat {
        p.coeffs()
            .iter()
            .enumerate()
            .fold(Rat::zero(), |acc, (i, c)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &(c * &self.moment(i))
                }
            })
    }
}

impl std::fmt::Debug for MomentFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match &self.inner.source {
            Source::Explicit(_) => "Explicit",
            Source::Lebesgue { .. } => "Lebesgue",
            Source::PointMasses(_) => "PointMasses",
            Source::Scaled { .. } => "Scaled",
            Source::Sum(..) => "Sum",
            Source::Christoffel { .. } => "Christoffel",
            Source::RationalPerturb { .. } => "RationalPerturb",
        };
        write!(f, "MomentFunctional({name})")
    }
}
