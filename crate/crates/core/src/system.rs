//! Systems of moment functionals and the moment-matrix oracle.
//!
//! Everything here is computed by solving stacked-Hankel moment systems
//! directly; no recurrence relation is ever used. That keeps this layer
//! independent of the determinantal constructions it is later used to check.

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::functional::MomentFunctional;
use crate::index::MultiIndex;
use crate::linalg::{self, Mat};
use crate::poly::Poly;
use crate::rat::Rat;

/// A type I vector: one polynomial per component, `deg A^(j) <= n_j - 1`
/// (the zero polynomial where `n_j = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIVector {
    pub index: MultiIndex,
    pub polys: Vec<Poly>,
    pub normalization: TypeINorm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeINorm {
    /// `sum_j mu_j[A^(j) x^(|n|-1)] = 1`.
    Normalized,
    Raw,
}

/// A type II polynomial: `deg P <= |n|`, orthogonal to `x^p` under `mu_j`
/// for `p < n_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIIPoly {
    pub index: MultiIndex,
    pub poly: Poly,
    pub normalization: TypeIINorm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeIINorm {
    /// Degree exactly `|n|` with leading coefficient 1.
    Monic,
    Raw,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("index {0} is not normal for this system")]
    NotNormal(MultiIndex),
    #[error("the zero index has no normalized type I vector")]
    ZeroIndex,
}

/// An ordered list of `r >= 1` moment functionals with a shared normality
/// cache. Clones share the cache.
pub struct System {
    functionals: Vec<MomentFunctional>,
    normality: Mutex<HashMap<MultiIndex, bool>>,
}

impl Clone for System {
    fn clone(&self) -> System {
        System {
            functionals: self.functionals.clone(),
            normality: Mutex::new(self.normality.lock().unwrap().clone()),
        }
    }
}

impl System {
    pub fn new(functionals: Vec<MomentFunctional>) -> System {
        assert!(!functionals.is_empty(), "System: r must be at least 1");
        System {
            functionals,
            normality: Mutex::new(HashMap::new()),
        }
    }

    pub fn r(&self) -> usize {
        self.functionals.len()
    }

    pub fn functional(&self, j: usize) -> &MomentFunctional {
        &self.functionals[j]
    }

    pub fn functionals(&self) -> &[MomentFunctional] {
        &self.functionals
    }

    fn assert_index(&self, n: &MultiIndex) {
        assert_eq!(n.len(), self.r(), "index length does not match system r");
    }

    /// The `|n| x |n|` stacked-Hankel moment matrix: block `j` contributes
    /// rows `(nu^j_{i+t})_{t < |n|}` for `i = 0, ..., n_j - 1`.
    pub fn moment_matrix(&self, n: &MultiIndex) -> Mat {
        self.assert_index(n);
        let size = n.total();
        assert!(size >= 1, "moment_matrix: |n| must be at least 1");
        let mut rows = Vec::with_capacity(size);
        for (j, f) in self.functionals.iter().enumerate() {
            for i in 0..n[j] {
                rows.push((0..size).map(|t| f.moment(i + t)).collect());
            }
        }
        Mat::from_rows(rows)
    }

    /// Whether `det M_n != 0`; the zero index is always normal. Cached.
    pub fn is_normal(&self, n: &MultiIndex) -> bool {
        self.assert_index(n);
        if n.is_zero() {
            return true;
        }
        if let Some(&v) = self.normality.lock().unwrap().get(n) {
            return v;
        }
        let v = !linalg::det(&self.moment_matrix(n)).is_zero();
        self.normality.lock().unwrap().insert(n.clone(), v);
        v
    }

    /// The monic type II polynomial of degree `|n|`, from the moment solve
    /// `M_n kappa = -(nu^j_{i + |n|})`.
    pub fn type2_monic(&self, n: &MultiIndex) -> Result<TypeIIPoly, OracleError> {
        self.assert_index(n);
        if n.is_zero() {
            return Ok(TypeIIPoly {
                index: n.clone(),
                poly: Poly::one(),
                normalization: TypeIINorm::Monic,
            });
        }
        if !self.is_normal(n) {
            return Err(OracleError::NotNormal(n.clone()));
        }
        let size = n.total();
        let mut rhs = Vec::with_capacity(size);
        for (j, f) in self.functionals.iter().enumerate() {
            for i in 0..n[j] {
                rhs.push(-f.moment(i + size));
            }
        }
        let lower = linalg::solve(&self.moment_matrix(n), &rhs)
            .expect("nonzero determinant but singular solve");
        let mut coeffs = lower;
        coeffs.push(Rat::one());
        Ok(TypeIIPoly {
            index: n.clone(),
            poly: Poly::from_coeffs(coeffs),
            normalization: TypeIINorm::Monic,
        })
    }

    /// The unique type I vector with `sum_j mu_j[A^(j) x^(|n|-1)] = 1`,
    /// from the transposed moment solve.
    pub fn type1_normalized(&self, n: &MultiIndex) -> Result<TypeIVector, OracleError> {
        self.assert_index(n);
        if n.is_zero() {
            return Err(OracleError::ZeroIndex);
        }
        if !self.is_normal(n) {
            return Err(OracleError::NotNormal(n.clone()));
        }
        let size = n.total();
        // unknowns: coefficient i of A^(j), column-indexed by (j, i);
        // equation p: sum_{j,i} a^(j)_i nu^j_{i+p} = [p == |n| - 1]
        let mut columns = Vec::with_capacity(size);
        for (j, _) in self.functionals.iter().enumerate() {
            for i in 0..n[j] {
                columns.push((j, i));
            }
        }
        let a = Mat::from_fn(size, size, |p, c| {
            let (j, i) = columns[c];
            self.functionals[j].moment(i + p)
        });
        let mut rhs = vec![Rat::zero(); size];
        rhs[size - 1] = Rat::one();
        let sol = linalg::solve(&a, &rhs).expect("nonzero determinant but singular solve");
        let mut polys = vec![Poly::zero(); self.r()];
        for (c, &(j, i)) in columns.iter().enumerate() {
            if !sol[c].is_zero() {
                polys[j] = &polys[j] + &Poly::monomial(i, sol[c].clone());
            }
        }
        Ok(TypeIVector {
            index: n.clone(),
            polys,
            normalization: TypeINorm::Normalized,
        })
    }

    /// Checks `is_normal` for every index in the box `0 <= n <= nmax`;
    /// returns the verdict and the failing indices in lexicographic order.
    pub fn is_perfect_box(&self, nmax: &MultiIndex) -> (bool, Vec<MultiIndex>) {
        self.assert_index(nmax);
        let failing: Vec<MultiIndex> = MultiIndex::box_iter(nmax)
            .filter(|n| !self.is_normal(n))
            .collect();
        (failing.is_empty(), failing)
    }
}

impl std::fmt::Debug for System {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "System(r = {})", self.r())
    }
}
