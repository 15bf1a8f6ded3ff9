//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored ascending by degree with no trailing zeros; the
//! zero polynomial is the empty list and its degree is `None` (a distinguished
//! sentinel, so degree bounds like `deg <= n - 1` with `n = 0` read
//! unambiguously as "must be the zero polynomial").

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::rat::{falling_factorial, Rat};

/// A dense univariate polynomial over [`Rat`].
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

/// Exact division was requested but the divisor does not divide the dividend.
///
/// In the determinant formulas this signals a violated divisibility guarantee,
/// which means either a hypothesis of the construction fails or there is a bug
/// upstream; it is never expected on valid inputs.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("exact polynomial division left a nonzero remainder")]
pub struct NonzeroRemainder;

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rat::is_one)
    }

    /// Evaluates the `order`-th derivative at `x` (order 0 is plain
    /// evaluation), exactly.
    pub fn eval(&self, x: &Rat, order: usize) -> Rat {
        let mut acc = Rat::zero();
        let mut x_pow = Rat::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i >= order {
                let scale = falling_factorial(i, order);
                acc = &acc + &(&(c * &scale) * &x_pow);
                x_pow = &x_pow * x;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rat::from_int(i as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scalar_mul(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn scalar_div(&self, s: &Rat) -> Poly {
        assert!(!s.is_zero(), "Poly::scalar_div: zero divisor");
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / s).collect(),
        }
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d_deg = divisor.degree().expect("Poly::div_rem: division by zero");
        let s_deg = match self.degree() {
            Some(d) => d,
            None => return (Poly::zero(), Poly::zero()),
        };
        if s_deg < d_deg {
            return (Poly::zero(), self.clone());
        }
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); s_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let head = rem[i + d_deg].clone();
            if head.is_zero() {
                continue;
            }
            let q = &head / &lc;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(dc * &q);
            }
            quot[i] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a
    /// remainder.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Poly, NonzeroRemainder> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(NonzeroRemainder)
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add, add; Sub, sub; Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Renders in descending powers, e.g. `x^2 - x + 1/6`. Non-unit rational
    /// coefficients on powers are parenthesized: `(4/9)x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    if abs.denom() == &num_bigint::BigInt::from(1) {
                        write!(f, "{}", abs)?;
                    } else {
                        write!(f, "({})", abs)?;
                    }
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
