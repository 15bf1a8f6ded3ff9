//! Second-kind values: the numeric entries placed at denominator roots in
//! the bordered determinants.
//!
//! For a root `w` with prior-occurrence count `l`, the probe polynomial is
//! `l! * psi(x) / (x - w)^(l+1)`, an exact polynomial whenever `l` is below
//! the multiplicity of `w` in `psi`. Applying an inverse functional to the
//! bordering polynomial times this probe gives the entry; at repeated roots
//! the rising `l` plays the role of a derivative order.

use crate::functional::MomentFunctional;
use crate::poly::Poly;
use crate::rat::{factorial, Rat};
use crate::roots::RootList;
use crate::system::{TypeIIPoly, TypeIVector};

/// `l! * psi(x) / (x - w)^(l+1)` as an exact polynomial.
pub(crate) fn probe_kernel(psi: &RootList, w: &Rat, l: usize) -> Poly {
    let denom = RootList::new(vec![(w.clone(), (l + 1) as u32)]).to_poly();
    let q = psi
        .to_poly()
        .divide_exact(&denom)
        .expect("probe order below root multiplicity");
    q.scalar_mul(&factorial(l))
}

/// Type I second-kind values `B(w_k)` at the expanded roots of the common
/// denominator `psi`: sums over components of the inverse functionals
/// applied to `A^(j)` times the probe kernel.
pub fn b_values(checks: &[MomentFunctional], a: &TypeIVector, psi: &RootList) -> Vec<Rat> {
    assert_eq!(checks.len(), a.polys.len(), "b_values: component mismatch");
    psi.expanded()
        .iter()
        .map(|(w, l)| {
            let kernel = probe_kernel(psi, w, *l);
            checks
                .iter()
                .zip(&a.polys)
                .fold(Rat::zero(), |acc, (check, poly)| {
                    &acc + &check.apply(&(poly * &kernel))
                })
        })
        .collect()
}

/// Type II second-kind values `Q^(j)(w_{j,k})` for one component, at the
/// expanded roots of that component's denominator.
pub fn q_values(check: &MomentFunctional, p: &TypeIIPoly, psi_j: &RootList) -> Vec<Rat> {
    psi_j
        .expanded()
        .iter()
        .map(|(w, l)| check.apply(&(&p.poly * &probe_kernel(psi_j, w, *l))))
        .collect()
}

/// Simplified type II values for a pure point-mass (Uvarov) perturbation
/// with simple mass locations: at each distinct root `z_k` of `phi`,
/// `cauchy[P * phi/(x - z_k)] + c_k * P'(z_k)`, where `cauchy` is any
/// inverse of the *base* functional (`phi * cauchy = mu`) and `c_k` is the
/// mass weight at `z_k`. Row operations connect these to [`q_values`], so
/// normalized outputs are unchanged.
pub fn q_values_uvarov_simplified(
    cauchy: &MomentFunctional,
    masses: &[Rat],
    p: &TypeIIPoly,
    phi: &RootList,
) -> Vec<Rat> {
    assert_eq!(
        masses.len(),
        phi.entries().len(),
        "q_values_uvarov_simplified: one mass weight per distinct root"
    );
    assert!(
        phi.entries().iter().all(|(_, m)| *m == 1),
        "q_values_uvarov_simplified: roots must be simple"
    );
    phi.entries()
        .iter()
        .zip(masses)
        .map(|((z, _), c)| {
            let cauchy_part = cauchy.apply(&(&p.poly * &probe_kernel(phi, z, 0)));
            &cauchy_part + &(c * &p.poly.eval(z, 1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::idx;
    use crate::system::{System, TypeINorm};

    fn leb(a: i64, b: i64) -> MomentFunctional {
        MomentFunctional::lebesgue(Rat::from_int(a), Rat::from_int(b))
    }

    #[test]
    fn probe_kernels() {
        // psi = (x-5): probe at (5, 0) is the constant 1
        let psi = RootList::from_ints(&[(5, 1)]);
        assert_eq!(probe_kernel(&psi, &Rat::from_int(5), 0), Poly::one());
        // psi = (x-5)^2: probes are (x-5) and 1! * 1
        let psi2 = RootList::from_ints(&[(5, 2)]);
        assert_eq!(
            probe_kernel(&psi2, &Rat::from_int(5), 0),
            Poly::from_ints(&[-5, 1])
        );
        assert_eq!(probe_kernel(&psi2, &Rat::from_int(5), 1), Poly::one());
    }

    #[test]
    fn degree_one_denominator_reduces_to_plain_application() {
        // psi = (x - w): B is just the sum of the applied functionals
        let psi = RootList::from_ints(&[(7, 1)]);
        let checks = vec![leb(0, 1), leb(2, 3)];
        let a = TypeIVector {
            index: idx(&[1, 1]),
            polys: vec![
                Poly::constant(Rat::new(-1, 2)),
                Poly::constant(Rat::new(1, 2)),
            ],
            normalization: TypeINorm::Normalized,
        };
        let b = b_values(&checks, &a, &psi);
        assert_eq!(b.len(), 1);
        let direct = &checks[0].apply(&a.polys[0]) + &checks[1].apply(&a.polys[1]);
        assert_eq!(b[0], direct);
    }

    #[test]
    fn zero_vector_gives_zero_values() {
        let psi = RootList::from_ints(&[(5, 1), (6, 2)]);
        let checks = vec![leb(0, 1), leb(2, 3)];
        let a = TypeIVector {
            index: idx(&[0, 0]),
            polys: vec![Poly::zero(), Poly::zero()],
            normalization: TypeINorm::Normalized,
        };
        assert!(b_values(&checks, &a, &psi).iter().all(Rat::is_zero));
    }

    #[test]
    fn one_step_geronimus_b_value_with_zero_choice() {
        // system (Lebesgue(0,1), Lebesgue(2,3)), psi_j = x - 5, zero free
        // moments; the inverse functionals coincide with mu~_j, whose zeroth
        // moments are the chosen frees (0), so B_(1,1)(5) = 0
        let s = System::new(vec![leb(0, 1), leb(2, 3)]);
        let psi = RootList::from_ints(&[(5, 1)]);
        let mu_t: Vec<MomentFunctional> = (0..2)
            .map(|j| {
                MomentFunctional::rational_perturb(
                    s.functional(j).clone(),
                    &RootList::empty(),
                    &psi,
                    vec![Rat::zero()],
                )
                .unwrap()
            })
            .collect();
        let a = s.type1_normalized(&idx(&[1, 1])).unwrap();
        assert_eq!(a.polys[0], Poly::constant(Rat::new(-1, 2)));
        let b = b_values(&mu_t, &a, &psi);
        assert_eq!(b, vec![Rat::zero()]);
    }

    #[test]
    fn q_values_examples() {
        // psi_j = (x - w): Q = check[P]; with P = 1 this is the zeroth moment
        let psi = RootList::from_ints(&[(4, 1)]);
        let check = leb(0, 1);
        let p = TypeIIPoly {
            index: idx(&[0]),
            poly: Poly::one(),
            normalization: crate::system::TypeIINorm::Monic,
        };
        assert_eq!(q_values(&check, &p, &psi), vec![Rat::one()]);

        let p2 = TypeIIPoly {
            index: idx(&[2]),
            poly: Poly::from_ints(&[3, -2, 1]),
            normalization: crate::system::TypeIINorm::Monic,
        };
        assert_eq!(q_values(&check, &p2, &psi), vec![check.apply(&p2.poly)]);
    }

    #[test]
    fn simplified_uvarov_is_cauchy_plus_derivative_mass() {
        let phi = RootList::from_ints(&[(5, 1)]);
        let cauchy = MomentFunctional::rational_perturb(
            leb(0, 1),
            &RootList::empty(),
            &phi,
            vec![Rat::zero()],
        )
        .unwrap();
        let p = TypeIIPoly {
            index: idx(&[2]),
            poly: Poly::from_ints(&[1, -4, 1]),
            normalization: crate::system::TypeIINorm::Monic,
        };
        let c = Rat::from_int(3);
        let got = q_values_uvarov_simplified(&cauchy, &[c.clone()], &p, &phi);
        let expected =
            &cauchy.apply(&p.poly) + &(&c * &p.poly.eval(&Rat::from_int(5), 1));
        assert_eq!(got, vec![expected]);
    }
}
