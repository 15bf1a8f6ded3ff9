//! The bordered-determinant constructions.
//!
//! Both constructions share one shape: a first row of bordering polynomials
//! of the *original* system taken along an admissible index sequence, a
//! numeric body made of their evaluations at numerator roots (derivative
//! rows at repeated roots) and of second-kind values at denominator roots,
//! and an exact division of the resulting determinant by the common
//! numerator polynomial. The minor obtained by dropping the first column is
//! the normalizer `D_n`: it vanishes exactly when the perturbed system is
//! not normal at `n`, and otherwise dividing by it yields the normalized
//! (type I) or monic (type II) polynomial of the perturbed system.
//!
//! Index slots that would leave the valid range are encoded as dedicated
//! virtual columns: their polynomial entries are zero and their numeric
//! entries follow explicit power rules (a derivative-adjusted power of the
//! evaluation point).

use crate::functional::MomentFunctional;
use crate::index::MultiIndex;
use crate::linalg::{self, Mat};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::roots::RootList;
use crate::seq::{Direction, IndexSeq, TieBreak};
use crate::system::{System, TypeIINorm, TypeIIPoly, TypeINorm, TypeIVector};

use super::reduce::{
    geronimus_for, make_transformed_system, reduce_type1, reduce_type2, TransformSide,
};
use super::second_kind::{b_values, probe_kernel, q_values, q_values_uvarov_simplified};
use super::{ComponentPerturbation, GeronimusChoices, TransformError, TransformSpec};

/// Raw type I output: the undivided-by-`D_n` vector plus the normalizer.
#[derive(Clone, Debug)]
pub struct TypeITransform {
    pub index: MultiIndex,
    pub raw: TypeIVector,
    pub d_n: Rat,
}

impl TypeITransform {
    /// Divides by `D_n`; `None` exactly when `D_n = 0`.
    pub fn normalized(&self) -> Option<TypeIVector> {
        if self.d_n.is_zero() {
            return None;
        }
        Some(TypeIVector {
            index: self.index.clone(),
            polys: self
                .raw
                .polys
                .iter()
                .map(|p| p.scalar_div(&self.d_n))
                .collect(),
            normalization: TypeINorm::Normalized,
        })
    }
}

/// Raw type II output: the undivided-by-`D_n` polynomial plus the normalizer.
#[derive(Clone, Debug)]
pub struct TypeIITransform {
    pub index: MultiIndex,
    pub raw: TypeIIPoly,
    pub d_n: Rat,
}

impl TypeIITransform {
    /// Divides by `D_n`; `None` exactly when `D_n = 0`.
    pub fn monic(&self) -> Option<TypeIIPoly> {
        if self.d_n.is_zero() {
            return None;
        }
        Some(TypeIIPoly {
            index: self.index.clone(),
            poly: self.raw.poly.scalar_div(&self.d_n),
            normalization: TypeIINorm::Monic,
        })
    }
}

/// Canonical sequence families for the constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    /// Component-ascending path from the canonical start to the target.
    Path,
    /// Frame from the canonical start towards the target.
    Frame(TieBreak),
}

/// Endpoints of the type I sequence: start `m` with `|m| = |n| - M`
/// (componentwise decrements of `n`, largest component first), or the zero
/// index when `|n| <= M`; target `n + N` where `N_j = deg phi*_j`.
fn type1_endpoints(
    n: &MultiIndex,
    psi_degree: usize,
    phi_star: &[RootList],
) -> (MultiIndex, MultiIndex) {
    let n_vec = MultiIndex::new(phi_star.iter().map(RootList::total_degree).collect());
    let bound = n.plus(&n_vec);
    let from = if n.total() > psi_degree {
        let mut m = n.components().to_vec();
        for _ in 0..psi_degree {
            let k = (0..m.len()).max_by_key(|&k| (m[k], std::cmp::Reverse(k))).unwrap();
            m[k] -= 1;
        }
        MultiIndex::new(m)
    } else {
        MultiIndex::zeros(n.len())
    };
    (from, bound)
}

/// Endpoints of the type II sequence: start `m = n + N e_1` and target
/// `n - M*` with `M*_j = min(n_j, M_j)`.
fn type2_endpoints(
    n: &MultiIndex,
    phi_degree: usize,
    psi_star: &[RootList],
) -> (MultiIndex, MultiIndex) {
    let mut from = n.components().to_vec();
    from[0] += phi_degree;
    let target = MultiIndex::new(
        n.components()
            .iter()
            .zip(psi_star)
            .map(|(&nj, psi)| nj.saturating_sub(psi.total_degree()))
            .collect(),
    );
    (MultiIndex::new(from), target)
}

fn build_sequence(
    from: &MultiIndex,
    to: &MultiIndex,
    kind: SeqKind,
) -> Result<IndexSeq, TransformError> {
    let seq = match kind {
        SeqKind::Frame(tie) => IndexSeq::frame(from, to, tie),
        SeqKind::Path => {
            let mut order = Vec::new();
            for k in 0..from.len() {
                order.extend(std::iter::repeat_n(k, from[k].abs_diff(to[k])));
            }
            IndexSeq::path(from, to, &order)
        }
    };
    seq.map_err(|_| TransformError::NotAdmissible {
        from: from.clone(),
        to: to.clone(),
    })
}

/// The canonical type I sequence (path or frame) for `spec` at `n`.
pub fn type1_sequence(
    spec: &TransformSpec,
    n: &MultiIndex,
    kind: SeqKind,
) -> Result<IndexSeq, TransformError> {
    let red = reduce_type1(spec);
    let (from, to) = type1_endpoints(n, red.psi.total_degree(), &red.phi_star);
    build_sequence(&from, &to, kind)
}

/// The canonical type II sequence (path or frame) for `spec` at `n`.
pub fn type2_sequence(
    spec: &TransformSpec,
    n: &MultiIndex,
    kind: SeqKind,
) -> Result<IndexSeq, TransformError> {
    let red = reduce_type2(spec);
    let (from, to) = type2_endpoints(n, red.phi.total_degree(), &red.psi_star);
    build_sequence(&from, &to, kind)
}

fn check_sequence(
    seq: &IndexSeq,
    expected_direction: Direction,
    expected_len: usize,
    expected_start_total: usize,
    from_must_be: Option<&MultiIndex>,
    towards: &MultiIndex,
) -> Result<(), TransformError> {
    if seq.direction() != expected_direction {
        return Err(TransformError::WrongDirection);
    }
    if seq.len() != expected_len {
        return Err(TransformError::SeqLength {
            expected: expected_len,
            got: seq.len(),
        });
    }
    let start = seq.start();
    if start.total() != expected_start_total {
        return Err(TransformError::SeqStart {
            expected_total: expected_start_total,
            got: start.clone(),
        });
    }
    if let Some(required) = from_must_be {
        if start != required {
            return Err(TransformError::SeqStart {
                expected_total: expected_start_total,
                got: start.clone(),
            });
        }
    }
    if seq.is_admissible(start, towards).is_none() {
        return Err(TransformError::NotAdmissible {
            from: start.clone(),
            to: towards.clone(),
        });
    }
    Ok(())
}

/// Derivative-adjusted power rule for virtual slots:
/// `d^l/dz^l z^power` evaluated at `w`.
fn power_rule(power: usize, w: &Rat, l: usize) -> Rat {
    Poly::monomial(power, Rat::one()).eval(w, l)
}

/// Type I construction at `n` along an increasing admissible sequence.
///
/// The sequence must run towards `n + N` (componentwise, `N_j = deg phi*_j`
/// after reduction), starting from any `m` with `|m| = |n| - M`, or from the
/// zero index when `|n| <= M`; in the latter case the leading `M - |n|`
/// columns are virtual and the column at the zero index uses the power rule
/// for its second-kind entries. [`type1_sequence`] builds suitable defaults.
pub fn type1_transform(
    s: &System,
    spec: &TransformSpec,
    n: &MultiIndex,
    seq: &IndexSeq,
    choice: &GeronimusChoices,
) -> Result<TypeITransform, TransformError> {
    let r = s.r();
    if spec.r() != r || n.len() != r {
        return Err(TransformError::ArityMismatch {
            expected: r,
            got: spec.r().min(n.len()),
        });
    }
    let red = reduce_type1(spec);
    let m_deg = red.psi.total_degree();
    let n_total_deg: usize = red.phi_star.iter().map(RootList::total_degree).sum();
    let cols = n_total_deg + m_deg + 1;
    let (_, bound) = type1_endpoints(n, m_deg, &red.phi_star);

    let sentinels = m_deg.saturating_sub(n.total());
    if n.total() > m_deg {
        check_sequence(seq, Direction::Increasing, cols, n.total() - m_deg, None, &bound)?;
    } else {
        let zero = MultiIndex::zeros(r);
        check_sequence(
            seq,
            Direction::Increasing,
            cols - sentinels,
            0,
            Some(&zero),
            &bound,
        )?;
    }

    let checks = geronimus_for(s, spec, TransformSide::TypeI, choice)?;

    // per-slot bordering vectors: None marks a virtual slot (sentinel or the
    // zero index), whose polynomials are all zero
    let mut slots: Vec<Option<TypeIVector>> = Vec::with_capacity(cols);
    for _ in 0..sentinels {
        slots.push(None);
    }
    for entry in seq.entries() {
        if entry.is_zero() {
            slots.push(None);
        } else {
            slots.push(Some(s.type1_normalized(entry)?));
        }
    }

    let zero_poly = Poly::zero();
    let slot_poly = |i: usize, j: usize| -> &Poly {
        slots[i].as_ref().map_or(&zero_poly, |a| &a.polys[j])
    };

    let mut body_rows: Vec<Vec<Rat>> = Vec::with_capacity(cols - 1);
    for c in 0..r {
        for (z, l) in red.phi_star[c].expanded() {
            body_rows.push((0..cols).map(|i| slot_poly(i, c).eval(&z, l)).collect());
        }
    }
    // second-kind rows: virtual slots take the derivative-adjusted power
    // z^(M - |n| - i) in place of a computed value
    let psi_roots = red.psi.expanded();
    if !psi_roots.is_empty() {
        let computed: Vec<Option<Vec<Rat>>> = slots
            .iter()
            .map(|slot| slot.as_ref().map(|a| b_values(&checks, a, &red.psi)))
            .collect();
        for (row_idx, (w, l)) in psi_roots.iter().enumerate() {
            body_rows.push(
                (0..cols)
                    .map(|i| match &computed[i] {
                        Some(vals) => vals[row_idx].clone(),
                        None => {
                            let power = m_deg - n.total() - i;
                            power_rule(power, w, *l)
                        }
                    })
                    .collect(),
            );
        }
    }

    let body = Mat::from_rows(body_rows);
    let weights = linalg::bordered_cofactors(&body);
    let d_n = weights[0].clone();

    let mut polys = Vec::with_capacity(r);
    for j in 0..r {
        let mut acc = Poly::zero();
        for (i, w) in weights.iter().enumerate() {
            if !w.is_zero() {
                acc = &acc + &slot_poly(i, j).scalar_mul(w);
            }
        }
        polys.push(acc.divide_exact(&red.phi_star[j].to_poly())?);
    }

    Ok(TypeITransform {
        index: n.clone(),
        raw: TypeIVector {
            index: n.clone(),
            polys,
            normalization: TypeINorm::Raw,
        },
        d_n,
    })
}

/// How the second-kind rows of the type II construction are produced.
enum QSource<'a> {
    Geronimus(&'a GeronimusChoices),
    UvarovSimplified {
        masses: &'a [Vec<Rat>],
        cauchy: &'a GeronimusChoices,
    },
}

/// Type II construction at `n` along a decreasing admissible sequence.
///
/// The sequence must run from some `m` with `|m| = |n| + N` towards
/// `n - M*` where `M*_j = min(n_j, M_j)` after reduction; when some
/// `n_j < M_j` the trailing columns are virtual and carry Vandermonde-style
/// power entries in that component's second-kind block.
/// [`type2_sequence`] builds suitable defaults.
pub fn type2_transform(
    s: &System,
    spec: &TransformSpec,
    n: &MultiIndex,
    seq: &IndexSeq,
    choice: &GeronimusChoices,
) -> Result<TypeIITransform, TransformError> {
    type2_transform_impl(s, spec, n, seq, QSource::Geronimus(choice))
}

/// Type II construction for a pure point-mass perturbation, with the
/// second-kind rows built from the simplified values of
/// [`q_values_uvarov_simplified`] instead of the full inverse-functional
/// route. `masses[j][k]` is the weight component `j` places at the `k`-th
/// distinct root. The normalized output is unchanged.
pub fn type2_transform_uvarov_simplified(
    s: &System,
    spec: &TransformSpec,
    n: &MultiIndex,
    seq: &IndexSeq,
    masses: &[Vec<Rat>],
    cauchy_choice: &GeronimusChoices,
) -> Result<TypeIITransform, TransformError> {
    type2_transform_impl(
        s,
        spec,
        n,
        seq,
        QSource::UvarovSimplified {
            masses,
            cauchy: cauchy_choice,
        },
    )
}

fn type2_transform_impl(
    s: &System,
    spec: &TransformSpec,
    n: &MultiIndex,
    seq: &IndexSeq,
    q_source: QSource<'_>,
) -> Result<TypeIITransform, TransformError> {
    let r = s.r();
    if spec.r() != r || n.len() != r {
        return Err(TransformError::ArityMismatch {
            expected: r,
            got: spec.r().min(n.len()),
        });
    }
    let red = reduce_type2(spec);
    let n_deg = red.phi.total_degree();
    let m_degs: Vec<usize> = red.psi_star.iter().map(RootList::total_degree).collect();
    let m_star: Vec<usize> = (0..r).map(|j| n[j].min(m_degs[j])).collect();
    let real_cols = n_deg + m_star.iter().sum::<usize>() + 1;
    // virtual columns grouped by component, power ascending within a group
    let virtual_cols: Vec<(usize, usize)> = (0..r)
        .flat_map(|j| (0..m_degs[j] - m_star[j]).map(move |t| (j, t)))
        .collect();
    let cols = real_cols + virtual_cols.len();

    let (_, target) = type2_endpoints(n, n_deg, &red.psi_star);
    check_sequence(
        seq,
        Direction::Decreasing,
        real_cols,
        n.total() + n_deg,
        None,
        &target,
    )?;

    let polys: Vec<TypeIIPoly> = seq
        .entries()
        .iter()
        .map(|entry| s.type2_monic(entry))
        .collect::<Result<_, _>>()?;

    let zero_poly = Poly::zero();
    let slot_poly = |i: usize| -> &Poly {
        if i < real_cols {
            &polys[i].poly
        } else {
            &zero_poly
        }
    };

    let mut body_rows: Vec<Vec<Rat>> = Vec::with_capacity(cols - 1);
    for (z, l) in red.phi.expanded() {
        body_rows.push((0..cols).map(|i| slot_poly(i).eval(&z, l)).collect());
    }

    // per component: second-kind values for every real slot
    let q_per_component: Vec<Vec<Vec<Rat>>> = match q_source {
        QSource::Geronimus(choice) => {
            let checks = geronimus_for(s, spec, TransformSide::TypeII, choice)?;
            (0..r)
                .map(|j| {
                    polys
                        .iter()
                        .map(|p| q_values(&checks[j], p, &red.psi_star[j]))
                        .collect()
                })
                .collect()
        }
        QSource::UvarovSimplified { masses, cauchy } => {
            validate_uvarov(spec, &red.phi, masses)?;
            let arities = vec![n_deg; r];
            let cauchy_free = cauchy.resolve(&arities)?;
            let cauchy_fns: Vec<MomentFunctional> = s
                .functionals()
                .iter()
                .zip(cauchy_free)
                .map(|(f, free)| {
                    MomentFunctional::rational_perturb(
                        f.clone(),
                        &RootList::empty(),
                        &red.phi,
                        free,
                    )
                    .map_err(TransformError::from)
                })
                .collect::<Result<_, _>>()?;
            (0..r)
                .map(|j| {
                    polys
                        .iter()
                        .map(|p| q_values_uvarov_simplified(&cauchy_fns[j], &masses[j], p, &red.phi))
                        .collect()
                })
                .collect()
        }
    };

    for j in 0..r {
        for (row_idx, (w, l)) in red.psi_star[j].expanded().iter().enumerate() {
            body_rows.push(
                (0..cols)
                    .map(|i| {
                        if i < real_cols {
                            q_per_component[j][i][row_idx].clone()
                        } else {
                            let (vj, t) = virtual_cols[i - real_cols];
                            if vj == j {
                                power_rule(t, w, *l)
                            } else {
                                Rat::zero()
                            }
                        }
                    })
                    .collect(),
            );
        }
    }

    let body = Mat::from_rows(body_rows);
    let weights = linalg::bordered_cofactors(&body);
    let d_n = weights[0].clone();

    let mut acc = Poly::zero();
    for (i, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            acc = &acc + &slot_poly(i).scalar_mul(w);
        }
    }
    let raw = acc.divide_exact(&red.phi.to_poly())?;

    Ok(TypeIITransform {
        index: n.clone(),
        raw: TypeIIPoly {
            index: n.clone(),
            poly: raw,
            normalization: TypeIINorm::Raw,
        },
        d_n,
    })
}

/// The simplified second-kind route needs a pure point-mass shape: every
/// component's numerator and denominator agree and equal the common
/// numerator, all roots simple, one mass weight per distinct root.
fn validate_uvarov(
    spec: &TransformSpec,
    phi: &RootList,
    masses: &[Vec<Rat>],
) -> Result<(), TransformError> {
    if masses.len() != spec.r() {
        return Err(TransformError::ArityMismatch {
            expected: spec.r(),
            got: masses.len(),
        });
    }
    if phi.entries().iter().any(|(_, m)| *m != 1) {
        return Err(TransformError::NotUvarov(
            "mass locations must be simple roots".into(),
        ));
    }
    for (j, c) in spec.components().iter().enumerate() {
        if c.phi != c.psi || c.phi != *phi {
            return Err(TransformError::NotUvarov(format!(
                "component {j} does not have matching numerator and denominator roots"
            )));
        }
        if masses[j].len() != phi.entries().len() {
            return Err(TransformError::NotUvarov(format!(
                "component {j} needs one mass weight per distinct root"
            )));
        }
    }
    Ok(())
}

/// Builds the point-mass perturbation spec for masses `masses[j][k]` placed
/// at the `k`-th distinct (simple) root: the free moments of each perturbed
/// functional are the base moments plus the mass contributions.
pub fn uvarov_spec(
    s: &System,
    roots: &RootList,
    masses: &[Vec<Rat>],
) -> Result<TransformSpec, TransformError> {
    if masses.len() != s.r() {
        return Err(TransformError::ArityMismatch {
            expected: s.r(),
            got: masses.len(),
        });
    }
    if roots.entries().iter().any(|(_, m)| *m != 1) {
        return Err(TransformError::NotUvarov(
            "mass locations must be simple roots".into(),
        ));
    }
    let deg = roots.total_degree();
    let components = s
        .functionals()
        .iter()
        .zip(masses)
        .map(|(f, mass_row)| {
            if mass_row.len() != roots.entries().len() {
                return Err(TransformError::NotUvarov(
                    "one mass weight per distinct root required".into(),
                ));
            }
            let free = (0..deg)
                .map(|i| {
                    let mass_part = roots.entries().iter().zip(mass_row).fold(
                        Rat::zero(),
                        |acc, ((z, _), c)| &acc + &(c * &z.pow(i as u32)),
                    );
                    &f.moment(i) + &mass_part
                })
                .collect();
            Ok(ComponentPerturbation {
                phi: roots.clone(),
                psi: roots.clone(),
                free,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TransformSpec::new(components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::idx;

    fn leb(a: i64, b: i64) -> MomentFunctional {
        MomentFunctional::lebesgue(Rat::from_int(a), Rat::from_int(b))
    }

    fn angelesco() -> System {
        System::new(vec![leb(0, 1), leb(2, 3)])
    }

    fn christoffel_both(root: i64) -> TransformSpec {
        TransformSpec::new(vec![
            ComponentPerturbation::christoffel(RootList::from_ints(&[(root, 1)])),
            ComponentPerturbation::christoffel(RootList::from_ints(&[(root, 1)])),
        ])
    }

    #[test]
    fn worked_type2_one_step_christoffel() {
        // common numerator x + 1 on the Angelesco pair at n = (1,0), along
        // the path (2,0),(1,0): the quotient is -(3/2)x + 5/6, the minor is
        // P_(1,0)(-1) = -3/2, and the monic result is x - 5/9
        let s = angelesco();
        let spec = christoffel_both(-1);
        let n = idx(&[1, 0]);
        let seq = IndexSeq::path(&idx(&[2, 0]), &idx(&[1, 0]), &[0]).unwrap();
        let out = type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
        assert_eq!(out.d_n, Rat::new(-3, 2));
        assert_eq!(
            out.raw.poly,
            Poly::from_coeffs(vec![Rat::new(5, 6), Rat::new(-3, 2)])
        );
        let monic = out.monic().unwrap();
        assert_eq!(
            monic.poly,
            Poly::from_coeffs(vec![Rat::new(-5, 9), Rat::one()])
        );
        // oracle route: moments of (x+1) Lebesgue(0,1) give the same monic
        let transformed = make_transformed_system(&s, &spec).unwrap();
        assert_eq!(transformed.type2_monic(&n).unwrap().poly, monic.poly);
    }

    #[test]
    fn type2_default_sequences_cover_box() {
        let s = angelesco();
        let spec = christoffel_both(-1);
        let transformed = make_transformed_system(&s, &spec).unwrap();
        for n in MultiIndex::box_iter(&idx(&[2, 2])) {
            for kind in [SeqKind::Path, SeqKind::Frame(TieBreak::Interleaved)] {
                let seq = type2_sequence(&spec, &n, kind).unwrap();
                let out =
                    type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
                let monic = out.monic().expect("normal index");
                assert_eq!(monic.poly, transformed.type2_monic(&n).unwrap().poly);
            }
        }
    }

    #[test]
    fn type1_one_step_partial_christoffel() {
        // numerator x + 1 on the first component only: 2x2 bordered shape
        let s = angelesco();
        let spec = TransformSpec::new(vec![
            ComponentPerturbation::christoffel(RootList::from_ints(&[(-1, 1)])),
            ComponentPerturbation::identity(),
        ]);
        let n = idx(&[1, 1]);
        let seq = type1_sequence(&spec, &n, SeqKind::Path).unwrap();
        assert_eq!(seq.len(), 2);
        let out = type1_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
        let normalized = out.normalized().expect("normal index");
        let transformed = make_transformed_system(&s, &spec).unwrap();
        let oracle = transformed.type1_normalized(&n).unwrap();
        assert_eq!(normalized.polys, oracle.polys);
    }

    #[test]
    fn type1_one_step_full_geronimus() {
        // denominators x - 5 on both components, zero free moments
        let s = angelesco();
        let spec = TransformSpec::new(vec![
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
        ]);
        let n = idx(&[1, 1]);
        let seq = type1_sequence(&spec, &n, SeqKind::Frame(TieBreak::Interleaved)).unwrap();
        let out = type1_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
        let normalized = out.normalized().expect("normal index");
        let transformed = make_transformed_system(&s, &spec).unwrap();
        let oracle = transformed.type1_normalized(&n).unwrap();
        assert_eq!(normalized.polys, oracle.polys);
    }

    #[test]
    fn type1_virtual_columns_at_small_total() {
        // |n| = 1 = deg psi: the sequence starts at the zero index and the
        // first column is virtual with second-kind entry 1
        let s = angelesco();
        let spec = TransformSpec::new(vec![
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
        ]);
        let transformed = make_transformed_system(&s, &spec).unwrap();
        for n in [idx(&[1, 0]), idx(&[0, 1])] {
            let seq = type1_sequence(&spec, &n, SeqKind::Frame(TieBreak::Interleaved)).unwrap();
            assert_eq!(seq.start(), &idx(&[0, 0]));
            let out = type1_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
            let normalized = out.normalized().expect("normal index");
            let oracle = transformed.type1_normalized(&n).unwrap();
            assert_eq!(normalized.polys, oracle.polys, "n = {n}");
        }
    }

    #[test]
    fn type2_virtual_columns_for_small_components() {
        // pure one-step denominator on both components; at n = (1,0) the
        // second component contributes a 1x1 Vandermonde block
        let s = angelesco();
        let spec = TransformSpec::new(vec![
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
            ComponentPerturbation::geronimus(RootList::from_ints(&[(5, 1)]), vec![Rat::one()]),
        ]);
        let transformed = make_transformed_system(&s, &spec).unwrap();
        for n in [idx(&[1, 0]), idx(&[0, 1]), idx(&[1, 1]), idx(&[2, 1])] {
            let seq = type2_sequence(&spec, &n, SeqKind::Frame(TieBreak::Interleaved)).unwrap();
            let out = type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
            let monic = out.monic().expect("normal index");
            assert_eq!(
                monic.poly,
                transformed.type2_monic(&n).unwrap().poly,
                "n = {n}"
            );
        }
    }

    #[test]
    fn geronimus_choice_does_not_change_normalized_output() {
        // r = 1 rational perturbation with both numerator and denominator:
        // second-kind rows exist, so the inverse-functional choice matters
        // for raw values but not for the monic output
        let s = System::new(vec![leb(0, 1)]);
        let spec = TransformSpec::new(vec![ComponentPerturbation {
            phi: RootList::from_ints(&[(2, 1)]),
            psi: RootList::from_ints(&[(3, 1)]),
            free: vec![Rat::one()],
        }]);
        let transformed = make_transformed_system(&s, &spec).unwrap();
        let n = idx(&[2]);
        let seq = type2_sequence(&spec, &n, SeqKind::Path).unwrap();
        let zeros = type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
        let other = type2_transform(
            &s,
            &spec,
            &n,
            &seq,
            &GeronimusChoices::Explicit(vec![vec![Rat::new(7, 3)]]),
        )
        .unwrap();
        assert_ne!(zeros.d_n, other.d_n);
        let oracle = transformed.type2_monic(&n).unwrap().poly;
        assert_eq!(zeros.monic().unwrap().poly, oracle);
        assert_eq!(other.monic().unwrap().poly, oracle);
    }

    #[test]
    fn dn_vanishes_exactly_at_non_normal_indices() {
        // denominator x - 3 with free moment 0 kills the zeroth moment, so
        // n = (1) is not normal for the perturbed functional
        let s = System::new(vec![leb(0, 1)]);
        let spec = TransformSpec::new(vec![ComponentPerturbation::geronimus(
            RootList::from_ints(&[(3, 1)]),
            vec![Rat::zero()],
        )]);
        let transformed = make_transformed_system(&s, &spec).unwrap();
        assert!(!transformed.is_normal(&idx(&[1])));
        let n = idx(&[1]);
        let seq = type2_sequence(&spec, &n, SeqKind::Path).unwrap();
        let out = type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
        assert!(out.d_n.is_zero());
        assert!(out.monic().is_none());
    }

    #[test]
    fn sequence_validation_errors() {
        let s = angelesco();
        let spec = christoffel_both(-1);
        let n = idx(&[1, 1]);
        // wrong length
        let short = IndexSeq::path(&idx(&[2, 1]), &idx(&[2, 1]), &[]).unwrap();
        assert!(matches!(
            type2_transform(&s, &spec, &n, &short, &GeronimusChoices::Zeros),
            Err(TransformError::SeqLength { .. })
        ));
        // wrong start total
        let bad_start = IndexSeq::path(&idx(&[2, 2]), &idx(&[2, 1]), &[1]).unwrap();
        assert!(matches!(
            type2_transform(&s, &spec, &n, &bad_start, &GeronimusChoices::Zeros),
            Err(TransformError::SeqStart { .. })
        ));
        // not admissible: strays outside the box spanned by the endpoints
        let stray = IndexSeq::explicit(
            Direction::Decreasing,
            vec![idx(&[2, 1]), idx(&[3, 1])],
        )
        .unwrap();
        assert!(matches!(
            type2_transform(&s, &spec, &n, &stray, &GeronimusChoices::Zeros),
            Err(TransformError::NotAdmissible { .. })
        ));
        // wrong direction
        let incr = IndexSeq::path(&idx(&[2, 1]), &idx(&[3, 1]), &[0]).unwrap();
        assert!(matches!(
            type2_transform(&s, &spec, &n, &incr, &GeronimusChoices::Zeros),
            Err(TransformError::WrongDirection)
        ));
    }

    #[test]
    fn uvarov_spec_free_moments() {
        // masses (1, 2) at x = 5: free moments are nu_0 + c
        let s = angelesco();
        let roots = RootList::from_ints(&[(5, 1)]);
        let spec = uvarov_spec(&s, &roots, &[vec![Rat::one()], vec![Rat::from_int(2)]]).unwrap();
        assert_eq!(spec.component(0).free, vec![Rat::from_int(2)]);
        assert_eq!(spec.component(1).free, vec![Rat::from_int(3)]);
        // the transformed moments match base-plus-mass directly
        let t = make_transformed_system(&s, &spec).unwrap();
        let direct = MomentFunctional::uvarov_of(
            leb(2, 3),
            vec![(Rat::from_int(5), Rat::from_int(2))],
        );
        for k in 0..8 {
            assert_eq!(t.functional(1).moment(k), direct.moment(k));
        }
    }

    #[test]
    fn uvarov_simplified_matches_full_route() {
        let s = angelesco();
        let roots = RootList::from_ints(&[(5, 1)]);
        let masses = vec![vec![Rat::one()], vec![Rat::from_int(2)]];
        let spec = uvarov_spec(&s, &roots, &masses).unwrap();
        let transformed = make_transformed_system(&s, &spec).unwrap();
        for n in MultiIndex::box_iter(&idx(&[2, 2])) {
            let seq = type2_sequence(&spec, &n, SeqKind::Frame(TieBreak::Interleaved)).unwrap();
            let full =
                type2_transform(&s, &spec, &n, &seq, &GeronimusChoices::Zeros).unwrap();
            let simplified = type2_transform_uvarov_simplified(
                &s,
                &spec,
                &n,
                &seq,
                &masses,
                &GeronimusChoices::Zeros,
            )
            .unwrap();
            let oracle = transformed.type2_monic(&n).unwrap().poly;
            assert_eq!(full.monic().unwrap().poly, oracle, "full at {n}");
            assert_eq!(simplified.monic().unwrap().poly, oracle, "simplified at {n}");
        }
    }
}
