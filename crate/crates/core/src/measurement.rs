//! Von Neumann measurements on the qubit factor and the conditional
//! ensembles they induce on the spin-j side.
//!
//! A measurement is parameterized by `(t, y)` with `t^2 + |y|^2 = 1` through
//! the rotation `V = t I + i y . sigma`; its projectors are `B_k = V Pi_k V+`
//! and the measurement axis is the Bloch vector of `B_0`. Two routes produce
//! the post-measurement ensemble: the closed form `I/(2j+1) -+ N` with the
//! tridiagonal matrix `N`, and the generic partial-trace pipeline that works
//! for any bipartite density operator. They must agree on this family, which
//! is what the test suites pin down.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::angular::SpinLabel;
use crate::error::Error;
use crate::matrix::{ComplexMatrix, DENSITY_TOL, kron, partial_trace_b, paulis};
use crate::states::Su2InvariantState;

/// Allowed deviation of `t^2 + |y|^2` from 1.
pub const FRAME_NORM_TOL: f64 = 1e-12;

/// Outcomes with probability below this are dropped from numeric ensembles.
pub const PROBABILITY_FLOOR: f64 = 1e-14;

/// Parameters `(t, y1, y2, y3)` of the qubit rotation `V = t I + i y . sigma`,
/// constrained to the unit 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementFrame {
    t: f64,
    y: [f64; 3],
}

impl MeasurementFrame {
    pub fn new(t: f64, y1: f64, y2: f64, y3: f64) -> Result<Self, Error> {
        let norm_sq = t * t + y1 * y1 + y2 * y2 + y3 * y3;
        if (norm_sq - 1.0).abs() > FRAME_NORM_TOL {
            return Err(Error::InvalidArgument(format!(
                "t^2 + |y|^2 = {norm_sq} violates the unit-norm constraint"
            )));
        }
        Ok(Self { t, y: [y1, y2, y3] })
    }

    /// The frame with `V = I`, measuring along the z axis.
    pub fn z_axis() -> Self {
        Self {
            t: 1.0,
            y: [0.0; 3],
        }
    }

    pub fn t(self) -> f64 {
        self.t
    }

    pub fn y(self) -> [f64; 3] {
        self.y
    }

    /// The 2x2 rotation `V = t I + i y . sigma`.
    pub fn rotation(self) -> ComplexMatrix {
        let [sx, sy, sz] = paulis();
        let mut v = ComplexMatrix::identity(2).scaled_re(self.t);
        for (c, s) in self.y.iter().zip([sx, sy, sz]) {
            v = &v + &s.scaled(Complex64::new(0.0, *c));
        }
        v
    }

    /// `count` frames drawn uniformly on the 3-sphere: four standard normal
    /// draws, normalized. Deterministic for a given seed.
    pub fn sample_many(seed: u64, count: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut frames = Vec::with_capacity(count);
        while frames.len() < count {
            let g: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
            let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            frames.push(Self {
                t: g[0] / norm,
                y: [g[1] / norm, g[2] / norm, g[3] / norm],
            });
        }
        frames
    }
}

/// The measurement axis on the Bloch sphere; always unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
}

/// The Bloch axis of `B_0 = V Pi_0 V+`, i.e. the unit vector z with
/// `V |0><0| V+ = (I + z . sigma)/2`.
pub fn bloch_of(frame: MeasurementFrame) -> BlochVector {
    let t = frame.t();
    let [y1, y2, y3] = frame.y();
    BlochVector {
        z1: 2.0 * (-t * y2 + y1 * y3),
        z2: 2.0 * (t * y1 + y2 * y3),
        z3: t * t + y3 * y3 - y1 * y1 - y2 * y2,
    }
}

/// The projector pair `B_k = V Pi_k V+`, `k = 0, 1`, with `Pi_0 = |0><0|`
/// on the `|+1/2>`-first qubit basis.
pub fn projectors(frame: MeasurementFrame) -> (ComplexMatrix, ComplexMatrix) {
    let v = frame.rotation();
    let vd = v.adjoint();
    let pi0 = ComplexMatrix::from_real_diag(&[1.0, 0.0]);
    let pi1 = ComplexMatrix::from_real_diag(&[0.0, 1.0]);
    (&(&v * &pi0) * &vd, &(&v * &pi1) * &vd)
}

/// The post-measurement ensemble `{ (p_k, rho_{A|k}) }` on the spin-j side.
#[derive(Debug, Clone)]
pub struct ConditionalEnsemble {
    entries: Vec<(f64, ComplexMatrix)>,
}

impl ConditionalEnsemble {
    /// Validates that the probabilities sum to one and every conditional
    /// state is a density operator.
    pub fn new(entries: Vec<(f64, ComplexMatrix)>) -> Result<Self, Error> {
        let total: f64 = entries.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "ensemble probabilities sum to {total}, not 1"
            )));
        }
        for (k, (p, rho)) in entries.iter().enumerate() {
            if *p < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "negative probability p_{k} = {p}"
                )));
            }
            rho.validate_density(DENSITY_TOL)?;
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(f64, ComplexMatrix)] {
        &self.entries
    }

    /// The ensemble average `sum_k p_k rho_{A|k}`.
    pub fn average(&self) -> ComplexMatrix {
        let dim = self.entries[0].1.rows();
        let mut avg = ComplexMatrix::zeros(dim, dim);
        for (p, rho) in &self.entries {
            avg = &avg + &rho.scaled_re(*p);
        }
        avg
    }
}

/// The matrix `N` of the closed-form conditional states, built entry by
/// entry: diagonal `z3 m c`, first off-diagonals
/// `(z1 +- i z2)/2 sqrt(j(j+1) - m(m+1)) c`, with the scalar
/// `c = (2Fj + F - j) / (j(j+1)(2j+1))`. Equal to `c (z . S)` for the spin-j
/// operator triple, and zero when `F = j/(2j+1)`.
pub fn n_matrix(s: &Su2InvariantState, z: &BlochVector) -> ComplexMatrix {
    let j = s.j();
    let two_j = j.two_j() as i64;
    // c = 2 (2 F (two_j + 1) - two_j) / (two_j (two_j + 2) (two_j + 1))
    let numer = 2.0 * s.f() * (two_j + 1) as f64 - two_j as f64;
    let c = 2.0 * numer / (two_j * (two_j + 2) * (two_j + 1)) as f64;

    let n = j.dim();
    let mut out = ComplexMatrix::zeros(n, n);
    let upper = Complex64::new(z.z1, z.z2) * 0.5 * c;
    for (k, two_m) in j.two_m_values().enumerate() {
        out[(k, k)] = Complex64::new(z.z3 * (two_m as f64 / 2.0) * c, 0.0);
        if k + 1 < n {
            let two_m = two_m as i64;
            let ladder = 0.5 * ((two_j * (two_j + 2) - two_m * (two_m + 2)) as f64).sqrt();
            // |m><m+1| sits above the diagonal in the m-ascending basis.
            out[(k, k + 1)] = upper * ladder;
            out[(k + 1, k)] = upper.conj() * ladder;
        }
    }
    out
}

/// Closed-form ensemble: two outcomes with probability 1/2 each and
/// conditional states `I/(2j+1) - N` and `I/(2j+1) + N`.
pub fn conditional_ensemble_closed(
    s: &Su2InvariantState,
    frame: MeasurementFrame,
) -> ConditionalEnsemble {
    let j = s.j();
    let n = n_matrix(s, &bloch_of(frame));
    let uniform = ComplexMatrix::identity(j.dim()).scaled_re(1.0 / j.dim() as f64);
    ConditionalEnsemble::new(vec![(0.5, &uniform - &n), (0.5, &uniform + &n)])
        .expect("closed-form conditional states are densities for F in [0, 1]")
}

/// Generic ensemble from the measurement pipeline: projects with
/// `I (x) B_k`, reads `p_k` off the trace and the conditional state off the
/// partial trace over the qubit. Outcomes below [`PROBABILITY_FLOOR`] are
/// dropped and the remaining probabilities renormalized.
pub fn conditional_ensemble_numeric(
    rho_ab: &ComplexMatrix,
    frame: MeasurementFrame,
    j: SpinLabel,
) -> Result<ConditionalEnsemble, Error> {
    let dim = j.coupled_dim();
    if rho_ab.rows() != dim || rho_ab.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "expected a {dim}x{dim} state for two_j = {}, got {}x{}",
            j.two_j(),
            rho_ab.rows(),
            rho_ab.cols()
        )));
    }
    rho_ab.validate_density(DENSITY_TOL)?;

    let id_a = ComplexMatrix::identity(j.dim());
    let (b0, b1) = projectors(frame);
    let mut entries = Vec::with_capacity(2);
    for b in [b0, b1] {
        let proj = kron(&id_a, &b);
        let unnormalized = &(&proj * rho_ab) * &proj;
        let p = unnormalized.trace().re;
        if p < PROBABILITY_FLOOR {
            continue;
        }
        let rho_cond = partial_trace_b(&unnormalized, j.dim(), 2)?.scaled_re(1.0 / p);
        entries.push((p, rho_cond));
    }
    // Projective two-outcome measurements lose at most ~1e-14 of mass here.
    let total: f64 = entries.iter().map(|(p, _)| p).sum();
    for (p, _) in &mut entries {
        *p /= total;
    }
    ConditionalEnsemble::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::eigvals_hermitian;
    use crate::states::check_su2_invariance;

    fn state(two_j: u32, f: f64) -> Su2InvariantState {
        Su2InvariantState::new(SpinLabel::new(two_j).unwrap(), f).unwrap()
    }

    #[test]
    fn frame_norm_is_enforced() {
        assert!(MeasurementFrame::new(1.0, 0.1, 0.0, 0.0).is_err());
        assert!(MeasurementFrame::new(0.6, 0.8, 0.0, 0.0).is_ok());
    }

    #[test]
    fn identity_frame_measures_z() {
        let z = bloch_of(MeasurementFrame::z_axis());
        assert_eq!((z.z1, z.z2, z.z3), (0.0, 0.0, 1.0));
    }

    #[test]
    fn pure_y_rotation_flips_the_axis() {
        let z = bloch_of(MeasurementFrame::new(0.0, 0.0, 1.0, 0.0).unwrap());
        assert!((z.z1).abs() < 1e-15 && (z.z2).abs() < 1e-15);
        assert!((z.z3 + 1.0).abs() < 1e-15);
    }

    #[test]
    fn bloch_axis_reproduces_rotated_projector() {
        let [sx, sy, sz] = paulis();
        for frame in MeasurementFrame::sample_many(11, 25) {
            let z = bloch_of(frame);
            assert!((z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3 - 1.0).abs() < 1e-12);
            let (b0, _) = projectors(frame);
            let half = 0.5;
            let expected = &(&(&ComplexMatrix::identity(2) + &sx.scaled_re(z.z1))
                + &sy.scaled_re(z.z2))
                + &sz.scaled_re(z.z3);
            assert!(b0.max_abs_diff(&expected.scaled_re(half)) < 1e-12);
        }
    }

    #[test]
    fn projector_algebra_holds_for_random_frames() {
        for frame in MeasurementFrame::sample_many(3, 25) {
            let (b0, b1) = projectors(frame);
            assert!((&b0 + &b1).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
            assert!((&b0 * &b0).max_abs_diff(&b0) < 1e-12);
            assert!((&b1 * &b1).max_abs_diff(&b1) < 1e-12);
            assert!((&b0 * &b1).frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn identity_frame_projects_computational_basis() {
        let (b0, b1) = projectors(MeasurementFrame::z_axis());
        assert!(b0.max_abs_diff(&ComplexMatrix::from_real_diag(&[1.0, 0.0])) < 1e-15);
        assert!(b1.max_abs_diff(&ComplexMatrix::from_real_diag(&[0.0, 1.0])) < 1e-15);
    }

    #[test]
    fn x_axis_frame_gives_sigma_x_projectors() {
        // t = 1/sqrt(2), y2 = -1/sqrt(2) maps the axis to +x:
        // z1 = 2(-t y2) = 1, z2 = z3 = 0.
        let r = 0.5f64.sqrt();
        let frame = MeasurementFrame::new(r, 0.0, -r, 0.0).unwrap();
        let z = bloch_of(frame);
        assert!((z.z1 - 1.0).abs() < 1e-14 && z.z2.abs() < 1e-14 && z.z3.abs() < 1e-14);
        let (b0, b1) = projectors(frame);
        let [sx, _, _] = paulis();
        let plus = (&ComplexMatrix::identity(2) + &sx).scaled_re(0.5);
        let minus = (&ComplexMatrix::identity(2) - &sx).scaled_re(0.5);
        assert!(b0.max_abs_diff(&plus) < 1e-14);
        assert!(b1.max_abs_diff(&minus) < 1e-14);
    }

    #[test]
    fn n_vanishes_at_the_zero_point() {
        let s = state(3, 3.0 / 8.0); // F = j/(2j+1) for j = 3/2
        let z = BlochVector {
            z1: 0.0,
            z2: 0.0,
            z3: 1.0,
        };
        assert!(n_matrix(&s, &z).frobenius_norm() < 1e-15);
    }

    #[test]
    fn n_for_singlet_along_z() {
        let s = state(1, 1.0);
        let z = BlochVector {
            z1: 0.0,
            z2: 0.0,
            z3: 1.0,
        };
        let n = n_matrix(&s, &z);
        assert!(n.max_abs_diff(&ComplexMatrix::from_real_diag(&[-0.5, 0.5])) < 1e-14);
    }

    #[test]
    fn n_matches_spin_operator_combination() {
        use crate::angular::spin_operators;
        for (two_j, f) in [(1u32, 0.0), (2, 0.3), (3, 0.9), (4, 1.0)] {
            let s = state(two_j, f);
            for frame in MeasurementFrame::sample_many(17, 10) {
                let z = bloch_of(frame);
                let (sx, sy, sz) = spin_operators(s.j());
                let two_j_i = two_j as i64;
                let c = 2.0 * (2.0 * f * (two_j_i + 1) as f64 - two_j_i as f64)
                    / (two_j_i * (two_j_i + 2) * (two_j_i + 1)) as f64;
                let combo = (&(&sx.scaled_re(z.z1) + &sy.scaled_re(z.z2)) + &sz.scaled_re(z.z3))
                    .scaled_re(c);
                assert!(n_matrix(&s, &z).max_abs_diff(&combo) < 1e-12);
            }
        }
    }

    #[test]
    fn n_eigenvalues_are_the_conditional_spectrum_offsets() {
        // eig(N) = +-(j - n)|c| |z|, i.e. the conditional eigenvalues shifted
        // by -1/(2j+1).
        for (two_j, f) in [(1u32, 0.9), (2, 0.1), (3, 1.0), (4, 0.6)] {
            let s = state(two_j, f);
            for frame in MeasurementFrame::sample_many(47, 5) {
                let n = n_matrix(&s, &bloch_of(frame));
                let eigs = eigvals_hermitian(&n).unwrap();
                let uniform = 1.0 / s.j().dim() as f64;
                let mut offsets: Vec<f64> = crate::holevo::conditional_spectrum(&s)
                    .values()
                    .iter()
                    .map(|v| v - uniform)
                    .collect();
                offsets.sort_by(f64::total_cmp);
                for (got, want) in eigs.iter().zip(&offsets) {
                    assert!((got - want).abs() < 1e-12, "two_j={two_j}, F={f}");
                }
            }
        }
    }

    #[test]
    fn closed_ensemble_at_zero_point_is_uniform() {
        let s = state(2, 1.0 / 3.0);
        let ensemble = conditional_ensemble_closed(&s, MeasurementFrame::z_axis());
        let uniform = ComplexMatrix::identity(3).scaled_re(1.0 / 3.0);
        for (p, rho) in ensemble.entries() {
            assert_eq!(*p, 0.5);
            assert!(rho.max_abs_diff(&uniform) < 1e-14);
        }
    }

    #[test]
    fn closed_ensemble_for_singlet_along_z() {
        let ensemble = conditional_ensemble_closed(&state(1, 1.0), MeasurementFrame::z_axis());
        let [(p0, rho0), (p1, rho1)] = ensemble.entries() else {
            panic!("expected two outcomes")
        };
        assert_eq!((*p0, *p1), (0.5, 0.5));
        assert!(rho0.max_abs_diff(&ComplexMatrix::from_real_diag(&[1.0, 0.0])) < 1e-14);
        assert!(rho1.max_abs_diff(&ComplexMatrix::from_real_diag(&[0.0, 1.0])) < 1e-14);
    }

    #[test]
    fn ensemble_average_is_maximally_mixed() {
        for (two_j, f) in [(1u32, 0.2), (3, 0.8), (4, 0.5)] {
            let s = state(two_j, f);
            for frame in MeasurementFrame::sample_many(5, 5) {
                let avg = conditional_ensemble_closed(&s, frame).average();
                let uniform =
                    ComplexMatrix::identity(s.j().dim()).scaled_re(1.0 / s.j().dim() as f64);
                assert!(avg.max_abs_diff(&uniform) < 1e-13);
            }
        }
    }

    #[test]
    fn numeric_matches_closed_on_the_family() {
        for (two_j, f) in [(1u32, 0.0), (1, 1.0), (2, 0.4), (3, 0.7), (4, 0.25)] {
            let s = state(two_j, f);
            let rho = s.density_matrix();
            for frame in MeasurementFrame::sample_many(23, 8) {
                let closed = conditional_ensemble_closed(&s, frame);
                let numeric = conditional_ensemble_numeric(&rho, frame, s.j()).unwrap();
                assert_eq!(numeric.entries().len(), 2);
                for ((pc, rc), (pn, rn)) in closed.entries().iter().zip(numeric.entries()) {
                    assert!((pc - pn).abs() < 1e-12, "p gap at two_j={two_j}, F={f}");
                    assert!(
                        rc.max_abs_diff(rn) < 1e-10,
                        "state gap at two_j={two_j}, F={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn probabilities_are_half_for_every_frame() {
        let s = state(3, 0.35);
        let rho = s.density_matrix();
        for frame in MeasurementFrame::sample_many(29, 40) {
            let ensemble = conditional_ensemble_numeric(&rho, frame, s.j()).unwrap();
            for (p, _) in ensemble.entries() {
                assert!((p - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn product_state_conditions_to_its_a_factor() {
        let a = ComplexMatrix::from_real_diag(&[0.7, 0.2, 0.1]);
        let rho = kron(&a, &ComplexMatrix::identity(2).scaled_re(0.5));
        let j = SpinLabel::new(2).unwrap();
        for frame in MeasurementFrame::sample_many(31, 10) {
            let ensemble = conditional_ensemble_numeric(&rho, frame, j).unwrap();
            for (p, rho_cond) in ensemble.entries() {
                assert!((p - 0.5).abs() < 1e-12);
                assert!(rho_cond.max_abs_diff(&a) < 1e-12);
            }
        }
    }

    #[test]
    fn numeric_rejects_non_density_input() {
        let j = SpinLabel::new(1).unwrap();
        let bad = ComplexMatrix::identity(4); // trace 4
        assert!(conditional_ensemble_numeric(&bad, MeasurementFrame::z_axis(), j).is_err());
    }

    #[test]
    fn conditional_spectra_do_not_depend_on_the_frame() {
        let s = state(2, 0.8);
        let rho = s.density_matrix();
        let mut reference: Option<Vec<f64>> = None;
        for frame in MeasurementFrame::sample_many(37, 20) {
            let ensemble = conditional_ensemble_numeric(&rho, frame, s.j()).unwrap();
            for (_, rho_cond) in ensemble.entries() {
                let eigs = eigvals_hermitian(rho_cond).unwrap();
                match &reference {
                    None => reference = Some(eigs),
                    Some(want) => {
                        for (got, want) in eigs.iter().zip(want) {
                            assert!((got - want).abs() < 1e-10);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_invariance_holds() {
        let a = MeasurementFrame::sample_many(99, 6);
        let b = MeasurementFrame::sample_many(99, 6);
        assert_eq!(a, b);

        // The sampled frames feed states that stay SU(2)-invariant.
        let s = state(2, 0.9);
        let residual = check_su2_invariance(&s.density_matrix(), s.j()).unwrap();
        assert!(residual < 1e-12);
    }
}
