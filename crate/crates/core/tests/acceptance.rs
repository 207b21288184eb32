//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured worst case (visible with `--nocapture`).
//!
//! Run with `cargo test -p su2-holevo --test acceptance -- --nocapture`.

use std::time::Instant;

use su2_holevo::angular::SpinLabel;
use su2_holevo::holevo::{LogBase, holevo_closed, holevo_numeric};
use su2_holevo::matrix::eigvals_hermitian;
use su2_holevo::measurement::{MeasurementFrame, conditional_ensemble_numeric};
use su2_holevo::states::{Su2InvariantState, check_su2_invariance};

fn state(two_j: u32, f: f64) -> Su2InvariantState {
    Su2InvariantState::new(SpinLabel::new(two_j).unwrap(), f).unwrap()
}

fn chi_closed(two_j: u32, f: f64) -> f64 {
    holevo_closed(&state(two_j, f), LogBase::Two).chi
}

/// Uniform grid over [0, 1] with both endpoints, `steps` points.
fn f_grid(steps: usize) -> Vec<f64> {
    let d = (steps - 1) as f64;
    (0..steps).map(|i| i as f64 / d).collect()
}

fn binary_entropy(p: f64) -> f64 {
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

#[test]
fn criterion_01_zero_point() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for two_j in [1u32, 2, 3, 4, 5, 10, 15] {
        let f_d = two_j as f64 / (2.0 * (two_j as f64 + 1.0));
        worst = worst.max(chi_closed(two_j, f_d).abs());
    }
    assert!(worst <= 1e-12, "chi at the zero point reached {worst:.3e}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 01 (zero point): PASS, max |chi| = {worst:.3e} in {elapsed:?}");
}

#[test]
fn criterion_02_exact_values() {
    // Independently derived targets: chi(1/2, 1) = 1 bit, chi(1, 1) = 2/3 bit,
    // chi(1/2, 0) = 1 - H2(1/3).
    let targets = [
        (1u32, 1.0, 1.0),
        (2, 1.0, 2.0 / 3.0),
        (1, 0.0, 1.0 - binary_entropy(1.0 / 3.0)),
    ];
    let mut worst = 0.0f64;
    for &(two_j, f, expected) in &targets {
        let closed = chi_closed(two_j, f);
        worst = worst.max((closed - expected).abs());

        let s = state(two_j, f);
        let rho = s.density_matrix();
        for frame in MeasurementFrame::sample_many(0xACC2, 10) {
            let numeric = holevo_numeric(&rho, frame, s.j(), LogBase::Two)
                .unwrap()
                .chi;
            worst = worst.max((numeric - expected).abs());
        }
        assert!(
            worst <= 1e-10,
            "chi(two_j={two_j}, F={f}) missed {expected} by {worst:.3e}"
        );
    }
    assert!((chi_closed(1, 0.0) - 0.081704).abs() < 1e-6);
    println!("criterion 02 (exact values): PASS, max deviation = {worst:.3e}");
}

#[test]
fn criterion_03_oracle_equivalence() {
    let start = Instant::now();
    let mut worst_chi = 0.0f64;
    let mut worst_entry = 0.0f64;
    for (jdx, &two_j) in [1u32, 2, 3, 4, 5, 7].iter().enumerate() {
        for (fdx, &f) in f_grid(11).iter().enumerate() {
            let s = state(two_j, f);
            let rho = s.density_matrix();
            let closed_chi = holevo_closed(&s, LogBase::Two).chi;
            let seed = 0xACC3 + (jdx * 100 + fdx) as u64;
            for frame in MeasurementFrame::sample_many(seed, 50) {
                let closed = su2_holevo::measurement::conditional_ensemble_closed(&s, frame);
                let numeric = conditional_ensemble_numeric(&rho, frame, s.j()).unwrap();
                assert_eq!(numeric.entries().len(), 2);
                for ((pc, rc), (pn, rn)) in closed.entries().iter().zip(numeric.entries()) {
                    worst_entry = worst_entry.max((pc - pn).abs()).max(rc.max_abs_diff(rn));
                }
                let chi = holevo_numeric(&rho, frame, s.j(), LogBase::Two)
                    .unwrap()
                    .chi;
                worst_chi = worst_chi.max((chi - closed_chi).abs());
            }
        }
    }
    assert!(
        worst_chi <= 1e-10,
        "closed vs numeric chi gap {worst_chi:.3e}"
    );
    assert!(
        worst_entry <= 1e-10,
        "ensemble entrywise gap {worst_entry:.3e}"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 03 (oracle equivalence): PASS, chi gap = {worst_chi:.3e}, \
         entry gap = {worst_entry:.3e} in {elapsed:?}"
    );
}

#[test]
fn criterion_04_measurement_independence() {
    let mut worst_spread = 0.0f64;
    for (two_j, f) in [(3u32, 0.8), (2, 0.1)] {
        let s = state(two_j, f);
        let rho = s.density_matrix();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for frame in MeasurementFrame::sample_many(0xACC4, 100) {
            let chi = holevo_numeric(&rho, frame, s.j(), LogBase::Two)
                .unwrap()
                .chi;
            lo = lo.min(chi);
            hi = hi.max(chi);
        }
        worst_spread = worst_spread.max(hi - lo);
    }
    assert!(
        worst_spread <= 1e-10,
        "chi spread over frames reached {worst_spread:.3e}"
    );
    println!("criterion 04 (measurement independence): PASS, spread = {worst_spread:.3e}");
}

#[test]
fn criterion_05_outcome_probabilities_are_half() {
    let mut worst = 0.0f64;
    for &two_j in &[1u32, 2, 3, 4, 5, 7] {
        for &f in &[0.0, 0.3, 0.7, 1.0] {
            let s = state(two_j, f);
            let rho = s.density_matrix();
            for frame in MeasurementFrame::sample_many(0xACC5 + two_j as u64, 50) {
                let ensemble = conditional_ensemble_numeric(&rho, frame, s.j()).unwrap();
                for (p, _) in ensemble.entries() {
                    worst = worst.max((p - 0.5).abs());
                }
            }
        }
    }
    assert!(worst <= 1e-12, "|p - 1/2| reached {worst:.3e}");
    println!("criterion 05 (probabilities 1/2): PASS, max |p - 1/2| = {worst:.3e}");
}

#[test]
fn criterion_06_marginal_entropy_is_log_dim() {
    let mut worst = 0.0f64;
    for &two_j in &[1u32, 2, 3, 5, 7] {
        let expected = ((two_j + 1) as f64).log2();
        for &f in &[0.0, 0.4, 0.9] {
            let s = state(two_j, f);
            let rho = s.density_matrix();
            for frame in MeasurementFrame::sample_many(0xACC6, 20) {
                let marginal = holevo_numeric(&rho, frame, s.j(), LogBase::Two)
                    .unwrap()
                    .marginal_entropy;
                worst = worst.max((marginal - expected).abs());
            }
        }
    }
    assert!(
        worst <= 1e-10,
        "marginal entropy missed log(2j+1) by {worst:.3e}"
    );
    println!("criterion 06 (marginal identity): PASS, max gap = {worst:.3e}");
}

#[test]
fn criterion_07_state_spectrum() {
    let mut worst = 0.0f64;
    for two_j in 1u32..=7 {
        for &f in &f_grid(11) {
            let s = state(two_j, f);
            let mut expected: Vec<f64> = s
                .analytic_spectrum()
                .into_iter()
                .flat_map(|(v, mult)| std::iter::repeat_n(v, mult))
                .collect();
            expected.sort_by(f64::total_cmp);
            let eigs = eigvals_hermitian(&s.density_matrix()).unwrap();
            assert_eq!(eigs.len(), expected.len());
            for (got, want) in eigs.iter().zip(&expected) {
                worst = worst.max((got - want).abs());
            }
        }
    }
    assert!(worst <= 1e-10, "spectrum deviation {worst:.3e}");
    println!("criterion 07 (state spectrum): PASS, max deviation = {worst:.3e}");
}

#[test]
fn criterion_08_separability_threshold() {
    for two_j in 1u32..=7 {
        let f_s = two_j as f64 / (two_j as f64 + 1.0);
        for &f in &f_grid(11) {
            let neg = state(two_j, f).negativity();
            if f <= f_s + 1e-8 {
                assert!(
                    neg == 0.0,
                    "negativity {neg:.3e} below threshold at two_j={two_j}, F={f}"
                );
            } else {
                assert!(
                    neg > 1e-8,
                    "expected entanglement at two_j={two_j}, F={f}, negativity {neg:.3e}"
                );
            }
        }
    }
    println!("criterion 08 (separability threshold): PASS, PPT boundary at 2j/(2j+1)");
}

#[test]
fn criterion_09_monotone_cross_sections() {
    // chi increases with j at F = 0.05 (below every zero point) and
    // decreases with j at F = 0.9 (above every zero point).
    let two_js: Vec<u32> = (1..=10).collect();
    let low: Vec<f64> = two_js.iter().map(|&t| chi_closed(t, 0.05)).collect();
    assert!(
        low.windows(2).all(|w| w[0] < w[1]),
        "chi(F = 0.05) not increasing in j: {low:?}"
    );
    let high: Vec<f64> = two_js.iter().map(|&t| chi_closed(t, 0.9)).collect();
    assert!(
        high.windows(2).all(|w| w[0] > w[1]),
        "chi(F = 0.9) not decreasing in j: {high:?}"
    );
    // Per-j maximum over the F grid sits at F = 1.
    let grid = f_grid(21);
    for &two_j in &two_js {
        let chis: Vec<f64> = grid.iter().map(|&f| chi_closed(two_j, f)).collect();
        let argmax = chis
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap();
        assert_eq!(
            argmax,
            grid.len() - 1,
            "argmax off F = 1 for two_j = {two_j}"
        );
    }
    println!("criterion 09 (monotone cross-sections): PASS, monotone in j and argmax at F = 1");
}

#[test]
fn criterion_10_large_j_symmetry() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for &f in &[0.1, 0.3] {
        let gap = (chi_closed(4000, f) - chi_closed(4000, 1.0 - f)).abs();
        worst = worst.max(gap);
    }
    assert!(
        worst <= 1e-3,
        "chi(F) vs chi(1-F) gap {worst:.3e} at two_j = 4000"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 10 (large-j symmetry): PASS, max gap = {worst:.3e} in {elapsed:?}");
}

#[test]
fn criterion_11_su2_invariance() {
    let mut worst = 0.0f64;
    for two_j in 1u32..=7 {
        for &f in &f_grid(11) {
            let s = state(two_j, f);
            let residual = check_su2_invariance(&s.density_matrix(), s.j()).unwrap();
            worst = worst.max(residual);
        }
    }
    assert!(worst <= 1e-10, "commutator residual {worst:.3e}");
    println!("criterion 11 (SU(2) invariance): PASS, max residual = {worst:.3e}");
}
