//! The two-multiplet SU(2)-invariant family on spin-j x spin-1/2.
//!
//! A state of the family is fixed by `(j, F)` with `F` in `[0, 1]`: it puts
//! weight `F` on the `J = j - 1/2` multiplet and `1 - F` on `J = j + 1/2`,
//! each spread uniformly, so the spectrum is `F/(2j)` with multiplicity `2j`
//! and `(1-F)/(2j+2)` with multiplicity `2j+2`.

use crate::angular::{Multiplet, SpinLabel, coupled_vector, spin_operators};
use crate::error::Error;
use crate::matrix::{ComplexMatrix, eigvals_hermitian, kron, partial_transpose_b, paulis};

/// Negativity below this is treated as exactly zero (PPT boundary roundoff).
pub const NEGATIVITY_TOL: f64 = 1e-10;

/// One state of the SU(2)-invariant family, named by its `(j, F)` parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2InvariantState {
    j: SpinLabel,
    f: f64,
}

impl Su2InvariantState {
    pub fn new(j: SpinLabel, f: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&f) {
            return Err(Error::InvalidArgument(format!(
                "F must lie in [0, 1], got {f}"
            )));
        }
        Ok(Self { j, f })
    }

    pub fn j(self) -> SpinLabel {
        self.j
    }

    pub fn f(self) -> f64 {
        self.f
    }

    /// The parameter value `j/(2j+1)` at which the Holevo quantity vanishes.
    pub fn holevo_zero_f(self) -> f64 {
        self.j.two_j() as f64 / (2.0 * (self.j.two_j() as f64 + 1.0))
    }

    /// The largest `F` for which the state is separable, `2j/(2j+1)`.
    pub fn separability_f(self) -> f64 {
        self.j.two_j() as f64 / (self.j.two_j() as f64 + 1.0)
    }

    /// Multiplet weights `(A(j - 1/2), A(j + 1/2)) = (F, 1 - F)`.
    pub fn multiplet_weights(self) -> (f64, f64) {
        (self.f, 1.0 - self.f)
    }

    /// The density matrix on the `2(2j+1)`-dimensional product space, built
    /// from the coupled projectors.
    pub fn density_matrix(self) -> ComplexMatrix {
        let j = self.j;
        let dim = j.coupled_dim();
        let mut rho = ComplexMatrix::zeros(dim, dim);
        let w_minus = self.f / j.two_j() as f64;
        let w_plus = (1.0 - self.f) / (j.two_j() as f64 + 2.0);
        for (total, weight) in [(Multiplet::Minus, w_minus), (Multiplet::Plus, w_plus)] {
            let two_total = total.two_total(j) as i32;
            for two_m in (-two_total..=two_total).step_by(2) {
                let v = coupled_vector(j, total, two_m)
                    .expect("coupled m runs over its own multiplet range");
                rho = &rho + &v.outer_with_self().scaled_re(weight);
            }
        }
        rho
    }

    /// The exact spectrum as `(eigenvalue, multiplicity)` pairs:
    /// `(F/(2j), 2j)` and `((1-F)/(2j+2), 2j+2)`.
    pub fn analytic_spectrum(self) -> Vec<(f64, usize)> {
        let two_j = self.j.two_j() as usize;
        vec![
            (self.f / two_j as f64, two_j),
            ((1.0 - self.f) / (two_j + 2) as f64, two_j + 2),
        ]
    }

    /// Sum of the moduli of the negative eigenvalues of the partial transpose
    /// over the qubit. Zero exactly when the state is PPT, which for this
    /// family coincides with separability (`F <= 2j/(2j+1)`).
    pub fn negativity(self) -> f64 {
        let rho = self.density_matrix();
        let pt = partial_transpose_b(&rho, self.j.dim(), 2)
            .expect("density matrix carries its own bipartite dimensions");
        let eigs =
            eigvals_hermitian(&pt).expect("partial transpose of a Hermitian matrix is Hermitian");
        let neg: f64 = eigs.iter().filter(|&&x| x < 0.0).map(|x| -x).sum();
        if neg <= NEGATIVITY_TOL { 0.0 } else { neg }
    }
}

/// Largest Frobenius norm of the commutator of `m` with a total-spin
/// component `J_alpha = S_alpha @ I_2 + I @ sigma_alpha/2`. SU(2)-invariant
/// operators return zero up to roundoff.
pub fn check_su2_invariance(m: &ComplexMatrix, j: SpinLabel) -> Result<f64, Error> {
    let dim = j.coupled_dim();
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "expected a {dim}x{dim} operator for two_j = {}, got {}x{}",
            j.two_j(),
            m.rows(),
            m.cols()
        )));
    }
    let (sx, sy, sz) = spin_operators(j);
    let [px, py, pz] = paulis();
    let id_a = ComplexMatrix::identity(j.dim());
    let id_b = ComplexMatrix::identity(2);
    let mut worst = 0.0f64;
    for (s, p) in [(sx, px), (sy, py), (sz, pz)] {
        let j_total = &kron(&s, &id_b) + &kron(&id_a, &p.scaled_re(0.5));
        let comm = &(&j_total * m) - &(m * &j_total);
        worst = worst.max(comm.frobenius_norm());
    }
    Ok(worst)
}
