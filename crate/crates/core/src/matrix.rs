//! Dense complex matrices and the linear-algebra kernel used everywhere else:
//! Kronecker products, partial trace/transpose over the second factor of a
//! bipartite space, and a cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Storage is row-major. Bipartite indices follow the convention fixed by the
//! state constructors: the composite index is `row_a * dim_b + row_b`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::Error;

/// Hermiticity tolerance accepted by [`eigvals_hermitian`].
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Validation tolerance for density operators (trace, Hermiticity, positivity).
pub const DENSITY_TOL: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 64;

/// Dense complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Diagonal matrix with the given real entries.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Column vector from complex amplitudes.
    pub fn column(amplitudes: &[Complex64]) -> Self {
        let mut m = Self::zeros(amplitudes.len(), 1);
        m.data.copy_from_slice(amplitudes);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= factor;
        }
        out
    }

    pub fn scaled_re(&self, factor: f64) -> Self {
        self.scaled(Complex64::new(factor, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest modulus of `a[i][j] - conj(a[j][i])` over all entries.
    pub fn hermiticity_error(&self) -> f64 {
        assert!(self.is_square(), "hermiticity of a non-square matrix");
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Outer product `self * self†` of a column vector.
    pub fn outer_with_self(&self) -> Self {
        assert_eq!(self.cols, 1, "outer product needs a column vector");
        Self::from_fn(self.rows, self.rows, |i, j| {
            self[(i, 0)] * self[(j, 0)].conj()
        })
    }

    /// Checks the density-operator contract: Hermitian, unit trace and
    /// positive semidefinite, all within `tol`.
    pub fn validate_density(&self, tol: f64) -> Result<(), Error> {
        if !self.is_square() {
            return Err(Error::NotDensityOperator(format!(
                "matrix is {}x{}, not square",
                self.rows, self.cols
            )));
        }
        let herm = self.hermiticity_error();
        if herm > tol {
            return Err(Error::NotDensityOperator(format!(
                "Hermiticity deviation {herm:.3e} exceeds {tol:.3e}"
            )));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::NotDensityOperator(format!(
                "trace {tr} differs from 1 beyond {tol:.3e}"
            )));
        }
        let eigs = eigvals_hermitian(self)?;
        if let Some(&min) = eigs.first()
            && min < -tol
        {
            return Err(Error::NotDensityOperator(format!(
                "negative eigenvalue {min:.3e} below -{tol:.3e}"
            )));
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in +"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in -"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in *");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let v = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", v.re, v.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product: block `(i, j)` of the result equals `a[i][j] * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let f = a[(ia, ja)];
            if f == Complex64::ZERO {
                continue;
            }
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    out[(ia * b.rows + ib, ja * b.cols + jb)] = f * b[(ib, jb)];
                }
            }
        }
    }
    out
}

fn check_bipartite(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<(), Error> {
    if !m.is_square() || m.rows != dim_a * dim_b {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix of dimension {} = {dim_a}*{dim_b}, got {}x{}",
            dim_a * dim_b,
            m.rows,
            m.cols
        )));
    }
    Ok(())
}

/// Trace over the second tensor factor: maps a `(dim_a*dim_b)`-dimensional
/// operator to the `dim_a`-dimensional operator with entries
/// `out[i][j] = sum_s m[(i,s)][(j,s)]`. Preserves the total trace.
pub fn partial_trace_b(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
) -> Result<ComplexMatrix, Error> {
    check_bipartite(m, dim_a, dim_b)?;
    let mut out = ComplexMatrix::zeros(dim_a, dim_a);
    for i in 0..dim_a {
        for j in 0..dim_a {
            let mut acc = Complex64::ZERO;
            for s in 0..dim_b {
                acc += m[(i * dim_b + s, j * dim_b + s)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Transpose within each `dim_b x dim_b` block:
/// `out[(i,s)][(j,t)] = m[(i,t)][(j,s)]`. Involutive and trace-preserving.
pub fn partial_transpose_b(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
) -> Result<ComplexMatrix, Error> {
    check_bipartite(m, dim_a, dim_b)?;
    let mut out = ComplexMatrix::zeros(m.rows, m.cols);
    for i in 0..dim_a {
        for j in 0..dim_a {
            for s in 0..dim_b {
                for t in 0..dim_b {
                    out[(i * dim_b + s, j * dim_b + t)] = m[(i * dim_b + t, j * dim_b + s)];
                }
            }
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Rejects inputs whose Hermiticity deviation exceeds [`HERMITICITY_TOL`].
/// The values satisfy `sum(eigs) = tr(m)` and each internal eigenpair meets
/// the residual bound `||m v - lambda v|| <= 1e-10 * ||m||`.
pub fn eigvals_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>, Error> {
    Ok(eigh(m)?.0)
}

/// Full Hermitian eigendecomposition via cyclic complex Jacobi rotations.
/// Returns (ascending eigenvalues, matrix whose columns are eigenvectors).
/// Eigenvectors stay internal to the crate; only values are public API.
pub(crate) fn eigh(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix), Error> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let deviation = m.hermiticity_error();
    if deviation > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation,
            tol: HERMITICITY_TOL,
        });
    }

    let n = m.rows;
    // Symmetrize so roundoff below the tolerance cannot bias the iteration.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)].conj()));
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale > 0.0 {
        let target = 1e-30_f64.max(1e-15 * scale);
        let mut converged = false;
        for _ in 0..MAX_JACOBI_SWEEPS {
            if off_diagonal_norm(&a) <= target {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
        if !converged && off_diagonal_norm(&a) > target {
            return Err(Error::NoConvergence {
                sweeps: MAX_JACOBI_SWEEPS,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((values, vectors))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            acc += 2.0 * a[(p, q)].norm_sqr();
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation zeroing `a[p][q]`. The complex phase of the pivot is
/// absorbed into the rotation so the 2x2 problem reduces to the real case.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let h = g.norm();
    if h == 0.0 {
        return;
    }
    let phase = g / h;
    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;

    let tau = (beta - alpha) / (2.0 * h);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = phase * (t * c);

    let n = a.rows();
    a[(p, p)] = Complex64::new(alpha - t * h, 0.0);
    a[(q, q)] = Complex64::new(beta + t * h, 0.0);
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s.conj() * akq;
        a[(k, q)] = s * akp + c * akq;
        a[(p, k)] = a[(k, p)].conj();
        a[(q, k)] = a[(k, q)].conj();
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s.conj() * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// The three Pauli matrices `(sigma_x, sigma_y, sigma_z)`.
pub fn paulis() -> [ComplexMatrix; 3] {
    let i = Complex64::I;
    let mut sx = ComplexMatrix::zeros(2, 2);
    sx[(0, 1)] = Complex64::ONE;
    sx[(1, 0)] = Complex64::ONE;
    let mut sy = ComplexMatrix::zeros(2, 2);
    sy[(0, 1)] = -i;
    sy[(1, 0)] = i;
    let sz = ComplexMatrix::from_real_diag(&[1.0, -1.0]);
    [sx, sy, sz]
}
