//! Spin-j operator matrices and the closed-form coupling of a spin-j to a
//! spin-1/2.
//!
//! Half-integer quantum numbers are carried as doubled integers everywhere
//! (`two_j = 2j`, `two_m = 2m`) so that no 0.5 ever drifts through float
//! arithmetic. Basis ordering is fixed once for the whole crate:
//!
//! * spin-j rows run over `m = -j .. j` ascending (`row = (two_m + two_j)/2`);
//! * the product basis interleaves the qubit fastest, `|+1/2>` slot first,
//!   so the composite index is `row_j * 2 + (0 for up, 1 for down)`.

use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::ComplexMatrix;

/// A spin quantum number j >= 1/2, stored exactly as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinLabel {
    two_j: u32,
}

impl SpinLabel {
    pub fn new(two_j: u32) -> Result<Self, Error> {
        if two_j == 0 {
            return Err(Error::InvalidArgument("two_j must be at least 1".into()));
        }
        Ok(Self { two_j })
    }

    pub fn two_j(self) -> u32 {
        self.two_j
    }

    pub fn j(self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Dimension of the spin-j space, `2j + 1`.
    pub fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    /// Dimension of the spin-j x spin-1/2 product space, `2(2j + 1)`.
    pub fn coupled_dim(self) -> usize {
        2 * self.dim()
    }

    /// Doubled z-components `2m` for `m = -j .. j`, ascending.
    pub fn two_m_values(self) -> impl Iterator<Item = i32> {
        let two_j = self.two_j as i32;
        (-two_j..=two_j).step_by(2)
    }

    /// Row index of `|j, m>` in the m-ascending basis.
    pub fn row_of(self, two_m: i32) -> usize {
        ((two_m + self.two_j as i32) / 2) as usize
    }
}

/// Which total-spin multiplet of the j x 1/2 coupling: `J = j + 1/2` or
/// `J = j - 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplet {
    Plus,
    Minus,
}

impl Multiplet {
    /// Doubled total spin `2J` for the multiplet on top of spin j.
    pub fn two_total(self, j: SpinLabel) -> u32 {
        match self {
            Multiplet::Plus => j.two_j() + 1,
            Multiplet::Minus => j.two_j() - 1,
        }
    }
}

/// The pair of coupling amplitudes of one coupled row:
/// `|J, m> = a |j, m-1/2>|up> + b |j, m+1/2>|down>`.
///
/// For `J = j + 1/2`: `a = +sqrt((j + 1/2 + m)/(2j + 1))`,
/// `b = sqrt((j + 1/2 - m)/(2j + 1))`; for `J = j - 1/2` the roles swap and
/// `a` carries a minus sign. Every pair satisfies `a^2 + b^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CgPair {
    pub a: f64,
    pub b: f64,
}

/// Coupling amplitudes for `|j +- 1/2, m>`, with `m` passed as `two_m = 2m`.
pub fn cg_pair(j: SpinLabel, total: Multiplet, two_m: i32) -> Result<CgPair, Error> {
    let two_total = total.two_total(j) as i32;
    if two_m.abs() > two_total || (two_m - two_total).rem_euclid(2) != 0 {
        return Err(Error::InvalidArgument(format!(
            "two_m = {two_m} is not a z-component of total spin 2J = {two_total}"
        )));
    }
    // (j + 1/2 +- m) / (2j + 1) = (two_j + 1 +- two_m) / (2 (two_j + 1))
    let denom = 2 * (j.two_j() as i32 + 1);
    let plus = ((j.two_j() as i32 + 1 + two_m) as f64 / denom as f64).sqrt();
    let minus = ((j.two_j() as i32 + 1 - two_m) as f64 / denom as f64).sqrt();
    Ok(match total {
        Multiplet::Plus => CgPair { a: plus, b: minus },
        Multiplet::Minus => CgPair { a: -minus, b: plus },
    })
}

/// The coupled state `|j +- 1/2, m>` expanded in the product basis, as a
/// unit-norm column of dimension `2(2j + 1)`.
pub fn coupled_vector(j: SpinLabel, total: Multiplet, two_m: i32) -> Result<ComplexMatrix, Error> {
    let pair = cg_pair(j, total, two_m)?;
    let mut v = ComplexMatrix::zeros(j.coupled_dim(), 1);
    // Component on (m - 1/2, up); absent exactly when its amplitude vanishes.
    let two_m_up = two_m - 1;
    if two_m_up.abs() <= j.two_j() as i32 {
        v[(2 * j.row_of(two_m_up), 0)] = Complex64::new(pair.a, 0.0);
    } else {
        debug_assert!(pair.a.abs() < 1e-15);
    }
    let two_m_down = two_m + 1;
    if two_m_down.abs() <= j.two_j() as i32 {
        v[(2 * j.row_of(two_m_down) + 1, 0)] = Complex64::new(pair.b, 0.0);
    } else {
        debug_assert!(pair.b.abs() < 1e-15);
    }
    Ok(v)
}

/// The spin-j operator triple `(Sx, Sy, Sz)` in the m-ascending basis.
///
/// `Sz` is diagonal with entries `m`; the ladder elements are
/// `<m+1| S+ |m> = sqrt(j(j+1) - m(m+1))`.
pub fn spin_operators(j: SpinLabel) -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let n = j.dim();
    let two_j = j.two_j() as i64;

    let mut sz = ComplexMatrix::zeros(n, n);
    for (k, two_m) in j.two_m_values().enumerate() {
        sz[(k, k)] = Complex64::new(two_m as f64 / 2.0, 0.0);
    }

    let mut s_plus = ComplexMatrix::zeros(n, n);
    for (k, two_m) in j.two_m_values().enumerate() {
        if k + 1 < n {
            let two_m = two_m as i64;
            // j(j+1) - m(m+1) = (two_j(two_j + 2) - two_m(two_m + 2)) / 4
            let num = two_j * (two_j + 2) - two_m * (two_m + 2);
            s_plus[(k + 1, k)] = Complex64::new(0.5 * (num as f64).sqrt(), 0.0);
        }
    }

    let s_minus = s_plus.adjoint();
    let sx = (&s_plus + &s_minus).scaled_re(0.5);
    let sy = (&s_plus - &s_minus).scaled(Complex64::new(0.0, -0.5));
    (sx, sy, sz)
}
