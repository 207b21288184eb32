//! Von Neumann entropy and the Holevo quantity of the SU(2)-invariant
//! family, via two independent routes.
//!
//! The closed route uses the measurement-independent conditional spectrum
//! `lambda_n(+-) = 1/(2j+1) +- (j-n) |F(2j+1) - j| / (j(j+1)(2j+1))` and the
//! flat-marginal identity `S(sum_k p_k rho_{A|k}) = log(2j+1)`, so
//! `chi = log(2j+1) - S(conditional spectrum)`. The numeric route
//! eigendecomposes the actual post-measurement ensemble of a given frame.

use serde::Serialize;

use crate::angular::SpinLabel;
use crate::error::Error;
use crate::matrix::{ComplexMatrix, eigvals_hermitian};
use crate::measurement::{MeasurementFrame, conditional_ensemble_numeric};
use crate::states::Su2InvariantState;

/// Eigenvalues this far below zero are clamped before taking logs; anything
/// more negative is rejected.
pub const SPECTRUM_CLAMP: f64 = 1e-10;

/// `chi` values in `[-CHI_CLAMP, 0)` collapse to zero (cancellation near the
/// zero point `F = j/(2j+1)`).
pub const CHI_CLAMP: f64 = 1e-12;

/// Logarithm base for entropies: bits or nats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    #[default]
    Two,
    E,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Two => x.log2(),
            LogBase::E => x.ln(),
        }
    }
}

impl Serialize for LogBase {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            LogBase::Two => "2",
            LogBase::E => "e",
        })
    }
}

/// A probability spectrum: eigenvalues of a density operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Accepts values in `[-SPECTRUM_CLAMP, 1 + SPECTRUM_CLAMP]`, clamping
    /// the tiny negatives to zero.
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        let mut clamped = values;
        for v in &mut clamped {
            if *v < -SPECTRUM_CLAMP || *v > 1.0 + SPECTRUM_CLAMP {
                return Err(Error::InvalidArgument(format!(
                    "spectrum value {v} outside [0, 1] beyond tolerance"
                )));
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        Ok(Self { values: clamped })
    }

    /// Like [`Spectrum::new`], additionally requiring the values to sum to 1
    /// within 1e-10 (a full state spectrum).
    pub fn state(values: Vec<f64>) -> Result<Self, Error> {
        let sp = Self::new(values)?;
        let total: f64 = sp.values.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidArgument(format!(
                "state spectrum sums to {total}, not 1"
            )));
        }
        Ok(sp)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Shannon entropy `-sum lambda log lambda` of a spectrum, with `0 log 0 = 0`.
pub fn entropy(sp: &Spectrum, base: LogBase) -> f64 {
    let negated: f64 = sp
        .values
        .iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * base.log(v))
        .sum();
    // +0.0 flushes the -0.0 a pure spectrum would produce.
    -negated + 0.0
}

/// The three entropies of one measurement: `chi` is the marginal entropy of
/// the average state minus the mean conditional entropy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolevoResult {
    pub chi: f64,
    pub marginal_entropy: f64,
    pub mean_conditional_entropy: f64,
}

impl HolevoResult {
    fn from_entropies(marginal: f64, mean_conditional: f64) -> Self {
        let mut chi = marginal - mean_conditional;
        if (-CHI_CLAMP..0.0).contains(&chi) {
            chi = 0.0;
        }
        Self {
            chi,
            marginal_entropy: marginal,
            mean_conditional_entropy: mean_conditional,
        }
    }
}

/// The spectrum shared by both conditional states, independent of the
/// measured axis: `2j + 1` values `1/(2j+1) +- (j-n) |F(2j+1) - j| /
/// (j(j+1)(2j+1))` for `n = 0 .. floor(j)`, the unpaired middle value
/// counted once when `j` is an integer.
pub fn conditional_spectrum(s: &Su2InvariantState) -> Spectrum {
    let two_j = s.j().two_j() as i64;
    let base_val = 1.0 / (two_j + 1) as f64;
    // |c| of the N matrix; the offset at step n is (j - n) |c|.
    let c = 2.0 * (2.0 * s.f() * (two_j + 1) as f64 - two_j as f64).abs()
        / (two_j * (two_j + 2) * (two_j + 1)) as f64;

    let mut values = Vec::with_capacity(two_j as usize + 1);
    for n in 0..=(two_j / 2) {
        let two_j_minus_2n = two_j - 2 * n;
        if two_j_minus_2n == 0 {
            values.push(base_val);
        } else {
            let d = (two_j_minus_2n as f64 / 2.0) * c;
            values.push(base_val + d);
            values.push(base_val - d);
        }
    }
    Spectrum::new(values).expect("closed-form conditional spectrum lies in [0, 1]")
}

/// Closed-form Holevo quantity: `log(2j+1)` minus the entropy of the
/// conditional spectrum. Identical for every measured axis.
pub fn holevo_closed(s: &Su2InvariantState, base: LogBase) -> HolevoResult {
    let marginal = base.log(s.j().dim() as f64);
    let mean_conditional = entropy(&conditional_spectrum(s), base);
    HolevoResult::from_entropies(marginal, mean_conditional)
}

/// Entropy of a density operator by eigendecomposition.
pub fn von_neumann_entropy(m: &ComplexMatrix, base: LogBase) -> Result<f64, Error> {
    let sp = Spectrum::state(eigvals_hermitian(m)?)?;
    Ok(entropy(&sp, base))
}

/// Holevo quantity of measuring `rho_ab` with the given frame, computed from
/// the generic ensemble definition. For states of the SU(2)-invariant family
/// this agrees with [`holevo_closed`] for every frame.
pub fn holevo_numeric(
    rho_ab: &ComplexMatrix,
    frame: MeasurementFrame,
    j: SpinLabel,
    base: LogBase,
) -> Result<HolevoResult, Error> {
    let ensemble = conditional_ensemble_numeric(rho_ab, frame, j)?;
    let marginal = von_neumann_entropy(&ensemble.average(), base)?;
    let mut mean_conditional = 0.0;
    for (p, rho) in ensemble.entries() {
        mean_conditional += p * von_neumann_entropy(rho, base)?;
    }
    Ok(HolevoResult::from_entropies(marginal, mean_conditional))
}
