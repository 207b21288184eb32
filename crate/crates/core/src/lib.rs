//! SU(2)-invariant states of spin-j x spin-1/2 bipartite systems and the
//! Holevo quantity of projective measurements on the qubit.
//!
//! The family treated here is the two-parameter set of states that commute
//! with every component of the total spin: a weight `F` on the `j - 1/2`
//! multiplet and `1 - F` on the `j + 1/2` multiplet, mixed uniformly inside
//! each. Measuring the qubit with any von Neumann measurement splits such a
//! state into two equally likely conditional states whose spectrum does not
//! depend on the measured axis, which makes the Holevo quantity
//! `chi = S(sum_k p_k rho_k) - sum_k p_k S(rho_k)` available in closed form.
//!
//! The crate keeps two fully independent routes to `chi`:
//!
//! * [`holevo::holevo_closed`] evaluates the closed form from the analytic
//!   conditional spectrum — this is what sweeps use, and it scales to very
//!   large `j`;
//! * [`holevo::holevo_numeric`] builds the density matrix, applies the
//!   measurement projectors, partial-traces the qubit out and
//!   eigendecomposes, making no use of the symmetry.
//!
//! Agreement of the two routes over states, parameters and random frames is
//! the backbone of the test suites and of the `verify` subcommand of the
//! bundled CLI.
//!
//! Spins are passed as doubled integers (`two_j = 2j`) so half-integers stay
//! exact. See [`angular`] for the basis conventions shared by every module.
//!
//! ```
//! use su2_holevo::angular::SpinLabel;
//! use su2_holevo::holevo::{holevo_closed, LogBase};
//! use su2_holevo::states::Su2InvariantState;
//!
//! // chi of the singlet (j = 1/2, F = 1) is exactly one bit.
//! let s = Su2InvariantState::new(SpinLabel::new(1).unwrap(), 1.0).unwrap();
//! let result = holevo_closed(&s, LogBase::Two);
//! assert!((result.chi - 1.0).abs() < 1e-12);
//! ```

pub mod angular;
pub mod cli;
pub mod error;
pub mod holevo;
pub mod matrix;
pub mod measurement;
pub mod states;

pub use angular::{CgPair, Multiplet, SpinLabel};
pub use error::Error;
pub use holevo::{HolevoResult, LogBase, Spectrum};
pub use matrix::ComplexMatrix;
pub use measurement::{BlochVector, ConditionalEnsemble, MeasurementFrame};
pub use states::Su2InvariantState;
