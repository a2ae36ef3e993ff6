//! Exact computation with Riordan arrays over the rationals.
//!
//! * [`fps`]: truncated formal power series with `BigRational` coefficients.
//! * [`riordan`]: arrays `T(f|g)`, the group law, inverses, A-sequences,
//!   order probing and pseudo-involutions.
//! * [`involution`]: every Riordan involution from parameters
//!   `(phi, u, sign)`, and the reverse decomposition.
//! * [`sheffer`]: Hadamard-weighted polynomial sequences, umbral composition
//!   and Laguerre polynomials.
//!
//! All arithmetic is exact; identities such as `T^2 = I` are checked with
//! equality, not tolerances.

pub mod error;
pub mod fps;
pub mod involution;
pub mod io;
pub mod presets;
pub mod rational;
pub mod riordan;
pub mod sheffer;

pub use error::{Error, Result};
pub use fps::{polynomial_string, Parity, Series, DEFAULT_ORDER};
pub use involution::{
    alpha_log_phi, build_involution, decompose_involution, f_from_params, g_from_phi,
    parity_criterion, trivial_involutions, InvolutionParams, Sign,
};
pub use io::JsonForm;
pub use rational::Rational;
pub use riordan::{a_sequence, RiordanArray, TriangularMatrix};
pub use sheffer::{laguerre, prop1_equivalence, PolySequence, Weight};
