//! Named comparison tolerances.

/// Default tolerance for identities that hold exactly in exact arithmetic.
pub const DEFAULT: f64 = 1e-10;

/// Identities involving a handful of products of `O(1)` entries.
pub const TIGHT: f64 = 1e-12;

/// Normality check for `expm_normal`, relative to `max(1, ‖A‖²)`.
pub const NORMALITY: f64 = 1e-10;

/// Jacobi sweeps stop once the off-diagonal mass drops below this fraction
/// of the total Frobenius norm.
pub const JACOBI_CONVERGENCE: f64 = 1e-15;

/// Eigenvalues below `RANK * max(1, λ_max)` count as zero.
pub const RANK: f64 = 1e-10;
