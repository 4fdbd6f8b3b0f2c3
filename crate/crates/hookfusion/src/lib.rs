//! Exact construction of the complete set of orthogonal primitive
//! idempotents of the rational group algebra of `S_r x S_s` via the hook
//! fusion procedure, together with two independent reference computations
//! used to verify the construction.
//!
//! - [`arith`]: arbitrary-precision rationals, polynomials, and rational
//!   functions in one variable with evaluation at `t = 0`.
//! - [`tableaux`]: bipartitions, standard bi-tableaux, contents, principal
//!   hooks, dimensions, and the Bratteli branching graph.
//! - [`groupalg`]: permutations, the block subgroup `S_r x S_s`, the group
//!   algebra over a generic coefficient field, and Jucys-Murphy elements.
//! - [`fusion`]: the hook fusion procedure itself, producing the diagonal
//!   matrix elements `F_T` and the idempotents `E_T`.
//! - [`oracle`]: Jucys-Murphy interpolation idempotents (exact) and the
//!   orthogonal-form representation matrices (floating point).
//! - [`verify`]: the cross-check suite tying all of the above together.

pub mod arith;

pub use arith::{ArithError, Polynomial, Rational, RationalFunction};
