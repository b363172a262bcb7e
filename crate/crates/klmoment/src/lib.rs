//! Exact computation of Kloosterman sums and of the moments of Kloosterman
//! sheaves, together with the local invariants that control them: Swan
//! conductors, inertia invariants at `0` and `∞`, middle-cohomology
//! dimensions, Hodge numbers and Molien series of the `p = 3` monodromy
//! group. The [`evans`] module checks the resulting normalized traces
//! against modular-form coefficients.
//!
//! Arithmetic is exact throughout. Cyclotomic elements are generic over the
//! coefficient scalar; the aliases below name the instantiations used by the
//! pipeline.

pub mod evans;
pub mod exactalg;
pub mod invdims;
pub mod klsum;
pub mod monodromy;
pub mod weylchar;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Cyclotomic integers with arbitrary-precision coefficients.
pub type CycInt = exactalg::CycElem<BigInt>;
/// Cyclotomic integers with 128-bit checked coefficients (fast path).
pub type CycFast = exactalg::CycElem<i128>;
/// Elements of a cyclotomic field with rational coefficients.
pub type CycRat = exactalg::CycElem<BigRational>;
