//! Exact Tutte polynomials of three self-similar lattice families.
//!
//! * [`bigpoly`]: sparse bivariate polynomials over big integers.
//! * [`lattice`]: explicit construction of the fractal lattice and the
//!   (2,2)- and (1,3)-flowers, with marked special vertices.
//! * [`oracle`]: brute-force Tutte polynomials (subgraph expansion and
//!   memoized deletion-contraction).
//! * [`recursion`]: the `(T1, N)` generation recursions, symbolic and
//!   pointwise.
//! * [`invariants`]: closed forms at special points, growth constants and
//!   the Potts partition function.
//! * [`verify`]: the gate suite that cross-checks all of the above.

pub mod bigpoly;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod oracle;
pub mod recursion;
pub mod verify;

pub use bigpoly::{parse_rational, BiPoly, BigIntVal, ExactRational};
pub use error::{Error, Result};
pub use lattice::{build_lattice, degree_sequence, lattice_counts, LatticeFamily, Multigraph};
pub use recursion::{tutte_eval, tutte_symbolic, EvalPair, Recurrence, TuttePair};
