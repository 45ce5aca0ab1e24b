//! Exact construction, verification and search of pairs of rational (Heron)
//! triangles that share a circumradius and also share a perimeter, an
//! inradius or an area.
//!
//! * [`geometry`]: rational triangles, Heron certificates and the `(x, y, t)`
//!   parametrization of all triangles with rational area.
//! * [`families`]: the closed-form two-parameter and one-parameter families,
//!   the [`TrianglePair`] type and [`verify_pair`].
//! * [`constructor`]: the cubic curves and quartic behind the families, the
//!   tangent/chord process and Fermat's quartic step, and solvers that
//!   re-derive the families from them.
//! * [`search`]: a brute-force oracle over integer Heron triangles.
//! * [`cli`]: the `heron-pairs` command line.
//!
//! All arithmetic is exact; see the crate's `examples/` directory for a
//! runnable tour of each capability.

pub mod cli;
pub mod constructor;
pub mod families;
pub mod geometry;
mod poly;
pub mod rational;
pub mod search;

pub use families::{verify_pair, Family, PairKind, TrianglePair, VerificationReport};
pub use geometry::{certify_heron, HeronCertificate, ParamTriangle, Triangle};
pub use rational::{parse_rational, Rational};
