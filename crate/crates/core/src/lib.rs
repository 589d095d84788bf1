//! Triangles up to similarity as points on the unit sphere.
//!
//! A triangle with perimeter 2 and side lengths `(a, b, c)` corresponds to the
//! point `(x, y, z)` with `a = 1 - x²`, `b = 1 - y²`, `c = 1 - z²`. Signed
//! permutations of the coordinates (the hyperoctahedral group `B₃`, order 48)
//! relabel and reflect the triangle, so a single 45–60–90 spherical chamber
//! `0 ≤ z ≤ y ≤ x` parametrizes unordered triangles. Its boundary is the set of
//! isosceles and degenerate triangles.
//!
//! The [`solvers`] module locates the points furthest from that boundary:
//! the least symmetric triangle overall, and the least symmetric obtuse and
//! acute triangles, where the curve of right triangles joins the boundary.

pub mod certificate;
pub mod error;
pub mod loci;
pub mod numeric;
pub mod solvers;
pub mod sphere;
pub mod symmetry;
pub mod triangle;

pub use certificate::{verify_certificate, CertificateKind, PolynomialCertificate};
pub use error::{Error, Result};
pub use loci::{RightBranch, RightCurve, SymmetryLoci};
pub use solvers::SolverResult;
pub use sphere::{ArcParametrization, GreatCircle, SpherePoint, UNIT_TOL};
pub use symmetry::SignedPermutation;
pub use triangle::{SCoords, ShapeClass, ShapeFlag, TriangleSides, DEFAULT_TOL};
