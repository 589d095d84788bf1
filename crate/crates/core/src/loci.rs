//! Symmetric and right-angled triangles as curves on the sphere.
//!
//! Isosceles triangles lie on the six great circles `x = ±y`, `y = ±z`,
//! `z = ±x`; degenerate ones on the three coordinate circles. Right triangles
//! form three quartic curves, one per choice of hypotenuse. In the positive
//! octant the curve with hypotenuse `c` is
//!
//! ```text
//! q(x) = (x, r(x), x·r(x)),   r(x) = √((1 - x²)/(1 + x²)),   0 ≤ x ≤ 1,
//! ```
//!
//! and every other piece of the right-triangle locus is a `B₃` image of it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::scan_and_refine_min;
use crate::sphere::{geodesic_distance, point_circle_distance, ArcParametrization, GreatCircle, SpherePoint};

/// Samples used to bracket the nearest point of the right-triangle curve.
pub const CURVE_SCAN_SAMPLES: usize = 256;
/// Final bracket width, in the curve parameter, of the golden-section refinement.
pub const CURVE_REFINE_TOL: f64 = 1e-13;

/// The nine great circles on which a triangle has a mirror symmetry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryLoci {
    pub isosceles: [GreatCircle; 6],
    pub degenerate: [GreatCircle; 3],
}

impl SymmetryLoci {
    pub fn standard() -> Self {
        let c = |x, y, z| GreatCircle::from_normal(x, y, z).expect("nonzero normal");
        Self {
            isosceles: [
                c(1.0, -1.0, 0.0),
                c(1.0, 1.0, 0.0),
                c(0.0, 1.0, -1.0),
                c(0.0, 1.0, 1.0),
                c(-1.0, 0.0, 1.0),
                c(1.0, 0.0, 1.0),
            ],
            degenerate: [c(1.0, 0.0, 0.0), c(0.0, 1.0, 0.0), c(0.0, 0.0, 1.0)],
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &GreatCircle> {
        self.isosceles.iter().chain(self.degenerate.iter())
    }

    /// `(label, circle)` pairs naming each circle by its equation.
    pub fn labeled(&self) -> Vec<(&'static str, GreatCircle)> {
        const ISO: [&str; 6] = ["x-y=0", "x+y=0", "y-z=0", "y+z=0", "z-x=0", "z+x=0"];
        const DEG: [&str; 3] = ["x=0", "y=0", "z=0"];
        ISO.iter().zip(self.isosceles).chain(DEG.iter().zip(self.degenerate)).map(|(l, c)| (*l, c)).collect()
    }
}

fn min_circle_distance<'a>(p: &SpherePoint, circles: impl Iterator<Item = &'a GreatCircle>) -> f64 {
    circles.map(|c| point_circle_distance(p, c)).fold(f64::INFINITY, f64::min)
}

/// Distance to the nearest isosceles triangle.
pub fn distance_to_isosceles(p: &SpherePoint) -> f64 {
    min_circle_distance(p, SymmetryLoci::standard().isosceles.iter())
}

/// Distance to the nearest isosceles or degenerate triangle.
pub fn distance_to_symmetric(p: &SpherePoint) -> f64 {
    min_circle_distance(p, SymmetryLoci::standard().all())
}

/// Which side is the hypotenuse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RightBranch {
    /// `b² + c² = a²`
    HypotenuseA,
    /// `c² + a² = b²`
    HypotenuseB,
    /// `a² + b² = c²`, the branch meeting `0 ≤ z ≤ y ≤ x`.
    HypotenuseC,
}

/// One of the three quartic curves of right triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RightCurve {
    pub branch: RightBranch,
}

impl RightCurve {
    pub fn new(branch: RightBranch) -> Self {
        Self { branch }
    }

    /// Pythagorean defect in sphere coordinates; zero on the curve.
    pub fn residual(&self, p: &SpherePoint) -> f64 {
        let [a, b, c] = p.coords().map(|v| 1.0 - v * v);
        match self.branch {
            RightBranch::HypotenuseA => b * b + c * c - a * a,
            RightBranch::HypotenuseB => c * c + a * a - b * b,
            RightBranch::HypotenuseC => a * a + b * b - c * c,
        }
    }

    /// The positive-octant point with parameter `x`, permuted so the small
    /// coordinate sits in the hypotenuse slot.
    pub fn point(&self, x: f64) -> Result<SpherePoint> {
        let q = right_curve_point(x)?;
        let [u, v, w] = q.coords();
        let coords = match self.branch {
            RightBranch::HypotenuseA => [w, u, v],
            RightBranch::HypotenuseB => [v, w, u],
            RightBranch::HypotenuseC => [u, v, w],
        };
        SpherePoint::new(coords[0], coords[1], coords[2])
    }
}

fn curve_coords(x: f64) -> [f64; 3] {
    let r = ((1.0 - x * x) / (1.0 + x * x)).max(0.0).sqrt();
    [x, r, x * r]
}

/// `q(x)` on the hypotenuse-`c` branch, `0 ≤ x ≤ 1`.
///
/// `x = 1` is the doubly degenerate corner `(1, 0, 0)`; `x = 0` is `(0, 1, 0)`.
pub fn right_curve_point(x: f64) -> Result<SpherePoint> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfDomain { value: x, lo: 0.0, hi: 1.0 });
    }
    let [a, b, c] = curve_coords(x);
    SpherePoint::new(a, b, c)
}

/// Distance from `p` to the positive-octant hypotenuse-`c` branch.
pub fn distance_to_right_branch(p: &SpherePoint) -> f64 {
    nearest_on_right_branch(p).1
}

/// The parameter of the nearest branch point, and its distance.
pub fn nearest_on_right_branch(p: &SpherePoint) -> (f64, f64) {
    let f = |x: f64| {
        let [a, b, c] = curve_coords(x);
        geodesic_distance(p, &SpherePoint::from_unit(nalgebra::Vector3::new(a, b, c)))
    };
    scan_and_refine_min(f, 0.0, 1.0, CURVE_SCAN_SAMPLES, CURVE_REFINE_TOL)
}

/// Distance to the nearest right triangle anywhere on the sphere.
///
/// The full locus is the `B₃` orbit of the positive-octant branch. For a
/// target in the positive octant, flipping any coordinate of the query to
/// positive never increases its distance, and the branch is symmetric under
/// `x ↔ y`. So the minimum over all 48 images is attained among the three
/// images of `|p|` that differ in which coordinate fills the `z` slot.
pub fn distance_to_right(p: &SpherePoint) -> f64 {
    let [a, b, c] = p.coords().map(f64::abs);
    [[b, c, a], [c, a, b], [a, b, c]]
        .into_iter()
        .map(|[x, y, z]| distance_to_right_branch(&SpherePoint::from_unit(nalgebra::Vector3::new(x, y, z))))
        .fold(f64::INFINITY, f64::min)
}

/// Distance from `arc(t)` to the hypotenuse-`c` branch.
pub fn curve_wall_distance(t: f64, arc: &ArcParametrization) -> f64 {
    distance_to_right_branch(&arc.point(t))
}
