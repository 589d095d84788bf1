//! Points furthest from the boundary of regions of triangle space.
//!
//! The chamber `0 ≤ z ≤ y ≤ x` and its double `|z| ≤ y ≤ x` are spherical
//! triangles, so their answers are incenters. Restricting to obtuse or acute
//! triangles replaces one wall by the curve of right triangles. The farthest
//! point still lies on the bisector of the two remaining great-circle walls,
//! so the search runs along that bisector for the first parameter where the
//! distance to the curve drops to the distance to the walls.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::loci::{curve_wall_distance, distance_to_right};
use crate::numeric::{bisect, first_sign_change};
use crate::sphere::{
    geodesic_distance, incenter_of_circular_triangle, normalize_coords, point_circle_distance, ArcParametrization,
    GreatCircle, SpherePoint,
};
use crate::symmetry::b3_elements;
use crate::triangle::{classify, sides_from_point, ShapeClass, TriangleSides, DEFAULT_TOL};

/// Subintervals of `(0, π/2)` scanned for the first sign change.
pub const BISECTOR_SCAN_STEPS: usize = 1024;
/// Bisection tolerance on the arc parameter.
pub const BISECTOR_TOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverResult {
    pub label: &'static str,
    pub point: SpherePoint,
    pub sides: TriangleSides,
    pub shape: ShapeClass,
    /// Common distance to the boundary components.
    pub inradius: f64,
    /// Arc parameter of the point along its bisector, when searched for.
    pub t0: Option<f64>,
    /// `tan(t0 / 2)`.
    pub alpha: Option<f64>,
}

impl SolverResult {
    fn at(label: &'static str, point: SpherePoint, inradius: f64) -> Self {
        let sides = sides_from_point(&point);
        Self { label, point, sides, shape: classify(&sides, DEFAULT_TOL), inradius, t0: None, alpha: None }
    }
}

fn wall(nx: f64, ny: f64, nz: f64) -> GreatCircle {
    GreatCircle::from_normal(nx, ny, nz).expect("nonzero normal")
}

/// Walls of `0 ≤ z ≤ y ≤ x`, normals inward.
pub fn chamber_walls() -> [GreatCircle; 3] {
    [wall(1.0, -1.0, 0.0), wall(0.0, 1.0, -1.0), wall(0.0, 0.0, 1.0)]
}

/// Walls of `|z| ≤ y ≤ x`, normals inward.
pub fn doubled_chamber_walls() -> [GreatCircle; 3] {
    [wall(1.0, -1.0, 0.0), wall(0.0, 1.0, 1.0), wall(0.0, 1.0, -1.0)]
}

/// The least symmetric triangle: the incenter of `0 ≤ z ≤ y ≤ x`.
pub fn least_symmetric() -> Result<SolverResult> {
    let [a, b, c] = chamber_walls();
    let (point, r) = incenter_of_circular_triangle(&a, &b, &c)?;
    Ok(SolverResult::at("least_symmetric", point, r))
}

/// The incenter of `|z| ≤ y ≤ x`, which ignores degeneracy and lands on the
/// degenerate 1:4:5 triangle.
pub fn least_symmetric_ordered() -> Result<SolverResult> {
    let [a, b, c] = doubled_chamber_walls();
    let (point, r) = incenter_of_circular_triangle(&a, &b, &c)?;
    Ok(SolverResult::at("least_symmetric_ordered", point, r))
}

fn unit(x: f64, y: f64, z: f64) -> SpherePoint {
    normalize_coords(x, y, z).expect("nonzero vector")
}

/// Bisector of `x = y` and `z = 0`, from the degenerate isosceles point.
pub fn obtuse_arc() -> ArcParametrization {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ArcParametrization::new(unit(1.0, 1.0, 0.0), unit(0.5, -0.5, s)).expect("orthonormal")
}

/// Bisector of `x = y` and `y = z`, from the equilateral point.
pub fn acute_arc() -> ArcParametrization {
    ArcParametrization::new(SpherePoint::equilateral(), unit(1.0, 0.0, -1.0)).expect("orthonormal")
}

/// A region bounded by two great circles and the hypotenuse-`c` branch of
/// the right-triangle curve, searched along the bisector of the two circles.
#[derive(Debug, Clone, Copy)]
pub struct CurvedRegion {
    pub arc: ArcParametrization,
    /// Either straight wall; the arc is equidistant from both.
    pub wall: GreatCircle,
}

impl CurvedRegion {
    pub fn obtuse() -> Self {
        Self { arc: obtuse_arc(), wall: wall(0.0, 0.0, 1.0) }
    }

    pub fn acute() -> Self {
        Self { arc: acute_arc(), wall: wall(1.0, -1.0, 0.0) }
    }

    pub fn wall_distance(&self, t: f64) -> f64 {
        point_circle_distance(&self.arc.point(t), &self.wall)
    }

    pub fn curve_distance(&self, t: f64) -> f64 {
        curve_wall_distance(t, &self.arc)
    }

    /// Distance to the nearer boundary component at `arc(t)`.
    pub fn clearance(&self, t: f64) -> f64 {
        self.wall_distance(t).min(self.curve_distance(t))
    }

    /// Smallest `t > 0` where the curve and wall distances agree.
    pub fn balance_parameter(&self) -> Result<f64> {
        let f = |t: f64| self.curve_distance(t) - self.wall_distance(t);
        let (lo, hi) = first_sign_change(f, 0.0, FRAC_PI_2, BISECTOR_SCAN_STEPS)
            .ok_or_else(|| Error::SolverFailure("curve and wall distances never balance on (0, π/2)".into()))?;
        bisect(f, lo, hi, BISECTOR_TOL)
    }

    fn solve(&self, label: &'static str) -> Result<SolverResult> {
        let t0 = self.balance_parameter()?;
        let point = self.arc.point(t0);
        let mut result = SolverResult::at(label, point, self.wall_distance(t0));
        result.t0 = Some(t0);
        result.alpha = Some((0.5 * t0).tan());
        Ok(result)
    }
}

/// The least symmetric obtuse triangle.
pub fn least_symmetric_obtuse() -> Result<SolverResult> {
    CurvedRegion::obtuse().solve("least_symmetric_obtuse")
}

/// The least symmetric acute triangle.
pub fn least_symmetric_acute() -> Result<SolverResult> {
    CurvedRegion::acute().solve("least_symmetric_acute")
}

/// The equilateral triangle and the degenerate `(1/2, 1/2, 1)` triangle, each
/// with its distance to the nearest right triangle.
pub fn most_acute_and_most_obtuse() -> (SolverResult, SolverResult) {
    let eq = SpherePoint::equilateral();
    let deg = unit(1.0, 1.0, 0.0);
    (
        SolverResult::at("most_acute", eq, distance_to_right(&eq)),
        SolverResult::at("most_obtuse", deg, distance_to_right(&deg)),
    )
}

/// Radius of the largest circle about the equilateral point that misses
/// every `B₃` image of the acute incircle.
pub fn equilateral_clearance(acute: &SolverResult) -> f64 {
    let eq = SpherePoint::equilateral();
    b3_elements().iter().map(|g| geodesic_distance(&eq, &g.apply(&acute.point))).fold(f64::INFINITY, f64::min)
        - acute.inradius
}
