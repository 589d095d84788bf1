//! Points, great circles and arcs on the unit sphere.
//!
//! Distances use `atan2` of the sine and cosine parts rather than a bare
//! `acos`/`asin`, which keeps full precision near 0 and near π/2.

use nalgebra::Vector3;
use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance for unit-norm and orthogonality checks.
pub const UNIT_TOL: f64 = 1e-12;

/// A unit vector in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpherePoint {
    x: f64,
    y: f64,
    z: f64,
}

impl SpherePoint {
    /// Builds a point from coordinates that are already unit length.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm2 = x * x + y * y + z * z;
        if (norm2 - 1.0).abs() > UNIT_TOL {
            return Err(Error::DegenerateInput(format!("({x}, {y}, {z}) is not a unit vector (|v|² = {norm2})")));
        }
        Ok(Self { x, y, z })
    }

    pub(crate) fn from_unit(v: Vector3<f64>) -> Self {
        Self { x: v.x, y: v.y, z: v.z }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn antipode(&self) -> Self {
        Self { x: -self.x, y: -self.y, z: -self.z }
    }

    /// The equilateral triangle `(1, 1, 1)/√3`.
    pub fn equilateral() -> Self {
        let s = 1.0 / 3f64.sqrt();
        Self { x: s, y: s, z: s }
    }
}

/// Scales a nonzero vector onto the sphere.
pub fn normalize(v: Vector3<f64>) -> Result<SpherePoint> {
    let n = v.norm();
    if n <= 0.0 || !n.is_finite() {
        return Err(Error::DegenerateInput(format!("cannot normalize ({}, {}, {})", v.x, v.y, v.z)));
    }
    Ok(SpherePoint::from_unit(v / n))
}

/// Normalizes a raw coordinate triple.
pub fn normalize_coords(x: f64, y: f64, z: f64) -> Result<SpherePoint> {
    normalize(Vector3::new(x, y, z))
}

/// Length of the shorter great-circle arc between `p` and `q`, in `[0, π]`.
pub fn geodesic_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let (u, v) = (p.to_vector(), q.to_vector());
    let cos = u.dot(&v).clamp(-1.0, 1.0);
    let sin = u.cross(&v).norm();
    sin.atan2(cos)
}

/// An oriented great circle, stored by its unit normal.
///
/// The normals `n` and `-n` give the same point set with opposite
/// orientation. Regions are described by circles whose normals have a
/// positive dot product with interior points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreatCircle {
    normal: SpherePoint,
}

impl GreatCircle {
    pub fn new(normal: SpherePoint) -> Self {
        Self { normal }
    }

    /// The circle `n · p = 0` for an arbitrary nonzero `n`.
    pub fn from_normal(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        Ok(Self { normal: normalize_coords(nx, ny, nz)? })
    }

    pub fn normal(&self) -> SpherePoint {
        self.normal
    }

    pub fn flipped(&self) -> Self {
        Self { normal: self.normal.antipode() }
    }

    /// Signed sine of the distance from `p`; positive on the normal's side.
    pub fn side(&self, p: &SpherePoint) -> f64 {
        self.normal.dot(p)
    }

    /// Returns `count` points evenly spaced around the circle.
    pub fn sample(&self, count: usize) -> Vec<SpherePoint> {
        let n = self.normal.to_vector();
        // Any axis not too close to n seeds the orthonormal frame.
        let seed = if n.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
        let e1 = (seed - n * n.dot(&seed)).normalize();
        let e2 = n.cross(&e1);
        (0..count)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / count as f64;
                SpherePoint::from_unit((e1 * t.cos() + e2 * t.sin()).normalize())
            })
            .collect()
    }
}

/// Minimum geodesic distance from `p` to the circle, `arcsin |p · n|`.
pub fn point_circle_distance(p: &SpherePoint, circle: &GreatCircle) -> f64 {
    let (u, n) = (p.to_vector(), circle.normal.to_vector());
    let sin = u.dot(&n).abs();
    let cos = u.cross(&n).norm();
    sin.atan2(cos)
}

fn check_distinct(c1: &GreatCircle, c2: &GreatCircle) -> Result<()> {
    if c1.normal.dot(&c2.normal).abs() >= 1.0 - UNIT_TOL {
        return Err(Error::CoincidentCircles);
    }
    Ok(())
}

/// The great circle with normal `normalize(n1 + n2)`.
///
/// Its points satisfy `n1 · p = -n2 · p`, so it bisects the pair of opposite
/// angles on which the two normals disagree in sign. For the internal
/// bisector of a corner whose walls both point inward, pass one circle
/// flipped.
pub fn bisector(c1: &GreatCircle, c2: &GreatCircle) -> Result<GreatCircle> {
    check_distinct(c1, c2)?;
    let sum = c1.normal.to_vector() + c2.normal.to_vector();
    Ok(GreatCircle { normal: normalize(sum)? })
}

/// The antipodal pair `±normalize(n1 × n2)` where the two circles cross.
pub fn intersect(c1: &GreatCircle, c2: &GreatCircle) -> Result<(SpherePoint, SpherePoint)> {
    check_distinct(c1, c2)?;
    let p = normalize(c1.normal.to_vector().cross(&c2.normal.to_vector()))?;
    Ok((p, p.antipode()))
}

/// A great-circle arc `cos t · u1 + sin t · u2` through an orthonormal pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcParametrization {
    u1: SpherePoint,
    u2: SpherePoint,
}

impl ArcParametrization {
    pub fn new(u1: SpherePoint, u2: SpherePoint) -> Result<Self> {
        if u1.dot(&u2).abs() > UNIT_TOL {
            return Err(Error::DegenerateInput(format!("arc vectors are not orthogonal (u1·u2 = {})", u1.dot(&u2))));
        }
        Ok(Self { u1, u2 })
    }

    pub fn u1(&self) -> SpherePoint {
        self.u1
    }

    pub fn u2(&self) -> SpherePoint {
        self.u2
    }

    /// The great circle containing the arc.
    pub fn circle(&self) -> GreatCircle {
        let n = self.u1.to_vector().cross(&self.u2.to_vector());
        GreatCircle { normal: SpherePoint::from_unit(n.normalize()) }
    }

    pub fn point(&self, t: f64) -> SpherePoint {
        arc_point(self, t)
    }
}

pub fn arc_point(arc: &ArcParametrization, t: f64) -> SpherePoint {
    let v = arc.u1.to_vector() * t.cos() + arc.u2.to_vector() * t.sin();
    SpherePoint::from_unit(v)
}

/// Incenter and inradius of the spherical triangle `n_i · p ≥ 0`.
///
/// The three circles must be oriented with their normals pointing into the
/// triangle. The incenter is where the internal bisectors of two corners
/// meet; of the antipodal pair, the one on the positive side of every wall
/// is returned.
pub fn incenter_of_circular_triangle(
    c1: &GreatCircle,
    c2: &GreatCircle,
    c3: &GreatCircle,
) -> Result<(SpherePoint, f64)> {
    let det = c1.normal.to_vector().dot(&c2.normal.to_vector().cross(&c3.normal.to_vector()));
    if det.abs() < UNIT_TOL {
        return Err(Error::NoTriangle("bounding normals are coplanar".into()));
    }

    let b12 = bisector(c1, &c2.flipped()).map_err(|_| no_triangle("walls 1 and 2 coincide"))?;
    let b23 = bisector(c2, &c3.flipped()).map_err(|_| no_triangle("walls 2 and 3 coincide"))?;
    let (p, q) = intersect(&b12, &b23).map_err(|_| no_triangle("bisectors coincide"))?;

    let inside = |pt: &SpherePoint| [c1, c2, c3].iter().all(|c| c.side(pt) > 0.0);
    let center = if inside(&p) {
        p
    } else if inside(&q) {
        q
    } else {
        return Err(no_triangle("no bisector intersection lies inside all three walls"));
    };

    let d1 = point_circle_distance(&center, c1);
    let d2 = point_circle_distance(&center, c2);
    let d3 = point_circle_distance(&center, c3);
    if (d1 - d2).abs() > 1e-10 || (d1 - d3).abs() > 1e-10 {
        return Err(no_triangle("bisector intersection is not equidistant"));
    }
    Ok((center, d1))
}

fn no_triangle(msg: &str) -> Error {
    Error::NoTriangle(msg.into())
}
