//! Conversion, classification, solving and orbit listing.

use serde::Serialize;

use trishape::certificate::{verify_certificate, CertificateKind, PolynomialCertificate};
use trishape::sphere::normalize_coords;
use trishape::symmetry::b3_elements;
use trishape::triangle::{classify, normalize_perimeter, point_from_sides, s_coords, sides_from_point};
use trishape::{solvers, SCoords, ShapeClass, SignedPermutation, SolverResult, SpherePoint, TriangleSides};

use crate::{CliError, Constraint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvertInput {
    /// Side lengths in any scale.
    Sides([f64; 3]),
    /// A nonzero vector, normalized before use.
    Point([f64; 3]),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvertRecord {
    /// Perimeter-2 side lengths.
    pub sides: TriangleSides,
    pub s: SCoords,
    pub point: SpherePoint,
}

pub fn cmd_convert(input: ConvertInput) -> Result<ConvertRecord, CliError> {
    match input {
        ConvertInput::Sides([a, b, c]) => {
            let sides = normalize_perimeter(a, b, c)?;
            let s = s_coords(&sides)?;
            let point = point_from_sides(&sides)?;
            Ok(ConvertRecord { sides, s, point })
        }
        ConvertInput::Point([x, y, z]) => {
            let point = normalize_coords(x, y, z)?;
            let sides = sides_from_point(&point);
            let s = s_coords(&sides)?;
            Ok(ConvertRecord { sides, s, point })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyRecord {
    pub sides: TriangleSides,
    pub shape: ShapeClass,
}

/// Classifies after normalizing to perimeter 2; rejects non-triangles.
pub fn cmd_classify(sides: [f64; 3], tol: f64) -> Result<ClassifyRecord, CliError> {
    let sides = normalize_perimeter(sides[0], sides[1], sides[2])?;
    s_coords(&sides)?;
    Ok(ClassifyRecord { sides, shape: classify(&sides, tol) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveRecord {
    #[serde(flatten)]
    pub result: SolverResult,
    /// Root bracket for `alpha` on the curved-region solutions.
    pub certificate: Option<PolynomialCertificate>,
}

fn certified(result: SolverResult, kind: CertificateKind) -> Result<SolveRecord, CliError> {
    let alpha = result.alpha.expect("curved-region solutions carry alpha");
    let certificate = verify_certificate(kind, alpha)?;
    Ok(SolveRecord { result, certificate: Some(certificate) })
}

fn plain(result: SolverResult) -> SolveRecord {
    SolveRecord { result, certificate: None }
}

pub fn cmd_solve(constraint: Constraint) -> Result<Vec<SolveRecord>, CliError> {
    Ok(match constraint {
        Constraint::None => vec![plain(solvers::least_symmetric()?)],
        Constraint::Ordered => vec![plain(solvers::least_symmetric_ordered()?)],
        Constraint::Obtuse => vec![certified(solvers::least_symmetric_obtuse()?, CertificateKind::Obtuse)?],
        Constraint::Acute => vec![certified(solvers::least_symmetric_acute()?, CertificateKind::Acute)?],
        Constraint::Extremes => {
            let (acute, obtuse) = solvers::most_acute_and_most_obtuse();
            vec![plain(acute), plain(obtuse)]
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitImage {
    pub element: SignedPermutation,
    pub point: SpherePoint,
}

pub fn cmd_orbit(point: [f64; 3]) -> Result<Vec<OrbitImage>, CliError> {
    let p = normalize_coords(point[0], point[1], point[2])?;
    Ok(b3_elements().iter().map(|g| OrbitImage { element: *g, point: g.apply(&p) }).collect())
}
