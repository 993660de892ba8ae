use super::rips::{clique_complex, upper_neighbors};
use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::geometry::{PNorm, PointCloud};

/// Radius of the smallest closed disk containing one, two or three planar
/// points.
///
/// For three points this is the diametral disk of the longest side when the
/// opposite angle is right or obtuse, and the circumscribed disk otherwise.
/// The result is clamped to `[longest / 2, longest / sqrt(3)]`, the bounds
/// that hold for any planar set of that diameter, so rounding never pushes
/// it outside them.
pub fn min_enclosing_radius(points: &[&[f64]]) -> f64 {
    let dist = |a: &[f64], b: &[f64]| PNorm::EUCLIDEAN.distance(a, b);
    match points {
        [] | [_] => 0.0,
        [a, b] => dist(a, b) / 2.0,
        [a, b, c] => {
            let sides = [
                (dist(b, c), a, b, c),
                (dist(a, c), b, a, c),
                (dist(a, b), c, a, b),
            ];
            // Longest side and the vertex opposite it.
            let &(longest, apex, p, q) = sides
                .iter()
                .max_by(|x, y| x.0.total_cmp(&y.0))
                .expect("three sides");
            let half = longest / 2.0;
            let (ux, uy) = (p[0] - apex[0], p[1] - apex[1]);
            let (vx, vy) = (q[0] - apex[0], q[1] - apex[1]);
            let dot = ux * vx + uy * vy;
            let cross = (ux * vy - uy * vx).abs();
            if dot <= 0.0 || cross == 0.0 {
                return half;
            }
            let circumradius = longest * ux.hypot(uy) * vx.hypot(vy) / (2.0 * cross);
            circumradius.clamp(half, longest / 3f64.sqrt())
        }
        _ => panic!("min_enclosing_radius supports at most three points"),
    }
}

/// Čech complex of a planar cloud: a simplex on at most three vertices is
/// present when the closed disks of radius `alpha` around its vertices
/// share a point, i.e. when its minimum enclosing disk has radius `<= alpha`.
pub fn cech_complex(cloud: &PointCloud, alpha: f64, max_dim: usize) -> Result<SimplicialComplex> {
    if cloud.dimension() != 2 {
        return Err(Error::Unsupported(format!(
            "Čech complexes need 2-dimensional points, got dimension {}",
            cloud.dimension()
        )));
    }
    if max_dim > 2 {
        return Err(Error::Unsupported(format!(
            "Čech simplices of dimension {max_dim} in the plane; use a Rips complex for higher skeleta"
        )));
    }
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::param("alpha", format!("{alpha} must be >= 0")));
    }
    let p = |i: usize| cloud.point(i);
    let upper = upper_neighbors(cloud.len(), |i, j| {
        min_enclosing_radius(&[p(i), p(j)]) <= alpha
    });
    Ok(clique_complex(&upper, max_dim, |c| match *c {
        [a, b, c] => min_enclosing_radius(&[p(a), p(b), p(c)]) <= alpha,
        _ => true,
    }))
}
