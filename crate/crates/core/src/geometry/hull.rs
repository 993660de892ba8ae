//! Andrew's monotone chain hull and the rotating-calipers diameter.

use serde::Serialize;

use super::{DistanceMatrix, PNorm, PointCloud};
use crate::error::{Error, Result};

/// Convex hull of a planar cloud together with its diameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullResult {
    /// Hull vertices in counter-clockwise order, starting from the
    /// lowest point among the leftmost ones.
    pub hull_indices: Vec<usize>,
    /// Largest pairwise distance in the cloud.
    pub diameter: f64,
    /// Lexicographically smallest pair realizing `diameter`.
    pub diameter_pair: (usize, usize),
}

/// Largest magnitude at which integer-valued coordinates keep every
/// cross product exact in `f64`.
const EXACT_LIMIT: f64 = (1u64 << 24) as f64;
const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Orientation predicate for one cloud. Exact when every coordinate is an
/// integer of magnitude at most 2^24; otherwise turns whose cross product is
/// within a relative 1e-12 of zero count as collinear.
#[derive(Clone, Copy)]
pub(crate) struct Orientation {
    exact: bool,
}

impl Orientation {
    pub(crate) fn for_cloud(cloud: &PointCloud) -> Self {
        let exact = cloud
            .coords()
            .iter()
            .all(|c| c.fract() == 0.0 && c.abs() <= EXACT_LIMIT);
        Self { exact }
    }

    /// Sign of the cross product `(b - a) x (c - a)`: +1 for a left turn.
    pub(crate) fn sign(self, a: &[f64], b: &[f64], c: &[f64]) -> i8 {
        let (ux, uy) = (b[0] - a[0], b[1] - a[1]);
        let (vx, vy) = (c[0] - a[0], c[1] - a[1]);
        let cross = ux * vy - uy * vx;
        let tol = if self.exact {
            0.0
        } else {
            RELATIVE_TOLERANCE * ((ux * vy).abs() + (uy * vx).abs())
        };
        if cross > tol {
            1
        } else if cross < -tol {
            -1
        } else {
            0
        }
    }
}

fn require_planar(cloud: &PointCloud) -> Result<()> {
    if cloud.dimension() != 2 {
        return Err(Error::Unsupported(format!(
            "convex hulls need 2-dimensional points, got dimension {}",
            cloud.dimension()
        )));
    }
    Ok(())
}

/// Euclidean convex hull and diameter of a planar cloud.
pub fn convex_hull(cloud: &PointCloud) -> Result<HullResult> {
    convex_hull_with(cloud, PNorm::EUCLIDEAN)
}

/// Convex hull of a planar cloud with the diameter measured in `norm`.
///
/// Interior collinear points are dropped, and of several coincident points
/// only the smallest index can appear on the hull.
pub fn convex_hull_with(cloud: &PointCloud, norm: PNorm) -> Result<HullResult> {
    require_planar(cloud)?;
    let hull_indices = monotone_chain(cloud);
    let (diameter, diameter_pair) = calipers_by(cloud, &hull_indices, |i, j| {
        norm.distance(cloud.point(i), cloud.point(j))
    });
    Ok(HullResult {
        hull_indices,
        diameter,
        diameter_pair,
    })
}

fn monotone_chain(cloud: &PointCloud) -> Vec<usize> {
    let orient = Orientation::for_cloud(cloud);
    let p = |i: usize| cloud.point(i);

    let mut order: Vec<usize> = (0..cloud.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (p(a), p(b));
        pa[0]
            .total_cmp(&pb[0])
            .then(pa[1].total_cmp(&pb[1]))
            .then(a.cmp(&b))
    });
    order.dedup_by(|b, a| p(*a) == p(*b));

    if order.len() < 3 {
        return order;
    }

    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    let push = |hull: &mut Vec<usize>, start: usize, i: usize| {
        while hull.len() >= start + 2
            && orient.sign(p(hull[hull.len() - 2]), p(hull[hull.len() - 1]), p(i)) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    };
    for &i in &order {
        push(&mut hull, 0, i);
    }
    // The last point of each chain starts the next one.
    hull.pop();
    let start = hull.len();
    for &i in order.iter().rev() {
        push(&mut hull, start, i);
    }
    hull.pop();
    hull
}

/// Diameter of a cloud from its CCW hull vertices, reading distances from
/// `dm`.
pub fn rotating_calipers(
    cloud: &PointCloud,
    hull: &[usize],
    dm: &DistanceMatrix,
) -> Result<(f64, (usize, usize))> {
    require_planar(cloud)?;
    if hull.is_empty() {
        return Err(Error::param("hull", "needs at least one vertex"));
    }
    Ok(calipers_by(cloud, hull, |i, j| dm.get(i, j)))
}

fn calipers_by(
    cloud: &PointCloud,
    hull: &[usize],
    dist: impl Fn(usize, usize) -> f64,
) -> (f64, (usize, usize)) {
    let m = hull.len();
    let mut best = (0.0, (hull[0], hull[0]));
    let mut consider = |a: usize, b: usize| {
        let pair = (a.min(b), a.max(b));
        let d = dist(a, b);
        if d > best.0 || (d == best.0 && pair < best.1) {
            best = (d, pair);
        }
    };
    if m == 1 {
        return best;
    }
    if m == 2 {
        consider(hull[0], hull[1]);
        return best;
    }

    let p = |k: usize| cloud.point(hull[k % m]);
    let twice_area = |a: usize, b: usize, c: usize| {
        let (pa, pb, pc) = (p(a), p(b), p(c));
        ((pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0])).abs()
    };

    // For each hull edge, advance the opposite vertex to the one farthest
    // from the edge's supporting line; every antipodal vertex pair is visited.
    let mut j = 1;
    for i in 0..m {
        let ni = i + 1;
        let mut steps = 0;
        while steps < m && twice_area(i, ni, j + 1) > twice_area(i, ni, j) {
            j += 1;
            steps += 1;
        }
        // j + 1 covers the second vertex of a parallel opposite edge.
        for k in [j, j + 1] {
            consider(hull[i], hull[k % m]);
            consider(hull[ni % m], hull[k % m]);
        }
    }
    best
}
