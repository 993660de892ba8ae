//! Metric-space primitives: point clouds, p-norm distances, cached distance
//! matrices and planar convex hulls.

mod hull;

pub use hull::{convex_hull, convex_hull_with, rotating_calipers, HullResult};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty, indexed set of points in `dimension`-dimensional real space.
///
/// Coordinates are stored row-major in one flat buffer; point `i` occupies
/// `coords[i * dimension..(i + 1) * dimension]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    dimension: usize,
    coords: Vec<f64>,
}

impl PointCloud {
    /// Builds a cloud from per-point coordinate vectors.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let dimension = points.first().ok_or(Error::EmptyCloud)?.len();
        let mut coords = Vec::with_capacity(points.len() * dimension);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: p.len(),
                });
            }
            check_finite(i, p)?;
            coords.extend_from_slice(p);
        }
        Self::from_flat(dimension, coords)
    }

    /// Builds a cloud from a flat row-major coordinate buffer.
    pub fn from_flat(dimension: usize, coords: Vec<f64>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::param("dimension", "must be positive"));
        }
        if coords.is_empty() {
            return Err(Error::EmptyCloud);
        }
        if !coords.len().is_multiple_of(dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: coords.len() % dimension,
            });
        }
        for (i, p) in coords.chunks_exact(dimension).enumerate() {
            check_finite(i, p)?;
        }
        Ok(Self { dimension, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dimension
    }

    /// Always false; a cloud holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dimension)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Arithmetic mean of the given points.
    pub fn centroid(&self, indices: &[usize]) -> Vec<f64> {
        let mut mean = vec![0.0; self.dimension];
        for &i in indices {
            for (m, c) in mean.iter_mut().zip(self.point(i)) {
                *m += c;
            }
        }
        let count = indices.len() as f64;
        mean.iter_mut().for_each(|m| *m /= count);
        mean
    }
}

fn check_finite(point: usize, coords: &[f64]) -> Result<()> {
    match coords.iter().position(|c| !c.is_finite()) {
        Some(axis) => Err(Error::NonFiniteCoordinate { point, axis }),
        None => Ok(()),
    }
}

/// The exponent of a p-norm, validated to satisfy `p >= 1`.
///
/// `p = +inf` is accepted and yields the maximum-coordinate (Chebyshev) norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PNorm(f64);

impl PNorm {
    pub const MANHATTAN: PNorm = PNorm(1.0);
    pub const EUCLIDEAN: PNorm = PNorm(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::param(
                "p",
                format!("{p} is not a norm exponent (need p >= 1)"),
            ));
        }
        Ok(PNorm(p))
    }

    pub fn exponent(self) -> f64 {
        self.0
    }

    /// `(sum |x_i - y_i|^p)^(1/p)`. Callers guarantee equal lengths.
    #[inline]
    pub fn distance(self, x: &[f64], y: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), y.len());
        let diffs = x.iter().zip(y).map(|(a, b)| (a - b).abs());
        let p = self.0;
        if p == 2.0 {
            diffs.map(|d| d * d).sum::<f64>().sqrt()
        } else if p == 1.0 {
            diffs.sum()
        } else if p.is_infinite() {
            diffs.fold(0.0, f64::max)
        } else {
            diffs.map(|d| d.powf(p)).sum::<f64>().powf(p.recip())
        }
    }
}

impl Default for PNorm {
    fn default() -> Self {
        PNorm::EUCLIDEAN
    }
}

impl TryFrom<f64> for PNorm {
    type Error = Error;

    fn try_from(p: f64) -> Result<Self> {
        PNorm::new(p)
    }
}

impl From<PNorm> for f64 {
    fn from(p: PNorm) -> f64 {
        p.0
    }
}

/// p-norm distance between two points.
pub fn p_norm_distance(x: &[f64], y: &[f64], p: f64) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(PNorm::new(p)?.distance(x, y))
}

/// Symmetric matrix of pairwise distances with a zero diagonal.
///
/// Only the strict upper triangle is stored (condensed, row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    upper: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds a matrix from a pair function evaluated for every `i < j`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64 + Sync) -> Self {
        let upper: Vec<f64> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let f = &f;
                (i + 1..n).map(move |j| f(i, j))
            })
            .collect();
        Self { n, upper }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    fn offset(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0.0,
            std::cmp::Ordering::Less => self.upper[self.offset(i, j)],
            std::cmp::Ordering::Greater => self.upper[self.offset(j, i)],
        }
    }

    /// Largest entry; zero for a single point.
    pub fn max(&self) -> f64 {
        self.upper.iter().copied().fold(0.0, f64::max)
    }

    /// Iterates `(i, j, d)` over the strict upper triangle in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j, self.get(i, j))))
    }
}

/// All pairwise p-norm distances of a cloud.
///
/// Rows are filled in parallel; each entry is computed independently, so the
/// result does not depend on the thread count.
pub fn distance_matrix(cloud: &PointCloud, p: f64) -> Result<DistanceMatrix> {
    let norm = PNorm::new(p)?;
    Ok(DistanceMatrix::from_fn(cloud.len(), |i, j| {
        norm.distance(cloud.point(i), cloud.point(j))
    }))
}
