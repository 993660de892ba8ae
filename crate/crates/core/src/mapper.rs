//! The Mapper construction: a filter function on the cloud, an overlapping
//! cover of the filter's range, clusters of each cover element's preimage,
//! and the nerve graph of those clusters.
//!
//! Clusters are connected components of the fixed-radius neighbor graph on
//! each preimage, the same machinery [`crate::complex`] uses for the whole
//! cloud.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{
    connected_components, neighbor_graph, neighbor_graph_subset, Simplex, SimplicialComplex,
    UnionFind,
};
use crate::error::{Error, Result};
use crate::geometry::{DistanceMatrix, PointCloud};

/// One filter value per point; each value is a vector of `width` reals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FilterValues {
    values: Vec<f64>,
    width: usize,
    /// Human-readable description of the filter, e.g. `"project axis 0"`.
    pub descriptor: String,
}

impl FilterValues {
    pub fn new(values: Vec<f64>, width: usize, descriptor: impl Into<String>) -> Result<Self> {
        if width == 0 || !values.len().is_multiple_of(width) {
            return Err(Error::param(
                "filter width",
                format!("{width} does not divide {} values", values.len()),
            ));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteCoordinate {
                point: i / width,
                axis: i % width,
            });
        }
        Ok(Self {
            values,
            width,
            descriptor: descriptor.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.values.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn value(&self, i: usize) -> &[f64] {
        &self.values[i * self.width..(i + 1) * self.width]
    }

    /// Smallest and largest value of a scalar filter.
    pub fn range(&self) -> Option<(f64, f64)> {
        if self.width != 1 || self.values.is_empty() {
            return None;
        }
        let lo = self.values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self
            .values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        Some((lo, hi))
    }
}

/// Projection of every point onto one coordinate axis.
pub fn filter_project(cloud: &PointCloud, axis: usize) -> Result<FilterValues> {
    if axis >= cloud.dimension() {
        return Err(Error::AxisOutOfRange {
            axis,
            dimension: cloud.dimension(),
        });
    }
    FilterValues::new(
        cloud.points().map(|p| p[axis]).collect(),
        1,
        format!("project axis {axis}"),
    )
}

/// A closed interval `[low, high]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub low: f64,
    pub high: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.low <= x && x <= self.high
    }
}

/// Equal-length intervals covering a range, consecutive ones overlapping by
/// a fraction `overlap` of their length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverScheme {
    pub intervals: Vec<Interval>,
    pub overlap: f64,
}

impl CoverScheme {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Consecutive intervals only touch instead of overlapping.
    pub fn is_degenerate(&self) -> bool {
        self.intervals.windows(2).any(|w| w[0].high <= w[1].low)
    }
}

/// `n` intervals of length `L = (hi - lo) / (n - (n - 1) g)` starting at
/// `lo + i L (1 - g)`; the last one ends exactly at `hi`.
pub fn uniform_cover(lo: f64, hi: f64, n: usize, overlap: f64) -> Result<CoverScheme> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::param(
            "cover range",
            format!("[{lo}, {hi}] is empty or not finite"),
        ));
    }
    if n == 0 {
        return Err(Error::param("intervals", "need at least one interval"));
    }
    if !(0.0..1.0).contains(&overlap) {
        return Err(Error::param(
            "overlap",
            format!("{overlap} is outside [0, 1)"),
        ));
    }
    let nf = n as f64;
    let length = (hi - lo) / (nf - (nf - 1.0) * overlap);
    let step = length * (1.0 - overlap);
    let start = |i: usize| lo + i as f64 * step;
    let intervals = (0..n)
        .map(|i| Interval {
            low: start(i),
            high: if i + 1 == n {
                hi
            } else {
                // Never leave a rounding gap before the next interval.
                (start(i) + length).max(start(i + 1))
            },
        })
        .collect();
    Ok(CoverScheme { intervals, overlap })
}

/// A cluster of one cover element's preimage.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapperNode {
    pub interval_index: usize,
    pub cluster_index: usize,
    /// Sorted point indices.
    pub members: Vec<usize>,
    /// Mean of the members' coordinates.
    pub centroid: Vec<f64>,
}

impl MapperNode {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    fn intersects(&self, other: &MapperNode) -> bool {
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// Nerve of a family of clusters, restricted to vertices and edges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapperGraph {
    pub nodes: Vec<MapperNode>,
    /// Sorted `(a, b)` node-index pairs with `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl MapperGraph {
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.component_count()
    }

    /// Number of independent cycles: `edges - nodes + components`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.nodes.len()
    }

    /// Nodes belonging to cover element `interval`.
    pub fn nodes_in_interval(&self, interval: usize) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.interval_index == interval)
            .count()
    }

    /// The graph as a 1-dimensional simplicial complex on node indices.
    pub fn as_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_simplices(
            (0..self.nodes.len()).map(Simplex::vertex).chain(
                self.edges
                    .iter()
                    .map(|&(a, b)| Simplex::new([a, b]).expect("nerve edges join distinct nodes")),
            ),
        )
    }
}

/// Clusters of each interval's preimage (closed containment), as
/// connected components of the neighbor graph at `cluster_radius`.
///
/// Intervals with an empty preimage contribute no nodes. Nodes are ordered
/// by interval, then by smallest member.
pub fn refined_pullback(
    cloud: &PointCloud,
    dm: &DistanceMatrix,
    filter: &FilterValues,
    cover: &CoverScheme,
    cluster_radius: f64,
) -> Result<Vec<MapperNode>> {
    if cluster_radius.is_nan() || cluster_radius <= 0.0 {
        return Err(Error::param(
            "cluster radius",
            format!("{cluster_radius} must be > 0"),
        ));
    }
    if filter.width() != 1 {
        return Err(Error::Unsupported(format!(
            "covers of {}-dimensional filter values",
            filter.width()
        )));
    }
    if filter.len() != cloud.len() || dm.len() != cloud.len() {
        return Err(Error::DimensionMismatch {
            expected: cloud.len(),
            found: if filter.len() != cloud.len() {
                filter.len()
            } else {
                dm.len()
            },
        });
    }
    let per_interval: Vec<Result<Vec<MapperNode>>> = cover
        .intervals
        .par_iter()
        .enumerate()
        .map(|(interval_index, interval)| {
            let preimage: Vec<usize> = (0..filter.len())
                .filter(|&i| interval.contains(filter.value(i)[0]))
                .collect();
            let graph = neighbor_graph_subset(dm, &preimage, cluster_radius)?;
            Ok(connected_components(&graph)
                .into_iter()
                .enumerate()
                .map(|(cluster_index, local)| {
                    let members: Vec<usize> = local.iter().map(|&k| preimage[k]).collect();
                    MapperNode {
                        interval_index,
                        cluster_index,
                        centroid: cloud.centroid(&members),
                        members,
                    }
                })
                .collect())
        })
        .collect();
    let mut nodes = Vec::new();
    for part in per_interval {
        nodes.extend(part?);
    }
    Ok(nodes)
}

/// Graph with one vertex per node and an edge wherever two nodes share a
/// point.
pub fn nerve(mut nodes: Vec<MapperNode>) -> MapperGraph {
    nodes.sort_by_key(|n| (n.interval_index, n.cluster_index));
    let mut edges = Vec::new();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            if nodes[a].intersects(&nodes[b]) {
                edges.push((a, b));
            }
        }
    }
    MapperGraph { nodes, edges }
}

/// Clusters of the whole cloud at radius `r`, linked when their closest
/// points are within `link_threshold` of each other.
///
/// Components at radius `r` are always more than `2r` apart, so the
/// default threshold is `4r`: clusters whose balls would meet at twice the
/// clustering radius.
pub fn cluster_cover_complex(
    cloud: &PointCloud,
    dm: &DistanceMatrix,
    r: f64,
    link_threshold: Option<f64>,
) -> Result<MapperGraph> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::param("radius", format!("{r} must be > 0")));
    }
    let threshold = link_threshold.unwrap_or(4.0 * r);
    if threshold.is_nan() || threshold < 0.0 {
        return Err(Error::param(
            "link threshold",
            format!("{threshold} must be >= 0"),
        ));
    }
    let clusters = connected_components(&neighbor_graph(dm, r)?);
    let mut owner = vec![0; cloud.len()];
    for (c, members) in clusters.iter().enumerate() {
        for &i in members {
            owner[i] = c;
        }
    }
    let k = clusters.len();
    let mut gap = vec![f64::INFINITY; k * k];
    for (i, j, d) in dm.pairs() {
        let (a, b) = (owner[i].min(owner[j]), owner[i].max(owner[j]));
        if a != b && d < gap[a * k + b] {
            gap[a * k + b] = d;
        }
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if gap[a * k + b] <= threshold {
                edges.push((a, b));
            }
        }
    }
    let nodes = clusters
        .into_iter()
        .enumerate()
        .map(|(cluster_index, members)| MapperNode {
            interval_index: 0,
            cluster_index,
            centroid: cloud.centroid(&members),
            members,
        })
        .collect();
    Ok(MapperGraph { nodes, edges })
}
