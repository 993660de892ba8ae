//! Simplicial complexes built from point clouds: neighbor graphs and their
//! connected components, Vietoris-Rips and Čech complexes, and Rips
//! filtrations.
//!
//! All scale comparisons are closed (`<=`): two points at distance exactly
//! `2r` are neighbors at ball radius `r`.

mod cech;
mod graph;
mod rips;

pub use cech::{cech_complex, min_enclosing_radius};
pub use graph::{
    connected_components, neighbor_graph, neighbor_graph_subset, NeighborGraph, UnionFind,
};
pub use rips::{rips_complex, rips_filtration};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type VertexList = SmallVec<[usize; 4]>;

/// A simplex as a strictly increasing list of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(VertexList);

impl Simplex {
    /// Sorts the given vertices; repeated or missing vertices are rejected.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: VertexList = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::param("simplex", "needs at least one vertex"));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("simplex", format!("repeated vertex in {v:?}")));
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(smallvec::smallvec![v])
    }

    pub(crate) fn from_sorted(v: VertexList) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-1 faces, in the order obtained by dropping vertex
    /// 0, 1, ... in turn. Empty for a vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..k).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (i != skip).then_some(v))
                    .collect(),
            )
        })
    }

    /// Every nonempty face, the simplex itself included.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.0.len();
        (1u32..(1 << k)).map(move |mask| {
            Simplex(
                (0..k)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A finite set of simplices closed under taking faces, grouped by
/// dimension and sorted lexicographically within each dimension.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// The smallest complex containing every given simplex.
    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            for face in s.faces() {
                let d = face.dimension();
                if sets.len() <= d {
                    sets.resize_with(d + 1, BTreeSet::new);
                }
                sets[d].insert(face);
            }
        }
        Self {
            by_dim: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Wraps per-dimension lists that are already sorted and face-closed.
    pub(crate) fn from_sorted_levels(mut by_dim: Vec<Vec<Simplex>>) -> Self {
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        debug_assert!(by_dim.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Self { by_dim }
    }

    /// Highest simplex dimension present, `None` for the empty complex.
    pub fn max_dimension(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Number of simplices in each dimension `0..=max_dimension`.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices(s.dimension()).binary_search(s).is_ok()
    }

    /// Position of `s` within its dimension's sorted list.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dimension()).binary_search(s).ok()
    }

    pub fn is_face_closed(&self) -> bool {
        self.iter().all(|s| s.facets().all(|f| self.contains(&f)))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Restriction to simplices of dimension at most `dim`.
    pub fn skeleton(&self, dim: usize) -> SimplicialComplex {
        Self {
            by_dim: self.by_dim.iter().take(dim + 1).cloned().collect(),
        }
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, l)| {
                if d % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }
}

/// A simplex paired with the scale at which it enters a filtration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FilteredSimplex {
    pub simplex: Simplex,
    pub value: f64,
}

fn filtration_order(a: &FilteredSimplex, b: &FilteredSimplex) -> Ordering {
    a.value
        .total_cmp(&b.value)
        .then(a.simplex.dimension().cmp(&b.simplex.dimension()))
        .then_with(|| a.simplex.cmp(&b.simplex))
}

/// A face-closed complex whose simplices carry entry scales, sorted by
/// (scale, dimension, lexicographic vertices). Every face precedes its
/// cofaces in this order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FilteredComplex {
    entries: Vec<FilteredSimplex>,
}

impl FilteredComplex {
    /// Sorts and validates arbitrary entries: values must be finite and
    /// non-negative, faces present, and no face may enter after its coface.
    pub fn new(mut entries: Vec<FilteredSimplex>) -> Result<Self> {
        if let Some(bad) = entries
            .iter()
            .find(|e| !(e.value.is_finite() && e.value >= 0.0))
        {
            return Err(Error::param(
                "filtration value",
                format!(
                    "{} on {:?} is not a finite non-negative scale",
                    bad.value, bad.simplex
                ),
            ));
        }
        entries.sort_by(filtration_order);
        if entries.windows(2).any(|w| w[0].simplex == w[1].simplex) {
            return Err(Error::param("filtration", "simplex listed twice"));
        }
        let value_of: HashMap<&Simplex, f64> =
            entries.iter().map(|e| (&e.simplex, e.value)).collect();
        for e in &entries {
            for face in e.simplex.facets() {
                match value_of.get(&face) {
                    None => {
                        return Err(Error::MissingFace {
                            simplex: e.simplex.vertices().to_vec(),
                            face: face.vertices().to_vec(),
                        })
                    }
                    Some(&v) if v > e.value => {
                        return Err(Error::param(
                            "filtration",
                            format!(
                                "face {face:?} enters at {v}, after {:?} at {}",
                                e.simplex, e.value
                            ),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_unsorted_valid(mut entries: Vec<FilteredSimplex>) -> Self {
        use rayon::slice::ParallelSliceMut;
        entries.par_sort_unstable_by(filtration_order);
        Self { entries }
    }

    pub fn entries(&self) -> &[FilteredSimplex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest filtration value, zero when empty.
    pub fn max_value(&self) -> f64 {
        self.entries.last().map_or(0.0, |e| e.value)
    }

    /// Number of vertices (0-simplices).
    pub fn vertex_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.simplex.dimension() == 0)
            .count()
    }

    /// The complex of all simplices with value `<= alpha`.
    pub fn threshold(&self, alpha: f64) -> SimplicialComplex {
        SimplicialComplex::from_simplices(
            self.entries
                .iter()
                .take_while(|e| e.value <= alpha)
                .map(|e| e.simplex.clone()),
        )
    }
}
