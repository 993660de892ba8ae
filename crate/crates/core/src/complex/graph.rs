use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::DistanceMatrix;

/// Graph joining every pair of points whose closed balls of radius `radius`
/// meet, i.e. whose distance is at most `2 * radius`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NeighborGraph {
    pub n: usize,
    pub radius: f64,
    /// Sorted `(i, j)` pairs with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::param("radius", format!("{r} must be >= 0")));
    }
    Ok(())
}

pub fn neighbor_graph(dm: &DistanceMatrix, r: f64) -> Result<NeighborGraph> {
    check_radius(r)?;
    let reach = 2.0 * r;
    let edges = dm
        .pairs()
        .filter_map(|(i, j, d)| (d <= reach).then_some((i, j)))
        .collect();
    Ok(NeighborGraph {
        n: dm.len(),
        radius: r,
        edges,
    })
}

/// Neighbor graph on the points `subset`; vertex `k` of the result stands
/// for point `subset[k]`.
pub fn neighbor_graph_subset(
    dm: &DistanceMatrix,
    subset: &[usize],
    r: f64,
) -> Result<NeighborGraph> {
    check_radius(r)?;
    let reach = 2.0 * r;
    let mut edges = Vec::new();
    for (a, &i) in subset.iter().enumerate() {
        for (b, &j) in subset.iter().enumerate().skip(a + 1) {
            if dm.get(i, j) <= reach {
                edges.push((a, b));
            }
        }
    }
    Ok(NeighborGraph {
        n: subset.len(),
        radius: r,
        edges,
    })
}

/// Partition of `0..n` into the graph's connected components. Members are
/// sorted and clusters are ordered by their smallest member.
pub fn connected_components(g: &NeighborGraph) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(g.n);
    for &(i, j) in &g.edges {
        uf.union(i, j);
    }
    uf.groups()
}

/// Disjoint-set forest with union by rank and path compression.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut node = x;
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        if self.rank[ra] == self.rank[rb] {
            self.rank[ra] += 1;
        }
        self.components -= 1;
        true
    }

    pub fn connected(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Current sets, each sorted, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut slot = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::with_capacity(self.components);
        for i in 0..n {
            let root = self.find(i);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(i);
        }
        groups
    }
}
