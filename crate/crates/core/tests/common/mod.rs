//! Independent oracles and fixtures shared by the integration tests.
//!
//! Nothing here calls the reduction, union-find or calipers code under test;
//! each oracle recomputes its answer from first principles.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tda_core::{
    boundary_matrix, reduce, DistanceMatrix, FilteredComplex, FilteredSimplex, PointCloud, Simplex,
    SimplicialComplex,
};

pub fn simplex(v: &[usize]) -> Simplex {
    Simplex::new(v.iter().copied()).unwrap()
}

pub fn complex(top: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_simplices(top.iter().map(|v| simplex(v)))
}

pub fn point() -> SimplicialComplex {
    complex(&[&[0]])
}

pub fn hollow_triangle() -> SimplicialComplex {
    complex(&[&[0, 1], &[1, 2], &[0, 2]])
}

/// Boundary of the octahedron: poles 0 and 5 over the square 1-2-3-4.
pub fn octahedron() -> SimplicialComplex {
    let equator = [1, 2, 3, 4];
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (equator[i], equator[(i + 1) % 4]);
        faces.push(simplex(&[0, a, b]));
        faces.push(simplex(&[5, a, b]));
    }
    SimplicialComplex::from_simplices(faces)
}

/// Möbius–Kantor 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3}
/// mod 7.
pub fn seven_vertex_torus() -> SimplicialComplex {
    let faces = (0..7).flat_map(|i| {
        [
            simplex(&[i, (i + 1) % 7, (i + 3) % 7]),
            simplex(&[i, (i + 2) % 7, (i + 3) % 7]),
        ]
    });
    SimplicialComplex::from_simplices(faces)
}

/// Rank over the two-element field of a matrix whose rows are bitsets.
pub fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for bit in 0..words * 64 {
        let (w, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & mask != 0 {
                row.iter_mut().zip(&pivot_row).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Dense matrix of the boundary map from dimension `k` to `k - 1`.
fn dense_boundary(c: &SimplicialComplex, k: usize) -> Vec<Vec<u64>> {
    let rows = c.simplices(k - 1);
    let words = rows.len().div_ceil(64).max(1);
    c.simplices(k)
        .iter()
        .map(|s| {
            let mut bits = vec![0u64; words];
            for (drop, _) in s.vertices().iter().enumerate() {
                let face: Vec<usize> = s
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let row = rows
                    .iter()
                    .position(|r| r.vertices() == face)
                    .expect("face-closed");
                bits[row / 64] |= 1 << (row % 64);
            }
            bits
        })
        .collect()
}

/// β_0..=β_up_to from dense boundary ranks.
pub fn dense_betti(c: &SimplicialComplex, up_to: usize) -> Vec<usize> {
    let rank = |k: usize| {
        if k == 0 || c.simplices(k).is_empty() {
            0
        } else {
            gf2_rank(dense_boundary(c, k))
        }
    };
    (0..=up_to)
        .map(|k| c.simplices(k).len() - rank(k) - rank(k + 1))
        .collect()
}

/// β_k as the number of essential classes after reducing the complex
/// filtered by dimension.
pub fn reduction_betti(c: &SimplicialComplex, up_to: usize) -> Vec<usize> {
    let fc = FilteredComplex::new(
        c.iter()
            .map(|s| FilteredSimplex {
                simplex: s.clone(),
                value: s.dimension() as f64,
            })
            .collect(),
    )
    .unwrap();
    let reduction = reduce(&boundary_matrix(&fc).unwrap());
    let mut betti = vec![0; up_to + 1];
    for &e in &reduction.essential {
        let d = fc.entries()[e].simplex.dimension();
        if d <= up_to {
            betti[d] += 1;
        }
    }
    betti
}

/// Components of the graph `d(i, j) <= 2r` by depth-first search.
pub fn dfs_components(dm: &DistanceMatrix, r: f64) -> usize {
    let n = dm.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && dm.get(i, j) <= 2.0 * r {
                    *s = true;
                    stack.push(j);
                }
            }
        }
    }
    count
}

pub fn brute_diameter(cloud: &PointCloud) -> f64 {
    let mut best = 0.0f64;
    for i in 0..cloud.len() {
        for j in i + 1..cloud.len() {
            let (a, b) = (cloud.point(i), cloud.point(j));
            let (dx, dy) = (a[0] - b[0], a[1] - b[1]);
            best = best.max((dx * dx + dy * dy).sqrt());
        }
    }
    best
}

pub fn uniform_cloud(seed: u64, n: usize, dim: usize, side: f64) -> PointCloud {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = (0..n * dim).map(|_| rng.random_range(0.0..side)).collect();
    PointCloud::from_flat(dim, coords).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Three tight pairs (gap 1/8) and nine singletons on a grid of spacing 10:
/// 12 components for any ball radius in [1/16, 4.9375).
pub fn fifteen_points() -> PointCloud {
    let mut points = Vec::new();
    for k in 0..12 {
        let (x, y) = ((k % 4) as f64 * 10.0, (k / 4) as f64 * 10.0);
        points.push(vec![x, y]);
        if k < 3 {
            points.push(vec![x + 0.125, y]);
        }
    }
    PointCloud::new(points).unwrap()
}
