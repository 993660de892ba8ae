use rayon::prelude::*;

use super::{FilteredComplex, FilteredSimplex, Simplex, SimplicialComplex, VertexList};
use crate::error::{Error, Result};
use crate::geometry::DistanceMatrix;

/// Enumerates every clique of size `<= max_dim + 1` that starts at `root`,
/// in lexicographic order, where `upper[v]` lists the neighbors of `v`
/// greater than `v` in increasing order.
///
/// Each extension intersects the candidate set with the new vertex's upper
/// neighbors, so only cliques are ever visited.
pub(crate) fn expand_from(
    root: usize,
    upper: &[Vec<usize>],
    max_dim: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    fn grow(
        clique: &mut VertexList,
        candidates: &[usize],
        upper: &[Vec<usize>],
        max_dim: usize,
        emit: &mut impl FnMut(&[usize]),
    ) {
        for (k, &w) in candidates.iter().enumerate() {
            clique.push(w);
            emit(clique);
            if clique.len() <= max_dim {
                let next = intersect_sorted(&candidates[k + 1..], &upper[w]);
                if !next.is_empty() {
                    grow(clique, &next, upper, max_dim, emit);
                }
            }
            clique.pop();
        }
    }

    let mut clique: VertexList = smallvec::smallvec![root];
    emit(&clique);
    if max_dim >= 1 {
        grow(&mut clique, &upper[root], upper, max_dim, emit);
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn upper_neighbors(
    n: usize,
    adjacent: impl Fn(usize, usize) -> bool + Sync,
) -> Vec<Vec<usize>> {
    (0..n)
        .into_par_iter()
        .map(|i| (i + 1..n).filter(|&j| adjacent(i, j)).collect())
        .collect()
}

/// Collects cliques into per-dimension lists; the clique enumeration order
/// is lexicographic, so each list comes out sorted.
pub(crate) fn clique_complex(
    upper: &[Vec<usize>],
    max_dim: usize,
    mut keep: impl FnMut(&[usize]) -> bool,
) -> SimplicialComplex {
    let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
    for root in 0..upper.len() {
        expand_from(root, upper, max_dim, &mut |c| {
            if keep(c) {
                levels[c.len() - 1].push(Simplex::from_sorted(c.iter().copied().collect()));
            }
        });
    }
    // Rips levels are already sorted across roots; a filtering `keep`
    // preserves that.
    SimplicialComplex::from_sorted_levels(levels)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::param("alpha", format!("{alpha} must be >= 0")));
    }
    Ok(())
}

/// Vietoris-Rips complex: every vertex set of size `<= max_dim + 1` whose
/// pairwise distances are all `<= alpha`.
pub fn rips_complex(dm: &DistanceMatrix, alpha: f64, max_dim: usize) -> Result<SimplicialComplex> {
    check_alpha(alpha)?;
    let upper = upper_neighbors(dm.len(), |i, j| dm.get(i, j) <= alpha);
    Ok(clique_complex(&upper, max_dim, |_| true))
}

/// Every simplex of dimension `<= max_dim` on the cloud, entering at the
/// largest pairwise distance among its vertices.
pub fn rips_filtration(dm: &DistanceMatrix, max_dim: usize) -> FilteredComplex {
    let n = dm.len();
    let upper = upper_neighbors(n, |_, _| true);
    let entries: Vec<FilteredSimplex> = (0..n)
        .into_par_iter()
        .flat_map_iter(|root| {
            let mut out = Vec::new();
            expand_from(root, &upper, max_dim, &mut |c| {
                let value = c
                    .iter()
                    .enumerate()
                    .flat_map(|(k, &u)| c[k + 1..].iter().map(move |&v| (u, v)))
                    .map(|(u, v)| dm.get(u, v))
                    .fold(0.0, f64::max);
                out.push(FilteredSimplex {
                    simplex: Simplex::from_sorted(c.iter().copied().collect()),
                    value,
                });
            });
            out
        })
        .collect();
    FilteredComplex::from_unsorted_valid(entries)
}
