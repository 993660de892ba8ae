use std::collections::HashMap;

use crate::complex::{FilteredComplex, Simplex};
use crate::error::{Error, Result};

/// Sparse boundary matrix of a filtration over the two-element field.
///
/// Column `j` lists, in increasing order, the filtration positions of the
/// facets of simplex `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub columns: Vec<Vec<usize>>,
    pub dimensions: Vec<usize>,
}

impl BoundaryMatrix {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

pub fn boundary_matrix(fc: &FilteredComplex) -> Result<BoundaryMatrix> {
    let position: HashMap<&Simplex, usize> = fc
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.simplex, i))
        .collect();
    let mut columns = Vec::with_capacity(fc.len());
    let mut dimensions = Vec::with_capacity(fc.len());
    for (j, e) in fc.entries().iter().enumerate() {
        let mut col = Vec::with_capacity(e.simplex.dimension() + 1);
        for face in e.simplex.facets() {
            match position.get(&face) {
                Some(&i) if i < j => col.push(i),
                _ => {
                    return Err(Error::MissingFace {
                        simplex: e.simplex.vertices().to_vec(),
                        face: face.vertices().to_vec(),
                    })
                }
            }
        }
        col.sort_unstable();
        columns.push(col);
        dimensions.push(e.simplex.dimension());
    }
    Ok(BoundaryMatrix {
        columns,
        dimensions,
    })
}

/// Result of reducing a boundary matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Reduced columns; a column is zero exactly when its simplex creates a
    /// class.
    pub columns: Vec<Vec<usize>>,
    /// `(creator, destroyer)` positions, ordered by destroyer.
    pub pairs: Vec<(usize, usize)>,
    /// Creators never destroyed, in increasing order.
    pub essential: Vec<usize>,
}

impl Reduction {
    /// Largest row index of a reduced column.
    pub fn low(&self, column: usize) -> Option<usize> {
        self.columns[column].last().copied()
    }
}

/// Adds `src` into `dst` (symmetric difference of sorted index lists),
/// building the sum in `out` and swapping it in.
fn add_column(dst: &mut Vec<usize>, src: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < dst.len() && j < src.len() {
        match dst[i].cmp(&src[j]) {
            std::cmp::Ordering::Less => {
                out.push(dst[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(src[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&dst[i..]);
    out.extend_from_slice(&src[j..]);
    std::mem::swap(dst, out);
}

/// Reduces column `j` against earlier pivots; records its pivot if nonzero.
fn reduce_column(
    cols: &mut [Vec<usize>],
    pivot_of_row: &mut [Option<usize>],
    j: usize,
    scratch: &mut Vec<usize>,
) -> Option<usize> {
    let (done, rest) = cols.split_at_mut(j);
    let col = &mut rest[0];
    while let Some(&low) = col.last() {
        match pivot_of_row[low] {
            Some(k) => add_column(col, &done[k], scratch),
            None => {
                pivot_of_row[low] = Some(j);
                return Some(low);
            }
        }
    }
    None
}

fn finish(columns: Vec<Vec<usize>>) -> Reduction {
    let n = columns.len();
    let mut destroyed = vec![false; n];
    let mut pairs = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(&low) = col.last() {
            destroyed[low] = true;
            pairs.push((low, j));
        }
    }
    let essential = (0..n)
        .filter(|&j| columns[j].is_empty() && !destroyed[j])
        .collect();
    Reduction {
        columns,
        pairs,
        essential,
    }
}

/// Standard left-to-right column reduction with clearing.
///
/// Dimensions are processed from the top down; once a column of dimension
/// `k + 1` has its pivot at row `i`, column `i` is known to reduce to zero
/// and is skipped. The pairing is the same as without clearing.
pub fn reduce(bm: &BoundaryMatrix) -> Reduction {
    let n = bm.len();
    let mut cols = bm.columns.clone();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; n];
    let mut scratch = Vec::new();
    let mut cleared = vec![false; n];
    let top = bm.dimensions.iter().copied().max().unwrap_or(0);
    for dim in (1..=top).rev() {
        for j in 0..n {
            if bm.dimensions[j] != dim {
                continue;
            }
            if cleared[j] {
                cols[j].clear();
                continue;
            }
            if let Some(low) = reduce_column(&mut cols, &mut pivot_of_row, j, &mut scratch) {
                cleared[low] = true;
            }
        }
    }
    finish(cols)
}

/// Plain left-to-right column reduction over all columns.
pub fn reduce_without_clearing(bm: &BoundaryMatrix) -> Reduction {
    let n = bm.len();
    let mut cols = bm.columns.clone();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; n];
    let mut scratch = Vec::new();
    for j in 0..n {
        reduce_column(&mut cols, &mut pivot_of_row, j, &mut scratch);
    }
    finish(cols)
}
