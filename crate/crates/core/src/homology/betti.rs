use serde::Serialize;

use crate::complex::SimplicialComplex;

/// Betti numbers `b_0, b_1, ...` of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// `b_k`, zero beyond the computed range.
    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Rank of the boundary map from `dim`-simplices to `(dim - 1)`-simplices.
fn boundary_rank(complex: &SimplicialComplex, dim: usize) -> usize {
    if dim == 0 {
        return 0;
    }
    let rows = complex.simplices(dim - 1).len();
    let mut pivot_of_row: Vec<Option<Vec<usize>>> = vec![None; rows];
    let mut rank = 0;
    for s in complex.simplices(dim) {
        let mut col: Vec<usize> = s
            .facets()
            .map(|f| complex.index_of(&f).expect("complex is closed under faces"))
            .collect();
        col.sort_unstable();
        while let Some(&low) = col.last() {
            match &pivot_of_row[low] {
                Some(pivot) => col = symmetric_difference(&col, pivot),
                None => {
                    pivot_of_row[low] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `b_0..=b_up_to` over the two-element field:
/// `b_k = (#k-simplices - rank d_k) - rank d_(k+1)`.
pub fn betti_numbers(complex: &SimplicialComplex, up_to: usize) -> BettiVector {
    let mut ranks = Vec::with_capacity(up_to + 2);
    for dim in 0..=up_to + 1 {
        ranks.push(boundary_rank(complex, dim));
    }
    BettiVector(
        (0..=up_to)
            .map(|k| complex.simplices(k).len() - ranks[k] - ranks[k + 1])
            .collect(),
    )
}
