use super::reduction::{boundary_matrix, reduce};
use crate::complex::FilteredComplex;

/// One homology class: born at `birth`, dead at `death` (`+inf` if it never
/// dies within the filtration).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub dimension: usize,
    pub birth: f64,
    pub death: f64,
}

impl PersistencePair {
    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    /// Born and killed at the same scale; an artifact of simplices sharing a
    /// filtration value.
    pub fn is_trivial(&self) -> bool {
        self.birth == self.death
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    /// Whether the class is alive in the complex at scale `alpha`.
    pub fn alive_at(&self, alpha: f64) -> bool {
        self.birth <= alpha && alpha < self.death
    }
}

/// All persistence pairs of a filtration, trivial ones included.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    /// Sorted by dimension, then birth, then death.
    pub pairs: Vec<PersistencePair>,
    /// Largest filtration value; for a Rips filtration with edges, the
    /// diameter of the cloud.
    pub max_scale: f64,
}

impl PersistenceDiagram {
    /// Pairs with positive persistence.
    pub fn nontrivial(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| !p.is_trivial())
    }

    pub fn in_dimension(&self, dimension: usize) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(move |p| p.dimension == dimension)
    }

    /// Number of `dimension`-classes alive at scale `alpha`: the Betti
    /// number of the filtration thresholded at `alpha`.
    pub fn betti_at(&self, dimension: usize, alpha: f64) -> usize {
        self.in_dimension(dimension)
            .filter(|p| p.alive_at(alpha))
            .count()
    }

    /// Finite pairs of one dimension, longest first.
    pub fn longest(&self, dimension: usize) -> Vec<PersistencePair> {
        let mut bars: Vec<PersistencePair> = self
            .in_dimension(dimension)
            .filter(|p| !p.is_essential())
            .copied()
            .collect();
        bars.sort_by(|a, b| b.persistence().total_cmp(&a.persistence()));
        bars
    }

    /// Copy with every scale multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> PersistenceDiagram {
        PersistenceDiagram {
            pairs: self
                .pairs
                .iter()
                .map(|p| PersistencePair {
                    birth: p.birth * factor,
                    death: p.death * factor,
                    ..*p
                })
                .collect(),
            max_scale: self.max_scale * factor,
        }
    }
}

pub fn persistence_diagram(fc: &FilteredComplex) -> PersistenceDiagram {
    let bm = boundary_matrix(fc).expect("filtered complexes are closed under faces");
    let reduction = reduce(&bm);
    let value = |i: usize| fc.entries()[i].value;
    let mut pairs: Vec<PersistencePair> = reduction
        .pairs
        .iter()
        .map(|&(creator, destroyer)| PersistencePair {
            dimension: bm.dimensions[creator],
            birth: value(creator),
            death: value(destroyer),
        })
        .chain(reduction.essential.iter().map(|&creator| PersistencePair {
            dimension: bm.dimensions[creator],
            birth: value(creator),
            death: f64::INFINITY,
        }))
        .collect();
    pairs.sort_by(|a, b| {
        a.dimension
            .cmp(&b.dimension)
            .then(a.birth.total_cmp(&b.birth))
            .then(a.death.total_cmp(&b.death))
    });
    PersistenceDiagram {
        pairs,
        max_scale: fc.max_value(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::rips_filtration;
    use crate::geometry::{distance_matrix, PointCloud};

    fn diagram(points: Vec<Vec<f64>>, max_dim: usize) -> PersistenceDiagram {
        let c = PointCloud::new(points).unwrap();
        persistence_diagram(&rips_filtration(
            &distance_matrix(&c, 2.0).unwrap(),
            max_dim,
        ))
    }

    #[test]
    fn unit_square() {
        let d = diagram(
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
            2,
        );
        let loops: Vec<_> = d.in_dimension(1).filter(|p| !p.is_trivial()).collect();
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].birth, 1.0);
        assert!((loops[0].death - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(d.max_scale, 2f64.sqrt());
        assert_eq!(d.in_dimension(0).count(), 4);
        assert_eq!(d.in_dimension(0).filter(|p| p.is_essential()).count(), 1);
    }

    #[test]
    fn isolated_points_merge_in_order() {
        let d = diagram(vec![vec![0.0], vec![1.0], vec![3.0], vec![6.0]], 1);
        let deaths: Vec<f64> = d.in_dimension(0).map(|p| p.death).collect();
        assert_eq!(deaths, vec![1.0, 2.0, 3.0, f64::INFINITY]);
        assert_eq!(d.betti_at(0, 0.5), 4);
        assert_eq!(d.betti_at(0, 2.0), 2);
        assert_eq!(d.betti_at(0, 10.0), 1);
        assert_eq!(d.scaled(0.5).pairs[0].death, 0.5);
    }

    #[test]
    fn trivial_pairs_are_flagged() {
        // Equilateral triangle: the third edge's loop is filled at once.
        let h = 3f64.sqrt() / 2.0;
        let d = diagram(vec![vec![-0.5, 0.0], vec![0.5, 0.0], vec![0.0, h]], 2);
        assert!(d.pairs.iter().any(PersistencePair::is_trivial));
        assert!(d.nontrivial().all(|p| p.dimension == 0));
    }
}
