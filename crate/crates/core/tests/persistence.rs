mod common;

use std::f64::consts::{SQRT_2, TAU};

use common::*;
use proptest::prelude::*;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use tda_core::{
    connected_components, distance_matrix, neighbor_graph, persistence_diagram, rips_complex,
    rips_filtration, PersistencePair, PointCloud,
};

fn diagram(cloud: &PointCloud, max_dim: usize) -> tda_core::PersistenceDiagram {
    persistence_diagram(&rips_filtration(
        &distance_matrix(cloud, 2.0).unwrap(),
        max_dim,
    ))
}

fn finite_nontrivial(pairs: &[PersistencePair], dim: usize) -> Vec<PersistencePair> {
    pairs
        .iter()
        .filter(|p| p.dimension == dim && !p.is_essential() && !p.is_trivial())
        .copied()
        .collect()
}

#[test]
fn unit_square_has_one_loop() {
    let square = PointCloud::new(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
    ])
    .unwrap();
    let d = diagram(&square, 2);
    let loops = finite_nontrivial(&d.pairs, 1);
    assert_eq!(loops.len(), 1);
    assert!((loops[0].birth - 1.0).abs() < 1e-9);
    assert!((loops[0].death - SQRT_2).abs() < 1e-9);
}

#[test]
fn fifteen_points_give_twelve_components() {
    let cloud = fifteen_points();
    let dm = distance_matrix(&cloud, 2.0).unwrap();
    for r in [0.0625, 0.5, 2.0, 4.9] {
        assert_eq!(
            connected_components(&neighbor_graph(&dm, r).unwrap()).len(),
            12,
            "r = {r}"
        );
        assert_eq!(diagram(&cloud, 1).betti_at(0, 2.0 * r), 12, "r = {r}");
    }
    assert_eq!(
        connected_components(&neighbor_graph(&dm, 0.06).unwrap()).len(),
        15
    );
    assert_eq!(
        connected_components(&neighbor_graph(&dm, 5.0).unwrap()).len(),
        1
    );
}

fn noisy_circle(seed: u64, n: usize, spread: f64) -> PointCloud {
    let mut rng = rng(seed);
    let noise = Normal::new(0.0, spread).unwrap();
    let points = (0..n)
        .map(|_| {
            let theta: f64 = rng.random_range(0.0..TAU);
            let rho = 1.0 + noise.sample(&mut rng);
            vec![rho * theta.cos(), rho * theta.sin()]
        })
        .collect();
    PointCloud::new(points).unwrap()
}

#[test]
fn noisy_circle_has_one_dominant_loop() {
    for seed in 0..3 {
        let d = diagram(&noisy_circle(seed, 100, 0.05), 2);
        let longest = d.longest(1);
        assert!(longest.len() >= 2, "seed {seed}");
        let ratio = longest[0].persistence() / longest[1].persistence();
        assert!(ratio > 5.0, "seed {seed}: ratio {ratio}");
    }
}

#[test]
fn isolated_points_merge_one_at_a_time() {
    let cloud = PointCloud::new((0..5).map(|i| vec![(i * i) as f64]).collect()).unwrap();
    let d = diagram(&cloud, 1);
    let dim0: Vec<_> = d.in_dimension(0).copied().collect();
    assert_eq!(dim0.len(), 5);
    assert_eq!(dim0.iter().filter(|p| p.is_essential()).count(), 1);
    let mut deaths: Vec<f64> = dim0
        .iter()
        .filter(|p| !p.is_essential())
        .map(|p| p.death)
        .collect();
    deaths.sort_by(f64::total_cmp);
    assert_eq!(deaths, vec![1.0, 3.0, 5.0, 7.0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn beta0_matches_graph_search(seed in any::<u64>(), n in 1usize..40, r in 0.0f64..0.6) {
        let cloud = uniform_cloud(seed, n, 2, 1.0);
        let dm = distance_matrix(&cloud, 2.0).unwrap();
        let expected = dfs_components(&dm, r);
        prop_assert_eq!(diagram(&cloud, 1).betti_at(0, 2.0 * r), expected);
        let rips = rips_complex(&dm, 2.0 * r, 1).unwrap();
        prop_assert_eq!(tda_core::betti_numbers(&rips, 0).get(0), expected);
        prop_assert_eq!(connected_components(&neighbor_graph(&dm, r).unwrap()).len(), expected);
    }

    /// Moving every point by at most eps moves the longest finite bars of
    /// each dimension by at most 2 eps per coordinate.
    #[test]
    fn longest_bars_are_stable(seed in any::<u64>(), n in 4usize..16, eps in 0.0f64..0.01) {
        let cloud = uniform_cloud(seed, n, 2, 1.0);
        let mut rng = rng(seed ^ 0x5eed);
        let moved: Vec<f64> = cloud
            .coords()
            .iter()
            .map(|&c| c + eps * rng.random_range(-1.0..=1.0) / SQRT_2)
            .collect();
        let moved = PointCloud::from_flat(2, moved).unwrap();
        let (a, b) = (diagram(&cloud, 2), diagram(&moved, 2));
        for dim in 0..2 {
            // The matching is only forced when the longest bar stands clear
            // of the runner-up by more than the perturbation can close.
            let (la, lb) = (a.longest(dim), b.longest(dim));
            let margin = 4.0 * eps + 1e-12;
            let clear = la.first().is_some_and(|x| {
                x.persistence() > margin
                    && la.get(1).is_none_or(|z| x.persistence() - z.persistence() > margin)
            });
            if clear {
                let (x, y) = (la[0], lb[0]);
                prop_assert!((x.birth - y.birth).abs() <= 2.0 * eps + 1e-12);
                prop_assert!((x.death - y.death).abs() <= 2.0 * eps + 1e-12);
            }
        }
    }

    /// Pairing conservation: each entry is a paired creator, an essential
    /// creator or a destroyer, exactly once.
    #[test]
    fn every_simplex_is_accounted_for(seed in any::<u64>(), n in 1usize..12) {
        let cloud = uniform_cloud(seed, n, 2, 1.0);
        let fc = rips_filtration(&distance_matrix(&cloud, 2.0).unwrap(), 2);
        let red = tda_core::reduce(&tda_core::boundary_matrix(&fc).unwrap());
        let mut seen = vec![0u8; fc.len()];
        for &(c, d) in &red.pairs {
            seen[c] += 1;
            seen[d] += 1;
            prop_assert!(c < d);
        }
        for &e in &red.essential {
            seen[e] += 1;
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        prop_assert_eq!(2 * red.pairs.len() + red.essential.len(), fc.len());
    }
}
