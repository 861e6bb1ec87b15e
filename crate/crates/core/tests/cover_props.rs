mod common;

use artin_core::betti::{exterior_poincare, krull_dim_homology, KrullDim};
use artin_core::cover::{chain_slice, cover_homology, euler_by_weight, SliceKind};
use artin_core::homology::reduced_betti;
use artin_core::{growth_degree, CoordinateMap, Field, Growth, SimplicialComplex};
use common::{betti_at, complex, field, surjection};
use proptest::prelude::*;

fn relabel(images: &[usize]) -> CoordinateMap {
    let mut distinct = images.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    CoordinateMap::new(images.iter().map(|v| distinct.iter().position(|d| d == v).unwrap() + 1).collect()).unwrap()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// First Betti number of the lattice graph on `{β ∈ ℕ^n : |β| ≤ total}`.
fn lattice_cycle_rank(n: usize, total: usize) -> usize {
    let mut points: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                let used: usize = p.iter().sum();
                (0..=total - used).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    let index = |p: &[usize]| points.iter().position(|q| q == p);
    let mut uf = UnionFind((0..points.len()).collect());
    let mut edges = 0;
    for (i, p) in points.iter().enumerate() {
        for axis in 0..n {
            let mut q = p.clone();
            q[axis] += 1;
            if let Some(j) = index(&q) {
                edges += 1;
                uf.union(i, j);
            }
        }
    }
    let components = (0..points.len()).filter(|&i| uf.find(i) == i).count();
    edges + components - points.len()
}

#[test]
fn wedges_of_circles_match_lattice_graphs() {
    for n in 2..=3 {
        let points: Vec<Vec<usize>> = (1..=n).map(|v| vec![v]).collect();
        let k = SimplicialComplex::from_facet_lists(n, &points).unwrap();
        let h = cover_homology(&k, &CoordinateMap::identity(n), Field::Rational, 1, 6).unwrap();
        for (j, &cumulative) in h.cumulative().iter().enumerate() {
            assert_eq!(cumulative as usize, lattice_cycle_rank(n, j + 1), "n = {n}, j = {j}");
        }
    }
    let two = artin_core::catalog::get("two-points").unwrap();
    let h = cover_homology(&two, &CoordinateMap::identity(2), Field::Prime(2), 1, 8).unwrap();
    let expected: Vec<u64> = (0..=8).map(|j| j * (j + 1) / 2).collect();
    assert_eq!(h.cumulative(), expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differentials_square_to_zero(k in complex(5), images in surjection(5), f in field()) {
        let map = relabel(&images[..k.n()]);
        let top = (k.dim() + 1) as usize;
        for kind in [SliceKind::Homology, SliceKind::CompactSupport] {
            for p in 0..=top {
                let Some(t) = kind.target_degree(p) else { continue };
                for j in 0..3 {
                    let a = chain_slice(&k, &map, f, kind, p, j).unwrap().matrix;
                    let b = chain_slice(&k, &map, f, kind, t, j + 1).unwrap().matrix;
                    if a.cols() > 0 && b.cols() > 0 {
                        prop_assert!(b.mul(&a).unwrap().is_zero(), "{:?} p={} j={}", kind, p, j);
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristics_by_weight(k in complex(5), images in surjection(5), f in field()) {
        let map = relabel(&images[..k.n()]);
        for kind in [SliceKind::Homology, SliceKind::CompactSupport] {
            for row in euler_by_weight(&k, &map, f, kind, 4).unwrap() {
                prop_assert_eq!(row.chain, row.homology, "{:?} weight {}", kind, row.weight);
            }
        }
    }

    #[test]
    fn identity_cover_matches_poincare_series(k in complex(5), f in field()) {
        let j_max = 5;
        let series = exterior_poincare(&k, f, j_max).unwrap();
        let id = CoordinateMap::identity(k.n());
        for q in 0..=(k.dim() + 1) as usize {
            let h = cover_homology(&k, &id, f, q as i64, j_max as i64).unwrap();
            for j in 0..=j_max {
                prop_assert_eq!(h.get(j).unwrap(), series.get(j, q), "q = {}, j = {}", q, j);
            }
        }
    }

    #[test]
    fn growth_matches_krull_dimension(k in complex(4), f in field()) {
        let id = CoordinateMap::identity(k.n());
        for q in 1..=(k.dim() + 1) {
            let h = cover_homology(&k, &id, f, q as i64, 10).unwrap();
            let (dim, _) = krull_dim_homology(&k, q as i64, f).unwrap();
            let g = growth_degree(&h);
            prop_assert!(dim.agrees_with(g), "q = {}: Krull {} vs growth {} of {}", q, dim, g, h);
        }
    }

    #[test]
    fn bestvina_brady_stable_values(k in complex(5), f in field()) {
        // inverting s leaves the augmented chain complex of K shifted by one
        let n = k.n();
        let point = CoordinateMap::to_point(n);
        let betti = reduced_betti(&k, f);
        let j_max = n + 3;
        for q in 0..=(k.dim() + 1) {
            let h = cover_homology(&k, &point, f, q as i64, j_max as i64).unwrap();
            let stable = betti_at(&betti, q as i64 - 1) as u64;
            for j in n + 1..=j_max {
                prop_assert_eq!(h.get(j).unwrap(), stable, "q = {}, j = {}", q, j);
            }
        }
    }
}

#[test]
fn krull_dimension_examples() {
    let two = artin_core::catalog::get("two-points").unwrap();
    let h = cover_homology(&two, &CoordinateMap::identity(2), Field::Rational, 1, 10).unwrap();
    assert_eq!(growth_degree(&h), Growth::Degree(2));
    assert_eq!(krull_dim_homology(&two, 1, Field::Rational).unwrap().0, KrullDim::Dim(2));
}
