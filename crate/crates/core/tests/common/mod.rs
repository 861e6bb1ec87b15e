#![allow(dead_code)]

use artin_core::{Field, Graph, Simplex, SimplicialComplex};
use proptest::prelude::*;

pub const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

/// A nonvoid complex on `1..=max_n` vertices generated by up to five facets.
pub fn complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 0..=5).prop_map(move |bits| {
            let facets: Vec<Simplex> = bits.into_iter().map(Simplex::from_bits).collect();
            SimplicialComplex::new(n, &facets).expect("facets in range")
        })
    })
}

pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e).collect();
            Graph::new(n, &edges).expect("valid edges")
        })
    })
}

pub fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(FIELDS.to_vec())
}

/// A surjection `[n] → [m]` with `m ≤ n`, as an image list.
pub fn surjection(n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=n).prop_flat_map(move |m| {
        prop::collection::vec(1..=m, n).prop_map(move |mut images| {
            // force surjectivity by planting each value once
            for (j, slot) in images.iter_mut().take(m).enumerate() {
                *slot = j + 1;
            }
            images
        })
    }).prop_shuffle()
}

/// `dim H̃_t` read from a `reduced_betti` vector, zero outside its range.
pub fn betti_at(b: &[usize], t: i64) -> usize {
    if t < -1 {
        0
    } else {
        b.get((t + 1) as usize).copied().unwrap_or(0)
    }
}
