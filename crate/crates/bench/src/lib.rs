//! Fixed inputs shared by the benchmarks.

use fxform_core::{generate, random_gnm, Family, Graph};

/// Seeded G(n, m) graphs at roughly half density.
pub fn random_graphs(n: usize, count: u64) -> Vec<Graph> {
    let m = n * (n - 1) / 4;
    (0..count)
        .map(|seed| random_gnm(n, m, seed).unwrap())
        .collect()
}

pub fn named(family: Family) -> Graph {
    generate(family).unwrap()
}
