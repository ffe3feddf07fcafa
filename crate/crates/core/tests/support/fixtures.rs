//! Shared graphs and random generators.
#![allow(dead_code)]

use rand::Rng;

/// Two triangles `{1,2,3}`, `{4,5,6}` joined by `3–4`, zero-based.
pub const BARBELL: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)];

/// Zachary's karate club, 34 members, 78 ties, zero-based.
pub const KARATE: [(usize, usize); 78] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 10),
    (0, 11),
    (0, 12),
    (0, 13),
    (0, 17),
    (0, 19),
    (0, 21),
    (0, 31),
    (1, 2),
    (1, 3),
    (1, 7),
    (1, 13),
    (1, 17),
    (1, 19),
    (1, 21),
    (1, 30),
    (2, 3),
    (2, 7),
    (2, 8),
    (2, 9),
    (2, 13),
    (2, 27),
    (2, 28),
    (2, 32),
    (3, 7),
    (3, 12),
    (3, 13),
    (4, 6),
    (4, 10),
    (5, 6),
    (5, 10),
    (5, 16),
    (6, 16),
    (8, 30),
    (8, 32),
    (8, 33),
    (9, 33),
    (13, 33),
    (14, 32),
    (14, 33),
    (15, 32),
    (15, 33),
    (18, 32),
    (18, 33),
    (19, 33),
    (20, 32),
    (20, 33),
    (22, 32),
    (22, 33),
    (23, 25),
    (23, 27),
    (23, 29),
    (23, 32),
    (23, 33),
    (24, 25),
    (24, 27),
    (24, 31),
    (25, 31),
    (26, 29),
    (26, 33),
    (27, 33),
    (28, 31),
    (28, 33),
    (29, 32),
    (29, 33),
    (30, 32),
    (30, 33),
    (31, 32),
    (31, 33),
    (32, 33),
];

/// The instructor's faction after the split, zero-based.
pub const KARATE_HI: [usize; 17] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17, 19, 21];

pub fn unit(edges: &[(usize, usize)]) -> Vec<(usize, usize, f64)> {
    edges.iter().map(|&(u, v)| (u, v, 1.0)).collect()
}

/// Erdős–Rényi graph with unit weights, or weights in `[0.5, 3)` when `weighted`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, weighted: bool) -> Vec<(usize, usize, f64)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w = if weighted { rng.gen_range(0.5..3.0) } else { 1.0 };
                edges.push((u, v, w));
            }
        }
    }
    edges
}

/// `k` random crisp communities; every node joins 1 to 3 of them.
pub fn random_crisp_cover(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut communities = vec![Vec::new(); k];
    for i in 0..n {
        let joins = rng.gen_range(1..=3.min(k));
        let mut picked = Vec::new();
        while picked.len() < joins {
            let c = rng.gen_range(0..k);
            if !picked.contains(&c) {
                picked.push(c);
            }
        }
        for c in picked {
            communities[c].push(i);
        }
    }
    communities.retain(|c| !c.is_empty());
    communities
}

/// Random partition into at most `k` non-empty communities.
pub fn random_partition(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut communities = vec![Vec::new(); k];
    for i in 0..n {
        communities[rng.gen_range(0..k)].push(i);
    }
    communities.retain(|c| !c.is_empty());
    communities
}

/// Random fuzzy coefficients (`communities × n`) with every row summing to 1.
pub fn random_fuzzy(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<f64>> {
    let crisp = random_crisp_cover(rng, n, k);
    let mut coef = vec![vec![0.0; n]; crisp.len()];
    for (c, members) in crisp.iter().enumerate() {
        for &i in members {
            coef[c][i] = rng.gen_range(0.05..1.0);
        }
    }
    for i in 0..n {
        let total: f64 = coef.iter().map(|row| row[i]).sum();
        for row in coef.iter_mut() {
            row[i] /= total;
        }
    }
    coef
}
