//! Literal dense transcriptions of every metric, for cross-checking.
//!
//! Deliberately naive: adjacency is an `n × n` matrix, coefficients are a
//! `communities × n` matrix (0 = not a member), and every sum is written as a
//! loop over the defining index ranges. Nothing here depends on the library.
#![allow(dead_code, clippy::needless_range_loop)]

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Func {
    Average,
    Product,
    Logistic(f64),
}

pub fn g(p: f64, x: f64) -> f64 {
    1.0 / (1.0 + (-(2.0 * p * x - p)).exp())
}

impl Func {
    pub fn f(self, a: f64, b: f64) -> f64 {
        match self {
            Func::Average => (a + b) / 2.0,
            Func::Product => a * b,
            Func::Logistic(p) => g(p, a) * g(p, b),
        }
    }
}

pub fn dense(n: usize, edges: &[(usize, usize, f64)]) -> Vec<Vec<f64>> {
    let mut adj = vec![vec![0.0; n]; n];
    for &(u, v, w) in edges {
        if u != v {
            adj[u][v] += w;
            adj[v][u] += w;
        }
    }
    adj
}

fn degree(adj: &[Vec<f64>], i: usize) -> f64 {
    adj[i].iter().sum()
}

fn half_total(adj: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for row in adj {
        for &x in row {
            s += x;
        }
    }
    s / 2.0
}

fn member(coef: &[Vec<f64>], c: usize, i: usize) -> bool {
    coef[c][i] > 0.0
}

/// `a_{i,c} = 1 / O_i` over crisp membership lists.
pub fn coefficients_v1(n: usize, communities: &[Vec<usize>]) -> Vec<Vec<f64>> {
    let mut occupancy = vec![0usize; n];
    for c in communities {
        for &i in c {
            occupancy[i] += 1;
        }
    }
    communities
        .iter()
        .map(|c| {
            let mut row = vec![0.0; n];
            for &i in c {
                row[i] = 1.0 / occupancy[i] as f64;
            }
            row
        })
        .collect()
}

/// Node-strength coefficients. Nodes in one community get 1; nodes whose total
/// strength into their communities is 0 fall back to `1 / O_i`.
pub fn coefficients_v2(adj: &[Vec<f64>], communities: &[Vec<usize>]) -> Vec<Vec<f64>> {
    let n = adj.len();
    let holds = |c: usize, i: usize| communities[c].contains(&i);
    let mut coef = vec![vec![0.0; n]; communities.len()];
    for i in 0..n {
        let mine: Vec<usize> = (0..communities.len()).filter(|&c| holds(c, i)).collect();
        if mine.is_empty() {
            continue;
        }
        let strength = |c: usize| -> f64 {
            let mut s = 0.0;
            for k in 0..n {
                if holds(c, k) {
                    s += adj[i][k];
                }
            }
            s
        };
        let mut total = 0.0;
        for &c in &mine {
            total += strength(c);
        }
        for &c in &mine {
            coef[c][i] = if mine.len() == 1 {
                1.0
            } else if total > 0.0 {
                strength(c) / total
            } else {
                1.0 / mine.len() as f64
            };
        }
    }
    coef
}

pub struct Aggregates {
    pub e_in: Vec<f64>,
    pub e_out: Vec<f64>,
    pub e_between: Vec<Vec<f64>>,
    pub d_in: Vec<f64>,
    pub d_pair: Vec<Vec<f64>>,
}

pub fn aggregates(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> Aggregates {
    let n = adj.len();
    let nc = coef.len();
    let mut e_in = vec![0.0; nc];
    let mut d_in = vec![0.0; nc];
    let mut e_between = vec![vec![0.0; nc]; nc];
    let mut d_pair = vec![vec![0.0; nc]; nc];
    for c in 0..nc {
        let mut s = 0.0;
        let mut pairs = 0.0;
        for i in 0..n {
            for j in 0..n {
                if member(coef, c, i) && member(coef, c, j) {
                    s += f.f(coef[c][i], coef[c][j]) * adj[i][j];
                    if i != j {
                        pairs += f.f(coef[c][i], coef[c][j]);
                    }
                }
            }
        }
        e_in[c] = s / 2.0;
        d_in[c] = if pairs > 0.0 { 2.0 * e_in[c] / pairs } else { 0.0 };
        for d in 0..nc {
            if d == c {
                continue;
            }
            let mut b = 0.0;
            let mut mass = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if member(coef, c, i) && member(coef, d, j) {
                        b += f.f(coef[c][i], coef[d][j]) * adj[i][j];
                        mass += f.f(coef[c][i], coef[d][j]);
                    }
                }
            }
            e_between[c][d] = b;
            d_pair[c][d] = if mass > 0.0 { b / mass } else { 0.0 };
        }
    }
    let e_out = e_between.iter().map(|row| row.iter().sum()).collect();
    Aggregates { e_in, e_out, e_between, d_in, d_pair }
}

pub fn q_ov(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> f64 {
    let m = half_total(adj);
    let a = aggregates(adj, coef, f);
    let mut q = 0.0;
    for c in 0..coef.len() {
        let t = (2.0 * a.e_in[c] + a.e_out[c]) / (2.0 * m);
        q += a.e_in[c] / m - t * t;
    }
    q
}

pub fn q_ov_prime(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> f64 {
    let n = adj.len();
    let m = half_total(adj);
    let mut s = 0.0;
    for c in 0..coef.len() {
        for i in 0..n {
            for j in 0..n {
                if member(coef, c, i) && member(coef, c, j) {
                    let null = degree(adj, i) * degree(adj, j) / (2.0 * m);
                    s += (adj[i][j] - null) * f.f(coef[c][i], coef[c][j]);
                }
            }
        }
    }
    s / (2.0 * m)
}

/// Link-based modularity with the null weight summed over every `k ∈ V`.
pub fn q_ov_link(adj: &[Vec<f64>], coef: &[Vec<f64>], p: f64) -> f64 {
    let n = adj.len();
    let m = half_total(adj);
    let big_f = |a: f64, b: f64| g(p, a) * g(p, b);
    let mut s = 0.0;
    for c in 0..coef.len() {
        for i in 0..n {
            for j in 0..n {
                if !(member(coef, c, i) && member(coef, c, j)) {
                    continue;
                }
                let r = g(p, coef[c][i]) * g(p, coef[c][j]);
                let mut left = 0.0;
                let mut right = 0.0;
                for k in 0..n {
                    left += big_f(coef[c][i], coef[c][k]);
                    right += big_f(coef[c][k], coef[c][j]);
                }
                let expected = left * right / (n as f64 * n as f64);
                s += r * adj[i][j] - expected * degree(adj, i) * degree(adj, j) / (2.0 * m);
            }
        }
    }
    s / (2.0 * m)
}

pub fn nq_ov(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> f64 {
    let a = aggregates(adj, coef, f);
    let nc = coef.len();
    let mut q = 0.0;
    for c in 0..nc {
        let hood: Vec<usize> = (0..nc).filter(|&d| d == c || a.e_between[c][d] > 0.0).collect();
        let mut edges = 0.0;
        for &d in &hood {
            edges += a.e_in[d];
        }
        for &d in &hood {
            for &d2 in &hood {
                if d != d2 {
                    edges += a.e_between[d][d2] / 2.0;
                }
            }
        }
        if edges > 0.0 {
            let t = (2.0 * a.e_in[c] + a.e_out[c]) / (2.0 * edges);
            q += a.e_in[c] / edges - t * t;
        }
    }
    q
}

pub fn q_ds_ov(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> f64 {
    let m = half_total(adj);
    let a = aggregates(adj, coef, f);
    let nc = coef.len();
    let mut q = 0.0;
    for c in 0..nc {
        let t = (2.0 * a.e_in[c] + a.e_out[c]) / (2.0 * m) * a.d_in[c];
        let mut split = 0.0;
        for d in 0..nc {
            if d != c {
                split += a.e_between[c][d] / (2.0 * m) * a.d_pair[c][d];
            }
        }
        q += a.e_in[c] / m * a.d_in[c] - t * t - split;
    }
    q
}

fn ratio(x: f64, y: f64) -> f64 {
    if y > 0.0 {
        x / y
    } else {
        0.0
    }
}

/// `[IE, ID, CNT, BE, EXP, CND, F, D]`.
pub fn local(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func) -> [f64; 8] {
    let a = aggregates(adj, coef, f);
    let nc = coef.len();
    let mut out = [0.0; 8];
    for c in 0..nc {
        let size: f64 = coef[c].iter().sum();
        let (ein, eout) = (a.e_in[c], a.e_out[c]);
        out[0] += ein;
        out[1] += a.d_in[c];
        out[2] += ratio(2.0 * ein, size);
        out[3] += eout;
        out[4] += ratio(eout, size);
        out[5] += ratio(eout, 2.0 * ein + eout);
        out[6] += ratio(ein, ein + eout);
        out[7] += ratio(2.0 * ein - eout, size);
    }
    for k in [1, 2, 4, 5, 6] {
        out[k] /= nc as f64;
    }
    out
}

/// All twelve metrics in report order; `p` drives the link-based modularity.
pub fn all(adj: &[Vec<f64>], coef: &[Vec<f64>], f: Func, p: f64) -> [f64; 12] {
    let l = local(adj, coef, f);
    [
        q_ov(adj, coef, f),
        nq_ov(adj, coef, f),
        q_ov_link(adj, coef, p),
        q_ds_ov(adj, coef, f),
        l[0],
        l[1],
        l[2],
        l[3],
        l[4],
        l[5],
        l[6],
        l[7],
    ]
}

/// Newman's modularity from the crisp community of each node.
pub fn q_newman(adj: &[Vec<f64>], label: &[usize]) -> f64 {
    let n = adj.len();
    let m = half_total(adj);
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if label[i] == label[j] {
                s += adj[i][j] - degree(adj, i) * degree(adj, j) / (2.0 * m);
            }
        }
    }
    s / (2.0 * m)
}
