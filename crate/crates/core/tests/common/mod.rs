#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use cwx_core::{from_simplicial, CWComplex, Ratio};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random pure 2-complex with `1..=max_triangles` triangles on at most 7 vertices.
pub fn random_2_complex(seed: u64, max_triangles: usize) -> CWComplex {
    let mut r = rng(seed);
    let verts = r.gen_range(4..=7u32);
    let mut all = Vec::new();
    for a in 0..verts {
        for b in a + 1..verts {
            for c in b + 1..verts {
                all.push(vec![a, b, c]);
            }
        }
    }
    all.shuffle(&mut r);
    let k = r.gen_range(1..=max_triangles.min(all.len()));
    from_simplicial(&all[..k]).unwrap()
}

/// Random labelled tree with `1..=max_edges` edges, vertices permuted.
pub fn random_tree_edges(seed: u64, max_edges: usize) -> Vec<Vec<u32>> {
    let mut r = rng(seed);
    let e = r.gen_range(1..=max_edges);
    let mut labels: Vec<u32> = (0..=e as u32).collect();
    labels.shuffle(&mut r);
    (1..=e).map(|v| vec![labels[r.gen_range(0..v)], labels[v]]).collect()
}

pub fn random_tree(seed: u64, max_edges: usize) -> CWComplex {
    from_simplicial(&random_tree_edges(seed, max_edges)).unwrap()
}

/// A random connected graph with at least one cycle.
pub fn random_cyclic_graph(seed: u64, max_vertices: u32) -> CWComplex {
    let mut r = rng(seed ^ 0x9e37_79b9);
    loop {
        let mut edges: BTreeSet<(u32, u32)> = random_tree_edges(r.gen(), (max_vertices - 1) as usize)
            .into_iter()
            .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
            .collect();
        let n = edges.len() as u32 + 1;
        if n < 3 {
            continue;
        }
        let extra = r.gen_range(1..=3);
        let mut added = 0;
        for _ in 0..50 {
            let a = r.gen_range(0..n);
            let b = r.gen_range(0..n);
            if a != b && edges.insert((a.min(b), a.max(b))) {
                added += 1;
                if added == extra {
                    break;
                }
            }
        }
        if added > 0 {
            let facets: Vec<Vec<u32>> = edges.into_iter().map(|(a, b)| vec![a, b]).collect();
            return from_simplicial(&facets).unwrap();
        }
    }
}

/// Rank over F2 of rows given as bit masks, by plain elimination.
pub fn f2_rank_masks(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let Some(p) = rows.iter().position(|&r| r >> bit & 1 == 1) else { continue };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Columns of `I_n` mod 2 as bit masks over the rows.
pub fn incidence_columns_mod2(c: &CWComplex, n: usize) -> Vec<u128> {
    let m = c.incidence(n).unwrap();
    let dense = m.to_dense();
    (0..m.cols())
        .map(|col| (0..m.rows()).fold(0u128, |acc, r| if dense[r][col] % 2 != 0 { acc | 1 << r } else { acc }))
        .collect()
}

/// `b_n` over F2 from an independent elimination.
pub fn betti_f2_oracle(c: &CWComplex, n: usize) -> usize {
    let down = if n >= 1 { f2_rank_masks(incidence_columns_mod2(c, n)) } else { 0 };
    let up = if n < c.dim() { f2_rank_masks(incidence_columns_mod2(c, n + 1)) } else { 0 };
    c.count(n) - down - up
}

/// `min weight(∂α) / weight(α)` over nonzero top cochains, by straight enumeration.
pub fn brute_top_expansion(c: &CWComplex) -> Ratio<u64> {
    let d = c.dim();
    let cols = incidence_columns_mod2(c, d);
    let mut best: Option<Ratio<u64>> = None;
    for mask in 1u64..(1u64 << cols.len()) {
        let mut image = 0u128;
        for (j, col) in cols.iter().enumerate() {
            if mask >> j & 1 == 1 {
                image ^= col;
            }
        }
        let r = Ratio::new(image.count_ones() as u64, mask.count_ones() as u64);
        if best.map_or(true, |b| r < b) {
            best = Some(r);
        }
    }
    best.unwrap()
}

/// Graph diameter by BFS from every vertex.
pub fn diameter(edges: &[Vec<u32>]) -> u64 {
    let n = edges.iter().flatten().max().map_or(0, |&m| m as usize + 1);
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e[0] as usize].push(e[1] as usize);
        adj[e[1] as usize].push(e[0] as usize);
    }
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![u64::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if dist[y] == u64::MAX {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        best = best.max(dist.into_iter().max().unwrap());
    }
    best
}

/// Rank of an integer matrix over F_p.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p_row) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p_row);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    let sub = (f as u128 * m[rank][k] as u128 % p as u128) as u64;
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// A prime in `[2^30, 2^31)` chosen by the seed.
pub fn random_31_bit_prime(seed: u64) -> u64 {
    let mut r = rng(seed);
    loop {
        let c = r.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if (3..).step_by(2).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            return c;
        }
    }
}

/// Row space of `rows` (each a bit mask) enumerated explicitly.
pub fn row_space_size(rows: &[u64]) -> usize {
    let mut seen = HashSet::from([0u64]);
    for &r in rows {
        let next: Vec<u64> = seen.iter().map(|&x| x ^ r).collect();
        seen.extend(next);
    }
    seen.len()
}
