use std::collections::VecDeque;

use num_rational::Ratio;

use crate::complex::{CWComplex, Field};
use crate::error::{Error, Result};
use crate::spectral::betti;

/// `h_1` of a connected graph by formula: `2 / diam` for a tree, `0` otherwise.
pub fn tree_expansion_oracle(complex: &CWComplex) -> Result<Ratio<u64>> {
    if complex.dim() != 1 {
        return Err(Error::arg(format!("the tree formula needs a 1-complex, got dimension {}", complex.dim())));
    }
    let v = complex.count(0);
    let mut adj = vec![Vec::new(); v];
    for c in 0..complex.count(1) {
        let ends: Vec<usize> = complex.incidence(1).expect("d = 1").column(c).iter().map(|&(r, _)| r).collect();
        for &a in &ends {
            for &b in &ends {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
    }
    let bfs = |s: usize| {
        let mut dist = vec![usize::MAX; v];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    };
    let mut diam = 0;
    for s in 0..v {
        let dist = bfs(s);
        if dist.contains(&usize::MAX) {
            return Err(Error::inapplicable("graph is disconnected; its diameter is undefined"));
        }
        diam = diam.max(*dist.iter().max().expect("v ≥ 1"));
    }
    if betti(complex, 1, Field::F2, false)? > 0 {
        return Ok(Ratio::from_integer(0));
    }
    if diam == 0 {
        return Err(Error::inapplicable("a single vertex has no edges to expand"));
    }
    Ok(Ratio::new(2, diam as u64))
}
