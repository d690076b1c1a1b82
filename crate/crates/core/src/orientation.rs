//! Orientations of cells, coherence of the top dimension, and reorientation.

use std::collections::VecDeque;

use crate::complex::CWComplex;
use crate::error::{Error, Result};

/// A choice of generator per n-cell: `+1` keeps `b_λ`, `−1` selects `b̄_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub dim: usize,
    signs: Vec<i8>,
}

impl Orientation {
    pub fn new(dim: usize, signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::arg(format!("orientation signs must be ±1, got {bad}")));
        }
        Ok(Orientation { dim, signs })
    }

    pub fn identity(dim: usize, len: usize) -> Self {
        Orientation { dim, signs: vec![1; len] }
    }

    /// Sign of each entry: negative values flip, everything else keeps.
    pub fn from_values(dim: usize, values: &[f64]) -> Self {
        Orientation { dim, signs: values.iter().map(|&x| if x < 0.0 { -1 } else { 1 }).collect() }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Evidence that no coherent orientation of the top cells exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonOrientableWitness {
    /// A (d−1)-cell with three or more cofaces: they cannot be pairwise dissimilar.
    Branching { ridge: usize, cofaces: Vec<usize> },
    /// A closed walk of d-cells whose sign constraints multiply to a contradiction.
    /// `ridges[i]` joins `cells[i]` and `cells[(i + 1) % len]`.
    OddCycle { cells: Vec<usize>, ridges: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable(Orientation),
    NonOrientable(NonOrientableWitness),
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable(_))
    }
}

/// Cofaces of every (d−1)-cell with their incidence numbers.
fn ridge_cofaces(complex: &CWComplex) -> Vec<Vec<(usize, i64)>> {
    complex.incidence(complex.dim()).map(|m| m.row_lists()).unwrap_or_default()
}

/// Searches for signs `s` on the d-cells such that every shared (d−1)-cell
/// sees opposite incidence from its two cofaces: `s_λ·I[μ,λ] = −s_κ·I[μ,κ]`.
///
/// Signs are propagated breadth first from the lowest unassigned cell; the
/// first conflicting constraint closes an odd cycle through the search tree.
pub fn check_orientability(complex: &CWComplex) -> Result<Orientability> {
    let d = complex.dim();
    if d == 0 {
        return Err(Error::inapplicable("orientability needs dimension at least 1"));
    }
    if !complex.top_incidence_is_pm1() {
        return Err(Error::inapplicable(format!(
            "orientability is undefined with incidence numbers of magnitude ≥ 2 in I_{d}"
        )));
    }
    let cofaces = ridge_cofaces(complex);
    if let Some((ridge, list)) = cofaces.iter().enumerate().find(|(_, l)| l.len() >= 3) {
        return Ok(Orientability::NonOrientable(NonOrientableWitness::Branching {
            ridge,
            cofaces: list.iter().map(|&(c, _)| c).collect(),
        }));
    }

    // constraint graph: (neighbour, ridge, parity) with parity true when the signs must differ
    let n = complex.count(d);
    let mut adjacency: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for (ridge, list) in cofaces.iter().enumerate() {
        if let [(a, ia), (b, ib)] = list[..] {
            let differ = ia * ib == 1;
            adjacency[a].push((b, ridge, differ));
            adjacency[b].push((a, ridge, differ));
        }
    }

    let mut sign = vec![0i8; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, ridge, differ) in &adjacency[u] {
                let want = if differ { -sign[u] } else { sign[u] };
                if sign[v] == 0 {
                    sign[v] = want;
                    parent[v] = Some((u, ridge));
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if sign[v] != want {
                    return Ok(Orientability::NonOrientable(odd_cycle(&parent, &depth, u, v, ridge)));
                }
            }
        }
    }
    Ok(Orientability::Orientable(Orientation { dim: d, signs: sign }))
}

fn odd_cycle(
    parent: &[Option<(usize, usize)>],
    depth: &[usize],
    u: usize,
    v: usize,
    closing_ridge: usize,
) -> NonOrientableWitness {
    // climb both endpoints to their lowest common ancestor
    let (mut a, mut b) = (u, v);
    let mut up_a = Vec::new();
    let mut up_b = Vec::new();
    while depth[a] > depth[b] {
        let (p, r) = parent[a].expect("non-root has a parent");
        up_a.push((a, r));
        a = p;
    }
    while depth[b] > depth[a] {
        let (p, r) = parent[b].expect("non-root has a parent");
        up_b.push((b, r));
        b = p;
    }
    while a != b {
        let (pa, ra) = parent[a].expect("non-root has a parent");
        let (pb, rb) = parent[b].expect("non-root has a parent");
        up_a.push((a, ra));
        up_b.push((b, rb));
        a = pa;
        b = pb;
    }
    let lca = a;
    // cycle: lca -> ... -> u -(closing)-> v -> ... -> lca
    let mut cells = vec![lca];
    let mut ridges = Vec::new();
    for &(cell, ridge) in up_a.iter().rev() {
        ridges.push(ridge);
        cells.push(cell);
    }
    ridges.push(closing_ridge);
    for &(cell, ridge) in &up_b {
        cells.push(cell);
        ridges.push(ridge);
    }
    NonOrientableWitness::OddCycle { cells, ridges }
}

impl NonOrientableWitness {
    /// Re-checks the witness against the complex.
    pub fn verify(&self, complex: &CWComplex) -> bool {
        let Some(top) = complex.incidence(complex.dim()) else {
            return false;
        };
        match self {
            NonOrientableWitness::Branching { ridge, cofaces } => {
                let rows = top.row_lists();
                cofaces.len() >= 3
                    && rows.get(*ridge).is_some_and(|r| cofaces.iter().all(|c| r.iter().any(|&(x, _)| x == *c)))
            }
            NonOrientableWitness::OddCycle { cells, ridges } => {
                if cells.is_empty() || cells.len() != ridges.len() {
                    return false;
                }
                let mut differ_count = 0;
                for (i, &ridge) in ridges.iter().enumerate() {
                    let a = cells[i];
                    let b = cells[(i + 1) % cells.len()];
                    let (ia, ib) = (top.get(ridge, a), top.get(ridge, b));
                    if ia == 0 || ib == 0 || a == b {
                        return false;
                    }
                    if ia * ib == 1 {
                        differ_count += 1;
                    }
                }
                // a consistent assignment flips sign an even number of times around a cycle
                differ_count % 2 == 1
            }
        }
    }
}

/// Replaces each n-cell generator by `s_λ · b_λ`: column λ of `I_n` and row λ of
/// `I_{n+1}` are scaled by `s_λ`.
pub fn reorient(complex: &CWComplex, n: usize, signs: &Orientation) -> Result<CWComplex> {
    complex.check_dim(n)?;
    if signs.len() != complex.count(n) {
        return Err(Error::arg(format!(
            "orientation has {} signs but dimension {n} has {} cells",
            signs.len(),
            complex.count(n)
        )));
    }
    let mut out = complex.clone();
    for (cell, &s) in signs.signs().iter().enumerate() {
        if s == 1 {
            continue;
        }
        if n >= 1 {
            out.incidence_mut(n).scale_column(cell, -1);
        }
        if n < complex.dim() {
            out.incidence_mut(n + 1).scale_row(cell, -1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::IncidenceMatrix;
    use crate::simplicial::from_simplicial;

    #[test]
    fn single_face_is_orientable() {
        let c = from_simplicial(&[vec![0u32, 1, 2]]).unwrap();
        assert_eq!(
            check_orientability(&c).unwrap(),
            Orientability::Orientable(Orientation { dim: 2, signs: vec![1] })
        );
    }

    #[test]
    fn book_of_three_branches() {
        let c = from_simplicial(&[vec![0u32, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let Orientability::NonOrientable(w) = check_orientability(&c).unwrap() else { panic!() };
        assert_eq!(w, NonOrientableWitness::Branching { ridge: 0, cofaces: vec![0, 1, 2] });
        assert!(w.verify(&c));
    }

    #[test]
    fn moebius_strip_has_odd_cycle() {
        // 5-vertex Möbius band
        let facets: Vec<Vec<u32>> = (0..5).map(|i| vec![i, (i + 1) % 5, (i + 2) % 5]).collect();
        let c = from_simplicial(&facets).unwrap();
        let Orientability::NonOrientable(w) = check_orientability(&c).unwrap() else { panic!() };
        assert!(matches!(w, NonOrientableWitness::OddCycle { .. }));
        assert!(w.verify(&c));
    }

    #[test]
    fn orientation_makes_shared_ridges_opposite() {
        let facets: Vec<Vec<u32>> = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![1, 2, 5]];
        let c = from_simplicial(&facets).unwrap();
        let Orientability::Orientable(o) = check_orientability(&c).unwrap() else { panic!() };
        let r = reorient(&c, 2, &o).unwrap();
        for row in r.incidence(2).unwrap().row_lists() {
            if let [(_, a), (_, b)] = row[..] {
                assert_eq!(a * b, -1);
            }
        }
    }

    #[test]
    fn rejects_non_pm1_top_incidence() {
        let m = IncidenceMatrix::from_entries(1, 1, [(0, 0, 2)]).unwrap();
        let c = CWComplex::new(vec![1, 1], vec![m]).unwrap();
        assert!(matches!(check_orientability(&c), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn reorient_flips_column_and_row() {
        let p3 = from_simplicial(&[vec![0u32, 1], vec![1, 2]]).unwrap();
        let flipped = reorient(&p3, 1, &Orientation::new(1, vec![-1, 1]).unwrap()).unwrap();
        let col: Vec<i64> = (0..3).map(|r| flipped.incidence(1).unwrap().get(r, 0)).collect();
        assert_eq!(col, vec![1, -1, 0]);
        assert!(flipped.validate().ok());

        let tri = from_simplicial(&[vec![0u32, 1, 2]]).unwrap();
        let e = reorient(&tri, 1, &Orientation::new(1, vec![1, -1, 1]).unwrap()).unwrap();
        assert!(e.validate().ok());
        assert_eq!(e.incidence(2).unwrap().get(1, 0), 1);
        assert_eq!(e.incidence(1).unwrap().get(0, 1), 1);

        assert!(reorient(&tri, 1, &Orientation::identity(1, 2)).is_err());
        assert!(Orientation::new(1, vec![0]).is_err());
    }
}
