use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use crate::complex::CWComplex;
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;

/// Cellular structure of the simplicial complex generated by `facets`.
///
/// Every face appears once; n-cells are ordered lexicographically by their
/// sorted vertex tuples and `∂[v_0..v_n] = Σ_i (−1)^i [v_0..v̂_i..v_n]`.
/// The result is flagged regular and labelled with its vertex tuples.
pub fn from_simplicial<V: Ord + Clone + Display>(facets: &[Vec<V>]) -> Result<CWComplex> {
    if facets.is_empty() {
        return Err(Error::arg("no facets given"));
    }
    let mut faces: Vec<BTreeSet<Vec<V>>> = Vec::new();
    for facet in facets {
        let simplex: Vec<V> = facet.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        if simplex.is_empty() {
            return Err(Error::arg("empty facet"));
        }
        let top = simplex.len() - 1;
        if faces.len() <= top {
            faces.resize_with(top + 1, BTreeSet::new);
        }
        // every nonempty subset of the facet
        let k = simplex.len();
        if k > 24 {
            return Err(Error::arg(format!("facet with {k} vertices is too large to expand")));
        }
        for mask in 1u32..(1u32 << k) {
            let face: Vec<V> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| simplex[i].clone()).collect();
            faces[face.len() - 1].insert(face);
        }
    }

    let index: Vec<BTreeMap<&Vec<V>, usize>> =
        faces.iter().map(|set| set.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    let counts: Vec<usize> = faces.iter().map(BTreeSet::len).collect();
    let mut incidence = Vec::new();
    for n in 1..faces.len() {
        let mut entries = Vec::new();
        for (col, face) in faces[n].iter().enumerate() {
            for i in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(i);
                let row = index[n - 1][&sub];
                entries.push((row, col, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        incidence.push(IncidenceMatrix::from_entries(counts[n - 1], counts[n], entries).expect("faces are indexed"));
    }
    let mut complex = CWComplex::new(counts, incidence)?.with_regular(true);
    for (n, set) in faces.iter().enumerate() {
        for (i, face) in set.iter().enumerate() {
            let text: Vec<String> = face.iter().map(ToString::to_string).collect();
            complex.set_label(n, i, format!("[{}]", text.join(",")))?;
        }
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filled_triangle() {
        let c = from_simplicial(&[vec![0u32, 1, 2]]).unwrap();
        assert_eq!(c.cell_counts(), &[3, 3, 1]);
        let col: Vec<i64> = (0..3).map(|r| c.incidence(2).unwrap().get(r, 0)).collect();
        assert_eq!(col, vec![1, -1, 1]);
        assert_eq!(c.label(1, 1), Some("[0,2]"));
        assert!(c.validate().ok());
        assert!(c.regular_asserted());
    }

    #[test]
    fn path_matches_convention() {
        let p3 = from_simplicial(&[vec![0u32, 1], vec![1, 2]]).unwrap();
        assert_eq!(p3.cell_counts(), &[3, 2]);
        assert_eq!(p3.incidence(1).unwrap().to_dense(), vec![vec![-1, 0], vec![1, -1], vec![0, 1]]);
    }

    #[test]
    fn duplicates_and_order_do_not_matter() {
        let a = from_simplicial(&[vec![2u32, 1, 0], vec![3, 2], vec![0, 1]]).unwrap();
        let b = from_simplicial(&[vec![2u32, 3], vec![0, 1, 2, 2]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_empty_input() {
        assert!(from_simplicial::<u32>(&[]).is_err());
        assert!(from_simplicial::<u32>(&[vec![0, 1], vec![]]).is_err());
    }
}
