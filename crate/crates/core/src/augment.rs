//! Boundary doubling: every (d−1)-cell of degree one gets a duplicate with the
//! same boundary, and a virtual d-cell is glued along the pair.

use crate::complex::CWComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AugmentedComplex {
    pub base: CWComplex,
    pub augmented: CWComplex,
    /// Original boundary (d−1)-cells, in ascending order.
    pub boundary_ridges: Vec<usize>,
    /// Duplicate (d−1)-cell ids in the augmented complex, parallel to `boundary_ridges`.
    pub virtual_ridges: Vec<usize>,
    /// Virtual d-cell ids in the augmented complex, parallel to `boundary_ridges`.
    pub virtual_cells: Vec<usize>,
}

impl AugmentedComplex {
    pub fn is_virtual_cell(&self, cell: usize) -> bool {
        cell >= self.base.count(self.base.dim())
    }

    /// Deletes the virtual cells again; equals `base` by construction.
    pub fn strip(&self) -> CWComplex {
        let d = self.base.dim();
        let mut counts = self.augmented.cell_counts().to_vec();
        counts[d] = self.base.count(d);
        counts[d - 1] = self.base.count(d - 1);
        let mut incidence = Vec::new();
        for n in 1..=d {
            let m = self.augmented.incidence(n).expect("dimension in range");
            let rows = counts[n - 1];
            let cols = counts[n];
            let kept = m.entries().filter(|&(r, c, _)| r < rows && c < cols);
            incidence.push(
                crate::incidence::IncidenceMatrix::from_entries(rows, cols, kept).expect("subset in range"),
            );
        }
        let mut out = CWComplex::new(counts, incidence)
            .expect("shapes agree")
            .with_regular(self.augmented.regular_asserted());
        for n in 0..=d {
            for i in 0..out.count(n) {
                if let Some(l) = self.augmented.label(n, i) {
                    out.set_label(n, i, l).expect("index in range");
                }
            }
        }
        out
    }
}

/// Appends a duplicate `λ'` for each boundary (d−1)-cell `λ` (copying `λ`'s column
/// of `I_{d−1}`) and a virtual d-cell with incidence `+1` on `λ` and `−1` on `λ'`.
pub fn augment_boundary(complex: &CWComplex) -> Result<AugmentedComplex> {
    let d = complex.dim();
    if d == 0 {
        return Err(Error::inapplicable("boundary augmentation needs dimension at least 1"));
    }
    if !complex.top_incidence_is_pm1() {
        return Err(Error::inapplicable(format!(
            "boundary augmentation needs incidence numbers in {{-1,0,1}} for I_{d}"
        )));
    }
    let boundary_ridges = complex.boundary_set()?;
    let mut augmented = complex.clone();
    let mut virtual_ridges = Vec::with_capacity(boundary_ridges.len());
    let mut virtual_cells = Vec::with_capacity(boundary_ridges.len());
    for &ridge in &boundary_ridges {
        let name = complex.cell_name(d - 1, ridge);
        let copy = augmented.push_cell(d - 1, Some(format!("{name}'")));
        if d >= 2 {
            let column = augmented.incidence(d - 1).expect("d ≥ 2").column(ridge).to_vec();
            let pushed = augmented.incidence_mut(d - 1).push_column(column);
            debug_assert_eq!(pushed, copy);
        }
        let row = augmented.incidence_mut(d).push_row();
        debug_assert_eq!(row, copy);
        let cap = augmented.push_cell(d, Some(format!("cap({name})")));
        let pushed = augmented.incidence_mut(d).push_column(vec![(ridge, 1), (copy, -1)]);
        debug_assert_eq!(pushed, cap);
        virtual_ridges.push(copy);
        virtual_cells.push(cap);
    }
    Ok(AugmentedComplex { base: complex.clone(), augmented, boundary_ridges, virtual_ridges, virtual_cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::from_simplicial;

    #[test]
    fn path_gets_two_caps() {
        let p3 = from_simplicial(&[vec![0u32, 1], vec![1, 2]]).unwrap();
        let a = augment_boundary(&p3).unwrap();
        assert_eq!(a.augmented.cell_counts(), &[5, 4]);
        assert_eq!(a.boundary_ridges, vec![0, 2]);
        assert_eq!(a.virtual_ridges, vec![3, 4]);
        assert_eq!(a.virtual_cells, vec![2, 3]);
        assert!(a.augmented.validate().ok());
        assert_eq!(a.augmented.degrees(0), vec![2, 2, 2, 1, 1]);
        assert_eq!(a.strip(), p3);
    }

    #[test]
    fn closed_surface_is_unchanged() {
        let facets: Vec<Vec<u32>> = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let c = from_simplicial(&facets).unwrap();
        let a = augment_boundary(&c).unwrap();
        assert!(a.virtual_cells.is_empty());
        assert_eq!(a.augmented, c);
    }

    #[test]
    fn duplicates_share_boundary() {
        let c = from_simplicial(&[vec![0u32, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]).unwrap();
        let a = augment_boundary(&c).unwrap();
        assert_eq!(a.virtual_cells.len(), 3);
        assert!(a.augmented.validate().ok());
        let i1 = a.augmented.incidence(1).unwrap();
        for (&orig, &copy) in a.boundary_ridges.iter().zip(&a.virtual_ridges) {
            assert_eq!(i1.column(orig), i1.column(copy));
            assert_eq!(a.augmented.degree(1, orig).unwrap(), 2);
        }
        assert_eq!(a.strip(), c);
    }
}
