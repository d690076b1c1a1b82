use std::collections::BTreeMap;

use crate::linalg::{DenseMatrix, F2Matrix, RationalMatrix};

/// Sparse integer matrix of incidence numbers: rows are (n−1)-cells, columns n-cells.
///
/// Zero entries are never stored. Columns keep their entries sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IncidenceMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IncidenceMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds from `(row, col, value)` triples; later duplicates overwrite earlier ones.
    /// Returns the first out-of-range triple as an error.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, (usize, usize)> {
        let mut map = BTreeMap::new();
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err((r, c));
            }
            map.insert((c, r), v);
        }
        let mut m = Self::new(rows, cols);
        for ((c, r), v) in map {
            if v != 0 {
                m.columns[c].push((r, v));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        let c = &self.columns[col];
        c.binary_search_by_key(&row, |&(r, _)| r).map_or(0, |i| c[i].1)
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "incidence index out of range");
        let c = &mut self.columns[col];
        match c.binary_search_by_key(&row, |&(r, _)| r) {
            Ok(i) if value == 0 => {
                c.remove(i);
            }
            Ok(i) => c[i].1 = value,
            Err(_) if value == 0 => {}
            Err(i) => c.insert(i, (row, value)),
        }
    }

    /// Nonzero entries of a column, sorted by row.
    pub fn column(&self, col: usize) -> &[(usize, i64)] {
        &self.columns[col]
    }

    /// All nonzero entries as `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
    }

    /// Nonzero entries of each row, `(col, value)` sorted by column.
    pub fn row_lists(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            rows[r].push((c, v));
        }
        rows
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn max_abs(&self) -> i64 {
        self.entries().map(|(_, _, v)| v.abs()).max().unwrap_or(0)
    }

    pub fn scale_column(&mut self, col: usize, s: i64) {
        for e in &mut self.columns[col] {
            e.1 *= s;
        }
    }

    pub fn scale_row(&mut self, row: usize, s: i64) {
        for col in &mut self.columns {
            if let Ok(i) = col.binary_search_by_key(&row, |&(r, _)| r) {
                col[i].1 *= s;
            }
        }
    }

    /// Appends an empty row and returns its index.
    pub fn push_row(&mut self) -> usize {
        self.rows += 1;
        self.rows - 1
    }

    /// Appends a column with the given `(row, value)` entries and returns its index.
    pub fn push_column(&mut self, mut entries: Vec<(usize, i64)>) -> usize {
        entries.retain(|&(_, v)| v != 0);
        entries.sort_by_key(|&(r, _)| r);
        assert!(entries.iter().all(|&(r, _)| r < self.rows));
        self.columns.push(entries);
        self.cols += 1;
        self.cols - 1
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut t = IncidenceMatrix::new(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.columns[r].push((c, v));
        }
        t
    }

    /// Integer product `self · other`, accumulated in i128; entries that do not fit
    /// in i64 saturate.
    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in incidence product");
        let mut out = IncidenceMatrix::new(self.rows, other.cols);
        let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
        for (c, col) in other.columns.iter().enumerate() {
            acc.clear();
            for &(k, b) in col {
                for &(r, a) in &self.columns[k] {
                    *acc.entry(r).or_insert(0) += a as i128 * b as i128;
                }
            }
            out.columns[c] = acc
                .iter()
                .filter(|(_, &v)| v != 0)
                .map(|(&r, &v)| (r, v.clamp(i64::MIN as i128, i64::MAX as i128) as i64))
                .collect();
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            d[r][c] = v;
        }
        d
    }

    pub fn to_f2(&self) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            if v.rem_euclid(2) == 1 {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let flat: Vec<i64> = self.to_dense().concat();
        RationalMatrix::from_integers(self.rows, self.cols, &flat)
    }

    pub fn to_real(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            m[(r, c)] = v as f64;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_and_product() {
        // filled triangle: I_1 (3x3), I_2 (3x1)
        let i1 = IncidenceMatrix::from_entries(
            3,
            3,
            [(0, 0, -1), (1, 0, 1), (0, 1, -1), (2, 1, 1), (1, 2, -1), (2, 2, 1)],
        )
        .unwrap();
        let i2 = IncidenceMatrix::from_entries(3, 1, [(0, 0, 1), (1, 0, -1), (2, 0, 1)]).unwrap();
        assert_eq!(i1.mul(&i2).nnz(), 0);
        assert_eq!(i1.get(1, 0), 1);
        assert_eq!(i1.get(2, 0), 0);
        let mut m = i2.clone();
        m.set(1, 0, 0);
        assert_eq!(m.nnz(), 2);
        m.set(1, 0, -1);
        assert_eq!(m, i2);
    }

    #[test]
    fn out_of_range_entry_is_reported() {
        assert_eq!(IncidenceMatrix::from_entries(2, 2, [(2, 0, 1)]), Err((2, 0)));
    }

    #[test]
    fn f2_reduction_drops_even_entries() {
        let m = IncidenceMatrix::from_entries(2, 1, [(0, 0, 2), (1, 0, -3)]).unwrap();
        let f = m.to_f2();
        assert!(!f.get(0, 0));
        assert!(f.get(1, 0));
    }
}
