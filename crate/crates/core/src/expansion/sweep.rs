use num_rational::Ratio;

use crate::augment::{augment_boundary, AugmentedComplex};
use crate::cochain::Cochain;
use crate::complex::CWComplex;
use crate::error::{Error, Result};
use crate::linalg::F2Vector;
use crate::orientation::{reorient, Orientation};

/// Sweep cut of a real top cochain over the boundary-doubled complex.
///
/// Cells sit at positions `1−M ..= N`: the `M` virtual cells first (value 0),
/// then the `N` real cells by ascending `|f|`, ties by index. `C_i` is the set
/// of low-adjacent pairs `(j, k)` with `j ≤ i < k`, one pair per shared
/// (d−1)-cell.
#[derive(Clone, Debug)]
pub struct SweepProfile {
    pub d: usize,
    /// Augmented d-cell ids in sweep order; the first `virtual_count` are virtual.
    pub order: Vec<usize>,
    pub virtual_count: usize,
    /// `|C_0| .. |C_{N−1}|`.
    pub cuts: Vec<u64>,
    /// `|C_p|` for every `p` in `−M ..= N`.
    pub all_cuts: Vec<u64>,
    /// `Σ_p = |C_{p−1}| − |C_p|` for every `p` in `1−M ..= N`.
    pub sigma: Vec<i64>,
    /// Low-adjacent pairs as order indices `(j, k)` with `j < k`, with repetition.
    pub adjacent_pairs: Vec<(usize, usize)>,
    /// `H[f] = min_i |C_i| / (N − i)`.
    pub h: Ratio<u64>,
    pub h_numerator: u64,
    pub h_denominator: u64,
    pub argmin: usize,
    /// Indicator of the real cells above `argmin`, indexed like the input.
    pub witness: Cochain,
    pub m: u64,
    pub augmented: AugmentedComplex,
}

impl SweepProfile {
    pub fn real_count(&self) -> usize {
        self.order.len() - self.virtual_count
    }

    /// The witness extended by zero to the virtual cells of the augmented complex.
    pub fn witness_on_augmented(&self) -> F2Vector {
        let d = self.d;
        let w = self.witness.as_f2().expect("sweep witness is F2");
        let mut out = F2Vector::zeros(self.augmented.augmented.count(d));
        for i in w.iter_ones() {
            out.set(i, true);
        }
        out
    }

    /// `|C_i|` counted directly from the pair list, for `i` in `−M ..= N`.
    pub fn count_cut(&self, i: i64) -> u64 {
        let m = self.virtual_count as i64;
        self.adjacent_pairs
            .iter()
            .filter(|&&(j, k)| {
                let (pj, pk) = (j as i64 + 1 - m, k as i64 + 1 - m);
                pj <= i && i < pk
            })
            .count() as u64
    }
}

/// Runs the sweep for a real d-cochain `f`.
pub fn sweep(complex: &CWComplex, f: &Cochain) -> Result<SweepProfile> {
    let d = complex.dim();
    if d == 0 {
        return Err(Error::inapplicable("the sweep needs dimension at least 1"));
    }
    if f.dim != d {
        return Err(Error::arg(format!("the sweep takes a top cochain (dimension {d}), got dimension {}", f.dim)));
    }
    f.check(complex)?;
    let values = f.as_real().ok_or_else(|| Error::arg("the sweep takes a real cochain"))?;
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::arg("cochain has non-finite values"));
    }
    if !complex.top_incidence_is_pm1() {
        return Err(Error::inapplicable(format!("the sweep needs I_{d} entries in {{-1,0,1}}")));
    }
    let n_real = complex.count(d);
    if n_real == 0 {
        return Err(Error::inapplicable("no top cells"));
    }

    let oriented = reorient(complex, d, &Orientation::from_values(d, values))?;
    let magnitude: Vec<f64> = values.iter().map(|x| x.abs()).collect();
    let augmented = augment_boundary(&oriented)?;

    let mut real: Vec<usize> = (0..n_real).collect();
    real.sort_by(|&a, &b| magnitude[a].total_cmp(&magnitude[b]).then(a.cmp(&b)));
    let mut order = augmented.virtual_cells.clone();
    let virtual_count = order.len();
    order.extend(real);

    let total = order.len();
    let mut slot = vec![0usize; total];
    for (t, &cell) in order.iter().enumerate() {
        slot[cell] = t;
    }

    let top = augmented.augmented.incidence(d).expect("d ≥ 1");
    let mut adjacent_pairs = Vec::new();
    for cofaces in top.row_lists() {
        for a in 0..cofaces.len() {
            for b in a + 1..cofaces.len() {
                let (x, y) = (slot[cofaces[a].0], slot[cofaces[b].0]);
                adjacent_pairs.push((x.min(y), x.max(y)));
            }
        }
    }
    adjacent_pairs.sort_unstable();

    // Σ at order index t: pairs closing at t minus pairs opening at t
    let mut sigma = vec![0i64; total];
    for &(j, k) in &adjacent_pairs {
        sigma[k] += 1;
        sigma[j] -= 1;
    }
    let mut all_cuts = Vec::with_capacity(total + 1);
    all_cuts.push(0u64);
    for &s in &sigma {
        let prev = *all_cuts.last().expect("nonempty") as i64;
        let next = prev - s;
        debug_assert!(next >= 0);
        all_cuts.push(next as u64);
    }
    // all_cuts[t] = |C_p| with p = t − M; C_0 sits at t = M
    let cuts: Vec<u64> = all_cuts[virtual_count..virtual_count + n_real].to_vec();

    let mut argmin = 0;
    for i in 1..n_real {
        // |C_i| / (N − i) < |C_a| / (N − a)
        let lhs = cuts[i] as u128 * (n_real - argmin) as u128;
        let rhs = cuts[argmin] as u128 * (n_real - i) as u128;
        if lhs < rhs {
            argmin = i;
        }
    }
    let h_numerator = cuts[argmin];
    let h_denominator = (n_real - argmin) as u64;
    let above: Vec<usize> = order[virtual_count + argmin..].to_vec();
    let mut witness = F2Vector::zeros(n_real);
    for cell in above {
        witness.set(cell, true);
    }

    Ok(SweepProfile {
        d,
        order,
        virtual_count,
        cuts,
        all_cuts,
        sigma,
        adjacent_pairs,
        h: Ratio::new(h_numerator, h_denominator),
        h_numerator,
        h_denominator,
        argmin,
        witness: Cochain::f2(d, witness),
        m: complex.max_top_boundary_size().expect("d ≥ 1"),
        augmented,
    })
}
