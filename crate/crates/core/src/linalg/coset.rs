//! Minimum-weight search in cosets `v + span(B)` of a binary linear code.
//!
//! Two strategies, chosen by the dimension `k` of the span and the
//! codimension `L - k`:
//!
//! * enumerate all `2^k` elements of the coset (Gray code order), or
//! * build a syndrome table mapping every syndrome to its coset leader.
//!
//! Both return the same minimizer: smallest weight, then lexicographically
//! smallest support.

use super::f2::{span_basis, Echelon, F2Matrix, F2Vector};
use crate::error::{Error, Result};

/// Upper limits on the exhaustive searches, as base-2 logarithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest span dimension enumerated directly.
    pub max_span_log2: u32,
    /// Largest codimension for which a syndrome table is built.
    pub max_syndrome_log2: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_span_log2: 20, max_syndrome_log2: 24 }
    }
}

impl SearchBudget {
    /// Caps both searches at `2^log2` items.
    pub fn uniform(log2: u32) -> Self {
        SearchBudget { max_span_log2: log2, max_syndrome_log2: log2 }
    }
}

/// Result of a coset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetLeader {
    pub weight: usize,
    pub minimizer: F2Vector,
}

fn better(candidate: &F2Vector, cand_weight: usize, best: &F2Vector, best_weight: usize) -> bool {
    cand_weight < best_weight
        || (cand_weight == best_weight && candidate.cmp_support(best).is_lt())
}

/// Minimum Hamming weight over `v + span(basis)`, with the lexicographic tie-break.
pub fn f2_coset_min_weight(
    basis: &[F2Vector],
    v: &F2Vector,
    budget: SearchBudget,
) -> Result<CosetLeader> {
    let len = v.len();
    if basis.iter().any(|b| b.len() != len) {
        return Err(Error::arg("coset generators and target differ in length"));
    }
    CosetSearcher::new(len, basis, budget)?.leader(v)
}

/// Prepared coset search for a fixed code, reusable across many targets.
pub struct CosetSearcher {
    len: usize,
    echelon: Echelon,
    strategy: Strategy,
}

enum Strategy {
    Trivial,
    Enumerate,
    Table(SyndromeTable),
}

impl CosetSearcher {
    pub fn new(len: usize, generators: &[F2Vector], budget: SearchBudget) -> Result<Self> {
        let echelon = span_basis(len, generators);
        let k = echelon.rank();
        let strategy = if k == 0 {
            Strategy::Trivial
        } else if k as u32 <= budget.max_span_log2 {
            Strategy::Enumerate
        } else if ((len - k) as u32) <= budget.max_syndrome_log2 {
            Strategy::Table(SyndromeTable::build(&echelon)?)
        } else {
            return Err(Error::Budget(format!(
                "coset search over span of dimension {k} in length {len} exceeds 2^{} enumeration and 2^{} syndrome table",
                budget.max_span_log2, budget.max_syndrome_log2
            )));
        };
        Ok(CosetSearcher { len, echelon, strategy })
    }

    /// Builds the syndrome table strategy regardless of the span dimension.
    pub fn with_table(len: usize, generators: &[F2Vector], budget: SearchBudget) -> Result<Self> {
        let echelon = span_basis(len, generators);
        let k = echelon.rank();
        if (len - k) as u32 > budget.max_syndrome_log2 {
            return Err(Error::Budget(format!(
                "syndrome table of 2^{} entries exceeds 2^{}",
                len - k,
                budget.max_syndrome_log2
            )));
        }
        let strategy = if k == 0 { Strategy::Trivial } else { Strategy::Table(SyndromeTable::build(&echelon)?) };
        Ok(CosetSearcher { len, echelon, strategy })
    }

    pub fn span_dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn uses_table(&self) -> bool {
        matches!(self.strategy, Strategy::Table(_))
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.echelon.contains(v)
    }

    pub fn leader(&self, v: &F2Vector) -> Result<CosetLeader> {
        if v.len() != self.len {
            return Err(Error::arg("vector length does not match the code length"));
        }
        Ok(match &self.strategy {
            Strategy::Trivial => CosetLeader { weight: v.weight(), minimizer: v.clone() },
            Strategy::Enumerate => enumerate_coset(&self.echelon.rows, v),
            Strategy::Table(t) => {
                let minimizer = t.leader_of(t.syndrome(v));
                CosetLeader { weight: minimizer.weight(), minimizer }
            }
        })
    }

    /// The table, when this searcher uses one.
    pub fn table(&self) -> Option<&SyndromeTable> {
        match &self.strategy {
            Strategy::Table(t) => Some(t),
            _ => None,
        }
    }
}

fn enumerate_coset(basis: &[F2Vector], v: &F2Vector) -> CosetLeader {
    let k = basis.len();
    let mut current = v.clone();
    let mut best = v.clone();
    let mut best_weight = v.weight();
    for step in 1u64..(1u64 << k) {
        current.xor_assign(&basis[step.trailing_zeros() as usize]);
        let w = current.weight();
        if better(&current, w, &best, best_weight) {
            best.clone_from(&current);
            best_weight = w;
        }
    }
    CosetLeader { weight: best_weight, minimizer: best }
}

const UNSEEN: u16 = u16::MAX;

/// Coset leaders for every syndrome of a code, found breadth first in
/// (weight, support) order so each leader is lexicographically smallest
/// among the minimum-weight coset members.
pub struct SyndromeTable {
    len: usize,
    parity: Vec<F2Vector>,
    column_syndromes: Vec<u32>,
    parent: Vec<u32>,
    last_bit: Vec<u16>,
}

impl SyndromeTable {
    fn build(code: &Echelon) -> Result<Self> {
        let len = code.cols;
        let parity = F2Matrix::from_rows(len, code.rows.clone()).rank_nullspace().1;
        let r = parity.len();
        if r >= 32 || len >= UNSEEN as usize {
            return Err(Error::Budget(format!("syndrome table with {r} check bits")));
        }
        let column_syndromes: Vec<u32> = (0..len)
            .map(|j| {
                parity
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, h)| if h.get(j) { acc | (1 << i) } else { acc })
            })
            .collect();
        let size = 1usize << r;
        let mut parent = vec![0u32; size];
        let mut last_bit = vec![UNSEEN; size];
        // the root stores an out-of-band marker in `parent`
        parent[0] = u32::MAX;
        let mut seen = 1usize;
        let mut level = vec![0u32];
        while seen < size && !level.is_empty() {
            let mut next = Vec::new();
            for &s in &level {
                let start = if s == 0 { 0 } else { last_bit[s as usize] as usize + 1 };
                for (j, &col) in column_syndromes.iter().enumerate().skip(start) {
                    let t = s ^ col;
                    if t != 0 && last_bit[t as usize] == UNSEEN {
                        last_bit[t as usize] = j as u16;
                        parent[t as usize] = s;
                        next.push(t);
                        seen += 1;
                    }
                }
            }
            level = next;
        }
        debug_assert_eq!(seen, size, "parity checks of full row rank reach every syndrome");
        Ok(SyndromeTable { len, parity, column_syndromes, parent, last_bit })
    }

    pub fn check_bits(&self) -> usize {
        self.parity.len()
    }

    pub fn syndrome(&self, v: &F2Vector) -> u32 {
        v.iter_ones().fold(0, |acc, j| acc ^ self.column_syndromes[j])
    }

    pub fn leader_of(&self, syndrome: u32) -> F2Vector {
        let mut v = F2Vector::zeros(self.len);
        let mut s = syndrome;
        while s != 0 {
            v.set(self.last_bit[s as usize] as usize, true);
            s = self.parent[s as usize];
        }
        v
    }

    /// Every nonzero syndrome with its leader.
    pub fn nonzero_cosets(&self) -> impl Iterator<Item = (u32, F2Vector)> + '_ {
        (1..(1u32 << self.parity.len())).map(move |s| (s, self.leader_of(s)))
    }
}
