//! Matrices over GF(2) with at most 64 columns, one word per row.

use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u64>,
    ncols: usize,
}

impl BitMatrix {
    pub fn new(rows: Vec<u64>, ncols: usize) -> Result<Self> {
        if ncols > 64 {
            return Err(invalid("BitMatrix supports at most 64 columns"));
        }
        let mask = VertexSet::full(ncols).bits();
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(invalid("row has bits beyond ncols"));
        }
        Ok(BitMatrix { rows, ncols })
    }

    /// Builds from 0/1 strings such as `"110"`, leftmost character = column 0.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != ncols {
                return Err(invalid("ragged rows"));
            }
            let mut w = 0u64;
            for (j, ch) in r.bytes().enumerate() {
                match ch {
                    b'1' => w |= 1u64 << j,
                    b'0' => {}
                    _ => return Err(invalid("rows must be 0/1 strings")),
                }
            }
            out.push(w);
        }
        BitMatrix::new(out, ncols)
    }

    pub fn identity(k: usize) -> Result<Self> {
        BitMatrix::new((0..k).map(|i| 1u64 << i).collect(), k)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn rank(&self) -> usize {
        gf2_rank(&self.rows)
    }

    /// Rank of the submatrix `M[X, Y]` for row set `X` and column set `Y`.
    pub fn sub_rank(&self, rows: VertexSet, cols: VertexSet) -> usize {
        let mut buf = [0u64; 64];
        let mut len = 0;
        for i in rows.iter().filter(|&i| i < self.rows.len()) {
            buf[len] = self.rows[i] & cols.bits();
            len += 1;
        }
        rank_in_place(&mut buf[..len])
    }
}

/// Rank over GF(2) of the given rows.
pub fn gf2_rank(rows: &[u64]) -> usize {
    if rows.len() <= 64 {
        let mut buf = [0u64; 64];
        buf[..rows.len()].copy_from_slice(rows);
        rank_in_place(&mut buf[..rows.len()])
    } else {
        let mut buf = rows.to_vec();
        rank_in_place(&mut buf)
    }
}

/// Gaussian elimination over GF(2), pivoting on the lowest set column first.
/// Destroys the contents of `rows`.
pub fn rank_in_place(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    let mut cols = rows.iter().fold(0u64, |acc, r| acc | r);
    while cols != 0 && rank < rows.len() {
        let bit = cols & cols.wrapping_neg();
        cols &= !bit;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for r in rows[rank + 1..].iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::from_strs(&["11", "11"]).unwrap().rank(), 1);
        assert_eq!(BitMatrix::identity(7).unwrap().rank(), 7);
        let m = BitMatrix::from_strs(&["110", "011", "101"]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(gf2_rank(&[]), 0);
        assert_eq!(gf2_rank(&[0, 0]), 0);
    }

    #[test]
    fn sub_rank_selects() {
        let m = BitMatrix::from_strs(&["110", "011", "101"]).unwrap();
        assert_eq!(m.sub_rank(VertexSet::from_slice(&[0, 1]), VertexSet::from_slice(&[0])), 1);
        assert_eq!(m.sub_rank(VertexSet::full(3), VertexSet::EMPTY), 0);
        assert_eq!(m.sub_rank(VertexSet::full(3), VertexSet::full(3)), 2);
    }

    #[test]
    fn rejects_bad_shape() {
        assert!(BitMatrix::new(vec![0b100], 2).is_err());
        assert!(BitMatrix::from_strs(&["10", "1"]).is_err());
        assert!(BitMatrix::new(vec![], 65).is_err());
    }

    /// Rank by brute force: the largest k such that some k rows are
    /// linearly independent, i.e. no nonempty subset XORs to zero.
    fn brute_rank(rows: &[u64]) -> usize {
        let n = rows.len();
        let mut best = 0;
        for sub in 0u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| sub >> i & 1 == 1).collect();
            let independent = (1u32..(1 << idx.len())).all(|c| {
                idx.iter()
                    .enumerate()
                    .filter(|(b, _)| c >> b & 1 == 1)
                    .fold(0u64, |acc, (_, &i)| acc ^ rows[i])
                    != 0
            });
            if independent {
                best = best.max(idx.len());
            }
        }
        best
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_brute_force(rows in proptest::collection::vec(0u64..64, 0..7)) {
            proptest::prop_assert_eq!(gf2_rank(&rows), brute_rank(&rows));
        }
    }
}
