//! Dense bit matrices over GF(2) and the cut-rank entropy backend.

use super::Graph;
use crate::error::{Error, Result};

/// Row-major bit matrix, each row packed into `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged bit matrix");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v != 0);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }
}

/// Rank over GF(2) by Gaussian elimination on packed rows.
pub fn gf2_rank(m: &BitMatrix) -> usize {
    let mut rows: Vec<Vec<u64>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let p = &head[rank];
        for row in tail.iter_mut() {
            if row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(p) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over GF(2) of single-word rows, via an xor basis keyed by leading bit.
pub(crate) fn gf2_rank_words(rows: impl IntoIterator<Item = u64>) -> u32 {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in rows {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// Validates a bipartition side and returns `(part_a, complement)`, both sorted.
pub(crate) fn split_vertices(n: usize, part_a: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut inside = vec![false; n];
    for &v in part_a {
        if v == 0 || v > n {
            return Err(Error::InvalidBipartition(format!(
                "vertex {v} outside [1, {n}]"
            )));
        }
        if std::mem::replace(&mut inside[v - 1], true) {
            return Err(Error::InvalidBipartition(format!("vertex {v} repeated")));
        }
    }
    let a: Vec<usize> = (1..=n).filter(|&v| inside[v - 1]).collect();
    let b: Vec<usize> = (1..=n).filter(|&v| !inside[v - 1]).collect();
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidBipartition(
            "both sides must be nonempty".into(),
        ));
    }
    Ok((a, b))
}

/// Bipartite entanglement of the graph state `|g>` across `part_a`, in ebits.
///
/// Uses the stabilizer identity: the entropy equals the GF(2) rank of the
/// adjacency block with rows in `part_a` and columns in its complement.
pub fn entropy_cut_rank(g: &Graph, part_a: &[usize]) -> Result<u32> {
    let (a, b) = split_vertices(g.n(), part_a)?;
    let mut block = BitMatrix::zeros(a.len(), b.len());
    for (r, &u) in a.iter().enumerate() {
        for (c, &v) in b.iter().enumerate() {
            if g.has_edge(u, v) {
                block.set(r, c, true);
            }
        }
    }
    Ok(gf2_rank(&block) as u32)
}

/// Cut rank from neighbourhood masks (`n <= 64`); `a_mask` holds bit `v - 1`
/// for each vertex of the cut side.
pub(crate) fn cut_rank_masks(neighbors: &[u64], a_mask: u64) -> u32 {
    let full = if neighbors.len() == 64 {
        u64::MAX
    } else {
        (1u64 << neighbors.len()) - 1
    };
    let b_mask = full & !a_mask;
    gf2_rank_words(
        neighbors
            .iter()
            .enumerate()
            .filter(|(v, _)| a_mask >> v & 1 == 1)
            .map(|(_, &row)| row & b_mask),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(
            gf2_rank(&BitMatrix::from_rows(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]])),
            1
        );
        assert_eq!(gf2_rank(&BitMatrix::identity(4)), 4);
        assert_eq!(gf2_rank(&BitMatrix::from_rows(&[[1, 1], [0, 1]])), 2);
        assert_eq!(gf2_rank(&BitMatrix::zeros(3, 5)), 0);
        // Rows sum to zero mod 2.
        assert_eq!(
            gf2_rank(&BitMatrix::from_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]])),
            2
        );
    }

    #[test]
    fn rank_across_word_boundary() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 64, true);
        m.set(2, 64, true);
        m.set(2, 129, true);
        assert_eq!(gf2_rank(&m), 2);
        m.set(2, 0, true);
        assert_eq!(gf2_rank(&m), 3);
    }

    #[test]
    fn word_rank_matches_matrix_rank() {
        let rows = [0b1011u64, 0b0110, 0b1101, 0b0000, 0b1011];
        let m = BitMatrix::from_rows(
            &rows
                .iter()
                .map(|r| (0..4).map(|b| (r >> b & 1) as u8).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        );
        assert_eq!(gf2_rank_words(rows) as usize, gf2_rank(&m));
    }

    #[test]
    fn cut_rank_examples() {
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(entropy_cut_rank(&edge, &[1]).unwrap(), 1);
        let fig4 = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4)]).unwrap();
        assert_eq!(entropy_cut_rank(&fig4, &[2]).unwrap(), 1);
        assert_eq!(entropy_cut_rank(&fig4, &[2, 3]).unwrap(), 2);
        assert_eq!(entropy_cut_rank(&fig4, &[4, 1]).unwrap(), 2);
    }

    #[test]
    fn cut_rank_rejects_bad_bipartitions() {
        let g = Graph::complete(3).unwrap();
        assert!(matches!(
            entropy_cut_rank(&g, &[]),
            Err(Error::InvalidBipartition(_))
        ));
        assert!(matches!(
            entropy_cut_rank(&g, &[1, 2, 3]),
            Err(Error::InvalidBipartition(_))
        ));
        assert!(matches!(
            entropy_cut_rank(&g, &[4]),
            Err(Error::InvalidBipartition(_))
        ));
        assert!(matches!(
            entropy_cut_rank(&g, &[1, 1]),
            Err(Error::InvalidBipartition(_))
        ));
    }

    #[test]
    fn mask_cut_rank_agrees() {
        let fig4 = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4)]).unwrap();
        let rows = fig4.neighbor_masks();
        assert_eq!(cut_rank_masks(&rows, 0b0110), 2);
        assert_eq!(cut_rank_masks(&rows, 0b0010), 1);
    }
}
