//! Labeled simple undirected graphs on `n` qubits.
//!
//! Vertices are 1-based. The edge set is a packed bit vector of length
//! `C(n, 2)`; the pair `{i, j}` with `i < j` lives at bit
//! `(j - 2)(j - 1)/2 + (i - 1)`, so for a fixed `n` the bit order is
//! independent of platform and insertion order.

pub(crate) mod canon;
mod gf2;

pub use canon::{canonical_form, CanonicalForm, CANONICAL_MAX_N};
pub(crate) use gf2::{cut_rank_masks, split_vertices};
pub use gf2::{entropy_cut_rank, gf2_rank, BitMatrix};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of unordered vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit position of the unordered pair `{i, j}` (1-based, `i != j`).
pub fn edge_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(lo >= 1 && lo < hi);
    (hi - 2) * (hi - 1) / 2 + (lo - 1)
}

/// Inverse of [`edge_index`]: returns `(i, j)` with `i < j`.
pub fn edge_from_index(k: usize) -> (usize, usize) {
    let mut hi = 2;
    while (hi - 1) * hi / 2 <= k {
        hi += 1;
    }
    let lo = k - (hi - 2) * (hi - 1) / 2 + 1;
    (lo, hi)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::VertexOutOfRange { n, i, j });
            }
            if g.has_edge(i, j) {
                return Err(Error::DuplicateEdge(i, j));
            }
            g.set_bit(edge_index(i, j), true);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            bits: vec![0; pair_count(n).div_ceil(64).max(1)],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for k in 0..pair_count(n) {
            g.set_bit(k, true);
        }
        Ok(g)
    }

    /// Builds a graph from a single packed word; requires `C(n, 2) <= 64`.
    pub fn from_edge_bits(n: usize, bits: u64) -> Result<Self> {
        let pairs = pair_count(n);
        if n == 0 || pairs > 64 {
            return Err(Error::InvalidSize(format!(
                "packed edge word needs 1 <= n <= 11, got {n}"
            )));
        }
        if pairs < 64 && bits >> pairs != 0 {
            return Err(Error::InvalidSize(format!(
                "edge word {bits:#x} has bits beyond C({n}, 2) = {pairs}"
            )));
        }
        Ok(Graph {
            n,
            bits: vec![bits],
        })
    }

    /// The packed edge word, when the graph is small enough to fit one.
    pub fn edge_bits(&self) -> Option<u64> {
        (pair_count(self.n) <= 64).then(|| self.bits[0])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i == 0 || j == 0 || i > self.n || j > self.n {
            return false;
        }
        let k = edge_index(i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Edges as `(i, j)` with `i < j`, in packed-bit order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..pair_count(self.n))
            .filter(|&k| self.bits[k / 64] >> (k % 64) & 1 == 1)
            .map(edge_from_index)
            .collect()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::VertexOutOfRange { n: self.n, i, j });
        }
        self.set_bit(edge_index(i, j), true);
        Ok(())
    }

    fn set_bit(&mut self, k: usize, on: bool) {
        if on {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    /// Neighbourhood masks, bit `v - 1` set for each neighbour `v`.
    /// Only available for `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "neighbour masks need n <= 64");
        let mut rows = vec![0u64; self.n];
        for (i, j) in self.edges() {
            rows[i - 1] |= 1 << (j - 1);
            rows[j - 1] |= 1 << (i - 1);
        }
        rows
    }

    /// Relabels vertex `v` as `perm[v - 1]` (1-based permutation).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidSize(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidSize(format!("{perm:?} is not a permutation")));
            }
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(i, j)| (perm[i - 1], perm[j - 1]))
            .collect();
        Graph::new(self.n, &edges)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut adj = vec![Vec::new(); self.n];
        for (i, j) in self.edges() {
            adj[i - 1].push(j);
            adj[j - 1].push(i);
        }
        while let Some(v) = stack.pop() {
            for &w in &adj[v - 1] {
                if !std::mem::replace(&mut seen[w - 1], true) {
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        adjacency_matrix(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Wire format: `{"n": int, "edges": [[i, j], ...]}` with 1-based vertices.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(raw.n, &edges).map_err(serde::de::Error::custom)
    }
}

/// Symmetric zero-diagonal adjacency bit-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix(BitMatrix);

impl AdjacencyMatrix {
    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// 1-based entry lookup.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.0.get(i - 1, j - 1)
    }

    pub fn as_bits(&self) -> &BitMatrix {
        &self.0
    }

    pub fn rows_as_strings(&self) -> Vec<String> {
        (0..self.n())
            .map(|r| {
                (0..self.n())
                    .map(|c| if self.0.get(r, c) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

pub fn adjacency_matrix(g: &Graph) -> AdjacencyMatrix {
    let mut m = BitMatrix::zeros(g.n(), g.n());
    for (i, j) in g.edges() {
        m.set(i - 1, j - 1, true);
        m.set(j - 1, i - 1, true);
    }
    AdjacencyMatrix(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig4() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn edge_index_is_colex() {
        assert_eq!(edge_index(1, 2), 0);
        assert_eq!(edge_index(1, 3), 1);
        assert_eq!(edge_index(2, 3), 2);
        assert_eq!(edge_index(4, 1), 3);
        for k in 0..500 {
            let (i, j) = edge_from_index(k);
            assert!(i < j);
            assert_eq!(edge_index(i, j), k);
        }
    }

    #[test]
    fn make_graph_validation() {
        assert_eq!(Graph::new(3, &[(1, 2)]).unwrap().edge_count(), 1);
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(2, 1))
        );
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { n: 3, i: 1, j: 4 })
        );
        assert!(matches!(Graph::new(0, &[]), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn fig4_adjacency() {
        let a = fig4().adjacency_matrix();
        assert_eq!(a.rows_as_strings(), ["0110", "1011", "1100", "0100"]);
    }

    #[test]
    fn empty_and_complete_adjacency() {
        let e = Graph::empty(4).unwrap().adjacency_matrix();
        assert!(e.rows_as_strings().iter().all(|r| r == "0000"));
        let k = Graph::complete(4).unwrap().adjacency_matrix();
        assert_eq!(k.rows_as_strings(), ["0111", "1011", "1101", "1110"]);
    }

    #[test]
    fn json_wire_format() {
        let g = fig4();
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[2,4]]}"#);
        let back =
            Graph::from_json(r#"{"n": 4, "edges": [[2, 1], [3, 1], [3, 2], [4, 2]]}"#).unwrap();
        assert_eq!(back, g);
        assert!(Graph::from_json(r#"{"n": 3, "edges": [[1, 1]]}"#).is_err());
    }

    #[test]
    fn packed_word_round_trip() {
        let g = fig4();
        let w = g.edge_bits().unwrap();
        assert_eq!(Graph::from_edge_bits(4, w).unwrap(), g);
        assert!(Graph::from_edge_bits(3, 0b1000).is_err());
        assert!(Graph::from_edge_bits(12, 0).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(fig4().is_connected());
        assert!(!Graph::new(4, &[(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        assert_eq!(
            g.relabeled(&[3, 2, 1]).unwrap(),
            Graph::new(3, &[(3, 2)]).unwrap()
        );
        assert!(g.relabeled(&[1, 1, 2]).is_err());
    }
}
