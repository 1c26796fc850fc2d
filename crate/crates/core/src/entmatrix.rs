//! Entanglement Matrix of a graph state.
//!
//! Midpoints are labeled `1'..n'` for the primary positions (`k'` between
//! qubits `k` and `k + 1`, wrapping), then `(n+1)'...` for the distinct
//! midpoints of present non-consecutive edges. Joining two primary
//! midpoints splits the qubits into a cyclic arc and its complement; the
//! bipartite entropy of that split fills the off-diagonal entry. Diagonal
//! entries count one ebit per present edge at a primary position and one
//! ebit per present chord through a secondary position.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    all_chords, build_midpoint_census_with_tol, consecutive_chords, Chord, MidpointCensus, Point2,
    Restriction, DEFAULT_TOL,
};
use crate::graph::{
    cut_rank_masks, edge_index, entropy_cut_rank, pair_count, AdjacencyMatrix, Graph,
};
use crate::sim::{self, DENSE_MAX_QUBITS};

/// Dense-sim entropies farther than this from an integer are rejected.
pub const INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntropyBackend {
    /// GF(2) rank of the adjacency block across the cut.
    CutRank,
    /// Spectrum of the reduced state of a dense state vector.
    DenseSim,
}

impl EntropyBackend {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntropyBackend::CutRank => "cut-rank",
            EntropyBackend::DenseSim => "dense-sim",
        }
    }
}

impl fmt::Display for EntropyBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntropyBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cut-rank" => Ok(EntropyBackend::CutRank),
            "dense-sim" => Ok(EntropyBackend::DenseSim),
            other => Err(Error::Parse(format!("unknown backend {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Primary,
    Secondary,
}

#[derive(Clone, Debug, Serialize)]
pub struct MidpointLabel {
    pub label: usize,
    pub kind: LabelKind,
    pub position: Point2,
    /// For primary labels, the qubits `(k, k + 1)` the midpoint sits between.
    pub between: Option<(usize, usize)>,
    /// Present edges whose midpoint this is and that this label accounts for.
    pub generators: Vec<Chord>,
    /// Present edges passing through the position.
    pub incident_chords: Vec<Chord>,
}

impl MidpointLabel {
    pub fn name(&self) -> String {
        format!("{}'", self.label)
    }

    /// Ebits this label contributes to the diagonal.
    pub fn diagonal(&self) -> u32 {
        match self.kind {
            LabelKind::Primary => u32::from(!self.generators.is_empty()),
            LabelKind::Secondary => self.incident_chords.len() as u32,
        }
    }

    /// Edges credited with this label's diagonal ebits, one each.
    fn contributors(&self) -> &[Chord] {
        match self.kind {
            LabelKind::Primary => &self.generators,
            LabelKind::Secondary => &self.incident_chords,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MidpointLabeling {
    pub n: usize,
    pub labels: Vec<MidpointLabel>,
}

impl MidpointLabeling {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn secondary_count(&self) -> usize {
        self.labels.len() - self.n
    }

    pub fn names(&self) -> Vec<String> {
        self.labels.iter().map(MidpointLabel::name).collect()
    }
}

fn find_site(census: &MidpointCensus, c: &Chord) -> usize {
    census
        .records
        .iter()
        .position(|r| r.sites.contains(c))
        .expect("every site chord has a census record")
}

pub fn label_midpoints(g: &Graph) -> Result<MidpointLabeling> {
    label_midpoints_with_tol(g, DEFAULT_TOL)
}

pub fn label_midpoints_with_tol(g: &Graph, tol: f64) -> Result<MidpointLabeling> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "labeling needs n >= 2, got {n}"
        )));
    }
    let census = build_midpoint_census_with_tol(n, Restriction::EdgeSet(g.clone()), tol)?;
    let mut labels = Vec::new();
    let mut taken = vec![false; census.records.len()];

    for k in 1..=n {
        let next = k % n + 1;
        let chord = Chord::new(n, k, next)?;
        let slot = find_site(&census, &chord);
        let rec = &census.records[slot];
        // With n = 2 both primary labels sit on the one chord; only 1' owns it,
        // and 2' takes the antipodal position.
        let owns = !(n == 2 && k == 2);
        let present = owns && g.has_edge(k, next);
        labels.push(MidpointLabel {
            label: k,
            kind: LabelKind::Primary,
            position: if owns {
                rec.position
            } else {
                Point2::new(-rec.position.x, -rec.position.y)
            },
            between: Some((k, next)),
            generators: if present { vec![chord] } else { Vec::new() },
            incident_chords: if owns {
                rec.incident_chords.clone()
            } else {
                Vec::new()
            },
        });
        taken[slot] = true;
    }

    let mut edges = g.edges();
    edges.sort_unstable();
    for (a, b) in edges {
        let chord = Chord::new(n, a, b)?;
        if chord.separation() == 1 {
            continue;
        }
        let slot = find_site(&census, &chord);
        if std::mem::replace(&mut taken[slot], true) {
            continue;
        }
        let rec = &census.records[slot];
        labels.push(MidpointLabel {
            label: labels.len() + 1,
            kind: LabelKind::Secondary,
            position: rec.position,
            between: None,
            generators: rec.generators.clone(),
            incident_chords: rec.incident_chords.clone(),
        });
    }
    Ok(MidpointLabeling { n, labels })
}

/// The two sides cut off by the segment joining primary midpoints `i'` and
/// `j'`: the cyclic arc `{i+1, ..., j}` and the rest, each in cyclic order.
pub fn bipartition_from_primary_pair(
    n: usize,
    i: usize,
    j: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidPair(i, j));
    }
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut v = from % n + 1;
        loop {
            out.push(v);
            if v == to {
                return out;
            }
            v = v % n + 1;
        }
    };
    Ok((arc(i, j), arc(j, i)))
}

#[derive(Clone, Debug)]
pub struct EntanglementMatrix {
    labeling: MidpointLabeling,
    entries: Vec<u32>,
}

impl EntanglementMatrix {
    pub fn n(&self) -> usize {
        self.labeling.n
    }

    /// Number of rows (primary plus secondary labels).
    pub fn size(&self) -> usize {
        self.labeling.len()
    }

    pub fn labeling(&self) -> &MidpointLabeling {
        &self.labeling
    }

    /// Entry at 1-based labels `(i', j')`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        let m = self.size();
        assert!(i >= 1 && j >= 1 && i <= m && j <= m, "label out of range");
        self.entries[(i - 1) * m + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.size())
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.size();
        (1..=m).all(|i| (1..=m).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Header row and column are the midpoint labels; the body is integers.
    pub fn to_csv(&self) -> String {
        let names = self.labeling.names();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(names.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (name, row) in names.iter().zip(self.rows()) {
            let mut rec = vec![name.clone()];
            rec.extend(row.iter().map(u32::to_string));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_export(&self) -> MatrixExport {
        MatrixExport {
            n: self.n(),
            labels: self.labeling.names(),
            entries: self.rows(),
        }
    }
}

/// Serializable image of an [`EntanglementMatrix`]; also the parsed form of
/// the matrix CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub n: usize,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<u32>>,
}

impl MatrixExport {
    /// Parses the CSV written by [`EntanglementMatrix::to_csv`]. The qubit
    /// count is not recorded in the CSV, so the caller supplies it.
    pub fn from_csv(text: &str, n: usize) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(text.as_bytes());
        let mut records = rdr.records();
        let parse_err = |e: csv::Error| Error::Parse(e.to_string());
        let header = records
            .next()
            .ok_or_else(|| Error::Parse("empty matrix CSV".into()))?
            .map_err(parse_err)?;
        let labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
        let mut entries = Vec::with_capacity(labels.len());
        for (row, rec) in records.enumerate() {
            let rec = rec.map_err(parse_err)?;
            if rec.get(0) != labels.get(row).map(String::as_str) {
                return Err(Error::Parse(format!("row {row} label mismatch")));
            }
            let vals = rec
                .iter()
                .skip(1)
                .map(|v| v.parse::<u32>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != labels.len() {
                return Err(Error::Parse(format!(
                    "row {row} has {} entries",
                    vals.len()
                )));
            }
            entries.push(vals);
        }
        if entries.len() != labels.len() {
            return Err(Error::Parse("matrix CSV is not square".into()));
        }
        Ok(MatrixExport { n, labels, entries })
    }
}

pub fn build_entanglement_matrix(g: &Graph, backend: EntropyBackend) -> Result<EntanglementMatrix> {
    build_entanglement_matrix_with_tol(g, backend, DEFAULT_TOL)
}

/// As [`build_entanglement_matrix`], with an explicit geometric tolerance
/// for locating coincident midpoints.
pub fn build_entanglement_matrix_with_tol(
    g: &Graph,
    backend: EntropyBackend,
    tol: f64,
) -> Result<EntanglementMatrix> {
    let n = g.n();
    let state = match backend {
        EntropyBackend::CutRank => None,
        EntropyBackend::DenseSim => {
            if n > DENSE_MAX_QUBITS {
                return Err(Error::SizeLimit {
                    what: "dense-sim backend",
                    n,
                    min: 2,
                    max: DENSE_MAX_QUBITS,
                });
            }
            Some(sim::graph_state_vector(g)?)
        }
    };
    let labeling = label_midpoints_with_tol(g, tol)?;
    let m = labeling.len();
    let mut entries = vec![0u32; m * m];
    for (k, label) in labeling.labels.iter().enumerate() {
        entries[k * m + k] = label.diagonal();
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (part, _) = bipartition_from_primary_pair(n, i, j)?;
            let e = match &state {
                None => entropy_cut_rank(g, &part)?,
                Some(s) => {
                    let h = sim::von_neumann_entropy(&sim::reduced_spectrum(s, &part)?);
                    let rounded = h.round();
                    let residual = (h - rounded).abs();
                    if residual >= INTEGRALITY_TOL {
                        return Err(Error::NonIntegralEntropy { value: h, residual });
                    }
                    rounded as u32
                }
            };
            entries[(i - 1) * m + (j - 1)] = e;
            entries[(j - 1) * m + (i - 1)] = e;
        }
    }
    Ok(EntanglementMatrix { labeling, entries })
}

/// Diagonal plus strictly upper triangle, in ebits.
pub fn total_entanglement(e: &EntanglementMatrix) -> u64 {
    let m = e.size();
    (1..=m)
        .flat_map(|i| (i..=m).map(move |j| (i, j)))
        .map(|(i, j)| u64::from(e.get(i, j)))
        .sum()
}

/// Splits every diagonal entry into unit contributions of present edges.
///
/// A primary diagonal ebit goes to its consecutive edge; a secondary
/// diagonal of multiplicity `m` goes one ebit to each of the `m` present
/// chords through the position. Each contributor is checked against the
/// adjacency matrix, so chords sharing a position are told apart by their
/// own adjacency entries.
pub fn edge_attribution(
    e: &EntanglementMatrix,
    a: &AdjacencyMatrix,
) -> Result<BTreeMap<(usize, usize), u32>> {
    let n = e.n();
    if a.n() != n {
        return Err(Error::Inconsistency(format!(
            "matrix is for {n} qubits, adjacency for {}",
            a.n()
        )));
    }
    let mut out = BTreeMap::new();
    for label in &e.labeling.labels {
        let diag = e.get(label.label, label.label);
        let contributors = label.contributors();
        if contributors.len() != diag as usize {
            return Err(Error::Inconsistency(format!(
                "{} has diagonal {diag} but {} contributing edges",
                label.name(),
                contributors.len()
            )));
        }
        for c in contributors {
            if !a.get(c.a(), c.b()) {
                return Err(Error::Inconsistency(format!(
                    "{} credits absent edge ({}, {})",
                    label.name(),
                    c.a(),
                    c.b()
                )));
            }
            *out.entry((c.a(), c.b())).or_insert(0) += 1;
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if a.get(i, j) && !out.contains_key(&(i, j)) {
                return Err(Error::Inconsistency(format!(
                    "edge ({i}, {j}) received no attribution"
                )));
            }
        }
    }
    Ok(out)
}

/// Total entanglement of every graph on a fixed `n <= 11`, evaluated from
/// packed edge words without building matrices.
///
/// Agrees with `total_entanglement(build_entanglement_matrix(g, CutRank))`.
pub struct TotalEvaluator {
    n: usize,
    primary_mask: u64,
    /// `(generator mask, incident mask)` per non-primary midpoint position.
    secondary: Vec<(u64, u64)>,
    arcs: Vec<u64>,
    endpoints: Vec<(usize, usize)>,
}

impl TotalEvaluator {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=11).contains(&n) {
            return Err(Error::SizeLimit {
                what: "packed total evaluator",
                n,
                min: 2,
                max: 11,
            });
        }
        let bit = |c: &Chord| 1u64 << edge_index(c.a(), c.b());
        let census = build_midpoint_census_with_tol(n, Restriction::Complete, DEFAULT_TOL)?;
        let primary_mask = consecutive_chords(n).iter().map(bit).fold(0, |m, b| m | b);
        let secondary = census
            .records
            .iter()
            .filter(|r| r.sites.iter().all(|c| c.separation() > 1))
            .map(|r| {
                (
                    r.sites.iter().map(bit).fold(0, |m, b| m | b),
                    r.incident_chords.iter().map(bit).fold(0, |m, b| m | b),
                )
            })
            .collect();
        let mut arcs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let (part, _) = bipartition_from_primary_pair(n, i, j)?;
                arcs.push(part.iter().fold(0u64, |m, v| m | 1 << (v - 1)));
            }
        }
        let endpoints = all_chords(n)
            .iter()
            .map(|c| (c.a(), c.b()))
            .collect::<Vec<_>>();
        debug_assert_eq!(endpoints.len(), pair_count(n));
        // all_chords is lexicographic; reorder to packed-bit order.
        let mut by_bit = vec![(0, 0); endpoints.len()];
        for (a, b) in endpoints {
            by_bit[edge_index(a, b)] = (a, b);
        }
        Ok(TotalEvaluator {
            n,
            primary_mask,
            secondary,
            arcs,
            endpoints: by_bit,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self, word: u64) -> u64 {
        let mut neighbors = vec![0u64; self.n];
        let mut w = word;
        while w != 0 {
            let (a, b) = self.endpoints[w.trailing_zeros() as usize];
            neighbors[a - 1] |= 1 << (b - 1);
            neighbors[b - 1] |= 1 << (a - 1);
            w &= w - 1;
        }
        let mut total = u64::from((word & self.primary_mask).count_ones());
        for &(gen, inc) in &self.secondary {
            if gen & word != 0 {
                total += u64::from((inc & word).count_ones());
            }
        }
        for &arc in &self.arcs {
            total += u64::from(cut_rank_masks(&neighbors, arc));
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig4() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn fig4_labeling() {
        let l = label_midpoints(&fig4()).unwrap();
        assert_eq!(l.names(), ["1'", "2'", "3'", "4'", "5'"]);
        let five = &l.labels[4];
        assert_eq!(five.kind, LabelKind::Secondary);
        assert!(five.position.norm() < 1e-12);
        let gens: Vec<_> = five.generators.iter().map(|c| (c.a(), c.b())).collect();
        assert_eq!(gens, [(1, 3), (2, 4)]);
        assert_eq!(l.labels[2].between, Some((3, 4)));
        assert_eq!(l.labels[3].between, Some((4, 1)));
    }

    #[test]
    fn triangle_and_empty_labeling() {
        let l = label_midpoints(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(l.secondary_count(), 0);
        let l = label_midpoints(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn secondary_scan_order() {
        // Scan order is (1,3), (1,4), (2,5); 2-5 shares 1-4's center label.
        let g = Graph::new(6, &[(2, 5), (1, 4), (1, 3)]).unwrap();
        let l = label_midpoints(&g).unwrap();
        let firsts: Vec<_> = l.labels[6..]
            .iter()
            .map(|x| (x.label, x.generators[0].a(), x.generators[0].b()))
            .collect();
        assert_eq!(firsts, [(7, 1, 3), (8, 1, 4)]);
        // 1-4 and 2-5 are diameters sharing the center.
        assert_eq!(l.labels[7].generators.len(), 2);
    }

    #[test]
    fn bipartitions() {
        assert_eq!(
            bipartition_from_primary_pair(4, 1, 2).unwrap(),
            (vec![2], vec![3, 4, 1])
        );
        assert_eq!(
            bipartition_from_primary_pair(4, 1, 3).unwrap(),
            (vec![2, 3], vec![4, 1])
        );
        assert_eq!(
            bipartition_from_primary_pair(6, 2, 5).unwrap(),
            (vec![3, 4, 5], vec![6, 1, 2])
        );
        assert_eq!(
            bipartition_from_primary_pair(2, 1, 2).unwrap(),
            (vec![2], vec![1])
        );
        assert_eq!(
            bipartition_from_primary_pair(4, 2, 2),
            Err(Error::InvalidPair(2, 2))
        );
        assert!(bipartition_from_primary_pair(4, 0, 2).is_err());
    }

    #[test]
    fn fig4_matrix() {
        let e = build_entanglement_matrix(&fig4(), EntropyBackend::CutRank).unwrap();
        assert_eq!(e.size(), 5);
        assert!(e.is_symmetric());
        assert_eq!(e.get(5, 5), 2);
        assert_eq!(e.get(3, 3), 0);
        assert_eq!(e.get(4, 4), 0);
        assert_eq!(e.get(1, 1), 1);
        assert_eq!(e.get(1, 3), 2);
        assert_eq!(e.get(2, 4), 2);
        assert_eq!(e.get(3, 4), 1);
        for k in 1..=4 {
            assert_eq!(e.get(k, 5), 0);
        }
        assert_eq!(total_entanglement(&e), 12);
    }

    #[test]
    fn table_one_totals() {
        let total = |edges: &[(usize, usize)]| {
            let g = Graph::new(3, edges).unwrap();
            total_entanglement(&build_entanglement_matrix(&g, EntropyBackend::CutRank).unwrap())
        };
        assert_eq!(total(&[]), 0);
        assert_eq!(total(&[(1, 2)]), 3);
        assert_eq!(total(&[(1, 2), (2, 3)]), 5);
        assert_eq!(total(&[(1, 2), (2, 3), (1, 3)]), 6);
    }

    #[test]
    fn two_qubit_convention() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let e = build_entanglement_matrix(&g, EntropyBackend::CutRank).unwrap();
        assert_eq!(e.rows(), [[1, 1], [1, 0]]);
        assert_eq!(total_entanglement(&e), 2);
    }

    #[test]
    fn dense_backend_size_limit() {
        let g = Graph::empty(15).unwrap();
        assert!(matches!(
            build_entanglement_matrix(&g, EntropyBackend::DenseSim),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn attribution() {
        let g = fig4();
        let e = build_entanglement_matrix(&g, EntropyBackend::CutRank).unwrap();
        let attr = edge_attribution(&e, &g.adjacency_matrix()).unwrap();
        assert_eq!(attr[&(1, 3)], 1);
        assert_eq!(attr[&(2, 4)], 1);
        assert_eq!(attr.values().sum::<u32>(), 4);

        let empty = Graph::empty(4).unwrap();
        let e = build_entanglement_matrix(&empty, EntropyBackend::CutRank).unwrap();
        assert!(edge_attribution(&e, &empty.adjacency_matrix())
            .unwrap()
            .is_empty());

        let k5 = Graph::complete(5).unwrap();
        let e = build_entanglement_matrix(&k5, EntropyBackend::CutRank).unwrap();
        let attr = edge_attribution(&e, &k5.adjacency_matrix()).unwrap();
        assert_eq!(attr.len(), 10);
        assert!(attr.values().all(|&v| v == 1));
    }

    #[test]
    fn attribution_rejects_mismatched_adjacency() {
        let g = fig4();
        let e = build_entanglement_matrix(&g, EntropyBackend::CutRank).unwrap();
        let other = Graph::new(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(matches!(
            edge_attribution(&e, &other.adjacency_matrix()),
            Err(Error::Inconsistency(_))
        ));
        let bigger = Graph::complete(5).unwrap();
        assert!(edge_attribution(&e, &bigger.adjacency_matrix()).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let e = build_entanglement_matrix(&fig4(), EntropyBackend::CutRank).unwrap();
        let text = e.to_csv();
        assert!(
            text.starts_with(",1',2',3',4',5'\n1',1,1,2,1,0\n"),
            "{text}"
        );
        assert_eq!(MatrixExport::from_csv(&text, 4).unwrap(), e.to_export());
        assert!(MatrixExport::from_csv(",1'\n1',x\n", 1).is_err());
        assert!(MatrixExport::from_csv(",1',2'\n1',0,0\n", 2).is_err());
    }

    #[test]
    fn backend_parsing() {
        assert_eq!(
            "cut-rank".parse::<EntropyBackend>().unwrap(),
            EntropyBackend::CutRank
        );
        assert_eq!(
            "dense-sim".parse::<EntropyBackend>().unwrap(),
            EntropyBackend::DenseSim
        );
        assert!("svd".parse::<EntropyBackend>().is_err());
    }

    #[test]
    fn evaluator_matches_matrix_on_all_small_graphs() {
        for n in 2..=5 {
            let ev = TotalEvaluator::new(n).unwrap();
            for word in 0..1u64 << pair_count(n) {
                let g = Graph::from_edge_bits(n, word).unwrap();
                let e = build_entanglement_matrix(&g, EntropyBackend::CutRank).unwrap();
                assert_eq!(ev.total(word), total_entanglement(&e), "{g:?}");
            }
        }
    }
}
