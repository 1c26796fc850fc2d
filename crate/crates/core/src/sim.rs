//! Dense state-vector graph states and reduced-state spectra.
//!
//! This is the brute-force entropy backend: it never uses the stabilizer
//! structure of graph states, so it can check the cut-rank backend
//! independently.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DENSE_MAX_QUBITS: usize = 14;

/// Eigenvalues below this are numerical noise and are clamped to zero.
pub const EIGEN_CLAMP: f64 = 1e-12;

/// Amplitudes indexed by basis state; bit `k` of the index is qubit `k + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// `prod_{(i,j) in E} CZ_ij |+>^n`.
pub fn graph_state_vector(g: &Graph) -> Result<StateVector> {
    let n = g.n();
    if n > DENSE_MAX_QUBITS {
        return Err(Error::SizeLimit {
            what: "dense simulation",
            n,
            min: 1,
            max: DENSE_MAX_QUBITS,
        });
    }
    let dim = 1usize << n;
    let amp = (dim as f64).sqrt().recip();
    let mut amplitudes = vec![Complex64::new(amp, 0.0); dim];
    for (i, j) in g.edges() {
        let both = (1usize << (i - 1)) | (1usize << (j - 1));
        for (x, a) in amplitudes.iter_mut().enumerate() {
            if x & both == both {
                *a = -*a;
            }
        }
    }
    Ok(StateVector { n, amplitudes })
}

/// Eigenvalues of a reduced density operator, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("empty spectrum".into()));
        }
        if let Some(v) = values
            .iter()
            .find(|v| !v.is_finite() || **v < -EIGEN_CLAMP || **v > 1.0 + EIGEN_CLAMP)
        {
            return Err(Error::Domain(format!("eigenvalue {v} outside [0, 1]")));
        }
        let total: f64 = values.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Domain(format!("eigenvalues sum to {total}, not 1")));
        }
        let mut eigenvalues: Vec<f64> = values
            .into_iter()
            .map(|v| if v < EIGEN_CLAMP { 0.0 } else { v })
            .collect();
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvalues with zeros removed.
    pub fn support(&self) -> impl Iterator<Item = f64> + '_ {
        self.eigenvalues.iter().copied().filter(|&p| p > 0.0)
    }

    pub fn rank(&self) -> usize {
        self.support().count()
    }
}

/// Spectrum of the state reduced to `part_a`, from the singular values of
/// the amplitude matrix reshaped as `(part_a bits) x (complement bits)`.
pub fn reduced_spectrum(s: &StateVector, part_a: &[usize]) -> Result<Spectrum> {
    let (a, b) = crate::graph::split_vertices(s.n, part_a)?;
    let compress = |x: usize, verts: &[usize]| {
        verts
            .iter()
            .enumerate()
            .fold(0usize, |acc, (pos, &v)| acc | ((x >> (v - 1) & 1) << pos))
    };
    let mut m = DMatrix::<Complex64>::zeros(1 << a.len(), 1 << b.len());
    for (x, &amp) in s.amplitudes.iter().enumerate() {
        m[(compress(x, &a), compress(x, &b))] = amp;
    }
    let sv = m.singular_values();
    Spectrum::new(sv.iter().map(|v| v * v).collect())
}

/// `-sum p log2 p` in ebits, with `0 log 0 = 0`.
pub fn von_neumann_entropy(sp: &Spectrum) -> f64 {
    let h: f64 = sp.support().map(|p| -p * p.log2()).sum();
    h.max(0.0)
}

/// `log2(sum p^alpha) / (1 - alpha)`; the `alpha -> 1` limit is
/// [`von_neumann_entropy`].
pub fn renyi_entropy(sp: &Spectrum, alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0) || alpha == 1.0 {
        return Err(Error::Domain(format!(
            "Renyi order must be positive and != 1, got {alpha}"
        )));
    }
    let sum: f64 = sp.support().map(|p| p.powf(alpha)).sum();
    Ok((sum.log2() / (1.0 - alpha)).max(0.0))
}

/// Von Neumann entropy of `|g>` across `part_a`, by dense simulation.
pub fn bipartition_entropy(g: &Graph, part_a: &[usize]) -> Result<f64> {
    let s = graph_state_vector(g)?;
    Ok(von_neumann_entropy(&reduced_spectrum(&s, part_a)?))
}
